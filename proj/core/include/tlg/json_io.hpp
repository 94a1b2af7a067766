#pragma once

#include "tlg/henneberg.hpp"
#include "tlg/stoch.hpp"

#include <json.hpp>
#include <string>

namespace tlg {

/// Graph JSON: {"n": <int>, "edges": [[u,v], ...]}, 0-based node ids.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// RhcProgram JSON: {"initial": [a,b,c], "steps": [{"edge": [u,v], "node": w}]}.
RhcProgram rhc_program_from_json(const nlohmann::json& j);
nlohmann::json rhc_program_to_json(const RhcProgram& p);

/// WeightAssignment JSON: {"weights": {"<tri>": [["p","q"],["p","q"],["p","q"]]}}
/// with one entry per canonical triangle index; each weight is a
/// numerator/denominator string pair.
WeightAssignment weights_from_json(const nlohmann::json& j, int triangle_count);
nlohmann::json weights_to_json(const WeightAssignment& w);

nlohmann::json apv_report_to_json(const struct ApvVector& v);

Graph load_graph(const std::string& path);
WeightAssignment load_weights(const std::string& path, int triangle_count);
void save_json(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

}  // namespace tlg
