#include "tlg/json_io.hpp"

#include "tlg/apv.hpp"

#include <fstream>

namespace tlg {

using nlohmann::json;

Graph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edge must be a pair");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return Graph(n, std::move(edges));  // ctor rejects loops and duplicates
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.node_count()}, {"edges", edges}};
}

RhcProgram rhc_program_from_json(const json& j) {
  const auto& init = j.at("initial");
  RhcProgram p{Triangle::of(init.at(0).get<int>(), init.at(1).get<int>(),
                            init.at(2).get<int>()),
               {}};
  for (const auto& s : j.at("steps")) {
    const auto& e = s.at("edge");
    p.steps.push_back(RhcStep{Edge(e.at(0).get<int>(), e.at(1).get<int>()),
                              s.at("node").get<int>()});
  }
  return p;
}

json rhc_program_to_json(const RhcProgram& p) {
  json steps = json::array();
  for (const RhcStep& s : p.steps)
    steps.push_back({{"edge", {s.base.u, s.base.v}}, {"node", s.node}});
  return json{{"initial", p.initial.nodes}, {"steps", steps}};
}

namespace {

json rational_pair(const Rational& r) {
  return json::array({numerator(r).str(), denominator(r).str()});
}

Rational rational_from_pair(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("rational must be a [num, den] string pair");
  return parse_rational(j.at(0).get<std::string>() + "/" +
                        j.at(1).get<std::string>());
}

}  // namespace

WeightAssignment weights_from_json(const json& j, int triangle_count) {
  const auto& table = j.at("weights");
  std::vector<LocalWeights> weights(triangle_count);
  std::vector<char> present(triangle_count, 0);
  for (const auto& [key, value] : table.items()) {
    int idx = std::stoi(key);
    if (idx < 0 || idx >= triangle_count)
      throw std::invalid_argument("weight index out of range: " + key);
    weights[idx] = LocalWeights(rational_from_pair(value.at(0)),
                                rational_from_pair(value.at(1)),
                                rational_from_pair(value.at(2)));
    present[idx] = 1;
  }
  for (int i = 0; i < triangle_count; ++i)
    if (!present[i])
      throw std::invalid_argument("missing weights for triangle " +
                                  std::to_string(i));
  return WeightAssignment(std::move(weights));
}

json weights_to_json(const WeightAssignment& w) {
  json table = json::object();
  for (TriId i = 0; i < w.size(); ++i) {
    json row = json::array();
    for (int s = 0; s < 3; ++s) row.push_back(rational_pair(w.at(i)[s]));
    table[std::to_string(i)] = row;
  }
  return json{{"weights", table}};
}

json apv_report_to_json(const ApvVector& v) {
  json w = json::array(), wb = json::array(), wf = json::array();
  for (const Rational& r : v.w) w.push_back(rational_to_string(r));
  for (const Rational& r : v.w_bar) {
    wb.push_back(rational_to_string(r));
    wf.push_back(to_double(r));
  }
  return json{{"triangle", v.tri}, {"w", w}, {"w_bar", wb}, {"w_bar_float", wf}};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

Graph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

WeightAssignment load_weights(const std::string& path, int triangle_count) {
  return weights_from_json(load_json(path), triangle_count);
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace tlg
