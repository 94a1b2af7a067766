#include "tlg/apv.hpp"
#include "tlg/experiment.hpp"
#include "tlg/json_io.hpp"
#include "tlg/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using nlohmann::json;

constexpr int kExitValidation = 1;
constexpr int kExitInternal = 2;

std::uint64_t effective_seed(std::uint64_t config_seed) {
  if (const char* env = std::getenv("TLG_SEED")) return std::stoull(env);
  return config_seed;
}

int cmd_analyze(const std::string& graph_path) {
  tlg::Graph g = tlg::load_graph(graph_path);
  auto triangles = tlg::enumerate_triangles(g);
  std::cout << "nodes:     " << g.node_count() << "\n"
            << "edges:     " << g.edge_count() << "\n"
            << "triangles: " << triangles.size() << "\n";

  auto rec = tlg::rhc_recognize(g);
  if (!rec) {
    std::cout << "tlg:       no (" << rec.reason << ")\n";
    auto ch = tlg::is_chordal(g);
    std::cout << "chordal:   " << (ch.chordal ? "yes" : "no");
    if (!ch.chordal) {
      std::cout << "  (chordless cycle:";
      for (tlg::NodeId v : ch.chordless_cycle) std::cout << " " << v;
      std::cout << ")";
    }
    std::cout << "\nlaman:     " << (tlg::is_laman(g) ? "yes" : "no") << "\n";
    return 0;
  }

  std::cout << "tlg:       yes\n"
            << "construction: " << tlg::rhc_program_to_json(*rec.program).dump()
            << "\n";

  tlg::DerivedGraph d = tlg::DerivedGraph::build(g);
  std::cout << "derived graph (triangle adjacency):\n";
  for (tlg::TriId i = 0; i < d.size(); ++i) {
    const auto& t = d.triangles()[i].nodes;
    std::cout << "  D" << i << " {" << t[0] << "," << t[1] << "," << t[2]
              << "} --";
    for (tlg::TriId j : d.neighbors(i)) std::cout << " D" << j;
    std::cout << "\n";
  }
  std::cout << "bottlenecks (row: node, column: target triangle):\n";
  for (tlg::NodeId v = 0; v < g.node_count(); ++v) {
    std::cout << "  v" << v << ":";
    for (tlg::TriId t = 0; t < d.size(); ++t)
      std::cout << " D" << d.bottleneck(v, t);
    std::cout << "\n";
  }
  return 0;
}

int cmd_limits(const std::string& graph_path, const std::string& weights_path) {
  tlg::Graph g = tlg::load_graph(graph_path);
  tlg::DerivedGraph d = tlg::DerivedGraph::build(g);
  tlg::WeightAssignment w = tlg::load_weights(weights_path, d.size());

  auto assumption = tlg::check_assumption(d, w);
  if (!assumption.ok()) {
    std::cerr << "error: zero weight pair on a shared edge (triangle "
              << assumption.violations[0].tri << ", edge ("
              << assumption.violations[0].edge.u << ","
              << assumption.violations[0].edge.v << "))\n";
    return kExitValidation;
  }

  constexpr int kSimSteps = 10000;
  constexpr double kTol = 1e-9;
  for (tlg::TriId i = 0; i < d.size(); ++i) {
    tlg::ApvVector v = tlg::unnormalized_apv(d, w, i);
    std::cout << tlg::apv_report_to_json(v).dump() << "\n";

    // Cross-check: long exhaustive product from this start must reproduce
    // the closed-form limit row.
    auto walk = tlg::periodic_exhaustive_walk(d, i, kSimSteps);
    tlg::MatrixD p = tlg::product_along_walk(d, w, walk);
    std::vector<double> sim = tlg::row_mean(p);
    for (int c = 0; c < g.node_count(); ++c) {
      double err = std::abs(sim[c] - tlg::to_double(v.w_bar[c]));
      if (err > kTol)
        throw std::logic_error("simulated limit deviates from formula by " +
                               std::to_string(err));
    }
  }
  std::cout << "simulation cross-check: all limits within 1e-9\n";
  return 0;
}

int cmd_design(const std::string& graph_path, const std::string& target_str,
               int triangle, const std::string& out_path) {
  tlg::Graph g = tlg::load_graph(graph_path);
  tlg::DerivedGraph d = tlg::DerivedGraph::build(g);
  if (triangle < 0 || triangle >= d.size())
    throw tlg::InvalidTargetError("triangle index out of range");

  std::vector<tlg::Rational> target;
  std::stringstream ss(target_str);
  std::string item;
  while (std::getline(ss, item, ',')) target.push_back(tlg::parse_rational(item));

  tlg::WeightAssignment w = tlg::design_weights(d, target, triangle);
  // design_weights verifies the round trip exactly before returning.
  json out = tlg::weights_to_json(w);
  if (out_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    tlg::save_json(out_path, out);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

tlg::MatrixSystem scenario_system(const json& cfg, std::uint64_t seed) {
  std::string scenario = cfg.value("scenario", "custom");
  if (scenario == "exp1") return tlg::make_wheel_system(seed);
  if (scenario == "exp2") return tlg::make_line_full_block_system(seed);
  if (scenario == "exp3") {
    auto inst = tlg::make_random_instance(cfg.value("n", 18), seed);
    return tlg::system_from_weights(inst.d, inst.w);
  }
  if (scenario != "custom")
    throw std::invalid_argument("unknown scenario: " + scenario);

  tlg::Graph g = tlg::graph_from_json(cfg.at("graph"));
  tlg::DerivedGraph d = tlg::DerivedGraph::build(g);
  tlg::WeightAssignment w =
      cfg.contains("weights") && cfg.at("weights").is_object()
          ? tlg::weights_from_json(cfg.at("weights"), d.size())
          : tlg::random_rational_weights(d, seed);
  return tlg::system_from_weights(d, w);
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir) {
  json cfg = tlg::load_json(config_path);
  std::uint64_t seed = effective_seed(cfg.value("seed", 1ULL));

  tlg::BatchConfig bc;
  bc.runs = cfg.value("runs", 200);
  bc.length = cfg.value("length", 5000);
  bc.seed = seed;
  bc.start = cfg.value("start", -1);
  bc.cluster_tol = cfg.value("tolerance", 1e-6);
  std::string kind = cfg.value("kind", "walk");
  if (kind == "walk") {
    bc.kind = tlg::SequenceKind::Walk;
  } else if (kind == "sequence") {
    bc.kind = tlg::SequenceKind::Sequence;
  } else {
    throw std::invalid_argument("kind must be \"walk\" or \"sequence\"");
  }

  tlg::MatrixSystem sys = scenario_system(cfg, seed);
  tlg::BatchResult res = tlg::run_batch(sys, bc);

  tlg::write_histogram_csv(out_dir, "hist", res);
  json summary = tlg::batch_summary_json(res);
  tlg::save_json(out_dir + "/summary.json", summary);
  std::cout << summary.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangulated Laman graphs, derived graphs, and limits of "
               "local stochastic matrix products"};
  app.require_subcommand(1);

  std::string graph_path, weights_path, target_str, out_path, config_path;
  int triangle = 0;

  auto* analyze = app.add_subcommand("analyze", "structure report for a graph");
  analyze->add_option("graph", graph_path, "graph JSON file")->required();

  auto* limits = app.add_subcommand(
      "limits", "closed-form limit vectors, cross-checked by simulation");
  limits->add_option("graph", graph_path, "graph JSON file")->required();
  limits->add_option("weights", weights_path, "weights JSON file")->required();

  auto* design = app.add_subcommand(
      "design", "local weights realizing a target limit distribution");
  design->add_option("graph", graph_path, "graph JSON file")->required();
  design->add_option("--target", target_str, "comma-separated rationals")
      ->required();
  design->add_option("--triangle", triangle, "anchor triangle index")
      ->required();
  design->add_option("--out", out_path, "output weights file (default stdout)");

  auto* experiment =
      app.add_subcommand("experiment", "batch limit statistics and histograms");
  experiment->add_option("config", config_path, "experiment config JSON")
      ->required();
  experiment->add_option("--out", out_path, "output directory")->required();

  try {
    app.parse(argc, argv);
    if (*analyze) return cmd_analyze(graph_path);
    if (*limits) return cmd_limits(graph_path, weights_path);
    if (*design) return cmd_design(graph_path, target_str, triangle, out_path);
    if (*experiment) return cmd_experiment(config_path, out_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
