#include "tlg/experiment.hpp"

#include "tlg/henneberg.hpp"
#include "tlg/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

namespace tlg {

namespace {

std::array<double, 3> random_simplex_point(Rng& rng) {
  double u = rng.uniform(), v = rng.uniform();
  if (u > v) std::swap(u, v);
  return {u, v - u, 1.0 - v};
}

std::vector<std::vector<int>> shared_edge_adjacency(
    const std::vector<Triangle>& tris) {
  const int m = static_cast<int>(tris.size());
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool share = false;
      for (const Edge& e : tris[i].edges())
        if (tris[j].contains(e)) share = true;
      if (share) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

std::array<std::array<double, 3>, 3> rank_one_block(const std::array<double, 3>& a) {
  return {a, a, a};
}

}  // namespace

MatrixSystem system_from_weights(const DerivedGraph& d, const WeightAssignment& w) {
  MatrixSystem sys;
  sys.n = d.base().node_count();
  for (TriId i = 0; i < d.size(); ++i)
    sys.blocks.push_back(
        TriangleBlock{d.triangles()[i], rank_one_block(w.at(i).to_doubles())});
  sys.adjacency = shared_edge_adjacency(d.triangles());
  return sys;
}

WeightAssignment random_rational_weights(const DerivedGraph& d,
                                         std::uint64_t seed, int denom) {
  Rng rng(seed);
  std::vector<LocalWeights> weights;
  for (TriId i = 0; i < d.size(); ++i) {
    int c1 = 1 + rng.below(denom - 1);
    int c2 = 1 + rng.below(denom - 1);
    while (c2 == c1) c2 = 1 + rng.below(denom - 1);
    if (c1 > c2) std::swap(c1, c2);
    weights.emplace_back(Rational(c1, denom), Rational(c2 - c1, denom),
                         Rational(denom - c2, denom));
  }
  return WeightAssignment(std::move(weights));
}

TlgInstance make_random_instance(int n, std::uint64_t seed) {
  Graph g = rhc_execute(random_rhc(n, seed));
  DerivedGraph d = DerivedGraph::build(g);
  WeightAssignment w = random_rational_weights(d, seed ^ 0x5DEECE66DULL);
  return TlgInstance{std::move(g), std::move(d), std::move(w)};
}

MatrixSystem make_wheel_system(std::uint64_t seed) {
  std::vector<Triangle> tris;
  for (int i = 1; i <= 5; ++i) tris.push_back(Triangle::of(0, i, i % 5 + 1));
  std::sort(tris.begin(), tris.end());

  Rng rng(seed);
  MatrixSystem sys;
  sys.n = 6;
  for (const Triangle& t : tris)
    sys.blocks.push_back(TriangleBlock{t, rank_one_block(random_simplex_point(rng))});
  sys.adjacency = shared_edge_adjacency(tris);
  return sys;
}

MatrixSystem make_line_full_block_system(std::uint64_t seed) {
  // RHC: {0,1,2}, then 3 on (1,2), 4 on (2,3), 5 on (3,4); derived graph is
  // a path on 4 triangles.
  std::vector<Triangle> tris{Triangle::of(0, 1, 2), Triangle::of(1, 2, 3),
                             Triangle::of(2, 3, 4), Triangle::of(3, 4, 5)};
  Rng rng(seed);
  MatrixSystem sys;
  sys.n = 6;
  for (const Triangle& t : tris) {
    std::array<std::array<double, 3>, 3> block;
    for (auto& row : block) row = random_simplex_point(rng);
    sys.blocks.push_back(TriangleBlock{t, block});
  }
  sys.adjacency = shared_edge_adjacency(tris);
  return sys;
}

namespace {

std::vector<int> make_sequence(const MatrixSystem& sys, const BatchConfig& cfg,
                               int run) {
  Rng rng(cfg.seed + static_cast<std::uint64_t>(run));
  const int m = static_cast<int>(sys.blocks.size());
  std::vector<int> seq;
  seq.reserve(cfg.length);
  if (cfg.kind == SequenceKind::Sequence) {
    for (int i = 0; i < cfg.length; ++i) seq.push_back(rng.below(m));
    return seq;
  }
  int cur = cfg.start >= 0 ? cfg.start : rng.below(m);
  seq.push_back(cur);
  while (static_cast<int>(seq.size()) < cfg.length) {
    const auto& nb = sys.adjacency[cur];
    cur = nb.empty() ? cur : nb[rng.below(static_cast<int>(nb.size()))];
    seq.push_back(cur);
  }
  return seq;
}

}  // namespace

BatchResult run_batch(const MatrixSystem& sys, const BatchConfig& cfg) {
  if (cfg.runs < 1 || cfg.length < 1)
    throw std::invalid_argument("runs and length must be positive");
  if (cfg.conv_tol <= 0 || cfg.cluster_tol <= 0)
    throw std::invalid_argument("tolerances must be positive");
  if (cfg.start >= static_cast<int>(sys.blocks.size()))
    throw std::invalid_argument("start triangle out of range");

  std::vector<std::vector<double>> limit(cfg.runs);
  std::vector<char> good(cfg.runs, 0);

  auto worker = [&](int lo, int hi) {
    for (int r = lo; r < hi; ++r) {
      std::vector<int> seq = make_sequence(sys, cfg, r);
      ProductAccumulator acc(sys.n);
      for (int t : seq) acc.apply_block(sys.blocks[t].tri, sys.blocks[t].block);
      if (seminorm(acc.value()) < cfg.conv_tol) {
        limit[r] = row_mean(acc.value());
        good[r] = 1;
      }
    }
  };

  int threads = cfg.threads > 0
                    ? cfg.threads
                    : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, cfg.runs);
  std::vector<std::thread> pool;
  int chunk = (cfg.runs + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int lo = t * chunk, hi = std::min(cfg.runs, lo + chunk);
    if (lo < hi) pool.emplace_back(worker, lo, hi);
  }
  for (auto& th : pool) th.join();

  BatchResult res;
  res.runs = cfg.runs;
  for (int r = 0; r < cfg.runs; ++r) {
    if (good[r]) {
      res.limits.push_back(std::move(limit[r]));
      ++res.converged;
    }
  }

  // Union-find clustering of the limit vectors at cluster_tol (inf-norm).
  const int k = static_cast<int>(res.limits.size());
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double dist = 0.0;
      for (int c = 0; c < sys.n; ++c)
        dist = std::max(dist, std::abs(res.limits[i][c] - res.limits[j][c]));
      if (dist <= cfg.cluster_tol) parent[find(i)] = find(j);
    }
  }
  for (int i = 0; i < k; ++i)
    if (find(i) == i) ++res.distinct_clusters;

  for (int c = 0; c < sys.n; ++c) {
    double lo = 1.0, hi = 0.0;
    for (const auto& v : res.limits) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
    if (k > 0) res.coordinate_spread = std::max(res.coordinate_spread, hi - lo);
  }

  res.histogram.assign(sys.n, std::vector<long>(res.histogram_bins, 0));
  for (const auto& v : res.limits) {
    for (int c = 0; c < sys.n; ++c) {
      int bin = static_cast<int>(v[c] * res.histogram_bins);
      bin = std::clamp(bin, 0, res.histogram_bins - 1);
      ++res.histogram[c][bin];
    }
  }
  return res;
}

nlohmann::json batch_summary_json(const BatchResult& r) {
  return nlohmann::json{{"runs", r.runs},
                        {"converged", r.converged},
                        {"convergence_rate",
                         r.runs ? static_cast<double>(r.converged) / r.runs : 0.0},
                        {"distinct_limit_count", r.distinct_clusters},
                        {"spread", r.coordinate_spread}};
}

void write_histogram_csv(const std::string& dir, const std::string& prefix,
                         const BatchResult& r) {
  std::filesystem::create_directories(dir);
  const int bins = r.histogram_bins;
  for (size_t c = 0; c < r.histogram.size(); ++c) {
    std::ofstream out(std::filesystem::path(dir) /
                      (prefix + "_coord" + std::to_string(c) + ".csv"));
    out << "bin_lo,bin_hi,count\n";
    char line[96];
    for (int b = 0; b < bins; ++b) {
      std::snprintf(line, sizeof line, "%.6f,%.6f,%ld\n",
                    static_cast<double>(b) / bins,
                    static_cast<double>(b + 1) / bins, r.histogram[c][b]);
      out << line;
    }
  }
}

}  // namespace tlg
