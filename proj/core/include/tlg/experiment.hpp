#pragma once

#include "tlg/stoch.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace tlg {

/// One triangle together with its 3x3 stochastic block. For the standard
/// local matrices the three rows coincide; the block form also admits the
/// full-rank variant used to probe what breaks without the rank-one
/// structure.
struct TriangleBlock {
  Triangle tri;
  std::array<std::array<double, 3>, 3> block;
};

/// Matrix family plus the adjacency rule for products. Decoupled from
/// DerivedGraph so non-TLG topologies (the wheel experiment) fit too.
struct MatrixSystem {
  int n = 0;
  std::vector<TriangleBlock> blocks;
  std::vector<std::vector<int>> adjacency;  // shared-edge adjacency
};

MatrixSystem system_from_weights(const DerivedGraph& d, const WeightAssignment& w);

/// Random local weight vectors with strictly positive entries, sampled as a
/// uniform composition of `denom` on three parts.
WeightAssignment random_rational_weights(const DerivedGraph& d,
                                         std::uint64_t seed, int denom = 64);

struct TlgInstance {
  Graph g;
  DerivedGraph d;
  WeightAssignment w;
};

/// Random RHC of n nodes plus random positive rational weights.
TlgInstance make_random_instance(int n, std::uint64_t seed);

/// Triangulated rigid non-Laman graph: hub plus 5-cycle, derived adjacency a
/// cycle of length 5. Rank-one blocks from random weight vectors.
MatrixSystem make_wheel_system(std::uint64_t seed);

/// 4-triangle line TLG whose blocks are full random 3x3 stochastic matrices
/// (identical-row assumption deliberately broken).
MatrixSystem make_line_full_block_system(std::uint64_t seed);

enum class SequenceKind { Walk, Sequence };

struct BatchConfig {
  int runs = 200;
  int length = 5000;
  SequenceKind kind = SequenceKind::Walk;
  int start = -1;  // -1: per-run random start
  std::uint64_t seed = 1;
  double conv_tol = 1e-8;
  double cluster_tol = 1e-6;
  int threads = 0;  // 0: hardware default
};

struct BatchResult {
  int runs = 0;
  int converged = 0;
  std::vector<std::vector<double>> limits;  // one per converged run, in order
  int distinct_clusters = 0;
  double coordinate_spread = 0.0;  // max over coordinates of (max - min)
  int histogram_bins = 50;
  std::vector<std::vector<long>> histogram;  // [coordinate][bin] over [0,1]
};

/// Runs `runs` independent products (per-run seed = seed + run index),
/// extracts limit vectors of the converged ones and clusters them at
/// cluster_tol in the infinity norm. Runs execute in parallel; aggregation
/// is by run index, so output is deterministic.
BatchResult run_batch(const MatrixSystem& sys, const BatchConfig& cfg);

nlohmann::json batch_summary_json(const BatchResult& r);

/// One CSV per coordinate: bin_lo,bin_hi,count.
void write_histogram_csv(const std::string& dir, const std::string& prefix,
                         const BatchResult& r);

}  // namespace tlg
