#pragma once

#include "tlg/stoch.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace tlg {

struct AssumptionViolatedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTargetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ratio r_{i,j} over the shared edge (p1,p2) of two adjacent triangles:
/// (a_{j,p1} + a_{j,p2}) / (a_{i,p1} + a_{i,p2}). Satisfies r_{i,j} r_{j,i} = 1.
Rational ratio(const DerivedGraph& d, const WeightAssignment& w, TriId i, TriId j);

/// Product of ratios along a walk in the derived graph; 1 for a single node.
/// Walk-independent given the endpoints, and exactly 1 on closed walks.
Rational path_ratio(const DerivedGraph& d, const WeightAssignment& w,
                    std::span<const TriId> walk);

/// Shortest derived-graph path between two triangles (BFS).
std::vector<TriId> derived_path(const DerivedGraph& d, TriId from, TriId to);

/// Unnormalized limit vector w_i and its normalization w_bar_i attached to
/// triangle i. Entry j is a_{b,j} R_gamma where b is the bottleneck of the
/// triangles containing v_j for triangle i, and gamma a walk b -> i; for
/// v_j in the triangle this reduces to the local weight itself.
struct ApvVector {
  TriId tri = -1;
  std::vector<Rational> w;
  std::vector<Rational> w_bar;
};

ApvVector unnormalized_apv(const DerivedGraph& d, const WeightAssignment& w, TriId i);

std::vector<Rational> normalized_apv(const DerivedGraph& d,
                                     const WeightAssignment& w, TriId i);

/// Exact left product v^T A_{t}; one O(1) update per factor.
std::vector<Rational> left_apply_exact(std::vector<Rational> v,
                                       const Triangle& t, const LocalWeights& w);

struct EigenIdentityReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exact-rational verification of w_i^T A_i = w_i^T for all i, of
/// w_j^T A_i = r_{i,j} w_i^T for all adjacent pairs, and of
/// w_i^T P_gamma = w_i^T on sampled closed walks.
EigenIdentityReport verify_eigen_identities(const DerivedGraph& d,
                                            const WeightAssignment& w,
                                            std::uint64_t seed = 0);

/// APVs along an exhaustive-walk prefix: x_s = w_bar of the (s+1)th walk
/// node.
std::vector<std::vector<Rational>> apv_sequence(const DerivedGraph& d,
                                                const WeightAssignment& w,
                                                std::span<const TriId> walk);

/// Inverse design: local weights whose normalized limit vector at triangle
/// `anchor` equals `target` exactly. Target must be strictly positive and
/// sum to one. The construction follows the RHC rooted at the anchor; the
/// free mass on each new triangle's base edge is split evenly.
WeightAssignment design_weights(const DerivedGraph& d,
                                const std::vector<Rational>& target, TriId anchor);

}  // namespace tlg
