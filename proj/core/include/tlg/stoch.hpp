#pragma once

#include "tlg/derived.hpp"
#include "tlg/rational.hpp"

#include <array>
#include <span>

namespace tlg {

/// Probability 3-vector attached to a triangle, indexed by the triangle's
/// sorted nodes. Entries are exact rationals summing to one.
struct LocalWeights {
  std::array<Rational, 3> a;

  LocalWeights() = default;
  LocalWeights(Rational x, Rational y, Rational z);

  const Rational& operator[](int slot) const { return a[slot]; }

  /// Weight of node v inside triangle t.
  const Rational& at(const Triangle& t, NodeId v) const { return a[t.slot(v)]; }

  std::array<double, 3> to_doubles() const;
};

/// One weight vector per triangle, in canonical triangle order.
class WeightAssignment {
 public:
  explicit WeightAssignment(std::vector<LocalWeights> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const LocalWeights& at(TriId i) const { return weights_.at(i); }

  /// Minimum non-zero entry over all weight vectors (the contraction floor).
  const Rational& min_nonzero() const { return min_nonzero_; }

 private:
  std::vector<LocalWeights> weights_;
  Rational min_nonzero_;
};

struct AssumptionViolation {
  TriId tri;
  Edge edge;  // non-simple edge whose two incident weights both vanish
};

struct AssumptionReport {
  std::vector<AssumptionViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every triangle and every non-simple edge of it, the two incident
/// local weights must not both be zero.
AssumptionReport check_assumption(const Graph& g,
                                  const std::vector<Triangle>& triangles,
                                  const WeightAssignment& w);
AssumptionReport check_assumption(const DerivedGraph& d, const WeightAssignment& w);

/// Dense row-major double matrix; rows of long products live here.
class MatrixD {
 public:
  MatrixD() : rows_(0), cols_(0) {}
  MatrixD(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static MatrixD identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
  const double* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }

 private:
  int rows_, cols_;
  std::vector<double> data_;
};

using MatrixQ = std::vector<std::vector<Rational>>;

/// Local stochastic matrix A_i: rank-one block 1*a^T on the triangle's
/// rows/columns, identity elsewhere. Exact-rational form.
MatrixQ local_matrix_exact(int n, const Triangle& t, const LocalWeights& w);
MatrixD local_matrix(int n, const Triangle& t, const LocalWeights& w);

bool is_stochastic(const MatrixD& m, double tol = 1e-12);

/// Semi-norm: max over columns of (column max - column min). Zero exactly on
/// rank-one row-constant matrices.
double seminorm(const MatrixD& m);

/// A column with all entries positive, and its minimum; nullopt if none.
std::optional<std::pair<int, double>> min_positive_column(const MatrixD& m);

/// Left-product accumulator P <- A_i * P. Multiplying by a local matrix only
/// recombines the three triangle rows, so one step is O(3n).
class ProductAccumulator {
 public:
  explicit ProductAccumulator(int n) : p_(MatrixD::identity(n)) {}

  void apply(const Triangle& t, const LocalWeights& w);
  /// General 3x3 block (rows need not be identical); used by the experiment
  /// that breaks the rank-one structure.
  void apply_block(const Triangle& t, const std::array<std::array<double, 3>, 3>& block);

  const MatrixD& value() const { return p_; }

 private:
  MatrixD p_;
};

struct NonAdjacentStepError : std::runtime_error {
  int index;
  explicit NonAdjacentStepError(int idx)
      : std::runtime_error("walk step " + std::to_string(idx) +
                           " is not an edge of the derived graph"),
        index(idx) {}
};

/// P_gamma for a triangle sequence, first element applied first (rightmost
/// factor). In strict mode consecutive entries must be adjacent in D_G;
/// repeating a node is allowed (A_i A_i = A_i), which covers the one-triangle
/// derived graph.
MatrixD product_along_walk(const DerivedGraph& d, const WeightAssignment& w,
                           std::span<const TriId> walk,
                           bool strict_adjacency = true);

struct ConvergenceReport {
  bool converged = false;
  long steps = 0;           // first step with seminorm < tol (1-based)
  double final_seminorm = 1.0;
};

struct MonotonicityViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Watches a stream of partial products: records the first step below tol
/// and checks that the seminorm never increases (beyond float slack).
class ConvergenceMonitor {
 public:
  explicit ConvergenceMonitor(double tol);

  void step(const MatrixD& partial_product);
  ConvergenceReport report() const { return report_; }

 private:
  double tol_;
  double last_ = 1.0;
  long count_ = 0;
  ConvergenceReport report_;
};

/// Mean of the rows; the limit vector of a converged product.
std::vector<double> row_mean(const MatrixD& m);

}  // namespace tlg
