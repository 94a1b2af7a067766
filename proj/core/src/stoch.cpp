#include "tlg/stoch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tlg {

LocalWeights::LocalWeights(Rational x, Rational y, Rational z) : a{x, y, z} {
  for (const Rational& r : a)
    if (r < 0) throw std::invalid_argument("negative local weight");
  if (a[0] + a[1] + a[2] != 1)
    throw std::invalid_argument("local weights must sum to 1");
}

std::array<double, 3> LocalWeights::to_doubles() const {
  return {to_double(a[0]), to_double(a[1]), to_double(a[2])};
}

WeightAssignment::WeightAssignment(std::vector<LocalWeights> weights)
    : weights_(std::move(weights)), min_nonzero_(1) {
  if (weights_.empty()) throw std::invalid_argument("empty weight assignment");
  for (const LocalWeights& w : weights_)
    for (const Rational& r : w.a)
      if (r != 0 && r < min_nonzero_) min_nonzero_ = r;
}

AssumptionReport check_assumption(const Graph& g,
                                  const std::vector<Triangle>& triangles,
                                  const WeightAssignment& w) {
  if (static_cast<int>(triangles.size()) != w.size())
    throw std::invalid_argument("assignment does not cover all triangles");
  AssumptionReport report;
  for (TriId i = 0; i < w.size(); ++i) {
    for (const Edge& e : triangles[i].edges()) {
      if (is_simple_edge(g, e)) continue;
      if (w.at(i).at(triangles[i], e.u) + w.at(i).at(triangles[i], e.v) == 0)
        report.violations.push_back({i, e});
    }
  }
  return report;
}

AssumptionReport check_assumption(const DerivedGraph& d, const WeightAssignment& w) {
  return check_assumption(d.base(), d.triangles(), w);
}

MatrixD MatrixD::identity(int n) {
  MatrixD m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

MatrixQ local_matrix_exact(int n, const Triangle& t, const LocalWeights& w) {
  if (t.nodes[2] >= n) throw std::invalid_argument("triangle exceeds dimension");
  MatrixQ m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (NodeId r : t.nodes) {
    for (int i = 0; i < n; ++i) m[r][i] = 0;
    for (int s = 0; s < 3; ++s) m[r][t.nodes[s]] = w[s];
  }
  return m;
}

MatrixD local_matrix(int n, const Triangle& t, const LocalWeights& w) {
  if (t.nodes[2] >= n) throw std::invalid_argument("triangle exceeds dimension");
  MatrixD m = MatrixD::identity(n);
  const std::array<double, 3> a = w.to_doubles();
  for (NodeId r : t.nodes) {
    for (int i = 0; i < n; ++i) m(r, i) = 0.0;
    for (int s = 0; s < 3; ++s) m(r, t.nodes[s]) = a[s];
  }
  return m;
}

bool is_stochastic(const MatrixD& m, double tol) {
  for (int r = 0; r < m.rows(); ++r) {
    double sum = 0.0;
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c) < -tol) return false;
      sum += m(r, c);
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

double seminorm(const MatrixD& m) {
  double worst = 0.0;
  for (int c = 0; c < m.cols(); ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int r = 0; r < m.rows(); ++r) {
      lo = std::min(lo, m(r, c));
      hi = std::max(hi, m(r, c));
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

std::optional<std::pair<int, double>> min_positive_column(const MatrixD& m) {
  for (int c = 0; c < m.cols(); ++c) {
    double lo = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m.rows(); ++r) lo = std::min(lo, m(r, c));
    if (lo > 0.0) return std::make_pair(c, lo);
  }
  return std::nullopt;
}

void ProductAccumulator::apply(const Triangle& t, const LocalWeights& w) {
  const std::array<double, 3> a = w.to_doubles();
  const int n = p_.cols();
  const double* r0 = p_.row(t.nodes[0]);
  const double* r1 = p_.row(t.nodes[1]);
  const double* r2 = p_.row(t.nodes[2]);
  std::vector<double> combined(n);
  for (int c = 0; c < n; ++c)
    combined[c] = a[0] * r0[c] + a[1] * r1[c] + a[2] * r2[c];
  for (NodeId r : t.nodes)
    std::copy(combined.begin(), combined.end(), p_.row(r));
}

void ProductAccumulator::apply_block(
    const Triangle& t, const std::array<std::array<double, 3>, 3>& block) {
  const int n = p_.cols();
  std::array<std::vector<double>, 3> out;
  for (int s = 0; s < 3; ++s) {
    out[s].assign(n, 0.0);
    for (int k = 0; k < 3; ++k) {
      const double* rk = p_.row(t.nodes[k]);
      const double b = block[s][k];
      for (int c = 0; c < n; ++c) out[s][c] += b * rk[c];
    }
  }
  for (int s = 0; s < 3; ++s)
    std::copy(out[s].begin(), out[s].end(), p_.row(t.nodes[s]));
}

MatrixD product_along_walk(const DerivedGraph& d, const WeightAssignment& w,
                           std::span<const TriId> walk, bool strict_adjacency) {
  if (walk.empty()) throw std::invalid_argument("empty walk");
  if (w.size() != d.size())
    throw std::invalid_argument("assignment does not match derived graph");
  ProductAccumulator acc(d.base().node_count());
  for (size_t i = 0; i < walk.size(); ++i) {
    TriId t = walk[i];
    if (t < 0 || t >= d.size()) throw std::invalid_argument("bad triangle id");
    if (strict_adjacency && i > 0 && walk[i - 1] != t &&
        !d.adjacent(walk[i - 1], t))
      throw NonAdjacentStepError(static_cast<int>(i));
    acc.apply(d.triangles()[t], w.at(t));
  }
  return acc.value();
}

ConvergenceMonitor::ConvergenceMonitor(double tol) : tol_(tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
}

void ConvergenceMonitor::step(const MatrixD& partial_product) {
  const double s = seminorm(partial_product);
  ++count_;
  if (count_ > 1 && s > last_ + 1e-14)
    throw MonotonicityViolationError("seminorm increased along product stream");
  last_ = s;
  report_.final_seminorm = s;
  if (!report_.converged && s < tol_) {
    report_.converged = true;
    report_.steps = count_;
  }
}

std::vector<double> row_mean(const MatrixD& m) {
  std::vector<double> mean(m.cols(), 0.0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) mean[c] += m(r, c);
  for (double& x : mean) x /= m.rows();
  return mean;
}

}  // namespace tlg
