#include "tlg/apv.hpp"

#include "tlg/henneberg.hpp"
#include "tlg/rng.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace tlg {

Rational ratio(const DerivedGraph& d, const WeightAssignment& w, TriId i, TriId j) {
  Edge e = d.shared_edge(i, j);  // throws when not adjacent
  const Triangle& ti = d.triangles()[i];
  const Triangle& tj = d.triangles()[j];
  Rational den = w.at(i).at(ti, e.u) + w.at(i).at(ti, e.v);
  if (den == 0)
    throw AssumptionViolatedError("zero weight sum on a shared edge");
  return (w.at(j).at(tj, e.u) + w.at(j).at(tj, e.v)) / den;
}

Rational path_ratio(const DerivedGraph& d, const WeightAssignment& w,
                    std::span<const TriId> walk) {
  if (walk.empty()) throw std::invalid_argument("empty walk");
  Rational r = 1;
  for (size_t p = 0; p + 1 < walk.size(); ++p) {
    if (walk[p] == walk[p + 1]) continue;  // resting step contributes 1
    r *= ratio(d, w, walk[p], walk[p + 1]);
  }
  return r;
}

std::vector<TriId> derived_path(const DerivedGraph& d, TriId from, TriId to) {
  std::vector<int> prev(d.size(), -2);
  prev[from] = -1;
  std::deque<TriId> q{from};
  while (!q.empty()) {
    TriId t = q.front();
    q.pop_front();
    if (t == to) break;
    for (TriId u : d.neighbors(t)) {
      if (prev[u] == -2) {
        prev[u] = t;
        q.push_back(u);
      }
    }
  }
  if (prev[to] == -2) throw std::logic_error("derived graph is disconnected");
  std::vector<TriId> path;
  for (TriId t = to; t != -1; t = prev[t]) path.push_back(t);
  std::reverse(path.begin(), path.end());
  return path;
}

ApvVector unnormalized_apv(const DerivedGraph& d, const WeightAssignment& w,
                           TriId i) {
  if (i < 0 || i >= d.size()) throw std::invalid_argument("bad triangle id");
  AssumptionReport ar = check_assumption(d, w);
  if (!ar.ok())
    throw AssumptionViolatedError("weight assignment violates the non-simple-edge assumption");

  const int n = d.base().node_count();
  ApvVector out;
  out.tri = i;
  out.w.resize(n);
  for (NodeId j = 0; j < n; ++j) {
    TriId b = d.bottleneck(j, i);
    std::vector<TriId> path = derived_path(d, b, i);
    out.w[j] = w.at(b).at(d.triangles()[b], j) * path_ratio(d, w, path);
  }
  Rational total = std::accumulate(out.w.begin(), out.w.end(), Rational(0));
  out.w_bar.resize(n);
  for (NodeId j = 0; j < n; ++j) out.w_bar[j] = out.w[j] / total;
  return out;
}

std::vector<Rational> normalized_apv(const DerivedGraph& d,
                                     const WeightAssignment& w, TriId i) {
  return unnormalized_apv(d, w, i).w_bar;
}

std::vector<Rational> left_apply_exact(std::vector<Rational> v,
                                       const Triangle& t, const LocalWeights& w) {
  Rational s = v[t.nodes[0]] + v[t.nodes[1]] + v[t.nodes[2]];
  for (int k = 0; k < 3; ++k) v[t.nodes[k]] = w[k] * s;
  return v;
}

namespace {

std::vector<Rational> left_apply_walk(const DerivedGraph& d,
                                      const WeightAssignment& w,
                                      std::vector<Rational> v,
                                      std::span<const TriId> walk) {
  // P_gamma acts with the first walk element as the rightmost factor, so a
  // left row-vector meets the factors in walk order reversed.
  for (auto it = walk.rbegin(); it != walk.rend(); ++it)
    v = left_apply_exact(std::move(v), d.triangles()[*it], w.at(*it));
  return v;
}

}  // namespace

EigenIdentityReport verify_eigen_identities(const DerivedGraph& d,
                                            const WeightAssignment& w,
                                            std::uint64_t seed) {
  EigenIdentityReport report;
  std::vector<ApvVector> apv;
  for (TriId i = 0; i < d.size(); ++i) apv.push_back(unnormalized_apv(d, w, i));

  auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };

  for (TriId i = 0; i < d.size(); ++i) {
    ++report.checks;
    std::vector<Rational> lhs =
        left_apply_exact(apv[i].w, d.triangles()[i], w.at(i));
    if (lhs != apv[i].w)
      fail("w_" + std::to_string(i) + "^T A_" + std::to_string(i) + " != w^T");
    for (TriId j : d.neighbors(i)) {
      ++report.checks;
      std::vector<Rational> left =
          left_apply_exact(apv[j].w, d.triangles()[i], w.at(i));
      Rational r = ratio(d, w, i, j);
      std::vector<Rational> right = apv[i].w;
      for (Rational& x : right) x *= r;
      if (left != right)
        fail("w_" + std::to_string(j) + "^T A_" + std::to_string(i) +
             " != r_{i,j} w_" + std::to_string(i) + "^T");
    }
  }

  // Closed-walk corollary on sampled random closed walks from each triangle.
  Rng rng(seed);
  for (TriId i = 0; i < d.size(); ++i) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<TriId> walk{i};
      int len = 1 + rng.below(8);
      for (int s = 0; s < len; ++s) {
        const auto& nb = d.neighbors(walk.back());
        if (nb.empty()) break;
        walk.push_back(nb[rng.below(static_cast<int>(nb.size()))]);
      }
      for (int s = static_cast<int>(walk.size()) - 2; s >= 0; --s)
        walk.push_back(walk[s]);  // retrace to close the walk at i
      ++report.checks;
      std::vector<Rational> lhs = left_apply_walk(d, w, apv[i].w, walk);
      if (lhs != apv[i].w)
        fail("w_" + std::to_string(i) + "^T P_gamma != w^T on a closed walk");
    }
  }
  return report;
}

std::vector<std::vector<Rational>> apv_sequence(const DerivedGraph& d,
                                                const WeightAssignment& w,
                                                std::span<const TriId> walk) {
  if (walk.empty()) throw std::invalid_argument("empty walk");
  for (size_t s = 0; s + 1 < walk.size(); ++s)
    if (walk[s] != walk[s + 1] && !d.adjacent(walk[s], walk[s + 1]))
      throw NonAdjacentStepError(static_cast<int>(s + 1));

  std::map<TriId, std::vector<Rational>> cache;
  std::vector<std::vector<Rational>> out;
  out.reserve(walk.size());
  for (TriId t : walk) {
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, normalized_apv(d, w, t)).first;
    out.push_back(it->second);
  }
  return out;
}

WeightAssignment design_weights(const DerivedGraph& d,
                                const std::vector<Rational>& target,
                                TriId anchor) {
  const Graph& g = d.base();
  const int n = g.node_count();
  if (static_cast<int>(target.size()) != n)
    throw InvalidTargetError("target length must equal node count");
  Rational sum = 0;
  for (const Rational& t : target) {
    if (t <= 0) throw InvalidTargetError("target entries must be positive");
    sum += t;
  }
  if (sum != 1) throw InvalidTargetError("target must sum to 1");
  if (anchor < 0 || anchor >= d.size())
    throw std::invalid_argument("bad anchor triangle");

  // Relabel nodes in the order of an RHC rooted at the anchor, so the anchor
  // is triangle {0,1,2} of every prefix graph.
  RhcProgram prog = rhc_from_triangle(g, d.triangles()[anchor]);
  std::vector<NodeId> order(prog.initial.nodes.begin(), prog.initial.nodes.end());
  for (const RhcStep& s : prog.steps) order.push_back(s.node);
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[order[k]] = k;
  std::vector<Rational> t_hat(n);
  for (int k = 0; k < n; ++k) t_hat[k] = target[order[k]];

  std::vector<Edge> edges{Edge(0, 1), Edge(0, 2), Edge(1, 2)};
  std::map<Triangle, LocalWeights> weights;
  {
    Rational s3 = t_hat[0] + t_hat[1] + t_hat[2];
    weights.emplace(Triangle::of(0, 1, 2),
                    LocalWeights(t_hat[0] / s3, t_hat[1] / s3, t_hat[2] / s3));
  }

  Rational sigma = t_hat[0] + t_hat[1] + t_hat[2];
  for (int k = 3; k < n; ++k) {
    const RhcStep& step = prog.steps[k - 3];
    NodeId p = pos[step.base.u], q = pos[step.base.v];

    Graph cur(k, edges);
    DerivedGraph dcur = DerivedGraph::build(cur);
    std::vector<LocalWeights> cur_weights;
    for (const Triangle& t : dcur.triangles()) cur_weights.push_back(weights.at(t));
    WeightAssignment wcur(std::move(cur_weights));
    TriId anchor_cur = *dcur.tri_index(Triangle::of(0, 1, 2));

    ApvVector apv = unnormalized_apv(dcur, wcur, anchor_cur);
    Rational lambda = std::accumulate(apv.w.begin(), apv.w.end(), Rational(0));

    // Any triangle on the base edge gives the same edge-sum-times-ratio.
    TriId adj = -1;
    for (TriId t = 0; t < dcur.size(); ++t) {
      if (dcur.triangles()[t].contains(Edge(p, q))) {
        adj = t;
        break;
      }
    }
    const Triangle& tadj = dcur.triangles()[adj];
    std::vector<TriId> path = derived_path(dcur, adj, anchor_cur);
    Rational K = (wcur.at(adj).at(tadj, p) + wcur.at(adj).at(tadj, q)) *
                 path_ratio(dcur, wcur, path);

    Rational c = lambda * t_hat[k] / (sigma * K);
    Rational x = c / (1 + c);
    Triangle fresh = Triangle::of(p, q, k);
    std::array<Rational, 3> a;
    for (int s = 0; s < 3; ++s) a[s] = (fresh.nodes[s] == k) ? x : (1 - x) / 2;
    weights.emplace(fresh, LocalWeights(a[0], a[1], a[2]));

    edges.push_back(Edge(p, k));
    edges.push_back(Edge(q, k));
    sigma += t_hat[k];
  }

  // Map the assignment back to the original labels.
  std::vector<LocalWeights> out;
  for (const Triangle& t : d.triangles()) {
    Triangle th = Triangle::of(pos[t.nodes[0]], pos[t.nodes[1]], pos[t.nodes[2]]);
    const LocalWeights& wh = weights.at(th);
    std::array<Rational, 3> a;
    for (int s = 0; s < 3; ++s) a[s] = wh.at(th, pos[t.nodes[s]]);
    out.emplace_back(a[0], a[1], a[2]);
  }
  WeightAssignment assignment(std::move(out));

  if (normalized_apv(d, assignment, anchor) != target)
    throw std::logic_error("design round-trip failed");
  return assignment;
}

}  // namespace tlg
