#include "tlg/henneberg.hpp"

#include "tlg/rng.hpp"

#include <algorithm>
#include <set>

namespace tlg {

namespace {

std::vector<NodeId> program_nodes(const RhcProgram& p) {
  std::vector<NodeId> nodes(p.initial.nodes.begin(), p.initial.nodes.end());
  for (const RhcStep& s : p.steps) nodes.push_back(s.node);
  return nodes;
}

}  // namespace

Graph rhc_execute(const RhcProgram& p) {
  std::vector<NodeId> nodes = program_nodes(p);
  const int n = static_cast<int>(nodes.size());
  std::vector<NodeId> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i)
      throw std::invalid_argument("program node labels must be 0..n-1");

  std::array<Edge, 3> initial_edges = p.initial.edges();
  std::set<Edge> edges(initial_edges.begin(), initial_edges.end());
  std::set<NodeId> present(p.initial.nodes.begin(), p.initial.nodes.end());
  for (int i = 0; i < static_cast<int>(p.steps.size()); ++i) {
    const RhcStep& s = p.steps[i];
    if (!edges.count(s.base)) throw InvalidStepError(i, "base edge missing");
    if (present.count(s.node)) throw InvalidStepError(i, "node already present");
    edges.insert(Edge(s.base.u, s.node));
    edges.insert(Edge(s.base.v, s.node));
    present.insert(s.node);
  }
  return Graph(n, {edges.begin(), edges.end()});
}

RecognizeResult rhc_recognize(const Graph& g) {
  const int n = g.node_count();
  if (n < 3) return {std::nullopt, "fewer than 3 nodes"};
  if (g.edge_count() != 2 * n - 3)
    return {std::nullopt, "edge count " + std::to_string(g.edge_count()) +
                              " != " + std::to_string(2 * n - 3)};

  std::vector<char> active(n, 1);
  std::vector<RhcStep> removed;
  for (int remaining = n; remaining > 3; --remaining) {
    int pick = -1;
    Edge base;
    // Largest-index removable node: degree 2 with adjacent neighbors.
    for (NodeId v = n - 1; v >= 0 && pick < 0; --v) {
      if (!active[v]) continue;
      std::vector<NodeId> nb;
      for (NodeId w : g.neighbors(v))
        if (active[w]) nb.push_back(w);
      if (nb.size() == 2 && g.has_edge(nb[0], nb[1])) {
        pick = v;
        base = Edge(nb[0], nb[1]);
      }
    }
    if (pick < 0)
      return {std::nullopt, "no removable degree-2 node with adjacent neighbors"};
    removed.push_back(RhcStep{base, pick});
    active[pick] = 0;
  }

  std::vector<NodeId> rest;
  for (NodeId v = 0; v < n; ++v)
    if (active[v]) rest.push_back(v);
  if (!g.has_edge(rest[0], rest[1]) || !g.has_edge(rest[0], rest[2]) ||
      !g.has_edge(rest[1], rest[2]))
    return {std::nullopt, "residual 3-node graph is not a triangle"};

  RhcProgram p{Triangle::of(rest[0], rest[1], rest[2]), {}};
  p.steps.assign(removed.rbegin(), removed.rend());
  return {std::move(p), ""};
}

namespace {

// Recursion on the subgraph induced by `active`, which is assumed to be a
// TLG containing t.
RhcProgram from_triangle_rec(const Graph& g, std::vector<char>& active,
                             int count, const Triangle& t) {
  if (count == 3) return RhcProgram{t, {}};

  // Removable node, preferring one outside t.
  int pick = -1;
  Edge base;
  bool pick_in_t = true;
  for (NodeId v = g.node_count() - 1; v >= 0; --v) {
    if (!active[v]) continue;
    std::vector<NodeId> nb;
    for (NodeId w : g.neighbors(v))
      if (active[w]) nb.push_back(w);
    if (nb.size() != 2 || !g.has_edge(nb[0], nb[1])) continue;
    if (pick < 0 || (pick_in_t && !t.contains(v))) {
      pick = v;
      base = Edge(nb[0], nb[1]);
      pick_in_t = t.contains(v);
      if (!pick_in_t) break;
    }
  }
  if (pick < 0) throw std::logic_error("no removable node in a TLG");

  if (!pick_in_t) {
    active[pick] = 0;
    RhcProgram p = from_triangle_rec(g, active, count - 1, t);
    active[pick] = 1;
    p.steps.push_back(RhcStep{base, pick});
    return p;
  }

  // pick has degree 2, so t is its only triangle: t = {base.u, base.v, pick}.
  // Grow from t by first re-adding another triangle on the base edge, then
  // replaying an RHC of g - pick rooted at that triangle.
  NodeId third = -1;
  for (NodeId w : g.neighbors(base.u)) {
    if (w != pick && active[w] && g.has_edge(base.v, w)) {
      third = w;
      break;
    }
  }
  if (third < 0) throw std::logic_error("base edge has no second triangle");

  active[pick] = 0;
  RhcProgram inner =
      from_triangle_rec(g, active, count - 1, Triangle::of(base.u, base.v, third));
  active[pick] = 1;

  RhcProgram p{t, {}};
  p.steps.push_back(RhcStep{base, third});
  p.steps.insert(p.steps.end(), inner.steps.begin(), inner.steps.end());
  return p;
}

}  // namespace

RhcProgram rhc_from_triangle(const Graph& g, const Triangle& t) {
  for (const Edge& e : t.edges())
    if (!g.has_edge(e)) throw std::invalid_argument("t is not a triangle of g");
  if (!is_tlg(g)) throw std::invalid_argument("graph is not a TLG");
  std::vector<char> active(g.node_count(), 1);
  return from_triangle_rec(g, active, g.node_count(), t);
}

Graph henneberg_execute(const std::vector<HennebergStep>& steps) {
  int m = 2;
  std::set<Edge> edges{Edge(0, 1)};
  for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
    const HennebergStep& s = steps[i];
    if (s.a < 0 || s.b < 0 || s.a >= m || s.b >= m || s.a == s.b)
      throw InvalidStepError(i, "invalid node reference");
    if (s.kind == HennebergStep::Kind::NodeAdd) {
      edges.insert(Edge(s.a, m));
      edges.insert(Edge(s.b, m));
    } else {
      if (s.c < 0 || s.c >= m || s.c == s.a || s.c == s.b)
        throw InvalidStepError(i, "invalid split node");
      Edge e(s.a, s.b);
      if (!edges.count(e)) throw InvalidStepError(i, "split edge missing");
      edges.erase(e);
      edges.insert(Edge(s.a, m));
      edges.insert(Edge(s.b, m));
      edges.insert(Edge(s.c, m));
    }
    ++m;
  }
  return Graph(m, {edges.begin(), edges.end()});
}

StepViolation classify_step_violation(const Graph& g, const HennebergStep& s) {
  const int n = g.node_count();
  if (s.a < 0 || s.b < 0 || s.a >= n || s.b >= n || s.a == s.b)
    throw std::invalid_argument("step not applicable");
  if (s.kind == HennebergStep::Kind::NodeAdd)
    return g.has_edge(s.a, s.b) ? StepViolation::None : StepViolation::Option1;

  if (s.c < 0 || s.c >= n || s.c == s.a || s.c == s.b || !g.has_edge(s.a, s.b))
    throw std::invalid_argument("step not applicable");
  if (!is_simple_edge(g, Edge(s.a, s.b))) return StepViolation::Option2;
  if (!g.has_edge(s.a, s.c) || !g.has_edge(s.b, s.c))
    return StepViolation::Option3;
  return StepViolation::None;
}

namespace {

// Henneberg operation with its new-node label made explicit, so rewriting
// can reorder operations without renaming nodes.
struct LabeledOp {
  bool split;
  NodeId a, b, c;   // c only for splits
  NodeId new_node;
};

Graph execute_prefix(const Edge& initial, const std::vector<LabeledOp>& ops,
                     int count) {
  std::set<Edge> edges{initial};
  std::set<NodeId> present{initial.u, initial.v};
  for (int i = 0; i < count; ++i) {
    const LabeledOp& op = ops[i];
    if (op.split) throw std::logic_error("prefix contains a split");
    edges.insert(Edge(op.a, op.new_node));
    edges.insert(Edge(op.b, op.new_node));
    present.insert(op.new_node);
  }
  const int n = static_cast<int>(present.size());
  if (*present.rbegin() != n - 1)
    throw std::logic_error("prefix node labels are not contiguous");
  return Graph(n, {edges.begin(), edges.end()});
}

}  // namespace

RhcProgram henneberg_to_rhc(const std::vector<HennebergStep>& steps) {
  Graph result = henneberg_execute(steps);
  if (!is_tlg(result))
    throw NotTlgResultError("Henneberg sequence does not produce a TLG");

  Edge initial(0, 1);
  std::vector<LabeledOp> ops;
  ops.reserve(steps.size());
  for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
    const HennebergStep& s = steps[i];
    ops.push_back(LabeledOp{s.kind == HennebergStep::Kind::EdgeSplit, s.a, s.b,
                            s.c, i + 2});
  }

  for (;;) {
    int q = -1;
    for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
      if (ops[i].split) {
        q = i;
        break;
      }
    }
    if (q < 0) break;

    // The node-add prefix is an RHC; re-root it at the split triangle
    // {vi, vj, vk}, then realize the split by adding vj last.
    const LabeledOp split = ops[q];
    const NodeId vi = split.a, vj = split.b, vk = split.c, vn = split.new_node;
    Graph prev = execute_prefix(initial, ops, q);
    RhcProgram rerooted = rhc_from_triangle(prev, Triangle::of(vi, vj, vk));

    std::vector<LabeledOp> next;
    next.push_back(LabeledOp{false, vi, vk, -1, vn});
    next.push_back(LabeledOp{false, vk, vn, -1, vj});
    for (const RhcStep& s : rerooted.steps) {
      if (s.base == Edge(vi, vj))
        throw std::logic_error("re-rooted RHC reuses the split edge");
      next.push_back(LabeledOp{false, s.base.u, s.base.v, -1, s.node});
    }
    next.insert(next.end(), ops.begin() + q + 1, ops.end());
    initial = Edge(vi, vk);
    ops = std::move(next);
  }

  if (ops.empty()) throw NotTlgResultError("sequence has fewer than 3 nodes");
  if (Edge(ops[0].a, ops[0].b) != initial)
    throw std::logic_error("first node-add is not on the initial edge");
  RhcProgram p{Triangle::of(initial.u, initial.v, ops[0].new_node), {}};
  for (int i = 1; i < static_cast<int>(ops.size()); ++i)
    p.steps.push_back(RhcStep{Edge(ops[i].a, ops[i].b), ops[i].new_node});
  return p;
}

RhcProgram random_rhc(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("need at least 3 nodes");
  Rng rng(seed);
  RhcProgram p{Triangle::of(0, 1, 2), {}};
  std::array<Edge, 3> initial_edges = p.initial.edges();
  std::vector<Edge> edges(initial_edges.begin(), initial_edges.end());
  for (NodeId v = 3; v < n; ++v) {
    Edge base = edges[rng.below(static_cast<int>(edges.size()))];
    p.steps.push_back(RhcStep{base, v});
    edges.push_back(Edge(base.u, v));
    edges.push_back(Edge(base.v, v));
  }
  return p;
}

}  // namespace tlg
