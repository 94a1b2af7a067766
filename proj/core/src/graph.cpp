#include "tlg/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace tlg {

Triangle Triangle::of(NodeId a, NodeId b, NodeId c) {
  std::array<NodeId, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2])
    throw std::invalid_argument("triangle nodes must be distinct");
  return Triangle{t};
}

int Triangle::slot(NodeId v) const {
  for (int i = 0; i < 3; ++i)
    if (nodes[i] == v) return i;
  throw std::invalid_argument("node not in triangle");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative node count");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  adj_.resize(n_);
  for (const Edge& e : edges_) {
    if (e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("node id out of range");
  return adj_[v];
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (const Edge& e : g.edges()) {
    for (NodeId w : g.neighbors(e.u)) {
      if (w > e.v && g.has_edge(e.v, w)) out.push_back(Triangle::of(e.u, e.v, w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Maximum-cardinality search. Returns an elimination order: position 0 is
// eliminated first. For a chordal graph the order is a PEO.
std::vector<NodeId> mcs_order(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> weight(n, 0);
  std::vector<char> picked(n, 0);
  std::vector<NodeId> order(n);
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!picked[v] && (best == -1 || weight[v] > weight[best])) best = v;
    picked[best] = 1;
    order[i] = best;
    for (NodeId w : g.neighbors(best))
      if (!picked[w]) ++weight[w];
  }
  return order;
}

// BFS shortest path from src to dst avoiding `blocked` nodes; empty if none.
std::vector<NodeId> shortest_path_avoiding(const Graph& g, NodeId src,
                                           NodeId dst,
                                           const std::vector<char>& blocked) {
  std::vector<int> prev(g.node_count(), -2);
  std::deque<NodeId> q{src};
  prev[src] = -1;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop_front();
    if (v == dst) break;
    for (NodeId w : g.neighbors(v)) {
      if (prev[w] == -2 && !blocked[w]) {
        prev[w] = v;
        q.push_back(w);
      }
    }
  }
  if (prev[dst] == -2) return {};
  std::vector<NodeId> path;
  for (NodeId v = dst; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.node_count();
  std::vector<NodeId> order = mcs_order(g);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  for (int i = 0; i < n; ++i) {
    NodeId v = order[i];
    // Later neighbors of v; in a PEO they must form a clique. It suffices to
    // check them against the earliest one.
    std::vector<NodeId> later;
    for (NodeId w : g.neighbors(v))
      if (pos[w] > i) later.push_back(w);
    if (later.size() < 2) continue;
    NodeId u = later[0];
    for (NodeId w : later)
      if (pos[w] < pos[u]) u = w;
    for (NodeId w : later) {
      if (w == u || g.has_edge(u, w)) continue;
      // u and w are nonadjacent neighbors of v: recover a chordless cycle
      // through v by the shortest u-w path outside N[v].
      std::vector<char> blocked(n, 0);
      blocked[v] = 1;
      for (NodeId x : g.neighbors(v)) blocked[x] = 1;
      blocked[u] = blocked[w] = 0;
      std::vector<NodeId> path = shortest_path_avoiding(g, u, w, blocked);
      if (path.empty())
        throw std::logic_error("chordality witness search failed");
      path.push_back(v);
      return ChordalityResult{false, std::move(path)};
    }
  }
  return ChordalityResult{true, {}};
}

namespace {

// (2,3)-pebble game. Directed graph on the nodes; each node starts with two
// pebbles; an edge can be inserted when four pebbles sit on its endpoints.
class PebbleGame {
 public:
  explicit PebbleGame(int n) : pebbles_(n, 2), out_(n) {}

  bool insert_edge(NodeId u, NodeId v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (!free_pebble(u, v) && !free_pebble(v, u)) return false;
    }
    // Orient the new edge away from a node holding a pebble.
    if (pebbles_[u] == 0) std::swap(u, v);
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  // Searches from root for a node with a spare pebble, excluding `other`;
  // on success reverses the path to move the pebble to root.
  bool free_pebble(NodeId root, NodeId other) {
    const int n = static_cast<int>(pebbles_.size());
    std::vector<int> prev(n, -2);
    prev[root] = -1;
    prev[other] = -3;  // pebbles on `other` are reserved for the new edge
    std::queue<NodeId> q;
    q.push(root);
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      for (NodeId w : out_[v]) {
        if (prev[w] != -2) continue;
        prev[w] = v;
        if (pebbles_[w] > 0) {
          --pebbles_[w];
          ++pebbles_[root];
          // Reverse edges along the path w <- ... <- root.
          NodeId cur = w;
          while (prev[cur] != -1) {
            NodeId p = prev[cur];
            auto& po = out_[p];
            po.erase(std::find(po.begin(), po.end(), cur));
            out_[cur].push_back(p);
            cur = p;
          }
          return true;
        }
        q.push(w);
      }
    }
    return false;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<NodeId>> out_;
};

}  // namespace

bool is_laman(const Graph& g) {
  const int n = g.node_count();
  if (n < 2) return false;
  if (g.edge_count() != 2 * n - 3) return false;
  PebbleGame game(n);
  for (const Edge& e : g.edges())
    if (!game.insert_edge(e.u, e.v)) return false;
  return true;
}

bool is_tlg(const Graph& g) {
  if (g.node_count() < 3) return false;
  return is_laman(g) && is_chordal(g).chordal;
}

bool is_simple_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge not in graph");
  int count = 0;
  for (NodeId w : g.neighbors(e.u))
    if (w != e.v && g.has_edge(e.v, w)) ++count;
  return count == 1;
}

}  // namespace tlg
