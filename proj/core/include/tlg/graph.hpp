#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tlg {

using NodeId = int;

/// Undirected edge, stored with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  Edge() : u(-1), v(-1) {}
  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("self-loop edge");
    if (a < 0 || b < 0) throw std::invalid_argument("negative node id");
  }

  auto operator<=>(const Edge&) const = default;
};

/// Cycle of length 3, kept in canonical form (strictly increasing nodes).
struct Triangle {
  std::array<NodeId, 3> nodes;

  static Triangle of(NodeId a, NodeId b, NodeId c);

  bool contains(NodeId v) const {
    return nodes[0] == v || nodes[1] == v || nodes[2] == v;
  }
  bool contains(const Edge& e) const { return contains(e.u) && contains(e.v); }

  std::array<Edge, 3> edges() const {
    return {Edge(nodes[0], nodes[1]), Edge(nodes[0], nodes[2]),
            Edge(nodes[1], nodes[2])};
  }

  /// Position (0..2) of node v within the sorted triple.
  int slot(NodeId v) const;

  auto operator<=>(const Triangle&) const = default;
};

/// Immutable undirected simple graph on nodes 0..n-1.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(NodeId a, NodeId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  const std::vector<NodeId>& neighbors(NodeId v) const;
  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

 private:
  int n_;
  std::vector<Edge> edges_;               // sorted, unique
  std::vector<std::vector<NodeId>> adj_;  // sorted neighbor lists
};

/// All triangles of g, sorted lexicographically by node triple. This order
/// defines the canonical triangle indices used everywhere else.
std::vector<Triangle> enumerate_triangles(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  /// On failure, one chordless cycle of length >= 4 (node list, no repeat).
  std::vector<NodeId> chordless_cycle;

  explicit operator bool() const { return chordal; }
};

/// Maximum-cardinality search plus perfect-elimination-order verification.
ChordalityResult is_chordal(const Graph& g);

/// Laman counting condition: |E| = 2n-3 and every induced subgraph on k >= 2
/// nodes has at most 2k-3 edges. Decided by the (2,3)-pebble game.
bool is_laman(const Graph& g);

/// Triangulated Laman graph: chordal and Laman.
bool is_tlg(const Graph& g);

/// True iff e belongs to exactly one triangle. Throws if e is not in g.
bool is_simple_edge(const Graph& g, const Edge& e);

}  // namespace tlg
