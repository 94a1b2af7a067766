#pragma once

#include "tlg/graph.hpp"

#include <map>
#include <optional>

namespace tlg {

using TriId = int;

struct NotTlgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Derived graph of a TLG: one node per triangle, adjacent when the two
/// triangles share an edge of the base graph. Immutable after build.
class DerivedGraph {
 public:
  static DerivedGraph build(const Graph& g);

  const Graph& base() const { return base_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  int size() const { return static_cast<int>(triangles_.size()); }

  const std::vector<TriId>& neighbors(TriId t) const;
  bool adjacent(TriId i, TriId j) const;
  /// The unique edge of the base graph shared by two adjacent triangles.
  Edge shared_edge(TriId i, TriId j) const;

  std::optional<TriId> tri_index(const Triangle& t) const;

  /// Triangles containing v; they induce a connected subgraph of the
  /// derived graph.
  const std::vector<TriId>& triangles_containing(NodeId v) const;

  /// The unique triangle containing v through which every walk from a
  /// triangle containing v to `target` must pass. Returns `target` itself
  /// when v is in it.
  TriId bottleneck(NodeId v, TriId target) const;

 private:
  DerivedGraph(Graph base, std::vector<Triangle> tris);

  Graph base_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<TriId>> adj_;
  std::map<std::pair<TriId, TriId>, Edge> shared_;   // keyed with i < j
  std::vector<std::vector<TriId>> by_node_;
};

/// Checks that all triangles of a derived-graph cycle share one base edge
/// and that the cycle's nodes induce a complete subgraph; returns the edge.
/// `cycle` lists distinct TriIds with consecutive ones (and last-first)
/// adjacent. A failure would contradict the structure theory for TLGs and is
/// reported as an internal-consistency error.
Edge verify_cycle_common_edge(const DerivedGraph& d, const std::vector<TriId>& cycle);

}  // namespace tlg
