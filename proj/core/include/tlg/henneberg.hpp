#pragma once

#include "tlg/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tlg {

/// One restricted-Henneberg step: attach `node` to both endpoints of `base`.
struct RhcStep {
  Edge base;
  NodeId node = -1;

  bool operator==(const RhcStep&) const = default;
};

/// An ordered restricted Henneberg construction; executing it certifies that
/// the resulting graph is a TLG. Node labels are explicit so that programs
/// re-rooted at another triangle stay label-exact; the union of labels must
/// be {0,...,n-1}.
struct RhcProgram {
  Triangle initial;
  std::vector<RhcStep> steps;

  int node_count() const { return 3 + static_cast<int>(steps.size()); }
};

struct InvalidStepError : std::runtime_error {
  int index;
  InvalidStepError(int idx, const std::string& what)
      : std::runtime_error("step " + std::to_string(idx) + ": " + what),
        index(idx) {}
};

Graph rhc_execute(const RhcProgram& p);

struct RecognizeResult {
  std::optional<RhcProgram> program;
  std::string reason;  // set on failure

  explicit operator bool() const { return program.has_value(); }
};

/// Reverse reduction: repeatedly removes a degree-2 node whose neighbors are
/// adjacent (largest index first), then replays the removals backwards.
/// Succeeds exactly on TLGs; the program reproduces g label-exactly.
RecognizeResult rhc_recognize(const Graph& g);

/// An RHC for g whose initial triangle is t. Requires is_tlg(g).
RhcProgram rhc_from_triangle(const Graph& g, const Triangle& t);

/// General Henneberg operation.
struct HennebergStep {
  enum class Kind { NodeAdd, EdgeSplit };
  Kind kind;
  NodeId a = -1;  // NodeAdd: the two existing nodes; EdgeSplit: split edge
  NodeId b = -1;
  NodeId c = -1;  // EdgeSplit only: the existing third node

  static HennebergStep node_add(NodeId i, NodeId j) {
    return {Kind::NodeAdd, i, j, -1};
  }
  static HennebergStep edge_split(Edge e, NodeId k) {
    return {Kind::EdgeSplit, e.u, e.v, k};
  }
};

/// Executes a Henneberg sequence starting from a single edge on nodes {0,1}.
/// New nodes are labeled consecutively. The result is minimally rigid but
/// not necessarily triangulated.
Graph henneberg_execute(const std::vector<HennebergStep>& steps);

/// The three step shapes that break chordality (node-add on non-adjacent
/// nodes; edge-split on a non-simple edge; edge-split whose three existing
/// nodes are not a triangle). None means the step is TLG-compatible.
enum class StepViolation { None, Option1, Option2, Option3 };

StepViolation classify_step_violation(const Graph& g, const HennebergStep& s);

struct NotTlgResultError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rewrites a Henneberg sequence whose result is a TLG into an RHC, one
/// edge-split at a time: re-root the node-add prefix at the split triangle,
/// then replay the split as a node-add. The output executes to a graph
/// isomorphic to the input's result.
RhcProgram henneberg_to_rhc(const std::vector<HennebergStep>& steps);

/// Seeded random RHC on n nodes (each step picks a uniform existing edge).
RhcProgram random_rhc(int n, std::uint64_t seed);

}  // namespace tlg
