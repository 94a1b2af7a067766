#pragma once

#include "tlg/graph.hpp"
#include "tlg/henneberg.hpp"
#include "tlg/stoch.hpp"

namespace fixtures {

using tlg::Edge;
using tlg::Graph;

/// 5-node worked example used throughout: triangles {0,1,2}, {0,1,3},
/// {1,2,4}; the derived graph is the path D1 - D0 - D2.
inline Graph n5() {
  return Graph(5, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 3),
                   Edge(1, 4), Edge(2, 4)});
}

/// Local weights for n5(): a_0 = (1/2,1/4,1/4), a_1 = (1/3,1/3,1/3),
/// a_2 = (1/4,1/2,1/4), each indexed by the triangle's sorted nodes.
inline tlg::WeightAssignment n5_weights() {
  using tlg::Rational;
  return tlg::WeightAssignment({
      tlg::LocalWeights(Rational(1, 2), Rational(1, 4), Rational(1, 4)),
      tlg::LocalWeights(Rational(1, 3), Rational(1, 3), Rational(1, 3)),
      tlg::LocalWeights(Rational(1, 4), Rational(1, 2), Rational(1, 4)),
  });
}

/// Chordal but over-braced graph: 8 nodes, 14 edges (13 allowed for Laman).
/// Nodes 2..7 all adjacent to both 0 and 1, plus the extra edge (2,3).
inline Graph book8() {
  std::vector<Edge> e{Edge(0, 1), Edge(2, 3)};
  for (int v = 2; v <= 7; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(1, v);
  }
  return Graph(8, std::move(e));
}

/// 5-wheel: hub 0, rim cycle 1..5. Triangulated and rigid but not Laman
/// (6 nodes, 10 edges).
inline Graph wheel5() {
  std::vector<Edge> e;
  for (int i = 1; i <= 5; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % 5 + 1);
  }
  return Graph(6, std::move(e));
}

/// Fan of k triangles all sharing the edge (0,1); its derived graph is
/// complete.
inline tlg::RhcProgram fan(int k) {
  tlg::RhcProgram p{tlg::Triangle::of(0, 1, 2), {}};
  for (int i = 1; i < k; ++i)
    p.steps.push_back(tlg::RhcStep{Edge(0, 1), 2 + i});
  return p;
}

}  // namespace fixtures
