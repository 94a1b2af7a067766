#include "tlg/henneberg.hpp"

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace tlg;

namespace {

bool same_edges(const Graph& a, const Graph& b) {
  return a.node_count() == b.node_count() && a.edges() == b.edges();
}

}  // namespace

TEST_CASE("rhc_execute") {
  SUBCASE("empty program is the initial triangle") {
    Graph g = rhc_execute(RhcProgram{Triangle::of(0, 1, 2), {}});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("two steps rebuild the 5-node example") {
    RhcProgram p{Triangle::of(0, 1, 2),
                 {RhcStep{Edge(0, 1), 3}, RhcStep{Edge(1, 2), 4}}};
    CHECK(same_edges(rhc_execute(p), fixtures::n5()));
  }
  SUBCASE("k steps give k+3 nodes and 2k+3 edges") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      RhcProgram p = random_rhc(3 + (int)(s % 10), s);
      Graph g = rhc_execute(p);
      int k = (int)p.steps.size();
      CHECK(g.node_count() == k + 3);
      CHECK(g.edge_count() == 2 * k + 3);
      CHECK(is_tlg(g));
    }
  }
  SUBCASE("missing base edge is rejected with the step index") {
    RhcProgram p{Triangle::of(0, 1, 2), {RhcStep{Edge(0, 3), 3}}};
    CHECK_THROWS_AS(rhc_execute(p), InvalidStepError);
  }
}

TEST_CASE("rhc_recognize") {
  SUBCASE("single triangle gives a 0-step program") {
    Graph tri(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
    auto r = rhc_recognize(tri);
    REQUIRE(r);
    CHECK(r.program->steps.empty());
  }
  SUBCASE("5-node example round-trips label-exactly") {
    auto r = rhc_recognize(fixtures::n5());
    REQUIRE(r);
    CHECK(same_edges(rhc_execute(*r.program), fixtures::n5()));
  }
  SUBCASE("over-braced graph is rejected with an edge-count reason") {
    auto r = rhc_recognize(fixtures::wheel5());
    CHECK(!r);
    CHECK(r.reason.find("edge count") != std::string::npos);
  }
  SUBCASE("round trip on random constructions") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      Graph g = rhc_execute(random_rhc(3 + (int)(s % 8), s + 1000));
      auto r = rhc_recognize(g);
      REQUIRE(r);
      CHECK(same_edges(rhc_execute(*r.program), g));
    }
  }
  SUBCASE("success exactly on TLGs") {
    Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 3 + rng.below(7);
      Graph g = oracle::random_graph(n, 2 * n - 3, rng);
      CHECK(static_cast<bool>(rhc_recognize(g)) == is_tlg(g));
    }
  }
}

TEST_CASE("rhc_from_triangle") {
  SUBCASE("own single triangle") {
    Graph tri(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
    auto p = rhc_from_triangle(tri, Triangle::of(0, 1, 2));
    CHECK(p.steps.empty());
  }
  SUBCASE("5-node example rooted at {0,1,3}") {
    auto p = rhc_from_triangle(fixtures::n5(), Triangle::of(0, 1, 3));
    CHECK(p.initial == Triangle::of(0, 1, 3));
    CHECK(same_edges(rhc_execute(p), fixtures::n5()));
  }
  SUBCASE("every triangle of every random construction works as root") {
    for (std::uint64_t s = 0; s < 15; ++s) {
      Graph g = rhc_execute(random_rhc(4 + (int)(s % 7), s + 77));
      for (const Triangle& t : enumerate_triangles(g)) {
        auto p = rhc_from_triangle(g, t);
        CHECK(p.initial == t);
        CHECK(same_edges(rhc_execute(p), g));
      }
    }
  }
  SUBCASE("non-triangle root is rejected") {
    CHECK_THROWS_AS(rhc_from_triangle(fixtures::n5(), Triangle::of(0, 3, 4)),
                    std::invalid_argument);
  }
}

TEST_CASE("henneberg_execute") {
  SUBCASE("edge plus one node-add is a triangle") {
    Graph g = henneberg_execute({HennebergStep::node_add(0, 1)});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("edge split keeps the Laman count and the expected triangles") {
    Graph g = henneberg_execute({HennebergStep::node_add(0, 1),
                                 HennebergStep::edge_split(Edge(0, 1), 2)});
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 5);
    CHECK(!g.has_edge(0, 1));
    auto tris = enumerate_triangles(g);
    REQUIRE(tris.size() == 2);
    CHECK(tris[0] == Triangle::of(0, 2, 3));
    CHECK(tris[1] == Triangle::of(1, 2, 3));
    CHECK(is_laman(g));
  }
  SUBCASE("node-add on a non-adjacent pair breaks chordality") {
    Graph g = henneberg_execute({HennebergStep::node_add(0, 1),
                                 HennebergStep::node_add(0, 1),
                                 HennebergStep::node_add(2, 3)});
    CHECK(is_laman(g));
    CHECK(!is_chordal(g).chordal);
  }
}

TEST_CASE("classify_step_violation") {
  Graph g = fixtures::n5();
  CHECK(classify_step_violation(g, HennebergStep::node_add(0, 1)) ==
        StepViolation::None);
  CHECK(classify_step_violation(g, HennebergStep::node_add(3, 4)) ==
        StepViolation::Option1);
  // (0,1) lies in two triangles.
  CHECK(classify_step_violation(g, HennebergStep::edge_split(Edge(0, 1), 2)) ==
        StepViolation::Option2);
  // (0,3) is simple but node 4 does not complete a triangle with it.
  CHECK(classify_step_violation(g, HennebergStep::edge_split(Edge(0, 3), 4)) ==
        StepViolation::Option3);
  CHECK(classify_step_violation(g, HennebergStep::edge_split(Edge(0, 3), 1)) ==
        StepViolation::None);
}

TEST_CASE("violating steps break chordality") {
  Rng rng(909);
  int produced = 0;
  while (produced < 25) {
    int n = 4 + rng.below(4);
    std::vector<HennebergStep> steps{HennebergStep::node_add(0, 1)};
    Graph g = henneberg_execute(steps);
    bool bad = false;
    while (g.node_count() < n) {
      // Random legal Henneberg step; remember if it is TLG-incompatible.
      HennebergStep s = HennebergStep::node_add(0, 0);
      for (;;) {
        NodeId a = rng.below(g.node_count()), b = rng.below(g.node_count());
        if (a == b) continue;
        if (rng.below(2)) {
          s = HennebergStep::node_add(a, b);
          break;
        }
        if (!g.has_edge(a, b)) continue;
        NodeId c = rng.below(g.node_count());
        if (c == a || c == b) continue;
        s = HennebergStep::edge_split(Edge(a, b), c);
        break;
      }
      if (classify_step_violation(g, s) != StepViolation::None) bad = true;
      steps.push_back(s);
      g = henneberg_execute(steps);
    }
    if (!bad) continue;
    CHECK(!is_chordal(g).chordal);
    ++produced;
  }
}

TEST_CASE("henneberg_to_rhc") {
  SUBCASE("pure node-adds on adjacent pairs pass through") {
    std::vector<HennebergStep> steps{HennebergStep::node_add(0, 1),
                                     HennebergStep::node_add(1, 2),
                                     HennebergStep::node_add(2, 3)};
    RhcProgram p = henneberg_to_rhc(steps);
    CHECK(oracle::isomorphic(rhc_execute(p), henneberg_execute(steps)));
  }
  SUBCASE("single admissible edge split") {
    // Build a TLG, then split a simple edge with its opposite triangle node.
    std::vector<HennebergStep> steps{HennebergStep::node_add(0, 1),
                                     HennebergStep::node_add(0, 2),
                                     HennebergStep::node_add(2, 3)};
    Graph g7 = henneberg_execute(steps);
    REQUIRE(classify_step_violation(g7, HennebergStep::edge_split(Edge(3, 4), 2)) ==
            StepViolation::None);
    steps.push_back(HennebergStep::edge_split(Edge(3, 4), 2));
    Graph g8 = henneberg_execute(steps);
    REQUIRE(is_tlg(g8));
    RhcProgram p = henneberg_to_rhc(steps);
    CHECK(oracle::isomorphic(rhc_execute(p), g8));
  }
  SUBCASE("two admissible edge splits") {
    std::vector<HennebergStep> steps{HennebergStep::node_add(0, 1),
                                     HennebergStep::node_add(1, 2),
                                     HennebergStep::node_add(1, 3)};
    Graph g = henneberg_execute(steps);
    REQUIRE(classify_step_violation(g, HennebergStep::edge_split(Edge(3, 4), 1)) ==
            StepViolation::None);
    steps.push_back(HennebergStep::edge_split(Edge(3, 4), 1));
    g = henneberg_execute(steps);
    REQUIRE(classify_step_violation(g, HennebergStep::edge_split(Edge(0, 2), 1)) ==
            StepViolation::None);
    steps.push_back(HennebergStep::edge_split(Edge(0, 2), 1));
    g = henneberg_execute(steps);
    REQUIRE(is_tlg(g));
    RhcProgram p = henneberg_to_rhc(steps);
    CHECK(oracle::isomorphic(rhc_execute(p), g));
  }
  SUBCASE("non-TLG result is rejected") {
    std::vector<HennebergStep> steps{HennebergStep::node_add(0, 1),
                                     HennebergStep::node_add(0, 1),
                                     HennebergStep::node_add(2, 3)};
    CHECK_THROWS_AS(henneberg_to_rhc(steps), NotTlgResultError);
  }
}
