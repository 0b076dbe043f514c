#include "doctest.h"

#include "apexrep/enumerate.hpp"
#include "apexrep/error.hpp"
#include "apexrep/planarity.hpp"
#include "support/oracles.hpp"

using namespace apexrep;

TEST_CASE("Kuratowski graphs") {
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(complete_graph(4)));
  CHECK(is_planar(complete_bipartite(2, 6)));
  CHECK_FALSE(oracle::planar_by_minors(complete_graph(5)));
  CHECK_FALSE(oracle::planar_by_minors(complete_bipartite(3, 3)));
}

TEST_CASE("planarity agrees with the minor oracle on every graph up to 7 vertices") {
  int graphs = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : all_graphs(n)) {
      ++graphs;
      CHECK_MESSAGE(is_planar(g) == oracle::planar_by_minors(g), format_graph(g));
    }
  CHECK(graphs == 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

TEST_CASE("isomorphism class counts") {
  CHECK(all_graphs(4).size() == 11);
  CHECK(all_graphs(5).size() == 34);
  CHECK(connected_planar_graphs(5).size() == 20);
  CHECK(connected_planar_graphs(6).size() == 99);
}

TEST_CASE("PHPC certificate is the first ordering in natural order") {
  const auto p = phpc_decide(path_graph(5));
  REQUIRE(p.has_value());
  CHECK(p->ordering == std::vector<Vertex>{"1", "2", "3", "4", "5"});
  CHECK(path_completion_planar(path_graph(5), p->ordering));

  const auto star = phpc_decide(star_graph(4));
  REQUIRE(star.has_value());
  CHECK(star->ordering.front() == "1");
}

TEST_CASE("PHPC rejects non-planar input") {
  CHECK_THROWS_AS(phpc_decide(complete_graph(5)), InvalidInput);
}

TEST_CASE("PHPC no-instance: a triangulation with a large independent set") {
  // Stellating every face of the octahedron adds 8 pairwise non-adjacent
  // vertices to 6; no path on 14 vertices alternates that well, and the
  // graph is maximal planar, so no edge can be added.
  Graph g;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      if (!(a % 2 == 1 && b == a + 1)) g.add_edge(std::to_string(a), std::to_string(b));
  int face = 7;
  for (int x : {1, 2})
    for (int y : {3, 4})
      for (int z : {5, 6}) {
        for (int v : {x, y, z}) g.add_edge(std::to_string(v), std::to_string(face));
        ++face;
      }
  REQUIRE(is_planar(g));
  CHECK(g.edge_count() == 3 * 14 - 6);
  CHECK_FALSE(phpc_decide(g).has_value());
}

TEST_CASE("threaded search returns the sequential certificate") {
  for (const auto& g : connected_planar_graphs(6)) {
    const auto one = phpc_decide(g);
    const auto four = phpc_decide(g, SearchOptions{4});
    REQUIRE(one.has_value());
    REQUIRE(four.has_value());
    CHECK(one->ordering == four->ordering);
  }
}

TEST_CASE("apex detection") {
  CHECK(is_apex(complete_graph(5)) == Vertex("1"));
  Graph two_k5;  // two disjoint K5 copies are not apex
  for (int base : {0, 5})
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) two_k5.add_edge(std::to_string(base + i), std::to_string(base + j));
  CHECK_FALSE(is_apex(two_k5).has_value());
}
