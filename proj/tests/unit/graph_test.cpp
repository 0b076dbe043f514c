#include <sstream>

#include "doctest.h"

#include "apexrep/error.hpp"
#include "apexrep/graph.hpp"

using namespace apexrep;

TEST_CASE("natural vertex order compares digit runs by value") {
  VertexLess less;
  CHECK(less("2", "10"));
  CHECK_FALSE(less("10", "2"));
  CHECK(less("a2", "a10"));
  CHECK(less("a", "b"));
  CHECK(less("01", "1"));  // equal value, plain order breaks the tie
  CHECK_FALSE(less("x", "x"));
}

TEST_CASE("edges are stored with the smaller endpoint first") {
  Edge e("10", "2");
  CHECK(e.u() == "2");
  CHECK(e.v() == "10");
  CHECK(e.key() == "2 10");
  CHECK(e.other("2") == "10");
  CHECK(e == Edge("2", "10"));
}

TEST_CASE("graph rejects self-loops and ignores repeated edges") {
  Graph g;
  g.add_edge("1", "2");
  g.add_edge("2", "1");
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge("3", "3"), InvalidInput);
  CHECK(g.without_vertex("1").vertex_count() == 1);
  CHECK(g.without_vertex("1").edge_count() == 0);
}

TEST_CASE("text format round-trips, isolated vertices included") {
  const Graph g = parse_graph("1 2\n\n2 3\nv 9\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.has_edge("3", "2"));
  CHECK(format_graph(g) == "v 9\n1 2\n2 3\n");
  CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("an edge whose smaller endpoint is named v is written reversed") {
  Graph g;
  g.add_edge("v", "w");
  const std::string text = format_graph(g);
  CHECK(text == "w v\n");
  CHECK(parse_graph(text) == g);
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_graph("1 2\n1 2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("1\n"), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("indexed view follows natural order") {
  Graph g;
  g.add_edge("10", "2");
  g.add_edge("2", "3");
  const IndexedGraph ig(g);
  CHECK(ig.labels == std::vector<Vertex>{"2", "3", "10"});
  CHECK(ig.index_of("10") == 2);
  CHECK(ig.edges.size() == 2);
}
