#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "apexrep/graph.hpp"

namespace apexrep {

// One representative per isomorphism class of simple graphs on n <= 8
// vertices, labelled "1".."n". Classes are built by adding a vertex to every
// class on n - 1 vertices with every neighbourhood and deduplicating by a
// canonical code (minimum over degree-compatible relabellings).
std::vector<Graph> all_graphs(int n);

bool is_connected(const Graph& g);

// Connected planar classes on n vertices.
std::vector<Graph> connected_planar_graphs(int n);

// Named families used in examples and tests, labelled "1".."n".
Graph complete_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // centre "1"
Graph complete_bipartite(int a, int b);

struct SelftestLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The small-graph invariant suite behind `apexrep selftest`: planarity
// against the edge bound, gadget structure, drawing search against PHPC, and
// the full reduction on every connected planar graph with 4 or 5 vertices.
std::vector<SelftestLine> run_selftest();

}  // namespace apexrep
