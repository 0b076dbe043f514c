#pragma once

#include <map>
#include <optional>
#include <vector>

#include "apexrep/graph.hpp"

namespace apexrep {

// Label of the apex vertex. Original labels may not contain '#', so this
// cannot collide with an input vertex.
inline const Vertex kApexLabel = "#a";

// Label of the t-th (1-based) subdivision vertex on edge e, counted from
// e.u(). Deterministic so that gadgets built with different k share ids.
Vertex subdivision_vertex(const Edge& e, int t);

using ChainMap = std::map<Edge, std::vector<Vertex>>;

struct Subdivision {
  Graph graph;
  ChainMap chains;  // e -> [u^1_e, ..., u^k_e], u^1_e adjacent to e.u()
};

// Replaces every edge by a path with k internal vertices. k must be odd and
// at least 3.
Subdivision full_subdivision(const Graph& g, int k);

// Smallest odd k with k >= max(3, girth_bound - 3).
int subdivision_depth(int girth_bound);

struct ApexGadget {
  Graph gadget;
  Vertex apex;
  std::vector<Vertex> originals;  // natural order
  ChainMap chains;
  int k = 3;
  int girth_bound = 1;
};

// Subdivides every edge of g (k from girth_bound) and adds an apex adjacent
// to every original vertex.
ApexGadget build_apex_gadget(const Graph& g, int girth_bound);
// Same construction with an explicit odd k >= 3; girth_bound is recorded
// as given.
ApexGadget build_apex_gadget_with_k(const Graph& g, int k, int girth_bound);

// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

// BFS 2-colouring; each component's smallest vertex goes to `first`.
std::optional<Bipartition> is_bipartite(const Graph& g);

// The parity classes of the gadget: originals and even-indexed chain
// vertices on one side, apex and odd-indexed chain vertices on the other.
Bipartition gadget_parts(const ApexGadget& a);

}  // namespace apexrep
