#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "apexrep/graph.hpp"

namespace apexrep {

bool is_planar(const Graph& g);
// Planarity of a graph on vertices 0..n-1 given as an edge list; parallel
// edges are tolerated.
bool is_planar(int n, std::span<const std::pair<int, int>> edges);

// A Hamiltonian order v_1..v_n of a planar supergraph of the input.
struct PhpcCertificate {
  std::vector<Vertex> ordering;
};

struct SearchOptions {
  // Worker threads for the permutation search; 0 or 1 runs sequentially.
  unsigned threads = 1;
};

// Exact Planar Hamiltonian Path Completion by permutation search: the first
// ordering (lexicographic over natural vertex order, first < last) for which
// g plus the path through consecutive vertices is planar. Throws
// InvalidInput when g itself is not planar.
std::optional<PhpcCertificate> phpc_decide(const Graph& g, const SearchOptions& opts = {});

// True iff g plus the consecutive-pair edges of `ordering` is planar.
bool path_completion_planar(const Graph& g, std::span<const Vertex> ordering);

// First vertex (natural order) whose removal leaves a planar graph.
std::optional<Vertex> is_apex(const Graph& g);

// Reads the APEXREP_THREADS environment variable (default 1).
unsigned threads_from_env();

}  // namespace apexrep
