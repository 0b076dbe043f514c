#pragma once

#include <map>
#include <optional>
#include <vector>

#include "apexrep/graph.hpp"
#include "apexrep/planarity.hpp"

namespace apexrep {

// Where an edge runs relative to the front line. Above/Below edges are
// crossover edges: they leave one endpoint to the left of the line, pass
// around its top (Above) or bottom (Below), and reach the other endpoint
// from the right.
enum class Side { Left, Right, Above, Below };

const char* side_code(Side s);  // "L", "R", "A", "B"
Side side_from_code(std::string_view code);

inline bool is_crossover(Side s) { return s == Side::Above || s == Side::Below; }

struct Placement {
  Side side = Side::Left;
  // Crossover edges only: the endpoint reached from the left of the front
  // line and the one reached from the right. Empty otherwise.
  Vertex left_attach;
  Vertex right_attach;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct FrontLineDrawing {
  std::vector<Vertex> ordering;  // bottom to top
  std::map<Edge, Placement> placement;

  // 1-based position of v on the front line.
  int position(const Vertex& v) const;
  friend bool operator==(const FrontLineDrawing&, const FrontLineDrawing&) = default;
};

// An edge in positional form. For Left/Right, lo < hi are the endpoint
// positions; for crossover edges lo is the left-attach position and hi the
// right-attach position.
struct Arc {
  Side side;
  int lo;
  int hi;
};

Arc arc_of(const Edge& e, const FrontLineDrawing& d);

// Pairwise crossing model: true iff the two (distinct) edges must cross.
bool arcs_cross(const Arc& x, const Arc& y);
// Area containment for distinct edges: area(x) is a subset of area(y).
bool arc_within(const Arc& x, const Arc& y);

// Throws InvalidInput when the drawing does not cover g exactly (ordering
// is not a permutation of V(g), an edge is unassigned or foreign, or a
// crossover's attach fields are not its endpoints). Returns false iff some
// pair of edges crosses.
bool validate(const FrontLineDrawing& d, const Graph& g);

// The graph a drawing describes: its ordering plus its placed edges.
Graph drawing_graph(const FrontLineDrawing& d);

// kBelow: e1 <= e2 (area(e1) inside area(e2)); kAbove: e2 <= e1.
enum class Relation { kBelow, kAbove, kEqual, kIncomparable };

struct EdgePoset {
  std::vector<Edge> edges;                      // canonical order
  std::vector<std::vector<Relation>> relation;  // relation[i][j] of edges[i] vs edges[j]
  std::map<Edge, int> rank;

  Relation compare(const Edge& e1, const Edge& e2) const;
};

Relation containment(const Edge& e1, const Edge& e2, const FrontLineDrawing& d);

// Longest downward chain lengths of the containment order. Throws
// InvalidInput for an invalid drawing and InternalConsistency if the
// relation has a cycle.
EdgePoset ranks(const FrontLineDrawing& d);

// Same labelling without the validity precondition; the containment
// relation is acyclic for every assignment.
EdgePoset ranks_unchecked(const FrontLineDrawing& d);

struct SynthesisOptions {
  // Search every ordering when the PHPC certificate ordering admits no
  // drawing (or there is no certificate). With false, only the certificate
  // ordering is tried. Exhaustive search is factorial in n; it exists to
  // cross-check the PHPC answer on small graphs.
  bool exhaustive = false;
  SearchOptions search;
};

struct SynthesisResult {
  FrontLineDrawing drawing;
  EdgePoset poset;
};

// Backtracking search for a front line drawing. Orderings: the PHPC
// certificate first, then every ordering (first < last) lexicographically.
// Per edge (canonical order) the assignments tried are Left, Right,
// Above(u,v), Above(v,u), Below(u,v), Below(v,u). Throws InvalidInput for
// a non-planar graph.
std::optional<SynthesisResult> synthesize(const Graph& g, const SynthesisOptions& opts = {});

// The drawing search for one fixed ordering.
std::optional<FrontLineDrawing> synthesize_for_ordering(const Graph& g,
                                                        const std::vector<Vertex>& ordering);

}  // namespace apexrep
