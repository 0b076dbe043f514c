#pragma once

#include <vector>

#include "apexrep/frontline.hpp"
#include "apexrep/gadget.hpp"
#include "apexrep/rational.hpp"

namespace apexrep {

enum class Orientation { Horizontal, Vertical };

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Axis-parallel closed segment. Horizontal segments fix y and span x;
// vertical segments fix x and span y.
struct Segment {
  Vertex owner;
  Orientation orientation = Orientation::Horizontal;
  Rational fixed;
  Rational lo;
  Rational hi;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// The segment between two points sharing an x or y coordinate. Throws
// InternalConsistency for a diagonal pair.
Segment segment_between(const Vertex& owner, const Point& p, const Point& q);

// The rectilinear curve realising one edge of the input graph.
struct EdgeTrace {
  Edge edge;
  Side side = Side::Left;
  int rank = 0;
  int zeta = 0;
  Rational xpos;
  // True when the curve starts at edge.v(); geometric piece t then belongs
  // to chain vertex u^{k+1-t}.
  bool reversed = false;
  // k+1 corner points; consecutive pairs are the k pieces.
  std::vector<Point> points;
};

struct Arrangement {
  int n = 0;
  int k = 0;
  Vertex apex;
  std::vector<Vertex> originals;  // bottom to top, original i sits at y = i
  // Canonical order: apex, originals by position, edge pieces by
  // (rank, zeta) and then chain index.
  std::vector<Segment> segments;
  std::vector<EdgeTrace> traces;  // sorted by (rank, zeta); empty for parsed arrangements
};

// 1 / (k^2 n^5)
Rational bridge_length(int k, int n);

// Base construction with three pieces per edge, driven by a valid front
// line drawing and its ranks. The gadget must have k = 3 and match the
// drawing's vertices and edges. Throws UnsupportedSize for n < 4.
Arrangement synthesize_k3(const FrontLineDrawing& d, const EdgePoset& poset, const ApexGadget& gadget);

// Repeatedly splits the last (vertical) piece of every edge curve at its
// midpoint, adding a bridge of length 1/((k+2)^2 n^5) pointing away from
// the apex, until k reaches target_k. target_k == arr.k is the identity.
Arrangement extend_to_k(const Arrangement& arr, int target_k);

// synthesize_k3 followed by extend_to_k(gadget.k).
Arrangement build_arrangement(const FrontLineDrawing& d, const EdgePoset& poset, const Graph& g,
                              int k);

// Signed offset of the curve's end piece from +-xpos: the sum of all
// bridge perturbations applied to this edge.
Rational cumulative_drift(const EdgeTrace& t);

// x-coordinates of the trace's vertical pieces.
std::vector<Rational> vertical_xs(const EdgeTrace& t);

}  // namespace apexrep
