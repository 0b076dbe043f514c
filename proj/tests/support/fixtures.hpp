#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "apexrep/frontline.hpp"
#include "apexrep/graph.hpp"

namespace fixture {

using apexrep::Edge;
using apexrep::FrontLineDrawing;
using apexrep::Placement;
using apexrep::Side;

inline apexrep::Graph graph_of(std::initializer_list<std::pair<const char*, const char*>> edges) {
  apexrep::Graph g;
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline void place(FrontLineDrawing& d, const char* a, const char* b, Side s) {
  d.placement[Edge(a, b)] = Placement{s, "", ""};
}

inline void cross(FrontLineDrawing& d, const char* left, const char* right, Side s) {
  d.placement[Edge(left, right)] = Placement{s, left, right};
}

// Seven vertices on the front line in label order. The path 1..7 runs on
// the left, with one more left edge 13; 25, 26, 27 nest on the right; two
// crossover edges pass below: from 4 (left) to 2 (right) and from 5 to 7.
inline FrontLineDrawing nested_right_fan() {
  FrontLineDrawing d;
  for (int i = 1; i <= 7; ++i) d.ordering.push_back(std::to_string(i));
  for (int i = 1; i < 7; ++i)
    d.placement[Edge(std::to_string(i), std::to_string(i + 1))] = Placement{Side::Left, "", ""};
  place(d, "1", "3", Side::Left);
  place(d, "2", "5", Side::Right);
  place(d, "2", "6", Side::Right);
  place(d, "2", "7", Side::Right);
  cross(d, "4", "2", Side::Below);
  cross(d, "5", "7", Side::Below);
  return d;
}

}  // namespace fixture
