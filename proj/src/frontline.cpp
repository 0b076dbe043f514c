#include "apexrep/frontline.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>

#include "apexrep/error.hpp"

namespace apexrep {

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

bool interleave(int a, int b, int c, int d) {
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::map<Vertex, int> positions(const FrontLineDrawing& d) {
  std::map<Vertex, int> pos;
  for (std::size_t i = 0; i < d.ordering.size(); ++i) pos[d.ordering[i]] = static_cast<int>(i) + 1;
  return pos;
}

Arc arc_at(const Edge& e, const Placement& p, const std::map<Vertex, int>& pos) {
  if (is_crossover(p.side)) return Arc{p.side, pos.at(p.left_attach), pos.at(p.right_attach)};
  int a = pos.at(e.u());
  int b = pos.at(e.v());
  return Arc{p.side, std::min(a, b), std::max(a, b)};
}

Relation relate(const Arc& x, const Arc& y) {
  if (arc_within(x, y)) return Relation::kBelow;
  if (arc_within(y, x)) return Relation::kAbove;
  return Relation::kIncomparable;
}

EdgePoset build_poset(const FrontLineDrawing& d) {
  const auto pos = positions(d);
  EdgePoset p;
  std::vector<Arc> arcs;
  for (const auto& [e, pl] : d.placement) {
    p.edges.push_back(e);
    arcs.push_back(arc_at(e, pl, pos));
  }
  const std::size_t m = p.edges.size();
  p.relation.assign(m, std::vector<Relation>(m, Relation::kIncomparable));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      p.relation[i][j] = i == j ? Relation::kEqual : relate(arcs[i], arcs[j]);

  // Longest downward chain by memoised DFS; state 1 marks "on the stack".
  std::vector<int> rank(m, 0);
  std::vector<int> state(m, 0);
  std::function<int(std::size_t)> visit = [&](std::size_t i) -> int {
    if (state[i] == 2) return rank[i];
    if (state[i] == 1)
      throw InternalConsistency("edge containment relation has a cycle through " +
                                p.edges[i].key());
    state[i] = 1;
    int best = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (p.relation[j][i] == Relation::kBelow) best = std::max(best, visit(j));
    state[i] = 2;
    return rank[i] = best + 1;
  };
  for (std::size_t i = 0; i < m; ++i) p.rank[p.edges[i]] = visit(i);
  return p;
}

// Candidate placements for e in search order.
std::vector<Placement> candidates(const Edge& e) {
  return {
      {Side::Left, {}, {}},          {Side::Right, {}, {}},
      {Side::Above, e.u(), e.v()},   {Side::Above, e.v(), e.u()},
      {Side::Below, e.u(), e.v()},   {Side::Below, e.v(), e.u()},
  };
}

constexpr int kOptions = 6;

}  // namespace

const char* side_code(Side s) {
  switch (s) {
    case Side::Left:
      return "L";
    case Side::Right:
      return "R";
    case Side::Above:
      return "A";
    case Side::Below:
      return "B";
  }
  return "?";
}

Side side_from_code(std::string_view code) {
  if (code == "L") return Side::Left;
  if (code == "R") return Side::Right;
  if (code == "A") return Side::Above;
  if (code == "B") return Side::Below;
  throw ParseError("unknown edge side '" + std::string(code) + "'");
}

int FrontLineDrawing::position(const Vertex& v) const {
  auto it = std::find(ordering.begin(), ordering.end(), v);
  if (it == ordering.end()) throw InvalidInput("vertex '" + v + "' is not on the front line");
  return static_cast<int>(it - ordering.begin()) + 1;
}

Arc arc_of(const Edge& e, const FrontLineDrawing& d) {
  auto it = d.placement.find(e);
  if (it == d.placement.end()) throw InvalidInput("edge " + e.key() + " has no placement");
  return arc_at(e, it->second, positions(d));
}

bool arcs_cross(const Arc& x0, const Arc& y0) {
  Arc x = x0;
  Arc y = y0;
  if (static_cast<int>(x.side) > static_cast<int>(y.side)) std::swap(x, y);
  switch (x.side) {
    case Side::Left:
      if (y.side == Side::Left) return interleave(x.lo, x.hi, y.lo, y.hi);
      if (y.side == Side::Right) return false;
      return x.lo < y.lo && y.lo < x.hi;
    case Side::Right:
      if (y.side == Side::Right) return interleave(x.lo, x.hi, y.lo, y.hi);
      return x.lo < y.hi && y.hi < x.hi;
    case Side::Above:
      if (y.side == Side::Above) return sign(x.lo - y.lo) * sign(x.hi - y.hi) == -1;
      return x.lo < y.lo || x.hi < y.hi;
    case Side::Below:
      return sign(x.lo - y.lo) * sign(x.hi - y.hi) == -1;
  }
  return false;
}

bool arc_within(const Arc& x, const Arc& y) {
  switch (y.side) {
    case Side::Left:
    case Side::Right:
      return x.side == y.side && y.lo <= x.lo && x.hi <= y.hi;
    case Side::Above:
      if (x.side == Side::Left) return y.lo <= x.lo;
      if (x.side == Side::Right) return y.hi <= x.lo;
      if (x.side == Side::Above) return y.lo <= x.lo && y.hi <= x.hi;
      return false;
    case Side::Below:
      if (x.side == Side::Left) return x.hi <= y.lo;
      if (x.side == Side::Right) return x.hi <= y.hi;
      if (x.side == Side::Below) return x.lo <= y.lo && x.hi <= y.hi;
      return false;
  }
  return false;
}

Graph drawing_graph(const FrontLineDrawing& d) {
  Graph g;
  for (const auto& v : d.ordering) g.add_vertex(v);
  for (const auto& [e, p] : d.placement) g.add_edge(e.u(), e.v());
  return g;
}

bool validate(const FrontLineDrawing& d, const Graph& g) {
  if (d.ordering.size() != g.vertex_count())
    throw InvalidInput("drawing ordering has " + std::to_string(d.ordering.size()) +
                       " vertices, graph has " + std::to_string(g.vertex_count()));
  VertexSet seen;
  for (const auto& v : d.ordering) {
    if (!g.has_vertex(v)) throw InvalidInput("ordering names unknown vertex '" + v + "'");
    if (!seen.insert(v).second) throw InvalidInput("ordering repeats vertex '" + v + "'");
  }
  for (const auto& e : g.edges())
    if (!d.placement.contains(e)) throw InvalidInput("edge " + e.key() + " is not assigned");
  for (const auto& [e, p] : d.placement) {
    if (!g.edges().contains(e)) throw InvalidInput("placement for non-edge " + e.key());
    if (is_crossover(p.side)) {
      bool ok = p.left_attach != p.right_attach && e.has(p.left_attach) && e.has(p.right_attach);
      if (!ok) throw InvalidInput("crossover edge " + e.key() + " attach fields are not its endpoints");
    }
  }

  const auto pos = positions(d);
  std::vector<Arc> arcs;
  for (const auto& [e, p] : d.placement) arcs.push_back(arc_at(e, p, pos));
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j])) return false;
  return true;
}

Relation EdgePoset::compare(const Edge& e1, const Edge& e2) const {
  auto i = std::lower_bound(edges.begin(), edges.end(), e1);
  auto j = std::lower_bound(edges.begin(), edges.end(), e2);
  if (i == edges.end() || *i != e1 || j == edges.end() || *j != e2)
    throw InvalidInput("edge is not part of the poset");
  return relation[i - edges.begin()][j - edges.begin()];
}

Relation containment(const Edge& e1, const Edge& e2, const FrontLineDrawing& d) {
  if (!validate(d, drawing_graph(d))) throw InvalidInput("containment on an invalid drawing");
  Arc x = arc_of(e1, d);
  Arc y = arc_of(e2, d);
  if (e1 == e2) return Relation::kEqual;
  return relate(x, y);
}

EdgePoset ranks(const FrontLineDrawing& d) {
  if (!validate(d, drawing_graph(d))) throw InvalidInput("ranks of an invalid drawing");
  return build_poset(d);
}

EdgePoset ranks_unchecked(const FrontLineDrawing& d) { return build_poset(d); }

std::optional<FrontLineDrawing> synthesize_for_ordering(const Graph& g,
                                                        const std::vector<Vertex>& ordering) {
  FrontLineDrawing base;
  base.ordering = ordering;
  const auto pos = positions(base);
  const std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const std::size_t m = edges.size();

  std::vector<std::vector<Placement>> options(m);
  std::vector<std::array<Arc, kOptions>> arcs(m);
  for (std::size_t i = 0; i < m; ++i) {
    options[i] = candidates(edges[i]);
    for (int o = 0; o < kOptions; ++o) arcs[i][o] = arc_at(edges[i], options[i][o], pos);
  }
  // conflict[i][o][j]: options of edge j that cross option o of edge i.
  std::vector<std::array<std::vector<std::uint8_t>, kOptions>> conflict(m);
  for (std::size_t i = 0; i < m; ++i)
    for (int o = 0; o < kOptions; ++o) {
      conflict[i][o].assign(m, 0);
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        for (int p = 0; p < kOptions; ++p)
          if (arcs_cross(arcs[i][o], arcs[j][p])) conflict[i][o][j] |= std::uint8_t(1u << p);
      }
    }

  // Depth-first search in canonical edge order with forward checking; the
  // first complete assignment in (edge, option) lexicographic order wins.
  std::vector<std::vector<std::uint8_t>> domains(m + 1, std::vector<std::uint8_t>(m, 0x3f));
  std::vector<int> choice(m, -1);
  std::size_t depth = 0;
  while (true) {
    if (depth == m) break;
    auto& dom = domains[depth];
    int next = -1;
    for (int o = choice[depth] + 1; o < kOptions; ++o)
      if (dom[depth] & (1u << o)) {
        next = o;
        break;
      }
    if (next < 0) {
      choice[depth] = -1;
      if (depth == 0) return std::nullopt;
      --depth;
      continue;
    }
    choice[depth] = next;
    auto& child = domains[depth + 1];
    child = dom;
    bool alive = true;
    for (std::size_t j = depth + 1; j < m && alive; ++j) {
      child[j] &= static_cast<std::uint8_t>(~conflict[depth][next][j]);
      alive = child[j] != 0;
    }
    if (alive) ++depth;
  }

  for (std::size_t i = 0; i < m; ++i) base.placement.emplace(edges[i], options[i][choice[i]]);
  return base;
}

std::optional<SynthesisResult> synthesize(const Graph& g, const SynthesisOptions& opts) {
  auto cert = phpc_decide(g, opts.search);  // throws on non-planar input
  auto finish = [](FrontLineDrawing d) {
    EdgePoset p = ranks(d);
    return SynthesisResult{std::move(d), std::move(p)};
  };

  std::vector<Vertex> seed;
  if (cert) {
    seed = cert->ordering;
    if (auto d = synthesize_for_ordering(g, seed)) return finish(std::move(*d));
  }
  if (!opts.exhaustive) return std::nullopt;

  std::vector<Vertex> order(g.vertices().begin(), g.vertices().end());
  if (order.size() <= 1) {
    if (auto d = synthesize_for_ordering(g, order)) return finish(std::move(*d));
    return std::nullopt;
  }
  VertexLess less;
  do {
    if (less(order.back(), order.front())) continue;
    if (order == seed) continue;
    if (auto d = synthesize_for_ordering(g, order)) return finish(std::move(*d));
  } while (std::next_permutation(order.begin(), order.end(), less));
  return std::nullopt;
}

}  // namespace apexrep
