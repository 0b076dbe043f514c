#include "apexrep/arrangement.hpp"

#include <algorithm>
#include <tuple>

#include "apexrep/error.hpp"

namespace apexrep {

namespace {

Rational power(int base, int exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return Rational(r);
}

void append_pieces(const EdgeTrace& t, int k, std::vector<Segment>& out) {
  const std::size_t base = out.size();
  out.resize(base + k);
  for (int piece = 1; piece <= k; ++piece) {
    int index = t.reversed ? k + 1 - piece : piece;
    out[base + index - 1] =
        segment_between(subdivision_vertex(t.edge, index), t.points[piece - 1], t.points[piece]);
  }
}

void rebuild_edge_segments(Arrangement& arr) {
  arr.segments.resize(1 + arr.originals.size());
  for (const auto& t : arr.traces) append_pieces(t, arr.k, arr.segments);
}

}  // namespace

Segment segment_between(const Vertex& owner, const Point& p, const Point& q) {
  Segment s;
  s.owner = owner;
  if (p.y == q.y) {
    s.orientation = Orientation::Horizontal;
    s.fixed = p.y;
    s.lo = std::min(p.x, q.x);
    s.hi = std::max(p.x, q.x);
  } else if (p.x == q.x) {
    s.orientation = Orientation::Vertical;
    s.fixed = p.x;
    s.lo = std::min(p.y, q.y);
    s.hi = std::max(p.y, q.y);
  } else {
    throw InternalConsistency("piece of " + owner + " is not axis-parallel");
  }
  return s;
}

Rational bridge_length(int k, int n) {
  Rational r = 1 / (power(k, 2) * power(n, 5));
  r.canonicalize();
  return r;
}

Arrangement synthesize_k3(const FrontLineDrawing& d, const EdgePoset& poset, const ApexGadget& gadget) {
  if (gadget.k != 3) throw InvalidParameter("synthesize_k3 needs a gadget with k = 3");
  const int n = static_cast<int>(d.ordering.size());
  if (n < 4)
    throw UnsupportedSize("the segment construction needs n >= 4 original vertices, got " +
                          std::to_string(n));
  const Graph g = drawing_graph(d);
  {
    VertexSet originals(gadget.originals.begin(), gadget.originals.end());
    if (originals != g.vertices()) throw InvalidInput("gadget originals differ from the drawing's vertices");
    if (gadget.chains.size() != g.edge_count())
      throw InvalidInput("gadget edges differ from the drawing's edges");
    for (const auto& e : g.edges())
      if (!gadget.chains.contains(e)) throw InvalidInput("gadget has no chain for edge " + e.key());
  }
  if (!validate(d, g)) throw InvalidInput("front line drawing has crossing edges");
  for (const auto& e : g.edges())
    if (!poset.rank.contains(e)) throw InvalidInput("poset has no rank for edge " + e.key());

  // Reach of each original's horizontal segment to the left and right.
  std::map<Vertex, int> left_reach;
  std::map<Vertex, int> right_reach;
  for (const auto& v : d.ordering) left_reach[v] = right_reach[v] = 0;
  for (const auto& [e, p] : d.placement) {
    const int r = poset.rank.at(e);
    auto bump = [r](std::map<Vertex, int>& reach, const Vertex& v) { reach[v] = std::max(reach[v], r); };
    switch (p.side) {
      case Side::Left:
        bump(left_reach, e.u());
        bump(left_reach, e.v());
        break;
      case Side::Right:
        bump(right_reach, e.u());
        bump(right_reach, e.v());
        break;
      case Side::Above:
      case Side::Below:
        bump(left_reach, p.left_attach);
        bump(right_reach, p.right_attach);
        break;
    }
  }

  Arrangement arr;
  arr.n = n;
  arr.k = 3;
  arr.apex = gadget.apex;
  arr.originals = d.ordering;

  const Rational half = make_rational(1, 2);
  const Rational tenth = make_rational(1, 10);
  arr.segments.push_back(Segment{gadget.apex, Orientation::Vertical, 0, half, n + half});
  for (int i = 1; i <= n; ++i) {
    const Vertex& v = d.ordering[i - 1];
    arr.segments.push_back(Segment{v, Orientation::Horizontal, i, -left_reach[v] - tenth,
                                   right_reach[v] + tenth});
  }

  const Rational n4 = power(n, 4);
  const Rational eps = bridge_length(3, n);
  for (const auto& [e, p] : d.placement) {
    const Arc arc = arc_of(e, d);
    const int i = arc.lo;
    const int j = arc.hi;
    const int rank = poset.rank.at(e);
    const int zeta = n * std::min(i, j) + std::max(i, j);
    EdgeTrace t{.edge = e,
                .side = p.side,
                .rank = rank,
                .zeta = zeta,
                .xpos = rank + zeta / n4,
                .reversed = d.ordering[i - 1] != e.u(),
                .points = {}};

    const Rational& x = t.xpos;
    Rational mid = Rational(i + j) / 2;
    mid.canonicalize();
    switch (p.side) {
      case Side::Left:
        t.points = {{-x, i}, {-x, mid}, {-x - eps, mid}, {-x - eps, j}};
        break;
      case Side::Right:
        t.points = {{x, i}, {x, mid}, {x + eps, mid}, {x + eps, j}};
        break;
      case Side::Above:
        t.points = {{-x, i}, {-x, n + t.rank}, {x, n + t.rank}, {x, j}};
        break;
      case Side::Below:
        t.points = {{-x, i}, {-x, -t.rank}, {x, -t.rank}, {x, j}};
        break;
    }
    arr.traces.push_back(std::move(t));
  }
  std::sort(arr.traces.begin(), arr.traces.end(), [](const EdgeTrace& a, const EdgeTrace& b) {
    return std::tie(a.rank, a.zeta) < std::tie(b.rank, b.zeta);
  });

  // Pieces are labelled through subdivision_vertex so that extension can
  // relabel them; the gadget must use the same labels.
  for (const auto& [e, chain] : gadget.chains)
    for (int t = 1; t <= 3; ++t)
      if (chain.at(t - 1) != subdivision_vertex(e, t))
        throw InvalidInput("gadget chain labels for " + e.key() + " are not canonical");
  rebuild_edge_segments(arr);
  return arr;
}

Arrangement extend_to_k(const Arrangement& arr, int target_k) {
  if (target_k % 2 == 0 || target_k < arr.k)
    throw InvalidParameter("target k must be odd and >= " + std::to_string(arr.k) + ", got " +
                           std::to_string(target_k));
  if (target_k == arr.k) return arr;
  if (arr.traces.empty() && arr.segments.size() > 1 + arr.originals.size())
    throw InvalidInput("arrangement carries no edge curves to extend");

  Arrangement out = arr;
  for (int k = arr.k; k < target_k; k += 2) {
    const Rational eps = bridge_length(k + 2, out.n);
    for (auto& t : out.traces) {
      const Point last = t.points.back();
      const Point before = t.points[t.points.size() - 2];
      if (last.x != before.x)
        throw InternalConsistency("end piece of " + t.edge.key() + " is not vertical");
      const Rational& lambda = last.x;
      if (lambda == 0) throw InternalConsistency("end piece of " + t.edge.key() + " lies on x = 0");
      const Rational shifted = lambda > 0 ? Rational(lambda + eps) : Rational(lambda - eps);
      Rational mid = (before.y + last.y) / 2;
      mid.canonicalize();
      t.points.back() = Point{lambda, mid};
      t.points.push_back(Point{shifted, mid});
      t.points.push_back(Point{shifted, last.y});
    }
    out.k = k + 2;
  }
  rebuild_edge_segments(out);
  return out;
}

Arrangement build_arrangement(const FrontLineDrawing& d, const EdgePoset& poset, const Graph& g, int k) {
  const ApexGadget base = build_apex_gadget_with_k(g, 3, 1);
  return extend_to_k(synthesize_k3(d, poset, base), k);
}

Rational cumulative_drift(const EdgeTrace& t) {
  const Rational& end_x = t.points.back().x;
  Rational drift = end_x > 0 ? Rational(end_x - t.xpos) : Rational(end_x + t.xpos);
  drift.canonicalize();
  return drift;
}

std::vector<Rational> vertical_xs(const EdgeTrace& t) {
  std::vector<Rational> xs;
  for (std::size_t i = 1; i < t.points.size(); ++i)
    if (t.points[i - 1].x == t.points[i].x) xs.push_back(t.points[i].x);
  return xs;
}

}  // namespace apexrep
