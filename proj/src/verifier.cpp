#include "apexrep/verifier.hpp"

#include <algorithm>
#include <map>

#include "apexrep/error.hpp"
#include "apexrep/planarity.hpp"

namespace apexrep {

namespace {

bool meets(const Segment& h, const Segment& v) {
  return h.lo <= v.fixed && v.fixed <= h.hi && v.lo <= h.fixed && h.fixed <= v.hi;
}

// For collinear same-orientation segments: lengths of the shared interval,
// or nullopt when they are disjoint.
std::optional<Rational> shared_length(const Segment& a, const Segment& b) {
  if (a.orientation != b.orientation || a.fixed != b.fixed) return std::nullopt;
  const Rational& lo = std::max(a.lo, b.lo);
  const Rational& hi = std::min(a.hi, b.hi);
  if (hi < lo) return std::nullopt;
  return Rational(hi - lo);
}

void fail(VerificationReport& r, std::string check, std::string detail) {
  r.failures.push_back({std::move(check), std::move(detail)});
}

}  // namespace

IntersectionResult intersection_graph(const Arrangement& arr) {
  IntersectionResult out;
  const auto& segs = arr.segments;
  for (const auto& s : segs) out.graph.add_vertex(s.owner);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& a = segs[i];
      const Segment& b = segs[j];
      if (a.orientation == b.orientation) {
        if (shared_length(a, b)) out.parallel_contacts.emplace_back(a.owner, b.owner);
        continue;
      }
      const bool hit = a.orientation == Orientation::Horizontal ? meets(a, b) : meets(b, a);
      if (hit && a.owner != b.owner) out.graph.add_edge(a.owner, b.owner);
    }
  }
  return out;
}

bool one_string_check(const Arrangement& arr) {
  const auto& segs = arr.segments;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      auto len = shared_length(segs[i], segs[j]);
      if (len && *len > 0) return false;
    }
  return true;
}

std::vector<Vertex> extract_hamiltonian_order(const Arrangement& arr, const Vertex& apex,
                                              const std::vector<Vertex>& originals) {
  std::map<Vertex, std::vector<const Segment*>> owned;
  for (const auto& s : arr.segments) owned[s.owner].push_back(&s);

  auto only = [&](const Vertex& v) -> const Segment& {
    auto it = owned.find(v);
    if (it == owned.end() || it->second.size() != 1)
      throw ContractViolation("vertex '" + v + "' does not own exactly one segment");
    return *it->second.front();
  };

  const Segment& a = only(apex);
  if (a.orientation != Orientation::Vertical) throw ContractViolation("apex segment is not vertical");

  std::vector<std::pair<Rational, Vertex>> hits;
  for (const auto& v : originals) {
    const Segment& s = only(v);
    if (s.orientation == Orientation::Horizontal) {
      if (!meets(s, a)) throw ContractViolation("segment of '" + v + "' misses the apex segment");
      hits.emplace_back(s.fixed, v);
      continue;
    }
    auto len = shared_length(s, a);
    if (!len) throw ContractViolation("segment of '" + v + "' misses the apex segment");
    if (*len != 0) throw ContractViolation("segment of '" + v + "' meets the apex in more than one point");
    hits.emplace_back(std::max(s.lo, a.lo), v);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < hits.size(); ++i)
    if (hits[i - 1].first == hits[i].first)
      throw ContractViolation("'" + hits[i - 1].second + "' and '" + hits[i].second +
                              "' meet the apex at the same point");
  std::vector<Vertex> order;
  for (auto& [y, v] : hits) order.push_back(std::move(v));
  return order;
}

bool roundtrip_check(const Graph& g, const Arrangement& arr, const ApexGadget& gadget) {
  const auto order = extract_hamiltonian_order(arr, gadget.apex, gadget.originals);
  return path_completion_planar(g, order);
}

bool VerificationReport::passed() const {
  if (!failures.empty()) return false;
  if (!bipartite || !girth_ok || !apex_ok) return false;
  for (const auto& c : {census_ok, pure2dir_legal, one_point_per_pair, graph_equality,
                        extraction_matches, roundtrip_planar})
    if (c && !*c) return false;
  return true;
}

VerificationReport verify_reduction(const Graph& g, int girth_bound, const VerifyOptions& opts) {
  if (!is_planar(g)) throw InvalidInput("input graph is not planar");
  const int k = opts.k ? *opts.k : subdivision_depth(girth_bound);
  const ApexGadget gadget = build_apex_gadget_with_k(g, k, girth_bound);

  VerificationReport r;
  r.n = static_cast<int>(g.vertex_count());
  r.k = k;
  r.girth_bound = girth_bound;

  r.gadget_girth = girth(gadget.gadget);
  r.girth_ok = !r.gadget_girth ||
               (*r.gadget_girth >= static_cast<std::size_t>(girth_bound) &&
                *r.gadget_girth >= static_cast<std::size_t>(k + 3));
  if (!r.girth_ok) fail(r, "girth", "gadget girth " + std::to_string(*r.gadget_girth));

  auto parts = is_bipartite(gadget.gadget);
  if (parts) {
    const Bipartition expected = gadget_parts(gadget);
    r.bipartite = (parts->first == expected.first && parts->second == expected.second) ||
                  (parts->first == expected.second && parts->second == expected.first);
    if (!r.bipartite) fail(r, "bipartite", "2-colouring differs from the parity classes");
  } else {
    fail(r, "bipartite", "gadget has an odd cycle");
  }

  const Graph without_apex = gadget.gadget.without_vertex(gadget.apex);
  const bool is_subdivision = without_apex == full_subdivision(g, k).graph;
  r.apex_ok = is_subdivision && is_planar(without_apex);
  if (!r.apex_ok) fail(r, "apex", "removing the apex does not leave the planar subdivision");

  auto cert = phpc_decide(g, SearchOptions{opts.threads});
  r.phpc_yes = cert.has_value();
  if (!cert) {
    r.notes.push_back("PHPC no-instance: non-representability of the gadget is not certified");
    return r;
  }
  r.ordering = cert->ordering;
  if (r.n < 4) {
    r.notes.push_back("segment construction needs at least 4 vertices; representation not built");
    return r;
  }

  SynthesisOptions sopts;
  sopts.search.threads = opts.threads;
  auto drawn = synthesize(g, sopts);
  if (!drawn) {
    fail(r, "synthesis", "PHPC yes-instance without a front line drawing");
    return r;
  }

  const Arrangement arr = build_arrangement(drawn->drawing, drawn->poset, g, k);

  std::map<Vertex, int> owned;
  for (const auto& s : arr.segments) ++owned[s.owner];
  const std::size_t expected_count = 1 + g.vertex_count() + k * g.edge_count();
  bool census = arr.segments.size() == expected_count && owned.size() == expected_count;
  for (const auto& v : gadget.gadget.vertices()) census = census && owned[v] == 1;
  r.census_ok = census;
  if (!census) fail(r, "census", std::to_string(arr.segments.size()) + " segments, expected " +
                                     std::to_string(expected_count));

  const IntersectionResult ig = intersection_graph(arr);
  r.pure2dir_legal = ig.parallel_contacts.empty();
  if (!*r.pure2dir_legal)
    fail(r, "pure2dir", "parallel contact between " + ig.parallel_contacts.front().first + " and " +
                            ig.parallel_contacts.front().second);

  r.graph_equality = census && ig.graph == gadget.gadget;
  if (!*r.graph_equality) {
    std::string detail;
    for (const auto& e : gadget.gadget.edges())
      if (!ig.graph.edges().contains(e)) {
        detail = "missing edge " + e.key();
        break;
      }
    if (detail.empty())
      for (const auto& e : ig.graph.edges())
        if (!gadget.gadget.edges().contains(e)) {
          detail = "extra edge " + e.key();
          break;
        }
    fail(r, "graph_equality", detail.empty() ? "vertex sets differ" : detail);
  }

  r.one_point_per_pair = one_string_check(arr);
  if (!*r.one_point_per_pair) fail(r, "one_point", "a segment pair shares more than one point");

  try {
    const auto order = extract_hamiltonian_order(arr, gadget.apex, gadget.originals);
    r.extraction_matches = order == drawn->drawing.ordering;
    if (!*r.extraction_matches) fail(r, "extraction", "apex order differs from the drawing's order");
    r.roundtrip_planar = path_completion_planar(g, order);
    if (!*r.roundtrip_planar) fail(r, "roundtrip", "graph plus extracted path is not planar");
  } catch (const ContractViolation& e) {
    r.extraction_matches = false;
    r.roundtrip_planar = false;
    fail(r, "extraction", e.what());
  }
  return r;
}

}  // namespace apexrep
