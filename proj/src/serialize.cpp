#include "apexrep/serialize.hpp"

#include <algorithm>

#include "apexrep/error.hpp"

namespace apexrep {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  return f.get<std::string>();
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json drawing_to_json(const FrontLineDrawing& d, const EdgePoset& poset) {
  Json edges = Json::array();
  for (const auto& [e, p] : d.placement) {
    Json item = {{"u", e.u()}, {"v", e.v()}, {"side", side_code(p.side)}};
    if (is_crossover(p.side)) {
      item["left_attach"] = p.left_attach;
      item["right_attach"] = p.right_attach;
    }
    edges.push_back(std::move(item));
  }
  Json ranks = Json::object();
  for (const auto& [e, r] : poset.rank) ranks[e.key()] = r;
  return Json{{"ordering", d.ordering}, {"edges", std::move(edges)}, {"ranks", std::move(ranks)}};
}

FrontLineDrawing drawing_from_json(const Json& j) {
  FrontLineDrawing d;
  try {
    d.ordering = field(j, "ordering").get<std::vector<Vertex>>();
    for (const auto& item : field(j, "edges")) {
      Edge e(string_field(item, "u"), string_field(item, "v"));
      Placement p;
      p.side = side_from_code(string_field(item, "side"));
      if (is_crossover(p.side)) {
        p.left_attach = string_field(item, "left_attach");
        p.right_attach = string_field(item, "right_attach");
      }
      if (!d.placement.emplace(e, p).second) throw ParseError("edge " + e.key() + " listed twice");
    }
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed drawing JSON: ") + ex.what());
  }
  return d;
}

Json arrangement_to_json(const Arrangement& arr) {
  Json segs = Json::array();
  for (const auto& s : arr.segments)
    segs.push_back(Json{{"owner", s.owner},
                        {"orientation", s.orientation == Orientation::Horizontal ? "H" : "V"},
                        {"fixed", to_string(s.fixed)},
                        {"span", Json::array({to_string(s.lo), to_string(s.hi)})}});
  return Json{{"n", arr.n}, {"k", arr.k}, {"segments", std::move(segs)}};
}

Arrangement arrangement_from_json(const Json& j) {
  Arrangement arr;
  try {
    arr.n = field(j, "n").get<int>();
    arr.k = field(j, "k").get<int>();
    std::vector<std::pair<Rational, Vertex>> originals;
    for (const auto& item : field(j, "segments")) {
      Segment s;
      s.owner = string_field(item, "owner");
      const std::string o = string_field(item, "orientation");
      if (o != "H" && o != "V") throw ParseError("orientation must be \"H\" or \"V\"");
      s.orientation = o == "H" ? Orientation::Horizontal : Orientation::Vertical;
      s.fixed = parse_rational(string_field(item, "fixed"));
      const Json& span = field(item, "span");
      if (!span.is_array() || span.size() != 2) throw ParseError("span must hold two rationals");
      s.lo = parse_rational(span[0].get<std::string>());
      s.hi = parse_rational(span[1].get<std::string>());
      if (s.hi < s.lo) throw ParseError("segment of " + s.owner + " has lo > hi");
      if (s.owner == kApexLabel) arr.apex = s.owner;
      if (s.owner.find('#') == Vertex::npos) originals.emplace_back(s.fixed, s.owner);
      arr.segments.push_back(std::move(s));
    }
    std::stable_sort(originals.begin(), originals.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [y, v] : originals) arr.originals.push_back(std::move(v));
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed arrangement JSON: ") + ex.what());
  }
  return arr;
}

Json chains_to_json(const ApexGadget& a) {
  Json chains = Json::object();
  for (const auto& [e, chain] : a.chains) chains[e.key()] = chain;
  return Json{{"apex", a.apex},
              {"k", a.k},
              {"girth_bound", a.girth_bound},
              {"originals", a.originals},
              {"chains", std::move(chains)}};
}

Json report_to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"check", f.check}, {"detail", f.detail}});
  Json checks = {
      {"bipartite", r.bipartite},
      {"girth", r.girth_ok},
      {"apex", r.apex_ok},
      {"census", optional_bool(r.census_ok)},
      {"pure2dir_legal", optional_bool(r.pure2dir_legal)},
      {"one_point_per_pair", optional_bool(r.one_point_per_pair)},
      {"graph_equality", optional_bool(r.graph_equality)},
      {"extraction_matches", optional_bool(r.extraction_matches)},
      {"roundtrip_planar", optional_bool(r.roundtrip_planar)},
  };
  Json phpc = {{"answer", r.phpc_yes ? "yes" : "no"}};
  if (r.phpc_yes) phpc["ordering"] = r.ordering;
  return Json{{"n", r.n},
              {"k", r.k},
              {"girth_bound", r.girth_bound},
              {"gadget_girth", r.gadget_girth ? Json(*r.gadget_girth) : Json("infinity")},
              {"phpc", std::move(phpc)},
              {"checks", std::move(checks)},
              {"failures", std::move(failures)},
              {"notes", r.notes},
              {"passed", r.passed()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace apexrep
