// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "apexrep/arrangement.hpp"
#include "apexrep/enumerate.hpp"
#include "apexrep/frontline.hpp"
#include "apexrep/gadget.hpp"
#include "apexrep/planarity.hpp"
#include "apexrep/verifier.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace apexrep;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (passed) first_failure = why;
    passed = false;
  }
};

// Connected planar graphs with 4 <= n <= 7, every isomorphism class.
const std::vector<Graph>& instances() {
  static const std::vector<Graph> all = [] {
    std::vector<Graph> out;
    for (int n = 4; n <= 7; ++n)
      for (auto& g : connected_planar_graphs(n)) out.push_back(std::move(g));
    return out;
  }();
  return all;
}

struct Solved {
  const Graph* graph;
  SynthesisResult drawn;
  Arrangement base;  // k = 3
};

// PHPC-yes instances with their drawing and base arrangement.
const std::vector<Solved>& solved() {
  static const std::vector<Solved> all = [] {
    std::vector<Solved> out;
    for (const auto& g : instances()) {
      if (!phpc_decide(g)) continue;
      auto r = synthesize(g);
      if (!r) throw std::runtime_error("PHPC yes-instance without a drawing:\n" + format_graph(g));
      Arrangement base = build_arrangement(r->drawing, r->poset, g, 3);
      out.push_back(Solved{&g, std::move(*r), std::move(base)});
    }
    return out;
  }();
  return all;
}

std::string counts(std::initializer_list<std::pair<const char*, long>> items) {
  std::string s;
  for (const auto& [name, value] : items) s += (s.empty() ? "" : ", ") + std::to_string(value) + " " + name;
  return s;
}

Outcome gadget_structure() {
  Outcome o;
  long checked = 0;
  for (const auto& g : instances())
    for (int bound : {6, 8, 10}) {
      ++checked;
      const ApexGadget a = build_apex_gadget(g, bound);
      const std::size_t n = g.vertex_count(), m = g.edge_count(), k = a.k;
      const auto gi = girth(a.gadget);
      const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " g=" + std::to_string(bound);
      if (!is_bipartite(a.gadget)) o.fail(where + ": not bipartite");
      if (!gi || *gi < static_cast<std::size_t>(bound)) o.fail(where + ": girth too small");
      if (!is_planar(a.gadget.without_vertex(a.apex))) o.fail(where + ": apex removal not planar");
      if (a.gadget.vertex_count() != n + k * m + 1) o.fail(where + ": |V| differs from n + km + 1");
      if (a.gadget.edge_count() != (k + 1) * m + n) o.fail(where + ": |E| differs from (k+1)m + n");
    }
  o.detail = counts({{"graphs", static_cast<long>(instances().size())}, {"gadgets", checked}});
  return o;
}

Outcome phpc_oracle() {
  Outcome o;
  long graphs = 0, yes = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : connected_planar_graphs(n)) {
      ++graphs;
      const auto cert = phpc_decide(g);
      const bool naive = oracle::phpc_by_supergraphs(g);
      if (cert.has_value() != naive) o.fail("disagreement on\n" + format_graph(g));
      if (cert) {
        ++yes;
        Graph with_path = g;
        for (std::size_t i = 1; i < cert->ordering.size(); ++i)
          with_path.add_edge(cert->ordering[i - 1], cert->ordering[i]);
        if (!oracle::planar_by_minors(with_path)) o.fail("certificate path completion is not planar");
      }
    }
  o.detail = counts({{"graphs", graphs}, {"yes", yes}});
  return o;
}

Outcome representation() {
  Outcome o;
  long built = 0;
  for (const auto& s : solved())
    for (int k : {3, 5, 7}) {
      ++built;
      const Arrangement arr = extend_to_k(s.base, k);
      const IntersectionResult r = intersection_graph(arr);
      const Graph gadget = build_apex_gadget_with_k(*s.graph, k, 6).gadget;
      const std::string where = "k=" + std::to_string(k) + " on\n" + format_graph(*s.graph);
      if (!(r.graph == gadget)) o.fail("intersection graph differs from the gadget, " + where);
      if (!r.parallel_contacts.empty()) o.fail("same-orientation contact, " + where);
      if (!one_string_check(arr)) o.fail("a pair shares more than one point, " + where);
    }
  o.detail = counts({{"yes-instances", static_cast<long>(solved().size())}, {"arrangements", built}});
  return o;
}

Outcome worked_ranks() {
  Outcome o;
  const FrontLineDrawing d = fixture::nested_right_fan();
  if (!validate(d, drawing_graph(d))) {
    o.fail("fixture drawing does not validate");
    return o;
  }
  const EdgePoset p = ranks(d);
  const Edge e25("2", "5"), e26("2", "6"), e27("2", "7"), e42("4", "2"), e57("5", "7");
  if (p.rank.at(e27) != 3) o.fail("rank(v2v7) = " + std::to_string(p.rank.at(e27)));
  if (p.compare(e25, e26) != Relation::kBelow || p.compare(e26, e27) != Relation::kBelow)
    o.fail("chain v2v5 <= v2v6 <= v2v7 missing");
  if (containment(e42, e57, d) != Relation::kBelow) o.fail("v4v2 <= v5v7 missing");
  long minimal = 0;
  for (const auto& e : p.edges) {
    bool has_lower = false;
    for (const auto& f : p.edges) has_lower = has_lower || p.compare(f, e) == Relation::kBelow;
    if (!has_lower) ++minimal;
    if (!has_lower != (p.rank.at(e) == 1)) o.fail("edge " + e.key() + " minimality disagrees with rank");
  }
  o.detail = "rank(v2v7) = " + std::to_string(p.rank.at(e27)) + ", " + std::to_string(minimal) + " minimal edges";
  return o;
}

Outcome roundtrip() {
  Outcome o;
  long checked = 0;
  for (const auto& s : solved()) {
    const auto& order = s.drawn.drawing.ordering;
    Graph with_path = *s.graph;
    for (std::size_t i = 1; i < order.size(); ++i) with_path.add_edge(order[i - 1], order[i]);
    if (!oracle::planar_by_minors(with_path)) o.fail("G plus the drawing's path is not planar");
    for (int k : {3, 5, 7}) {
      ++checked;
      const Arrangement arr = extend_to_k(s.base, k);
      std::vector<Vertex> originals(s.graph->vertices().begin(), s.graph->vertices().end());
      if (extract_hamiltonian_order(arr, arr.apex, originals) != order)
        o.fail("extracted order differs, k=" + std::to_string(k) + " on\n" + format_graph(*s.graph));
      const ApexGadget a = build_apex_gadget_with_k(*s.graph, k, 6);
      if (!roundtrip_check(*s.graph, arr, a)) o.fail("roundtrip_check failed");
    }
  }
  o.detail = counts({{"arrangements", checked}});
  return o;
}

Outcome induction_bounds() {
  using oracle::Frac;
  Outcome o;
  long traces = 0, pairs = 0;
  for (const auto& s : solved()) {
    const int n = static_cast<int>(s.graph->vertex_count());
    const Rational n4 = make_rational(n * n * n * n);
    const Rational n5 = n4 * n;
    const Rational drift_bound = 1 / n5;
    const Rational gap = 1 / n4 - 2 / n5;
    const Frac fn5 = oracle::frac_pow(n, 5);
    Arrangement arr = s.base;
    for (int k = 5; k <= 9; k += 2) {
      arr = extend_to_k(arr, k);
      for (const auto& t : arr.traces) {
        ++traces;
        const Rational drift = cumulative_drift(t);
        if (abs(drift) >= drift_bound) o.fail("drift of " + t.edge.key() + " reaches 1/n^5");
        // Independent sum: sigma times every bridge on the curve. Left and
        // Right curves carry one from the base construction as well.
        Frac want(0);
        const int sigma = t.points.back().x > 0 ? 1 : -1;
        const int first = is_crossover(t.side) ? 5 : 3;
        for (int step = first; step <= k; step += 2) want = want + Frac(sigma) / (Frac(step * step) * fn5);
        if (to_string(drift) != want.str()) o.fail("drift " + to_string(drift) + " != " + want.str());
      }
      for (std::size_t a = 0; a < arr.traces.size(); ++a)
        for (std::size_t b = a + 1; b < arr.traces.size(); ++b)
          for (const auto& x : vertical_xs(arr.traces[a]))
            for (const auto& y : vertical_xs(arr.traces[b])) {
              ++pairs;
              if (abs(Rational(x - y)) < gap)
                o.fail("vertical pieces of " + arr.traces[a].edge.key() + " and " + arr.traces[b].edge.key() +
                       " closer than 1/n^4 - 2/n^5");
            }
    }
  }
  o.detail = counts({{"edge curves", traces}, {"vertical pairs", pairs}});
  return o;
}

Outcome drawing_oracle() {
  Outcome o;
  long accepted = 0, rejected = 0;
  for (const auto& s : solved()) {
    const FrontLineDrawing& d = s.drawn.drawing;
    ++accepted;
    const auto lines = oracle::realize(d, s.drawn.poset.rank);
    for (auto a = lines.begin(); a != lines.end(); ++a)
      for (auto b = std::next(a); b != lines.end(); ++b)
        if (oracle::count_crossings(a->second, b->second) != 0)
          o.fail("accepted drawing realizes " + a->first.key() + " crossing " + b->first.key());

    // Move one edge at a time; keep variants where exactly one pair crosses.
    for (const auto& [e, current] : d.placement) {
      const std::vector<Placement> options = {{Side::Left, "", ""},          {Side::Right, "", ""},
                                              {Side::Above, e.u(), e.v()}, {Side::Above, e.v(), e.u()},
                                              {Side::Below, e.u(), e.v()}, {Side::Below, e.v(), e.u()}};
      for (const auto& alt : options) {
        if (alt == current) continue;
        FrontLineDrawing bad = d;
        bad.placement[e] = alt;
        std::vector<std::pair<Edge, Edge>> crossing;
        for (auto x = bad.placement.begin(); x != bad.placement.end(); ++x)
          for (auto y = std::next(x); y != bad.placement.end(); ++y)
            if (arcs_cross(arc_of(x->first, bad), arc_of(y->first, bad))) crossing.emplace_back(x->first, y->first);
        if (crossing.size() != 1) continue;
        if (validate(bad, *s.graph)) o.fail("validate accepted a crossing drawing");
        ++rejected;
        const auto bad_lines = oracle::realize(bad, ranks_unchecked(bad).rank);
        const auto& [p, q] = crossing.front();
        if (oracle::count_crossings(bad_lines.at(p), bad_lines.at(q)) < 1)
          o.fail("rejected pair " + p.key() + " / " + q.key() + " realizes without crossing");
      }
    }
  }
  o.detail = counts({{"accepted drawings", accepted}, {"single-pair rejections", rejected}});
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "apexrep_acceptance";
  fs::create_directories(dir);
  struct Case {
    std::string name;
    Graph graph;
    std::string args;
  };
  std::vector<Case> cases = {{"k4", complete_graph(4), "--girth 10"},
                             {"fan7", instances().back(), "--girth 8"},
                             {"k23", complete_bipartite(2, 3), "--k 9"}};
  long runs = 0;
  for (const auto& c : cases) {
    const fs::path input = dir / (c.name + ".txt");
    std::ofstream(input) << format_graph(c.graph);
    std::vector<std::string> outputs;
    for (const char* env : {"", "", "APEXREP_THREADS=3 "}) {
      const fs::path out = dir / (c.name + "." + std::to_string(outputs.size()) + ".json");
      const std::string cmd = std::string(env) + APEXREP_CLI + " verify " + c.args + " --out " + out.string() +
                              " " + input.string();
      const int status = std::system(cmd.c_str());
      ++runs;
      if (status != 0) o.fail(c.name + ": verify exited with " + std::to_string(status));
      outputs.push_back(slurp(out));
    }
    if (outputs[0].empty()) o.fail(c.name + ": empty report");
    if (outputs[0] != outputs[1]) o.fail(c.name + ": two runs differ");
    if (outputs[0] != outputs[2]) o.fail(c.name + ": threaded run differs");
  }
  o.detail = counts({{"verify runs", runs}, {"inputs", static_cast<long>(cases.size())}});
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 gadget structure (n = 4..7, g in {6, 8, 10})", gadget_structure},
      {"2 PHPC agrees with the supergraph oracle (n <= 5)", phpc_oracle},
      {"3 segment representation equals the gadget (k in {3, 5, 7})", representation},
      {"4 ranks on the nested right fan drawing", worked_ranks},
      {"5 order extraction and planar path completion", roundtrip},
      {"6 bridge drift and vertical separation (k <= 9)", induction_bounds},
      {"7 drawing validity against polyline realizations", drawing_oracle},
      {"8 verify output is byte-identical across runs", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " [" << o.detail << "; " << timing << "]\n";
    if (!o.passed) {
      std::cout << "     first failure: " << o.first_failure << '\n';
      ++failed;
    }
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed;
}
