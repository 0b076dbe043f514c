// apexrep: command-line front end for the apex-gadget segment construction.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "apexrep/arrangement.hpp"
#include "apexrep/enumerate.hpp"
#include "apexrep/error.hpp"
#include "apexrep/frontline.hpp"
#include "apexrep/gadget.hpp"
#include "apexrep/planarity.hpp"
#include "apexrep/serialize.hpp"
#include "apexrep/svg.hpp"
#include "apexrep/verifier.hpp"

namespace {

using namespace apexrep;

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kParse = 3,
  kInvalidInput = 4,
  kUnsupportedSize = 5,
  kInternal = 6,
};

struct RunConfig {
  std::string input;
  int girth_bound = 6;
  std::optional<int> k;
  std::string out;
  std::string format;
};

int depth(const RunConfig& cfg) {
  if (cfg.k) {
    if (*cfg.k < 3 || *cfg.k % 2 == 0)
      throw InvalidParameter("--k must be odd and >= 3, got " + std::to_string(*cfg.k));
    return *cfg.k;
  }
  return subdivision_depth(cfg.girth_bound);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Pipeline {
  SynthesisResult drawn;
  Arrangement arrangement;
};

std::optional<Pipeline> run_pipeline(const Graph& g, int k) {
  SynthesisOptions opts;
  opts.search.threads = threads_from_env();
  auto drawn = synthesize(g, opts);
  if (!drawn) return std::nullopt;
  Arrangement arr = build_arrangement(drawn->drawing, drawn->poset, g, k);
  return Pipeline{std::move(*drawn), std::move(arr)};
}

int cmd_reduce(const RunConfig& cfg) {
  const Graph g = read_graph_file(cfg.input);
  const ApexGadget a = build_apex_gadget_with_k(g, depth(cfg), cfg.girth_bound);
  if (cfg.format == "json") {
    Json j = chains_to_json(a);
    Json edges = Json::array();
    for (const auto& e : a.gadget.edges()) edges.push_back(Json::array({e.u(), e.v()}));
    j["edges"] = std::move(edges);
    j["vertices"] = std::vector<Vertex>(a.gadget.vertices().begin(), a.gadget.vertices().end());
    emit(cfg.out, dump(j));
    return kOk;
  }
  emit(cfg.out, format_graph(a.gadget));
  if (!cfg.out.empty()) emit(cfg.out + ".chains.json", dump(chains_to_json(a)));
  return kOk;
}

int cmd_decide(const RunConfig& cfg) {
  const Graph g = read_graph_file(cfg.input);
  auto cert = phpc_decide(g, SearchOptions{threads_from_env()});
  std::string line = cert ? "yes" : "no";
  if (cert)
    for (const auto& v : cert->ordering) line += " " + v;
  emit(cfg.out, line + "\n");
  return kOk;
}

int cmd_synthesize(const RunConfig& cfg) {
  const Graph g = read_graph_file(cfg.input);
  auto p = run_pipeline(g, depth(cfg));
  if (!p) {
    std::cerr << "no front line drawing: the input is a PHPC no-instance\n";
    return kCheckFailed;
  }
  const Json drawing = drawing_to_json(p->drawn.drawing, p->drawn.poset);
  const Json arrangement = arrangement_to_json(p->arrangement);
  if (cfg.out.empty()) {
    emit("", dump(Json{{"drawing", drawing}, {"arrangement", arrangement}}));
  } else {
    emit(cfg.out + ".drawing.json", dump(drawing));
    emit(cfg.out + ".arrangement.json", dump(arrangement));
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const Graph g = read_graph_file(cfg.input);
  VerifyOptions opts;
  opts.k = cfg.k;
  opts.threads = threads_from_env();
  if (cfg.k) depth(cfg);
  const VerificationReport r = verify_reduction(g, cfg.girth_bound, opts);
  if (cfg.format == "text") {
    std::ostringstream s;
    const Json checks = report_to_json(r)["checks"];
    for (const auto& [name, value] : checks.items())
      s << (value.is_null() ? "SKIP" : value.get<bool>() ? "PASS" : "FAIL") << ' ' << name << '\n';
    for (const auto& f : r.failures) s << "  " << f.check << ": " << f.detail << '\n';
    for (const auto& note : r.notes) s << "note: " << note << '\n';
    emit(cfg.out, s.str());
  } else {
    emit(cfg.out, dump(report_to_json(r)));
  }
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_roundtrip(const RunConfig& cfg) {
  const Graph g = read_graph_file(cfg.input);
  const int k = depth(cfg);
  auto p = run_pipeline(g, k);
  if (!p) {
    std::cerr << "no front line drawing: the input is a PHPC no-instance\n";
    return kCheckFailed;
  }
  const ApexGadget a = build_apex_gadget_with_k(g, k, cfg.girth_bound);
  const bool ok = roundtrip_check(g, p->arrangement, a);
  emit(cfg.out, ok ? "true\n" : "false\n");
  return ok ? kOk : kCheckFailed;
}

int cmd_render(const RunConfig& cfg) {
  const std::string text = slurp(cfg.input);
  const auto first = text.find_first_not_of(" \t\r\n");
  Arrangement arr;
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& ex) {
      throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    arr = arrangement_from_json(j.contains("arrangement") ? j.at("arrangement") : j);
  } else {
    const Graph g = parse_graph(text);
    auto p = run_pipeline(g, depth(cfg));
    if (!p) {
      std::cerr << "no front line drawing: the input is a PHPC no-instance\n";
      return kCheckFailed;
    }
    arr = std::move(p->arrangement);
  }
  emit(cfg.out, render_svg(arr));
  return kOk;
}

int cmd_selftest(const RunConfig& cfg) {
  std::ostringstream s;
  bool all = true;
  for (const auto& line : run_selftest()) {
    all = all && line.passed;
    s << (line.passed ? "PASS " : "FAIL ") << line.name << " (" << line.detail << ")\n";
  }
  emit(cfg.out, s.str());
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apex gadget reduction: PHPC decision, front line drawings and exact segment representations"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_input, const std::string& formats) {
    if (needs_input) sub->add_option("input", cfg.input, "Graph file (edge list)")->required();
    sub->add_option("--girth", cfg.girth_bound, "Girth bound g; k is the least odd k >= max(3, g-3)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--k", cfg.k, "Explicit odd subdivision depth k >= 3");
    sub->add_option("--out", cfg.out, "Output path (prefix for multi-file outputs); stdout if omitted");
    if (!formats.empty()) sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(
                                  [&] {
                                    std::vector<std::string> v;
                                    std::istringstream in(formats);
                                    for (std::string f; in >> f;) v.push_back(f);
                                    return v;
                                  }()));
  };

  auto* reduce = app.add_subcommand("reduce", "Build the apex gadget graph and its subdivision chains");
  add_common(reduce, true, "text json");
  auto* decide = app.add_subcommand("decide", "Decide Planar Hamiltonian Path Completion");
  add_common(decide, true, "");
  auto* synth = app.add_subcommand("synthesize", "Emit a front line drawing and the segment arrangement");
  add_common(synth, true, "json");
  auto* verify = app.add_subcommand("verify", "Run every check of the reduction and emit a JSON report");
  add_common(verify, true, "json text");
  auto* roundtrip = app.add_subcommand("roundtrip", "Recover the vertex order from the arrangement");
  add_common(roundtrip, true, "");
  auto* render = app.add_subcommand("render", "Draw the arrangement as SVG (graph file or arrangement JSON)");
  add_common(render, true, "svg");
  auto* selftest = app.add_subcommand("selftest", "Run the small-graph invariant suite");
  add_common(selftest, false, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce) return cmd_reduce(cfg);
    if (*decide) return cmd_decide(cfg);
    if (*synth) return cmd_synthesize(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*roundtrip) return cmd_roundtrip(cfg);
    if (*render) return cmd_render(cfg);
    if (*selftest) return cmd_selftest(cfg);
  } catch (const InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UnsupportedSize& e) {
    std::cerr << "unsupported size: " << e.what() << '\n';
    return kUnsupportedSize;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
