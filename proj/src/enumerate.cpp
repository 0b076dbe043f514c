#include "apexrep/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "apexrep/error.hpp"
#include "apexrep/frontline.hpp"
#include "apexrep/gadget.hpp"
#include "apexrep/planarity.hpp"
#include "apexrep/verifier.hpp"

namespace apexrep {

namespace {

using Adjacency = std::vector<std::uint8_t>;  // bit j of row i: edge ij

std::uint64_t code_of(const Adjacency& adj, const std::vector<int>& at) {
  // at[p] = vertex placed at position p
  const int n = static_cast<int>(adj.size());
  std::uint64_t code = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) code = (code << 1) | ((adj[at[p]] >> at[q]) & 1u);
  return code;
}

std::uint64_t canonical_code(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n);
  for (int i = 0; i < n; ++i) degree[i] = __builtin_popcount(adj[i]);
  std::vector<int> nbr_sum(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((adj[i] >> j) & 1u) nbr_sum[i] += degree[j];

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int v) { return std::make_pair(degree[v], nbr_sum[v]); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) > key(b); });

  // Blocks of equal invariant; permute within each block independently.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key(order[j]) == key(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> at = order;
  auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      best = std::min(best, code_of(adj, at));
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(at.begin() + lo, at.begin() + hi);
    do {
      self(self, b + 1);
    } while (std::next_permutation(at.begin() + lo, at.begin() + hi));
  };
  recurse(recurse, 0);
  return best;
}

Graph to_graph(const Adjacency& adj) {
  Graph g;
  const int n = static_cast<int>(adj.size());
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((adj[i] >> j) & 1u) g.add_edge(std::to_string(i + 1), std::to_string(j + 1));
  return g;
}

std::vector<Adjacency> classes(int n) {
  if (n == 0) return {Adjacency{}};
  std::vector<Adjacency> out;
  std::set<std::uint64_t> seen;
  for (const auto& smaller : classes(n - 1)) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      Adjacency adj = smaller;
      adj.push_back(static_cast<std::uint8_t>(mask));
      for (int j = 0; j < n - 1; ++j)
        if ((mask >> j) & 1u) adj[j] |= static_cast<std::uint8_t>(1u << (n - 1));
      if (seen.insert(canonical_code(adj)).second) out.push_back(std::move(adj));
    }
  }
  return out;
}

SelftestLine line(std::string name, bool ok, std::string detail) {
  return SelftestLine{std::move(name), ok, std::move(detail)};
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 8) throw InvalidParameter("all_graphs supports 0 <= n <= 8");
  std::vector<Graph> out;
  for (const auto& adj : classes(n)) out.push_back(to_graph(adj));
  return out;
}

bool is_connected(const Graph& g) {
  const IndexedGraph ig(g);
  if (ig.size() == 0) return true;
  std::vector<bool> seen(ig.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : ig.adjacency[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == ig.size();
}

std::vector<Graph> connected_planar_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (is_connected(g) && is_planar(g)) out.push_back(std::move(g));
  return out;
}

Graph complete_graph(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(std::to_string(i), std::to_string(j));
  return g;
}

Graph path_graph(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 1; i < n; ++i) g.add_edge(std::to_string(i), std::to_string(i + 1));
  return g;
}

Graph star_graph(int leaves) {
  Graph g;
  g.add_vertex("1");
  for (int i = 2; i <= leaves + 1; ++i) g.add_edge("1", std::to_string(i));
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g;
  for (int i = 1; i <= a + b; ++i) g.add_vertex(std::to_string(i));
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j) g.add_edge(std::to_string(i), std::to_string(j));
  return g;
}

std::vector<SelftestLine> run_selftest() {
  std::vector<SelftestLine> out;

  {
    int checked = 0;
    int bad = 0;
    for (int n = 1; n <= 5; ++n)
      for (const auto& g : all_graphs(n)) {
        ++checked;
        const bool expected = !(n == 5 && g.edge_count() == 10);  // only K5 is non-planar here
        if (is_planar(g) != expected) ++bad;
      }
    out.push_back(line("planarity on all graphs with n <= 5", bad == 0,
                       std::to_string(checked) + " graphs, " + std::to_string(bad) + " disagreements"));
  }

  std::vector<Graph> family;
  for (int n = 4; n <= 5; ++n)
    for (auto& g : connected_planar_graphs(n)) family.push_back(std::move(g));

  {
    int bad = 0;
    for (const auto& g : family)
      for (int bound : {6, 8}) {
        const ApexGadget a = build_apex_gadget(g, bound);
        const std::size_t n = g.vertex_count();
        const std::size_t m = g.edge_count();
        const auto gi = girth(a.gadget);
        bool ok = a.gadget.vertex_count() == n + a.k * m + 1 &&
                  a.gadget.edge_count() == (a.k + 1) * m + n && is_bipartite(a.gadget).has_value() &&
                  gi.has_value() && *gi >= static_cast<std::size_t>(bound) &&
                  is_planar(a.gadget.without_vertex(a.apex));
        if (!ok) ++bad;
      }
    out.push_back(line("gadget structure, connected planar n = 4..5", bad == 0,
                       std::to_string(family.size()) + " graphs x 2 girth bounds, " + std::to_string(bad) +
                           " failures"));
  }

  {
    int bad = 0;
    int yes = 0;
    for (const auto& g : family) {
      const bool phpc = phpc_decide(g).has_value();
      SynthesisOptions exhaustive;
      exhaustive.exhaustive = true;
      const bool drawn = synthesize(g, exhaustive).has_value();
      if (phpc != drawn) ++bad;
      if (phpc) ++yes;
    }
    out.push_back(line("drawing search agrees with PHPC", bad == 0,
                       std::to_string(yes) + " yes-instances, " + std::to_string(bad) + " disagreements"));
  }

  {
    int bad = 0;
    int runs = 0;
    for (const auto& g : family)
      for (int bound : {6, 8}) {
        const VerificationReport r = verify_reduction(g, bound);
        if (!r.phpc_yes) continue;
        ++runs;
        if (!r.passed() || !r.graph_equality.value_or(false)) ++bad;
      }
    out.push_back(line("segment representation equals the gadget (k = 3, 5)", bad == 0,
                       std::to_string(runs) + " reductions, " + std::to_string(bad) + " failures"));
  }
  return out;
}

}  // namespace apexrep
