#include "apexrep/planarity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "apexrep/error.hpp"

namespace apexrep {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

std::vector<std::pair<int, int>> with_path(const IndexedGraph& ig, std::span<const int> order) {
  std::vector<std::pair<int, int>> edges = ig.edges;
  for (std::size_t t = 1; t < order.size(); ++t) edges.emplace_back(order[t - 1], order[t]);
  return edges;
}

// Depth-first search over orderings beginning with `first` (first < last),
// in lexicographic order. A prefix whose path edges already make the graph
// non-planar is pruned: adding edges never restores planarity. Stops early
// once `cutoff` drops below `first`.
std::optional<std::vector<int>> search_block(const IndexedGraph& ig, int first,
                                             const std::atomic<int>& cutoff) {
  const int n = ig.size();
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (auto [a, b] : ig.edges) adjacent[a][b] = adjacent[b][a] = true;

  std::vector<std::pair<int, int>> edges = ig.edges;
  std::vector<int> order{first};
  std::vector<bool> used(n, false);
  used[first] = true;
  bool stop = false;

  auto extend = [&](auto&& self) -> bool {
    if (cutoff.load(std::memory_order_relaxed) < first) {
      stop = true;
      return false;
    }
    if (static_cast<int>(order.size()) == n) return order.back() > first;
    const int prev = order.back();
    for (int v = 0; v < n && !stop; ++v) {
      if (used[v]) continue;
      const bool fresh = !adjacent[prev][v];
      if (fresh) {
        edges.emplace_back(prev, v);
        if (!is_planar(n, edges)) {
          edges.pop_back();
          continue;
        }
      }
      used[v] = true;
      order.push_back(v);
      if (self(self)) return true;
      order.pop_back();
      used[v] = false;
      if (fresh) edges.pop_back();
    }
    return false;
  };
  if (extend(extend)) return order;
  return std::nullopt;
}

}  // namespace

bool is_planar(int n, std::span<const std::pair<int, int>> edges) {
  if (n <= 4) return true;
  // Simple planar graphs have at most 3n - 6 edges; count distinct pairs.
  std::vector<std::pair<int, int>> distinct;
  distinct.reserve(edges.size());
  for (auto [a, b] : edges) distinct.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() > static_cast<std::size_t>(3 * n - 6)) return false;
  BoostGraph bg(n);
  for (auto [a, b] : distinct) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar(const Graph& g) {
  const IndexedGraph ig(g);
  return is_planar(ig.size(), ig.edges);
}

bool path_completion_planar(const Graph& g, std::span<const Vertex> ordering) {
  const IndexedGraph ig(g);
  if (ordering.size() != static_cast<std::size_t>(ig.size()))
    throw InvalidInput("ordering does not cover every vertex");
  std::vector<int> order;
  std::vector<bool> seen(ig.size(), false);
  for (const auto& v : ordering) {
    int i = ig.index_of(v);
    if (seen[i]) throw InvalidInput("ordering repeats vertex '" + v + "'");
    seen[i] = true;
    order.push_back(i);
  }
  auto edges = with_path(ig, order);
  return is_planar(ig.size(), edges);
}

std::optional<PhpcCertificate> phpc_decide(const Graph& g, const SearchOptions& opts) {
  if (!is_planar(g)) throw InvalidInput("PHPC input graph is not planar");
  const IndexedGraph ig(g);
  const int n = ig.size();
  if (n <= 1) return PhpcCertificate{ig.labels};

  std::vector<std::optional<std::vector<int>>> found(n);
  std::atomic<int> cutoff{n};  // smallest first-element block with a hit
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int b = next.fetch_add(1); b < n; b = next.fetch_add(1)) {
      if (cutoff.load() < b) return;
      found[b] = search_block(ig, b, cutoff);
      if (found[b]) {
        int cur = cutoff.load();
        while (b < cur && !cutoff.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };

  unsigned threads = std::clamp(opts.threads, 1u, static_cast<unsigned>(n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (int b = 0; b < n; ++b) {
    if (!found[b]) continue;
    PhpcCertificate cert;
    for (int i : *found[b]) cert.ordering.push_back(ig.labels[i]);
    return cert;
  }
  return std::nullopt;
}

std::optional<Vertex> is_apex(const Graph& g) {
  for (const auto& v : g.vertices())
    if (is_planar(g.without_vertex(v))) return v;
  return std::nullopt;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("APEXREP_THREADS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || value < 1) return 1;
  return static_cast<unsigned>(std::min(value, 256L));
}

}  // namespace apexrep
