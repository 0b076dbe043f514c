#include "apexrep/gadget.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "apexrep/error.hpp"

namespace apexrep {

Vertex subdivision_vertex(const Edge& e, int t) {
  return e.u() + "#" + e.v() + "#" + std::to_string(t);
}

Subdivision full_subdivision(const Graph& g, int k) {
  if (k < 3 || k % 2 == 0)
    throw InvalidParameter("subdivision depth k must be odd and >= 3, got " + std::to_string(k));
  Subdivision out;
  for (const auto& v : g.vertices()) out.graph.add_vertex(v);
  for (const auto& e : g.edges()) {
    std::vector<Vertex> chain;
    chain.reserve(k);
    Vertex prev = e.u();
    for (int t = 1; t <= k; ++t) {
      Vertex cur = subdivision_vertex(e, t);
      out.graph.add_edge(prev, cur);
      chain.push_back(cur);
      prev = std::move(cur);
    }
    out.graph.add_edge(prev, e.v());
    out.chains.emplace(e, std::move(chain));
  }
  return out;
}

int subdivision_depth(int girth_bound) {
  if (girth_bound < 1)
    throw InvalidParameter("girth bound must be positive, got " + std::to_string(girth_bound));
  int k = std::max(3, girth_bound - 3);
  return k % 2 == 0 ? k + 1 : k;
}

ApexGadget build_apex_gadget(const Graph& g, int girth_bound) {
  return build_apex_gadget_with_k(g, subdivision_depth(girth_bound), girth_bound);
}

ApexGadget build_apex_gadget_with_k(const Graph& g, int k, int girth_bound) {
  if (girth_bound < 1)
    throw InvalidParameter("girth bound must be positive, got " + std::to_string(girth_bound));
  for (const auto& v : g.vertices())
    if (v.find('#') != Vertex::npos)
      throw InvalidInput("vertex label '" + v + "' contains the reserved character '#'");

  Subdivision sub = full_subdivision(g, k);
  ApexGadget a;
  a.gadget = std::move(sub.graph);
  a.chains = std::move(sub.chains);
  a.apex = kApexLabel;
  a.originals.assign(g.vertices().begin(), g.vertices().end());
  a.k = k;
  a.girth_bound = girth_bound;
  a.gadget.add_vertex(a.apex);
  for (const auto& v : a.originals) a.gadget.add_edge(a.apex, v);
  return a;
}

std::optional<std::size_t> girth(const Graph& g) {
  const IndexedGraph ig(g);
  const int n = ig.size();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  // A BFS from every root; the first non-tree edge closing a cycle through
  // the root's BFS tree bounds the girth, and the minimum over roots is
  // exact.
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best) break;
      for (int y : ig.adjacency[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, static_cast<std::size_t>(dist[x] + dist[y] + 1));
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const IndexedGraph ig(g);
  const int n = ig.size();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : ig.adjacency[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int i = 0; i < n; ++i) (colour[i] == 0 ? parts.first : parts.second).insert(ig.labels[i]);
  return parts;
}

Bipartition gadget_parts(const ApexGadget& a) {
  Bipartition parts;
  parts.first.insert(a.originals.begin(), a.originals.end());
  parts.second.insert(a.apex);
  for (const auto& [e, chain] : a.chains)
    for (std::size_t t = 1; t <= chain.size(); ++t)
      (t % 2 == 0 ? parts.first : parts.second).insert(chain[t - 1]);
  return parts;
}

}  // namespace apexrep
