#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace apexrep {

using Vertex = std::string;

// Natural ("numeric-aware") order on vertex labels: digit runs compare by
// value, so "2" < "10". Ties fall back to plain lexicographic order, which
// keeps the order total.
struct VertexLess {
  bool operator()(std::string_view a, std::string_view b) const;
};

// Unordered vertex pair stored with u < v under VertexLess.
class Edge {
 public:
  Edge(Vertex a, Vertex b);

  const Vertex& u() const { return u_; }
  const Vertex& v() const { return v_; }
  bool has(const Vertex& x) const { return x == u_ || x == v_; }
  const Vertex& other(const Vertex& x) const { return x == u_ ? v_ : u_; }

  // "u v", used as a map key in JSON artifacts.
  std::string key() const { return u_ + " " + v_; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend bool operator<(const Edge& a, const Edge& b);

 private:
  Vertex u_;
  Vertex v_;
};

using VertexSet = std::set<Vertex, VertexLess>;

// Simple undirected graph with labelled vertices.
class Graph {
 public:
  Graph() = default;

  void add_vertex(const Vertex& v);
  // Adds missing endpoints. Throws InvalidInput on self-loops; a repeated
  // edge is a no-op.
  void add_edge(const Vertex& a, const Vertex& b);

  bool has_vertex(const Vertex& v) const { return vertices_.contains(v); }
  bool has_edge(const Vertex& a, const Vertex& b) const;

  const VertexSet& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::vector<Vertex> neighbors(const Vertex& v) const;
  Graph without_vertex(const Vertex& v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexSet vertices_;
  std::set<Edge> edges_;
};

// Dense integer view of a Graph for the search algorithms. Vertex i is the
// i-th label in natural order.
struct IndexedGraph {
  std::vector<Vertex> labels;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::pair<int, int>> edges;  // first < second, canonical order

  explicit IndexedGraph(const Graph& g);
  int size() const { return static_cast<int>(labels.size()); }
  int index_of(const Vertex& v) const;
};

// Graph text format: one edge per line as two whitespace-separated tokens;
// an isolated vertex is declared by the line "v <token>". Blank lines are
// ignored. Throws ParseError with the offending line number.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Graph parse_graph(std::string_view text);

// Writes isolated-vertex declarations first, then edges in canonical order.
// An edge whose smaller endpoint is literally "v" is written reversed so it
// cannot be mistaken for a declaration.
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace apexrep
