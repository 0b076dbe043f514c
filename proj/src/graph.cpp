#include "apexrep/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "apexrep/error.hpp"

namespace apexrep {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Compares two digit runs by numeric value without overflow: strip leading
// zeros, then longer is larger, then lexicographic.
int compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return s.substr(i);
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b);
}

}  // namespace

bool VertexLess::operator()(std::string_view a, std::string_view b) const {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i2 = i;
      std::size_t j2 = j;
      while (i2 < a.size() && is_digit(a[i2])) ++i2;
      while (j2 < b.size() && is_digit(b[j2])) ++j2;
      int c = compare_digit_runs(a.substr(i, i2 - i), b.substr(j, j2 - j));
      if (c != 0) return c < 0;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  if ((i < a.size()) != (j < b.size())) return j < b.size();
  return a < b;
}

Edge::Edge(Vertex a, Vertex b) : u_(std::move(a)), v_(std::move(b)) {
  if (VertexLess{}(v_, u_)) std::swap(u_, v_);
}

bool operator<(const Edge& a, const Edge& b) {
  VertexLess less;
  if (a.u_ != b.u_) return less(a.u_, b.u_);
  if (a.v_ != b.v_) return less(a.v_, b.v_);
  return false;
}

void Graph::add_vertex(const Vertex& v) {
  if (v.empty()) throw InvalidInput("empty vertex label");
  vertices_.insert(v);
}

void Graph::add_edge(const Vertex& a, const Vertex& b) {
  if (a == b) throw InvalidInput("self-loop on vertex '" + a + "'");
  add_vertex(a);
  add_vertex(b);
  edges_.emplace(a, b);
}

bool Graph::has_edge(const Vertex& a, const Vertex& b) const {
  return a != b && edges_.contains(Edge(a, b));
}

std::vector<Vertex> Graph::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  for (const auto& e : edges_)
    if (e.has(v)) out.push_back(e.other(v));
  std::sort(out.begin(), out.end(), VertexLess{});
  return out;
}

Graph Graph::without_vertex(const Vertex& v) const {
  Graph h;
  for (const auto& x : vertices_)
    if (x != v) h.add_vertex(x);
  for (const auto& e : edges_)
    if (!e.has(v)) h.add_edge(e.u(), e.v());
  return h;
}

IndexedGraph::IndexedGraph(const Graph& g)
    : labels(g.vertices().begin(), g.vertices().end()), adjacency(labels.size()) {
  for (const auto& e : g.edges()) {
    int a = index_of(e.u());
    int b = index_of(e.v());
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
}

int IndexedGraph::index_of(const Vertex& v) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), v, VertexLess{});
  if (it == labels.end() || *it != v) throw InvalidInput("unknown vertex '" + v + "'");
  return static_cast<int>(it - labels.begin());
}

Graph read_graph(std::istream& in) {
  Graph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty()) continue;
    if (parts.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected two tokens, got " +
                       std::to_string(parts.size()));
    if (parts[0] == "v") {
      g.add_vertex(parts[1]);
      continue;
    }
    if (parts[0] == parts[1])
      throw ParseError("line " + std::to_string(lineno) + ": self-loop on '" + parts[0] + "'");
    g.add_edge(parts[0], parts[1]);
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  VertexSet touched;
  for (const auto& e : g.edges()) {
    touched.insert(e.u());
    touched.insert(e.v());
  }
  for (const auto& v : g.vertices())
    if (!touched.contains(v)) out << "v " << v << '\n';
  for (const auto& e : g.edges()) {
    if (e.u() == "v")
      out << e.v() << ' ' << e.u() << '\n';
    else
      out << e.u() << ' ' << e.v() << '\n';
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace apexrep
