#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace threearc {

using Vertex = int;
using EdgeId = int;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the edge-list reader; line() is 1-based.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  Arc reversed() const { return {head, tail}; }
  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& a);

// Loopless graph without parallel edges. Vertices are 0..n-1 and every
// neighbor list is kept sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count);

  static SimpleGraph from_edges(std::size_t vertex_count,
                                std::span<const Edge> edges);
  // Adjacency lists are sorted here; symmetry and looplessness are checked.
  static SimpleGraph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  void add_edge(Vertex a, Vertex b);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t min_degree() const;
  bool adjacent(Vertex a, Vertex b) const;
  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
  }
  bool is_arc(const Arc& a) const {
    return contains(a.tail) && contains(a.head) && adjacent(a.tail, a.head);
  }

  std::vector<Edge> edges() const;
  std::vector<Arc> arcs() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Multigraph with identified edges. Loops are rejected.
class Multigraph {
 public:
  explicit Multigraph(std::size_t vertex_count = 0);

  Vertex add_vertex();
  EdgeId add_edge(Vertex a, Vertex b);

  std::size_t vertex_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return ends_.size(); }
  // Endpoints in insertion order (not normalized).
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return ends_[e]; }
  Vertex other_end(EdgeId e, Vertex v) const;
  bool incident(EdgeId e, Vertex v) const {
    return ends_[e].first == v || ends_[e].second == v;
  }
  std::span<const EdgeId> incident_edges(Vertex v) const { return incidence_[v]; }
  std::size_t degree(Vertex v) const { return incidence_[v].size(); }
  std::size_t multiplicity(Vertex a, Vertex b) const;
  // Ids of the parallel edges between a and b, ascending.
  std::vector<EdgeId> edges_between(Vertex a, Vertex b) const;
  // Distinct neighbors, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;

 private:
  std::vector<std::pair<Vertex, Vertex>> ends_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// multiplicity[i] copies of the i-th edge of g.edges(); edge ids are
// assigned in that order, copies consecutively.
Multigraph build_multigraph(const SimpleGraph& g, std::span<const int> multiplicity);
Multigraph build_multigraph(const SimpleGraph& g, const std::map<Edge, int>& multiplicity);
Multigraph build_multigraph(const SimpleGraph& g, int uniform_multiplicity);

// Alternating vertex/edge sequence v0 e0 v1 e1 ... v_l. edges[i] joins
// vertices[i] and vertices[i + 1].
struct Trail {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  bool closed = false;

  std::size_t length() const { return edges.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

// Throws GraphError describing the first violated trail invariant.
void check_trail(const Multigraph& m, const Trail& t);
bool is_trail(const Multigraph& m, const Trail& t);
bool covers_all_edges(const Multigraph& m, const Trail& t);
Trail reversed(const Trail& t);
// Closed trails only: the result starts at t.vertices[start].
Trail rotated(const Trail& t, std::size_t start);
// "v0 (e0) v1 (e1) ..." debugging format.
std::string format_trail(const Trail& t);

SimpleGraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const SimpleGraph& g);
SimpleGraph read_graph_file(const std::filesystem::path& path);

bool is_connected(const SimpleGraph& g);
std::vector<Edge> bridges(const SimpleGraph& g);
bool is_two_edge_connected(const SimpleGraph& g);
bool connected_without(const SimpleGraph& g, std::span<const Edge> removed);
bool is_edge_cut_pair(const SimpleGraph& g, Edge e1, Edge e2);
// Connected components of the subgraph induced by vertices with keep[v].
std::vector<std::vector<Vertex>> components(const SimpleGraph& g,
                                            const std::vector<bool>& keep);

}  // namespace threearc
