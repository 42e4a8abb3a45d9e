#include "threearc/three_arc.hpp"

#include <algorithm>
#include <sstream>

namespace threearc {

ArcIndex::ArcIndex(const SimpleGraph& g) : arcs_(g.arcs()), offset_(g.vertex_count() + 1, 0) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    offset_[v + 1] = offset_[v] + g.degree(static_cast<Vertex>(v));
}

bool ArcIndex::contains(const Arc& a) const {
  if (a.tail < 0 || static_cast<std::size_t>(a.tail) + 1 >= offset_.size()) return false;
  auto first = arcs_.begin() + static_cast<std::ptrdiff_t>(offset_[a.tail]);
  auto last = arcs_.begin() + static_cast<std::ptrdiff_t>(offset_[a.tail + 1]);
  return std::binary_search(first, last, a);
}

std::size_t ArcIndex::index(const Arc& a) const {
  if (!contains(a)) throw GraphError("not an arc: " + to_string(a));
  auto first = arcs_.begin() + static_cast<std::ptrdiff_t>(offset_[a.tail]);
  auto last = arcs_.begin() + static_cast<std::ptrdiff_t>(offset_[a.tail + 1]);
  return static_cast<std::size_t>(std::lower_bound(first, last, a) - arcs_.begin());
}

std::string ArcIndex::serialize() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    out << i << ' ' << arcs_[i].tail << ' ' << arcs_[i].head << '\n';
  return out.str();
}

ThreeArcGraph three_arc_graph(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw GraphError("3-arc graph of an edgeless graph");
  ArcIndex index(g);
  std::vector<std::vector<Vertex>> adjacency(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto [u, v] = index.arc(i);
    auto& list = adjacency[i];
    // (v, u, x, y): x in N(u) - v, y in N(x) - u.
    for (Vertex x : g.neighbors(u)) {
      if (x == v) continue;
      for (Vertex y : g.neighbors(x)) {
        if (y == u) continue;
        list.push_back(static_cast<Vertex>(index.index({x, y})));
      }
    }
  }
  return {SimpleGraph::from_adjacency(std::move(adjacency)), std::move(index)};
}

std::size_t three_arc_edge_count(const SimpleGraph& g) {
  std::size_t total = 0;
  for (const Edge& e : g.edges())
    total += (g.degree(e.u) - 1) * (g.degree(e.v) - 1);
  return total;
}

SimpleGraph iterate_three_arc(const SimpleGraph& g, int times, std::size_t max_vertices) {
  if (times < 1) throw GraphError("iteration count must be positive");
  SimpleGraph current = g;
  for (int level = 1; level <= times; ++level) {
    if (current.edge_count() == 0)
      throw GraphError("level " + std::to_string(level - 1) + " graph has no edges");
    const std::size_t next_vertices = 2 * current.edge_count();
    if (next_vertices > max_vertices)
      throw GraphError("level " + std::to_string(level) + " would have " +
                       std::to_string(next_vertices) + " vertices, cap is " +
                       std::to_string(max_vertices));
    current = three_arc_graph(current).graph;
  }
  return current;
}

SimpleGraph hat_graph(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  // second_copy[v] is the appended vertex of degree-two v (joined to the
  // larger neighbor).
  std::vector<Vertex> second_copy(n, -1);
  std::size_t total = n;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(static_cast<Vertex>(v)) == 2) second_copy[v] = static_cast<Vertex>(total++);

  auto endpoint = [&](Vertex a, Vertex toward) {
    if (second_copy[a] < 0) return a;
    return toward == g.neighbors(a)[0] ? a : second_copy[a];
  };
  SimpleGraph out(total);
  for (const Edge& e : g.edges()) out.add_edge(endpoint(e.u, e.v), endpoint(e.v, e.u));
  return out;
}

}  // namespace threearc
