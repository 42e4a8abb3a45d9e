#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "threearc/graph.hpp"

namespace threearc {

inline constexpr std::size_t kDefaultMaxVertices = 1'000'000;

// Bijection between the arcs of a graph and 0..2|E|-1; arcs are numbered in
// (tail, head) order.
class ArcIndex {
 public:
  ArcIndex() = default;
  explicit ArcIndex(const SimpleGraph& g);

  std::size_t size() const { return arcs_.size(); }
  const Arc& arc(std::size_t i) const { return arcs_[i]; }
  std::span<const Arc> arcs() const { return arcs_; }
  bool contains(const Arc& a) const;
  // Throws GraphError when a is not an arc of the indexed graph.
  std::size_t index(const Arc& a) const;
  // One "index tail head" line per arc.
  std::string serialize() const;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offset_;
};

struct ThreeArcGraph {
  SimpleGraph graph;
  ArcIndex index;
};

// Vertices are the arcs of g; uv ~ xy iff (v, u, x, y) is a 3-arc.
ThreeArcGraph three_arc_graph(const SimpleGraph& g);

// Sum over edges {u,v} of (d(u)-1)(d(v)-1).
std::size_t three_arc_edge_count(const SimpleGraph& g);

// i-fold application of three_arc_graph. Throws when an intermediate graph
// has no edges or when the next level would exceed max_vertices.
SimpleGraph iterate_three_arc(const SimpleGraph& g, int times,
                              std::size_t max_vertices = kDefaultMaxVertices);

// Every degree-two vertex v with neighbors u < w is split: v keeps its index
// and is joined to u only, and a new vertex (appended in ascending order of
// v) is joined to w only.
SimpleGraph hat_graph(const SimpleGraph& g);

}  // namespace threearc
