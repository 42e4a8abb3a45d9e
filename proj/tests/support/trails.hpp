#pragma once

#include <stdexcept>
#include <vector>

#include "threearc/graph.hpp"

namespace trails {

using threearc::EdgeId;
using threearc::Multigraph;
using threearc::Trail;
using threearc::Vertex;

// Trail through the given vertices, taking the lowest unused parallel copy
// of each edge. Closed when the sequence ends where it starts.
inline Trail from_vertices(const Multigraph& m, const std::vector<Vertex>& seq) {
  Trail t;
  t.vertices = seq;
  t.closed = seq.size() > 1 && seq.front() == seq.back();
  std::vector<bool> used(m.edge_count(), false);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    EdgeId pick = -1;
    for (EdgeId e : m.edges_between(seq[i], seq[i + 1]))
      if (!used[e]) {
        pick = e;
        break;
      }
    if (pick < 0) throw std::invalid_argument("no unused edge for a trail step");
    used[pick] = true;
    t.edges.push_back(pick);
  }
  return t;
}

}  // namespace trails
