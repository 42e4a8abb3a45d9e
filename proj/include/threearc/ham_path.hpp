#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "threearc/euler.hpp"
#include "threearc/graph.hpp"
#include "threearc/ham_cycle.hpp"

namespace threearc {

// Simple path vertices[0] .. vertices[l] of odd length l.
struct OddPath {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  // Edge {x_j, x_{j+1}} for j even (E0) or odd (E1).
  std::vector<Edge> even_edges() const;
  std::vector<Edge> odd_edges() const;
};

// Shortest odd-length simple path from a to b, searched exhaustively over
// lengths 1, 3, 5, ...; the first path found in ascending neighbor order.
std::optional<OddPath> shortest_odd_path(const SimpleGraph& g, Vertex a, Vertex b);
bool has_all_pairs_odd_paths(const SimpleGraph& g);

struct SameTailMultigraph {
  Multigraph multigraph;
  Visit anchor;  // (a, x, v) with a = y (x off P) or a = x_2 (x = x_1)
  bool x_on_path = false;
  OddPath path;  // normalized so that x = x_1 when x lies on it
};

// P joins y and v. Throws GraphError when x is interior to P beyond the
// second or second-to-last position.
SameTailMultigraph build_same_tail_multigraph(const SimpleGraph& g, Vertex x, Vertex y, Vertex v,
                                              const OddPath& p);

struct PendantTrailGraph {
  Multigraph multigraph;  // base plus t, t'
  Vertex t = 0;
  Vertex t_prime = 0;
  EdgeId t_edge = 0;        // t - x
  EdgeId t_prime_edge = 0;  // u - t'
  Vertex x = 0;
  Vertex u = 0;
};

// P joins x and u: edges off P doubled, x_j x_{j+1} tripled for odd j, and
// pendant vertices t = n, t' = n + 1 attached to x and u.
PendantTrailGraph build_distinct_tail_multigraph(const SimpleGraph& g, Vertex x, Vertex u,
                                                 const OddPath& p);

struct GuardNeighbors {
  Vertex x_prime = 0;
  Vertex u_prime = 0;
};

// x' in N(x) - {y, x_1}, u' in N(u) - {v, x_{l-1}}, chosen so that the
// remaining edges {x,z}, {u,w} are not an edge cut when d(x) = d(u) = 3,
// y = x_1 and v = x_{l-1}.
GuardNeighbors choose_guard_neighbors(const SimpleGraph& g, Vertex x, Vertex y, Vertex u,
                                      Vertex v, const OddPath& p);

// Eulerian trail t, x, x', ..., u', u, t'. When d(x) = 3 and y = x_1 the
// visit (x', x, x_1) is induced; likewise (u', u, x_{l-1}) at u.
Trail open_euler_trail_with_anchors(const PendantTrailGraph& ptg, const SimpleGraph& g,
                                    Vertex y, Vertex v, const OddPath& p,
                                    const GuardNeighbors& guards);

struct KAndL {
  VisitArcGraph k;
  VisitArcGraph l;
};

// W is an open trail t, x, z2, ..., z1, x, t'. K has the visits of W at x
// and the arcs of g with tail x; L drops the first and last visits and the
// arcs x z1, x z2.
KAndL build_K_and_L(const Trail& w, const SimpleGraph& g);

struct CertifiedPath {
  std::vector<Arc> arcs;
  std::pair<Arc, Arc> endpoints;
  bool verified = false;
  std::string route;      // construction case that produced the path
  bool fallback = false;  // produced by the exhaustive search at x
};

// Hypotheses: G 2-edge-connected, minimum degree 3, odd paths between all
// pairs. Throws HypothesisError on violation and InternalError when the
// emitted path fails validation.
CertifiedPath hamilton_path_of_X(const SimpleGraph& g, const Arc& a1, const Arc& a2);

// Hypotheses of hamilton_path_of_X, with the first failed clause.
std::optional<std::string> path_hypothesis_failure(const SimpleGraph& g);

}  // namespace threearc
