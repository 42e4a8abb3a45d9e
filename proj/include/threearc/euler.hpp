#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "threearc/graph.hpp"

namespace threearc {

// Oriented length-2 sub-trail entry -(entry_edge)- mid -(exit_edge)- exit.
struct Visit {
  Vertex entry = 0;
  Vertex mid = 0;
  Vertex exit = 0;
  EdgeId entry_edge = 0;
  EdgeId exit_edge = 0;

  Visit reversed() const { return {exit, mid, entry, exit_edge, entry_edge}; }
  bool contains(Vertex y) const { return entry == y || exit == y; }
  // Same two edges through the same mid-vertex, in either orientation.
  bool same_as(const Visit& o) const;
  // [a, mid, b] in either orientation.
  bool has_ends(Vertex a, Vertex b) const {
    return (entry == a && exit == b) || (entry == b && exit == a);
  }
  bool operator==(const Visit&) const = default;
};

std::string to_string(const Visit& v);

// {u, v} = {u', v'} on four distinct edges.
bool are_twins(const Visit& p, const Visit& q);
bool has_twin_visits(std::span<const Visit> visits);

// Vertex-only visit (a, x, b), used to state compatibility targets.
struct VisitShape {
  Vertex a = 0;
  Vertex x = 0;
  Vertex b = 0;
};

// C(x) < J(x): every shape of j occurs in c_at_x in some orientation, with
// distinct visits for repeated shapes.
bool compatible(std::span<const Visit> c_at_x, std::span<const VisitShape> j);

struct VisitDecomposition {
  Vertex mid = 0;
  std::vector<Visit> visits;
};

// Throws GraphError unless the visits partition the edges at mid.
void check_visit_decomposition(const Multigraph& m, const VisitDecomposition& j);

// Positions are vertex indices of the trail. Position i in 1..l-1 is the
// visit (v[i-1], v[i], v[i+1]); position 0 of a closed trail is the
// wrap-around visit (v[l-1], v[0], v[1]).
Visit visit_at(const Trail& c, std::size_t position);
// Positions of the visits to x, ascending. Throws when x is an endpoint of
// an open trail.
std::vector<std::size_t> visit_positions(const Trail& c, Vertex x);
std::vector<Visit> visits_of_trail(const Trail& c, Vertex x);
std::optional<std::size_t> locate_visit(const Trail& c, const Visit& p);
VisitDecomposition decomposition_at(const Trail& c, Vertex x);

// H(x): visits on the left, arcs with tail x on the right; a visit and an
// arc xy are adjacent iff y does not appear in the visit.
class VisitArcGraph {
 public:
  VisitArcGraph(std::vector<Visit> left, std::vector<Arc> right,
                bool allow_unbalanced = false);

  const std::vector<Visit>& left() const { return left_; }
  const std::vector<Arc>& right() const { return right_; }
  bool adjacent(std::size_t visit, std::size_t arc) const {
    return !left_[visit].contains(right_[arc].head);
  }
  bool balanced() const { return left_.size() == right_.size(); }
  std::optional<std::size_t> find_left(const Visit& v) const;
  std::optional<std::size_t> find_right(const Arc& a) const;
  // Removes the named left/right members; the result may be unbalanced.
  VisitArcGraph without(std::span<const std::size_t> left_drop,
                        std::span<const std::size_t> right_drop) const;

 private:
  std::vector<Visit> left_;
  std::vector<Arc> right_;
};

std::vector<Arc> arcs_with_tail(const SimpleGraph& g, Vertex x);
// Arcs of the underlying simple graph of m with tail x.
std::vector<Arc> arcs_with_tail(const Multigraph& m, Vertex x);

VisitArcGraph build_H(const VisitDecomposition& j, std::span<const Arc> arcs,
                      bool allow_unbalanced = false);

struct Matching {
  // arc_of[i] is the right index matched to left i, or -1.
  std::vector<int> arc_of;
  std::vector<std::pair<Visit, Arc>> pairs;

  std::size_t size() const { return pairs.size(); }
};

// Each visit takes its first free arc, otherwise an augmenting path;
// visits and arcs in index order.
Matching maximum_matching(const VisitArcGraph& h);
std::optional<Matching> perfect_matching(const VisitArcGraph& h);
// Perfect matching that contains every forced (left, right) pair.
std::optional<Matching> perfect_matching_with(
    const VisitArcGraph& h, std::span<const std::pair<std::size_t, std::size_t>> forced);

// Eulerian trail from start over the edges with usable[e] != 0 (all edges
// when usable is empty). Closed when every degree is even, otherwise ends
// at the other odd vertex. Throws GraphError when the usable edges are not
// connected or the parity is wrong. With rng, incident edges are tried in
// shuffled order.
Trail euler_trail(const Multigraph& m, Vertex start, std::span<const char> usable = {},
                  std::mt19937_64* rng = nullptr);
Trail euler_tour(const Multigraph& m, Vertex start);
Trail random_euler_tour(const Multigraph& m, Vertex start, std::mt19937_64& rng);
// Eulerian tour whose first visit is the given 2-trail.
Trail euler_tour_through(const Multigraph& m, const Visit& anchor);
// Tour of m - s2 with the visits (u,v,u) and (w,v,w) spliced in at the first
// occurrence of u and w for every v in s2 (neighbors u, w).
Trail euler_tour_s2_compatible(const Multigraph& m, std::span<const Vertex> s2);

Trail bow_tie(const Trail& c, const Visit& p, const Visit& q);
Trail concatenate(const Trail& c1, const Trail& c2, const Visit& p, const Visit& q);

// Z(C): vertices (not excluded, with a defined nonempty visit set) whose
// H_C has no perfect matching. Arcs come from the underlying graph of m.
std::vector<Vertex> unmatched_vertices(const Trail& c, const Multigraph& m,
                                       std::span<const Vertex> excluded = {});

class RepairError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct RepairStats {
  int doubled_bow_ties = 0;
  int same_orientation_bow_ties = 0;
  int split_concatenations = 0;
};

struct RepairOptions {
  std::optional<Visit> protected_visit;
  std::vector<Vertex> excluded;
  RepairStats* stats = nullptr;
};

// Rewrites c until Z is empty. Closed tours and open trails with distinct
// endpoints are accepted; the endpoints of an open trail keep their
// positions.
Trail repair_twin_visits(const Trail& c, const Multigraph& m, const RepairOptions& options = {});

}  // namespace threearc
