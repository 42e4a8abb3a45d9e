#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "threearc/generators.hpp"
#include "threearc/ham_cycle.hpp"
#include "threearc/ham_path.hpp"
#include "threearc/three_arc.hpp"
#include "threearc/verify.hpp"

using namespace threearc;

namespace {

SimpleGraph from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
  SimpleGraph g(n);
  for (auto [a, b] : pairs) g.add_edge(a, b);
  return g;
}

// K4 blocks {0,1,2,3} and {4,5,6,7} joined by 0-4 and 0-5.
SimpleGraph gap_fixture() {
  return from_pairs(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7},
                        {5, 6}, {5, 7}, {6, 7}, {0, 4}, {0, 5}});
}

// Vertices 0 and 1 of degree three, each with one edge into the K4 on
// {6,...,9} and one into the K4 on {2,...,5}.
SimpleGraph guard_fixture() {
  return from_pairs(10, {{0, 1}, {0, 2}, {0, 6}, {1, 3}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                         {3, 5}, {4, 5}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
}

bool all_even(const Multigraph& m) {
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.degree(static_cast<Vertex>(v)) % 2) return false;
  return true;
}

void check_path(const SimpleGraph& g, const Arc& a1, const Arc& a2) {
  const CertifiedPath p = hamilton_path_of_X(g, a1, a2);
  CHECK(p.verified);
  CHECK(p.arcs.front() == a1);
  CHECK(p.arcs.back() == a2);
  CHECK_FALSE(validate_path(three_arc_graph(g), p.arcs, a1, a2).has_value());
}

}  // namespace

TEST_CASE("shortest odd paths") {
  const auto k4 = shortest_odd_path(complete_graph(4), 0, 1);
  REQUIRE(k4);
  CHECK(k4->vertices == std::vector<Vertex>{0, 1});

  const auto c5 = shortest_odd_path(cycle_graph(5), 0, 2);
  REQUIRE(c5);
  CHECK(c5->vertices == std::vector<Vertex>{0, 4, 3, 2});
  CHECK(c5->length() == 3);

  CHECK_FALSE(shortest_odd_path(cycle_graph(4), 0, 2).has_value());
}

TEST_CASE("odd path lengths agree with exhaustive search") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 30; ++i) {
    const SimpleGraph g = random_connected_graph(8, 0.3, rng);
    for (Vertex a = 0; a < 8; ++a)
      for (Vertex b = 0; b < 8; ++b) {
        if (a == b) continue;
        const auto p = shortest_odd_path(g, a, b);
        const std::size_t expected = oracle::shortest_odd_length(g, a, b);
        CHECK(p.has_value() == (expected != 0));
        if (p) CHECK(p->length() == expected);
      }
  }
}

TEST_CASE("odd edges alternate along the path") {
  const OddPath p{{0, 1, 2, 3}};
  CHECK(p.even_edges() == std::vector<Edge>{Edge::of(0, 1), Edge::of(2, 3)});
  CHECK(p.odd_edges() == std::vector<Edge>{Edge::of(1, 2)});
}

TEST_CASE("all-pairs odd paths") {
  CHECK(has_all_pairs_odd_paths(complete_graph(4)));
  CHECK(has_all_pairs_odd_paths(petersen_graph()));
  CHECK_FALSE(has_all_pairs_odd_paths(complete_bipartite_graph(3, 3)));
  CHECK_FALSE(has_all_pairs_odd_paths(cube_graph()));
}

TEST_CASE("same-tail multigraph off the path") {
  const SimpleGraph g = complete_graph(4);
  const SameTailMultigraph s = build_same_tail_multigraph(g, 0, 1, 2, OddPath{{1, 2}});
  const Multigraph& m = s.multigraph;
  CHECK(m.multiplicity(1, 2) == 3);
  CHECK(m.multiplicity(0, 1) == 1);
  CHECK(m.multiplicity(0, 2) == 1);
  CHECK(m.multiplicity(0, 3) == 2);
  CHECK(m.multiplicity(1, 3) == 2);
  CHECK(m.multiplicity(2, 3) == 2);
  CHECK(m.degree(0) == 4);
  CHECK_FALSE(s.x_on_path);
  CHECK(s.anchor.entry == 1);
  CHECK(s.anchor.mid == 0);
  CHECK(s.anchor.exit == 2);
  CHECK(all_even(m));
}

TEST_CASE("same-tail multigraph with x second on the path") {
  const SimpleGraph g = complete_graph(4);
  const SameTailMultigraph s = build_same_tail_multigraph(g, 0, 1, 3, OddPath{{1, 0, 2, 3}});
  CHECK(s.x_on_path);
  CHECK(s.anchor.entry == 2);
  CHECK(s.anchor.mid == 0);
  CHECK(s.anchor.exit == 3);
  CHECK(s.multigraph.degree(0) == 2 * 3 - 2);
  CHECK(all_even(s.multigraph));
}

TEST_CASE("same-tail multigraphs are Eulerian on random inputs") {
  std::mt19937_64 rng(71);
  int built = 0;
  for (int i = 0; i < 400 && built < 30; ++i) {
    const SimpleGraph g = random_connected_graph(8, 0.45, rng);
    if (path_hypothesis_failure(g)) continue;
    const Vertex x = static_cast<Vertex>(rng() % 8);
    const auto nb = g.neighbors(x);
    const Vertex y = nb[0], v = nb[1];
    const auto p = shortest_odd_path(g, y, v);
    REQUIRE(p);
    const auto& pv = p->vertices;
    const auto it = std::find(pv.begin(), pv.end(), x);
    if (it != pv.end() && it != pv.begin() + 1) continue;
    const SameTailMultigraph s = build_same_tail_multigraph(g, x, y, v, *p);
    CHECK(all_even(s.multigraph));
    CHECK(s.multigraph.degree(x) == 2 * g.degree(x) - 2);
    ++built;
  }
  CHECK(built == 30);
}

TEST_CASE("distinct-tail multigraph for an edge") {
  const SimpleGraph g = complete_graph(4);
  const PendantTrailGraph ptg = build_distinct_tail_multigraph(g, 0, 1, OddPath{{0, 1}});
  const Multigraph& m = ptg.multigraph;
  CHECK(m.vertex_count() == 6);
  CHECK(ptg.t == 4);
  CHECK(ptg.t_prime == 5);
  CHECK(m.multiplicity(0, 1) == 1);
  for (auto [a, b] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) CHECK(m.multiplicity(a, b) == 2);
  CHECK(m.multiplicity(4, 0) == 1);
  CHECK(m.multiplicity(1, 5) == 1);
  for (Vertex v = 0; v < 4; ++v) CHECK(m.degree(v) % 2 == 0);
  CHECK(m.degree(4) == 1);
  CHECK(m.degree(5) == 1);
}

TEST_CASE("distinct-tail multigraph triples the middle edge of a 3-path") {
  const SimpleGraph g = complete_graph(4);
  const PendantTrailGraph ptg = build_distinct_tail_multigraph(g, 0, 3, OddPath{{0, 1, 2, 3}});
  const Multigraph& m = ptg.multigraph;
  CHECK(m.multiplicity(1, 2) == 3);
  CHECK(m.multiplicity(0, 1) == 1);
  CHECK(m.multiplicity(2, 3) == 1);
  // Dropping the pendants leaves every edge of g with positive multiplicity.
  for (const Edge& e : g.edges()) CHECK(m.multiplicity(e.u, e.v) >= 1);
  std::size_t base_edges = 0;
  for (Vertex v = 0; v < 4; ++v) base_edges += m.neighbors(v).size();
  CHECK(base_edges == 2 * g.edge_count() + 2);
}

TEST_CASE("guard neighbors avoid the path start") {
  const SimpleGraph g = complete_graph(4);
  const OddPath p{{0, 1, 2, 3}};
  const GuardNeighbors gn = choose_guard_neighbors(g, 0, 1, 3, 2, p);
  CHECK(gn.x_prime != 1);
  CHECK(g.adjacent(0, gn.x_prime));
  CHECK(gn.u_prime != 2);
  CHECK(g.adjacent(3, gn.u_prime));
}

TEST_CASE("guard neighbors swap away from a 2-edge cut") {
  const SimpleGraph g = guard_fixture();
  const auto p = shortest_odd_path(g, 0, 1);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<Vertex>{0, 1});
  // The first candidates 2 and 3 would leave {0-6, 1-7}, a cut.
  CHECK(is_edge_cut_pair(g, Edge::of(0, 6), Edge::of(1, 7)));
  const GuardNeighbors gn = choose_guard_neighbors(g, 0, 1, 1, 0, *p);
  CHECK_FALSE(is_edge_cut_pair(g, Edge::of(0, gn.x_prime == 2 ? 6 : 2), Edge::of(1, gn.u_prime == 3 ? 7 : 3)));
  CHECK((gn.x_prime != 2 || gn.u_prime != 3));
  check_path(g, {0, 1}, {1, 0});
}

TEST_CASE("guard rule is idle for degree four") {
  const SimpleGraph g = complete_graph(5);
  const OddPath p{{0, 1, 2, 3}};
  const GuardNeighbors gn = choose_guard_neighbors(g, 0, 1, 3, 2, p);
  CHECK(gn.x_prime == 2);
  CHECK(gn.u_prime == 0);
}

TEST_CASE("anchored open trail on K4") {
  const SimpleGraph g = complete_graph(4);
  const OddPath p{{0, 1}};
  const PendantTrailGraph ptg = build_distinct_tail_multigraph(g, 0, 1, p);
  const GuardNeighbors gn = choose_guard_neighbors(g, 0, 2, 1, 3, p);
  const Trail w = open_euler_trail_with_anchors(ptg, g, 2, 3, p, gn);
  CHECK(is_trail(ptg.multigraph, w));
  CHECK(covers_all_edges(ptg.multigraph, w));
  CHECK(w.front() == ptg.t);
  CHECK(w.back() == ptg.t_prime);
  CHECK(w.vertices[1] == 0);
  CHECK(w.vertices[2] == gn.x_prime);
  CHECK(w.vertices[w.vertices.size() - 2] == 1);
  CHECK(w.vertices[w.vertices.size() - 3] == gn.u_prime);
}

TEST_CASE("anchored open trail induces the guard visit when y is on the path") {
  const SimpleGraph g = complete_graph(4);
  const OddPath p{{0, 1, 2, 3}};
  const PendantTrailGraph ptg = build_distinct_tail_multigraph(g, 0, 3, p);
  const GuardNeighbors gn = choose_guard_neighbors(g, 0, 1, 3, 2, p);
  const Trail w = open_euler_trail_with_anchors(ptg, g, 1, 2, p, gn);
  CHECK(covers_all_edges(ptg.multigraph, w));
  const auto vs = visits_of_trail(w, 0);
  CHECK(std::any_of(vs.begin(), vs.end(), [&](const Visit& q) { return q.has_ends(gn.x_prime, 1); }));
  const auto vu = visits_of_trail(w, 3);
  CHECK(std::any_of(vu.begin(), vu.end(), [&](const Visit& q) { return q.has_ends(gn.u_prime, 2); }));
}

TEST_CASE("anchored trails cover every edge on random inputs") {
  std::mt19937_64 rng(73);
  int built = 0;
  for (int i = 0; i < 400 && built < 30; ++i) {
    const SimpleGraph g = random_connected_graph(8, 0.45, rng);
    if (path_hypothesis_failure(g)) continue;
    const Vertex x = static_cast<Vertex>(rng() % 8);
    const Vertex u = static_cast<Vertex>(rng() % 8);
    if (x == u) continue;
    const auto p = shortest_odd_path(g, x, u);
    REQUIRE(p);
    const Vertex y = g.neighbors(x)[rng() % g.degree(x)];
    const Vertex v = g.neighbors(u)[rng() % g.degree(u)];
    if (y == u || v == x) continue;
    const PendantTrailGraph ptg = build_distinct_tail_multigraph(g, x, u, *p);
    const GuardNeighbors gn = choose_guard_neighbors(g, x, y, u, v, *p);
    const Trail w = open_euler_trail_with_anchors(ptg, g, y, v, *p, gn);
    CHECK(is_trail(ptg.multigraph, w));
    CHECK(covers_all_edges(ptg.multigraph, w));
    ++built;
  }
  CHECK(built == 30);
}

TEST_CASE("K and L for a degree-three vertex") {
  // K4 same-tail fixture with x = 0, y = 1, v = 2, z1 = 3, pendants t = 4, t' = 5.
  const SimpleGraph g = complete_graph(4);
  Multigraph m(6);
  const std::vector<Vertex> seq = {4, 0, 3, 1, 0, 2, 1, 3, 2, 1, 2, 3, 0, 5};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) m.add_edge(seq[i], seq[i + 1]);
  Trail w;
  w.vertices = seq;
  for (EdgeId e = 0; e + 1 < static_cast<EdgeId>(seq.size()); ++e) w.edges.push_back(e);
  REQUIRE(is_trail(m, w));
  const KAndL kl = build_K_and_L(w, g);
  CHECK(kl.k.left().size() == 3);
  CHECK(kl.k.right().size() == 3);
  CHECK(kl.l.left().size() == 1);
  CHECK(kl.l.right().size() == 2);

  const std::size_t first = *kl.k.find_left(visit_at(w, 1));
  const std::size_t middle = *kl.k.find_left(visit_at(w, 4));
  const std::size_t last = *kl.k.find_left(visit_at(w, 12));
  const std::size_t xy = *kl.k.find_right({0, 1});
  const std::size_t xv = *kl.k.find_right({0, 2});
  const std::size_t xz1 = *kl.k.find_right({0, 3});
  const std::pair<std::size_t, std::size_t> pins[] = {{first, xy}, {last, xv}};
  const auto pm = perfect_matching_with(kl.k, pins);
  REQUIRE(pm);
  CHECK(pm->arc_of[first] == static_cast<int>(xy));
  CHECK(pm->arc_of[middle] == static_cast<int>(xz1));
  CHECK(pm->arc_of[last] == static_cast<int>(xv));
}

TEST_CASE("L drops two visits and two arcs when z1 and z2 differ") {
  const SimpleGraph g = complete_graph(5);
  const SameTailMultigraph s = build_same_tail_multigraph(g, 0, 1, 2, OddPath{{1, 2}});
  std::mt19937_64 rng(79);
  for (int i = 0; i < 20; ++i) {
    Multigraph m = s.multigraph;
    const Vertex t = m.add_vertex(), tp = m.add_vertex();
    m.add_edge(t, 0);
    m.add_edge(0, tp);
    // A closed tour from x opened between two pendant edges.
    const Trail tour = random_euler_tour(s.multigraph, 0, rng);
    Trail w;
    w.vertices.push_back(t);
    w.vertices.insert(w.vertices.end(), tour.vertices.begin(), tour.vertices.end());
    w.vertices.push_back(tp);
    w.edges.push_back(static_cast<EdgeId>(s.multigraph.edge_count()));
    w.edges.insert(w.edges.end(), tour.edges.begin(), tour.edges.end());
    w.edges.push_back(static_cast<EdgeId>(s.multigraph.edge_count() + 1));
    REQUIRE(is_trail(m, w));
    const KAndL kl = build_K_and_L(w, g);
    CHECK(kl.k.left().size() == 4);
    CHECK(kl.k.right().size() == 4);
    CHECK(kl.l.left().size() == 2);
    const std::size_t dropped = w.vertices[2] == w.vertices[w.vertices.size() - 3] ? 1 : 2;
    CHECK(kl.l.right().size() == 4 - dropped);
  }
}

TEST_CASE("same-tail paths on K4") {
  check_path(complete_graph(4), {0, 1}, {0, 2});
  check_path(complete_graph(4), {0, 1}, {1, 0});
  CHECK(brute_force_hamilton_path(three_arc_graph(complete_graph(4)).graph,
                                  static_cast<Vertex>(ArcIndex(complete_graph(4)).index({0, 1})),
                                  static_cast<Vertex>(ArcIndex(complete_graph(4)).index({0, 2}))));
}

TEST_CASE("every ordered arc pair of K4 and Petersen") {
  for (const SimpleGraph& g : {complete_graph(4), petersen_graph()}) {
    const auto arcs = g.arcs();
    std::size_t verified = 0, fallback = 0;
    for (const Arc& a : arcs)
      for (const Arc& b : arcs) {
        if (a == b) continue;
        const CertifiedPath p = hamilton_path_of_X(g, a, b);
        verified += p.verified && !validate_path(g, p.arcs, a, b);
        fallback += p.fallback;
      }
    CHECK(verified == arcs.size() * (arcs.size() - 1));
    CHECK(fallback == 0);
  }
}

TEST_CASE("a 2-edge cut through the anchor forces the search") {
  const SimpleGraph g = gap_fixture();
  REQUIRE_FALSE(path_hypothesis_failure(g).has_value());
  const CertifiedPath p = hamilton_path_of_X(g, {0, 4}, {0, 5});
  CHECK(p.verified);
  CHECK(p.fallback);
  CHECK_FALSE(validate_path(g, p.arcs, {0, 4}, {0, 5}).has_value());
}

TEST_CASE("paths on joins") {
  const SimpleGraph k2k3 = join(complete_graph(2), complete_graph(3));
  REQUIRE_FALSE(path_hypothesis_failure(k2k3).has_value());
  check_path(k2k3, {0, 2}, {3, 4});
  const SimpleGraph wheel = join(cycle_graph(5), complete_graph(1));
  REQUIRE_FALSE(path_hypothesis_failure(wheel).has_value());
  for (const Arc& a : wheel.arcs()) check_path(wheel, {5, 0}, a == Arc{5, 0} ? Arc{0, 1} : a);
}

TEST_CASE("hypothesis failures are reported") {
  CHECK(path_hypothesis_failure(cycle_graph(5)).has_value());
  CHECK(path_hypothesis_failure(cube_graph()).has_value());
  CHECK_THROWS_AS(hamilton_path_of_X(cube_graph(), {0, 1}, {1, 0}), HypothesisError);
  CHECK_THROWS_AS(hamilton_path_of_X(complete_graph(4), {0, 1}, {0, 1}), GraphError);
  CHECK_THROWS_AS(hamilton_path_of_X(complete_graph(4), {0, 1}, {0, 7}), GraphError);
}
