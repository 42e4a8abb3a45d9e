#include <numeric>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "threearc/generators.hpp"
#include "threearc/ham_cycle.hpp"

using namespace threearc;

namespace {

SimpleGraph relabeled(const SimpleGraph& g, const std::vector<Vertex>& perm) {
  SimpleGraph h(g.vertex_count());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

}  // namespace

TEST_CASE("named graphs") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_bipartite_graph(3, 3).edge_count() == 9);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(path_graph(6).edge_count() == 5);
  CHECK(star_graph(4).degree(0) == 4);
  CHECK(petersen_graph().edge_count() == 15);
  CHECK(cube_graph().edge_count() == 12);
  const SimpleGraph k2k3 = join(complete_graph(2), complete_graph(3));
  CHECK(k2k3 == complete_graph(5));
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 30; ++i) {
    const SimpleGraph g = random_gnp(7, 0.4, rng);
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(g) == canonical_code(relabeled(g, perm)));
  }
  CHECK(canonical_code(cycle_graph(6)) != canonical_code(join(SimpleGraph(3), SimpleGraph(3))));
}

TEST_CASE("graph enumeration counts") {
  std::size_t labeled = 0, classes4 = 0, classes5 = 0, classes6 = 0, connected6 = 0;
  for_each_graph(4, false, [&](const SimpleGraph&) { ++labeled; });
  for_each_graph(4, true, [&](const SimpleGraph&) { ++classes4; });
  for_each_graph(5, true, [&](const SimpleGraph&) { ++classes5; });
  for_each_graph(6, true, [&](const SimpleGraph& g) {
    ++classes6;
    connected6 += oracle::connected(g);
  });
  CHECK(labeled == 64);
  CHECK(classes4 == 11);
  CHECK(classes5 == 34);
  CHECK(classes6 == 156);
  CHECK(connected6 == 112);
}

TEST_CASE("random cubic graphs are connected and 3-regular") {
  std::mt19937_64 rng(89);
  for (std::size_t n = 4; n <= 20; n += 2) {
    const SimpleGraph g = random_cubic_graph(n, rng);
    CHECK(g.vertex_count() == n);
    CHECK(oracle::connected(g));
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) CHECK(g.degree(v) == 3);
  }
}

TEST_CASE("random graphs with degree-two vertices satisfy the conditions") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 30; ++i) {
    const SimpleGraph g = random_graph_with_degree_two(5 + i % 6, rng);
    CHECK(check_conditions(g).all());
    bool has_two = false;
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) has_two |= g.degree(v) == 2;
    CHECK(has_two);
  }
}

TEST_CASE("random connected graphs are connected") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 30; ++i) CHECK(oracle::connected(random_connected_graph(12, 0.1, rng)));
}
