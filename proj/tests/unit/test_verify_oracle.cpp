#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "threearc/generators.hpp"
#include "threearc/ham_path.hpp"
#include "threearc/three_arc.hpp"
#include "threearc/verify.hpp"

using namespace threearc;

TEST_CASE("the reference Petersen cycle validates") {
  const auto cycle = fixtures::golden_cycle_arcs();
  CHECK(cycle.size() == 30);
  CHECK(fixtures::petersen_arc(fixtures::kGoldenCycle.back()) == cycle.front());
  CHECK_FALSE(validate_cycle(petersen_graph(), cycle).has_value());
  CHECK_FALSE(validate_cycle(three_arc_graph(petersen_graph()), cycle).has_value());
}

TEST_CASE("swapping two entries breaks adjacency") {
  auto cycle = fixtures::golden_cycle_arcs();
  std::swap(cycle[3], cycle[10]);
  const auto err = validate_cycle(petersen_graph(), cycle);
  REQUIRE(err);
  CHECK(err->kind == ValidationKind::NonAdjacentPair);
  const auto err_x = validate_cycle(three_arc_graph(petersen_graph()), cycle);
  REQUIRE(err_x);
  CHECK(err_x->kind == ValidationKind::NonAdjacentPair);
  CHECK(err_x->position == err->position);
}

TEST_CASE("a 29-arc prefix has the wrong length") {
  auto cycle = fixtures::golden_cycle_arcs();
  cycle.pop_back();
  const auto err = validate_cycle(petersen_graph(), cycle);
  REQUIRE(err);
  CHECK(err->kind == ValidationKind::WrongLength);
}

TEST_CASE("repeated and foreign arcs") {
  auto cycle = fixtures::golden_cycle_arcs();
  cycle[5] = cycle[0];
  auto err = validate_cycle(petersen_graph(), cycle);
  REQUIRE(err);
  CHECK(err->kind == ValidationKind::RepeatedArc);
  CHECK(err->position == 5);

  cycle = fixtures::golden_cycle_arcs();
  cycle[7] = Arc{0, 2};
  err = validate_cycle(petersen_graph(), cycle);
  REQUIRE(err);
  CHECK(err->kind == ValidationKind::MissingArc);
}

TEST_CASE("path validation") {
  const SimpleGraph g = complete_graph(4);
  const CertifiedPath p = hamilton_path_of_X(g, {0, 1}, {2, 3});
  CHECK_FALSE(validate_path(g, p.arcs, {0, 1}, {2, 3}).has_value());
  CHECK_FALSE(validate_path(three_arc_graph(g), p.arcs, {0, 1}, {2, 3}).has_value());

  const auto swapped = validate_path(g, p.arcs, {2, 3}, {0, 1});
  REQUIRE(swapped);
  CHECK(swapped->kind == ValidationKind::WrongEndpoint);

  auto repeated = p.arcs;
  repeated[4] = repeated[3];
  const auto err = validate_path(g, repeated, {0, 1}, {2, 3});
  REQUIRE(err);
  CHECK(err->kind == ValidationKind::RepeatedArc);
}

TEST_CASE("3-arc adjacency matches the definition") {
  const SimpleGraph g = petersen_graph();
  for (const Arc& a : g.arcs())
    for (const Arc& b : g.arcs())
      CHECK(three_arc_adjacent(g, a, b) == oracle::is_three_arc(g, a.head, a.tail, b.tail, b.head));
}

TEST_CASE("brute force on known graphs") {
  CHECK_FALSE(brute_force_hamiltonian(petersen_graph()));
  CHECK(brute_force_hamiltonian(three_arc_graph(petersen_graph()).graph));
  CHECK(brute_force_hamiltonian(complete_graph(4)));
  CHECK(brute_force_hamilton_connected(complete_graph(4)));
  CHECK_FALSE(brute_force_hamiltonian(complete_bipartite_graph(2, 3)));
  CHECK_FALSE(brute_force_hamilton_connected(complete_bipartite_graph(3, 3)));
  CHECK(brute_force_hamiltonian(cycle_graph(7)));
  CHECK_FALSE(brute_force_hamilton_connected(cycle_graph(5)));
  CHECK_FALSE(brute_force_hamiltonian(path_graph(4)));
  CHECK(brute_force_hamilton_path(path_graph(4), 0, 3));
  CHECK_FALSE(brute_force_hamilton_path(path_graph(4), 0, 2));
  CHECK_THROWS_AS(brute_force_hamiltonian(cycle_graph(kBruteForceCap + 1)), GraphError);
}

TEST_CASE("Hamilton-connected graphs from small enumerations") {
  // Among graphs on four vertices only K4 is Hamilton-connected.
  std::size_t hc = 0;
  for_each_graph(4, false, [&](const SimpleGraph& g) { hc += brute_force_hamilton_connected(g); });
  CHECK(hc == 1);
}
