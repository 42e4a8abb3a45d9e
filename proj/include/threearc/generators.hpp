#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "threearc/graph.hpp"

namespace threearc {

SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
// K_{1,k} with center 0.
SimpleGraph star_graph(std::size_t k);
// Outer cycle 0..4, inner pentagram 5..9, spokes i - i+5.
SimpleGraph petersen_graph();
SimpleGraph cube_graph();
// Disjoint union of g and h plus every edge between them; h is shifted.
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

SimpleGraph random_gnp(std::size_t n, double p, std::mt19937_64& rng);
// Random spanning tree plus each remaining pair with probability p.
SimpleGraph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);
// Connected simple 3-regular graph on n (even, >= 4) vertices by the
// pairing model with rejection.
SimpleGraph random_cubic_graph(std::size_t n, std::mt19937_64& rng);
// Minimum degree three graph with some non-tree edges subdivided: satisfies
// the Hamilton cycle conditions and has at least one degree-two vertex.
SimpleGraph random_graph_with_degree_two(std::size_t core_n, std::mt19937_64& rng);

// Least adjacency bit pattern over all relabelings (n <= 8).
std::uint64_t canonical_code(const SimpleGraph& g);

// Every graph on n vertices (n <= 7), labeled or one per isomorphism class.
void for_each_graph(std::size_t n, bool up_to_isomorphism,
                    const std::function<void(const SimpleGraph&)>& visit);

}  // namespace threearc
