#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "threearc/graph.hpp"
#include "threearc/three_arc.hpp"

namespace threearc {

enum class ValidationKind { WrongLength, RepeatedArc, MissingArc, WrongEndpoint, NonAdjacentPair };

std::string to_string(ValidationKind kind);

struct ValidationError {
  ValidationKind kind;
  std::size_t position = 0;
  std::string detail;
  std::vector<Arc> arcs;
};

std::string to_string(const ValidationError& e);

// (a.head, a.tail, b.tail, b.head) is a 3-arc of g.
bool three_arc_adjacent(const SimpleGraph& g, const Arc& a, const Arc& b);

// Checks, in this order: length 2|E(g)|, no repeated arc, every entry an
// arc of g, and 3-arc adjacency of consecutive entries (including the
// wrap-around pair).
std::optional<ValidationError> validate_cycle(const SimpleGraph& g, std::span<const Arc> seq);
// As validate_cycle, open, with the first and last entries pinned.
std::optional<ValidationError> validate_path(const SimpleGraph& g, std::span<const Arc> seq,
                                             const Arc& first, const Arc& last);
// The same checks against a constructed X(G): membership through its arc
// index and adjacency read off its edges.
std::optional<ValidationError> validate_cycle(const ThreeArcGraph& x, std::span<const Arc> seq);
std::optional<ValidationError> validate_path(const ThreeArcGraph& x, std::span<const Arc> seq,
                                             const Arc& first, const Arc& last);

inline constexpr std::size_t kBruteForceCap = 48;

// Backtracking from vertex 0 in ascending neighbor order, pruned when the
// unvisited vertices stop being reachable. Throws GraphError above cap.
bool brute_force_hamiltonian(const SimpleGraph& g, std::size_t cap = kBruteForceCap);
bool brute_force_hamilton_path(const SimpleGraph& g, Vertex s, Vertex t,
                               std::size_t cap = kBruteForceCap);
bool brute_force_hamilton_connected(const SimpleGraph& g, std::size_t cap = kBruteForceCap);

}  // namespace threearc
