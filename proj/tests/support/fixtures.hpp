#pragma once

// Fixtures with external labels. Petersen graph: outer cycle a1..a5 is
// 0..4, inner pentagram b1..b5 is 5..9, spokes a_i - b_i.

#include <stdexcept>
#include <string>
#include <vector>

#include "threearc/graph.hpp"

namespace fixtures {

using threearc::Arc;
using threearc::Vertex;

inline Vertex petersen_vertex(const std::string& label) {
  if (label.size() != 2 || (label[0] != 'a' && label[0] != 'b') || label[1] < '1' || label[1] > '5')
    throw std::invalid_argument("bad Petersen label " + label);
  return (label[0] == 'a' ? 0 : 5) + (label[1] - '1');
}

// "a2b2" -> arc a2 -> b2.
inline Arc petersen_arc(const std::string& text) {
  return {petersen_vertex(text.substr(0, 2)), petersen_vertex(text.substr(2, 2))};
}

inline const char* const kPetersenText =
    "10 15\n"
    "0 1\n1 2\n2 3\n3 4\n0 4\n"
    "5 7\n7 9\n6 9\n6 8\n5 8\n"
    "0 5\n1 6\n2 7\n3 8\n4 9\n";

// Reference Hamilton cycle of X(Petersen), 30 arcs followed by the
// closing repeat of the first.
inline const std::vector<std::string> kGoldenCycle = {
    "a2b2", "a3b3", "a4b4", "a5b5", "a1a2", "b1b3", "b4a4", "b2a2", "b5a5", "b3a3", "b1b4",
    "a1a5", "a2a3", "b2b4", "b5b3", "a5a1", "a4a3", "b4b1", "b2b5", "a2a1", "a3a4", "b3b5",
    "b1a1", "b4b2", "a4a5", "a3a2", "b3b1", "b5b2", "a5a4", "a1b1", "a2b2"};

// Reference Eulerian tour of the doubled Petersen graph (closed).
inline const std::vector<std::string> kReferenceTour = {
    "a1", "a2", "a3", "a4", "a5", "a1", "b1", "b4", "b2", "b5", "b3", "b1", "a1", "a2", "b2", "b5",
    "a5", "a4", "b4", "b2", "a2", "a3", "b3", "b1", "b4", "a4", "a3", "b3", "b5", "a5", "a1"};

inline std::vector<Arc> golden_cycle_arcs() {
  std::vector<Arc> out;
  for (std::size_t i = 0; i + 1 < kGoldenCycle.size(); ++i) out.push_back(petersen_arc(kGoldenCycle[i]));
  return out;
}

inline std::vector<Vertex> reference_tour_vertices() {
  std::vector<Vertex> out;
  for (const auto& s : kReferenceTour) out.push_back(petersen_vertex(s));
  return out;
}

}  // namespace fixtures
