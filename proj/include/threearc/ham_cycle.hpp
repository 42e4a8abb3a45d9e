#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "threearc/euler.hpp"
#include "threearc/graph.hpp"

namespace threearc {

struct ConditionReport {
  bool min_degree_ok = false;       // (a) minimum degree at least two
  bool no_adjacent_degree2 = false; // (b)
  bool core_connected = false;      // (c) G minus its degree-two vertices is connected
  std::vector<Vertex> low_degree_vertices;
  std::vector<Edge> adjacent_degree2_edges;
  std::vector<std::vector<Vertex>> core_components;

  bool all() const { return min_degree_ok && no_adjacent_degree2 && core_connected; }
};

std::string to_string(const ConditionReport& report);

ConditionReport check_conditions(const SimpleGraph& g);

// Hypotheses of a construction do not hold for the input.
class HypothesisError : public GraphError {
 public:
  using GraphError::GraphError;
};

class ConditionError : public HypothesisError {
 public:
  explicit ConditionError(ConditionReport report);
  const ConditionReport& report() const { return report_; }

 private:
  ConditionReport report_;
};

// A construction produced a certificate that failed validation.
class InternalError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct CertifiedCycle {
  std::vector<Arc> arcs;
  bool verified = false;
};

// X(G) is hamiltonian: minimum degree two and the hat graph connected.
bool is_X_hamiltonian(const SimpleGraph& g);

// Throws ConditionError when the conditions fail and InternalError when the
// emitted cycle does not validate. The cycle starts at the least arc.
CertifiedCycle hamilton_cycle_of_X(const SimpleGraph& g, RepairStats* stats = nullptr);

// Arc sequence of X(g) read off a trail through the visits in trail order
// (positions 1..l-1, then 0 for closed trails). Each vertex uses a perfect
// matching of its visits against the arcs of g; `forced` pins pairs per
// vertex. Throws InternalError when a vertex has no such matching.
using ForcedPairs = std::map<Vertex, std::vector<std::pair<Visit, Arc>>>;
std::vector<Arc> phi_sequence(const Trail& c, const SimpleGraph& g,
                              const ForcedPairs& forced = {});

}  // namespace threearc
