#include "threearc/ham_cycle.hpp"

#include <algorithm>
#include <sstream>

#include "threearc/three_arc.hpp"
#include "threearc/verify.hpp"

namespace threearc {

namespace {

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

}  // namespace

std::string to_string(const ConditionReport& r) {
  std::ostringstream out;
  out << "(a) min degree >= 2: " << (r.min_degree_ok ? "yes" : "no");
  if (!r.min_degree_ok) out << " [low-degree vertices: " << join_vertices(r.low_degree_vertices) << ']';
  out << "\n(b) no adjacent degree-2 vertices: " << (r.no_adjacent_degree2 ? "yes" : "no");
  if (!r.no_adjacent_degree2) {
    out << " [edges:";
    for (const Edge& e : r.adjacent_degree2_edges) out << ' ' << e.u << '-' << e.v;
    out << ']';
  }
  out << "\n(c) G - S2 connected: " << (r.core_connected ? "yes" : "no");
  if (!r.core_connected && r.core_components.empty()) {
    out << " [every vertex has degree two]";
  } else if (!r.core_connected) {
    out << " [" << r.core_components.size() << " components:";
    for (const auto& comp : r.core_components) out << " {" << join_vertices(comp) << '}';
    out << ']';
  }
  out << '\n';
  return out.str();
}

ConditionReport check_conditions(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw GraphError("empty graph");
  ConditionReport r;
  const auto n = g.vertex_count();
  std::vector<bool> keep(n, true);
  for (std::size_t v = 0; v < n; ++v) {
    const auto d = g.degree(static_cast<Vertex>(v));
    if (d < 2) r.low_degree_vertices.push_back(static_cast<Vertex>(v));
    if (d == 2) keep[v] = false;
  }
  for (const Edge& e : g.edges())
    if (g.degree(e.u) == 2 && g.degree(e.v) == 2) r.adjacent_degree2_edges.push_back(e);
  r.min_degree_ok = r.low_degree_vertices.empty();
  r.no_adjacent_degree2 = r.adjacent_degree2_edges.empty();
  r.core_components = components(g, keep);
  r.core_connected = r.core_components.size() == 1;
  return r;
}

ConditionError::ConditionError(ConditionReport report)
    : HypothesisError("conditions for a Hamilton cycle of X(G) fail:\n" + to_string(report)),
      report_(std::move(report)) {}

bool is_X_hamiltonian(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw GraphError("empty graph");
  return g.min_degree() >= 2 && is_connected(hat_graph(g));
}

std::vector<Arc> phi_sequence(const Trail& c, const SimpleGraph& g, const ForcedPairs& forced) {
  const std::size_t len = c.length();
  std::vector<std::size_t> order;
  for (std::size_t k = 1; k < len; ++k) order.push_back(k);
  if (c.closed) order.push_back(0);

  std::map<Vertex, std::vector<std::size_t>> at;
  for (std::size_t k : order) at[c.vertices[k]].push_back(k);

  std::vector<Arc> arc_at(len);
  for (const auto& [v, positions] : at) {
    if (!g.contains(v)) throw InternalError("trail visits vertex " + std::to_string(v) + " outside G");
    std::vector<Visit> visits;
    for (std::size_t k : positions) visits.push_back(visit_at(c, k));
    const auto arcs = arcs_with_tail(g, v);
    if (visits.size() != arcs.size())
      throw InternalError("vertex " + std::to_string(v) + " has " + std::to_string(visits.size()) +
                          " visits but degree " + std::to_string(arcs.size()));
    const VisitArcGraph h(visits, arcs);
    std::vector<std::pair<std::size_t, std::size_t>> pins;
    if (auto it = forced.find(v); it != forced.end()) {
      for (const auto& [visit, arc] : it->second) {
        const auto i = h.find_left(visit);
        const auto j = h.find_right(arc);
        if (!i || !j)
          throw InternalError("forced pair " + to_string(visit) + " -> " + to_string(arc) +
                              " is not in H(" + std::to_string(v) + ")");
        pins.emplace_back(*i, *j);
      }
    }
    const auto m = perfect_matching_with(h, pins);
    if (!m) throw InternalError("H(" + std::to_string(v) + ") has no admissible perfect matching");
    for (std::size_t i = 0; i < positions.size(); ++i) arc_at[positions[i]] = arcs[m->arc_of[i]];
  }
  std::vector<Arc> out;
  for (std::size_t k : order) out.push_back(arc_at[k]);
  return out;
}

CertifiedCycle hamilton_cycle_of_X(const SimpleGraph& g, RepairStats* stats) {
  ConditionReport report = check_conditions(g);
  if (!report.all()) throw ConditionError(std::move(report));

  const Multigraph m = build_multigraph(g, 2);
  std::vector<Vertex> s2;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 2) s2.push_back(static_cast<Vertex>(v));

  Trail tour = euler_tour_s2_compatible(m, s2);
  RepairOptions options;
  options.stats = stats;
  tour = repair_twin_visits(tour, m, options);

  CertifiedCycle out;
  out.arcs = phi_sequence(tour, g);
  std::rotate(out.arcs.begin(), std::min_element(out.arcs.begin(), out.arcs.end()), out.arcs.end());
  if (auto err = validate_cycle(g, out.arcs))
    throw InternalError("Hamilton cycle failed validation: " + to_string(*err) +
                        "\ntour: " + format_trail(tour));
  out.verified = true;
  return out;
}

}  // namespace threearc
