#pragma once

// Every visit-decomposition at the center of a star multigraph.

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "threearc/euler.hpp"
#include "threearc/graph.hpp"

namespace decompositions {

using threearc::EdgeId;
using threearc::Multigraph;
using threearc::Vertex;
using threearc::Visit;

struct Pattern {
  std::string name;
  std::vector<int> multiplicity;  // of the edges 0 - 1, 0 - 2, ...
};

// Center 0, leaves 1..k.
inline Multigraph star(const std::vector<int>& multiplicity) {
  Multigraph m(multiplicity.size() + 1);
  for (std::size_t i = 0; i < multiplicity.size(); ++i)
    for (int c = 0; c < multiplicity[i]; ++c) m.add_edge(0, static_cast<Vertex>(i + 1));
  return m;
}

// Patterns the matching lemma speaks about for d*(x) = 2d(x).
inline std::vector<Pattern> lemma_patterns(int degree) {
  std::vector<Pattern> out;
  out.push_back({"all doubled, d=" + std::to_string(degree), std::vector<int>(degree, 2)});
  std::vector<int> mixed(degree, 2);
  mixed[0] = 1;
  mixed[1] = 3;
  out.push_back({"1/2/3, d=" + std::to_string(degree), mixed});
  return out;
}

// Calls visit once per partition of the edges at 0 into pairs.
inline void for_each_decomposition(const Multigraph& m,
                                   const std::function<void(const std::vector<Visit>&)>& visit) {
  const auto inc = m.incident_edges(0);
  std::vector<EdgeId> edges(inc.begin(), inc.end());
  std::vector<bool> used(edges.size(), false);
  std::vector<Visit> current;
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < edges.size() && used[i]) ++i;
    if (i == edges.size()) {
      visit(current);
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.push_back(Visit{m.other_end(edges[i], 0), 0, m.other_end(edges[j], 0), edges[i], edges[j]});
      self(self);
      current.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
}

// Two visits with the same unordered pair of outer ends.
inline bool has_twins(const std::vector<Visit>& visits) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Visit& p : visits)
    if (!seen.insert(std::minmax(p.entry, p.exit)).second) return true;
  return false;
}

// Visit-by-arc adjacency of H(0) built from scratch.
inline std::vector<std::vector<bool>> h_adjacency(const std::vector<Visit>& visits,
                                                  const std::vector<Vertex>& heads) {
  std::vector<std::vector<bool>> adj(visits.size(), std::vector<bool>(heads.size()));
  for (std::size_t i = 0; i < visits.size(); ++i)
    for (std::size_t j = 0; j < heads.size(); ++j)
      adj[i][j] = visits[i].entry != heads[j] && visits[i].exit != heads[j];
  return adj;
}

}  // namespace decompositions
