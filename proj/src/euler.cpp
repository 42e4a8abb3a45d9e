#include "threearc/euler.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace threearc {

// ---------------------------------------------------------------------------
// Visits

bool Visit::same_as(const Visit& o) const {
  if (mid != o.mid) return false;
  return (entry_edge == o.entry_edge && exit_edge == o.exit_edge) ||
         (entry_edge == o.exit_edge && exit_edge == o.entry_edge);
}

std::string to_string(const Visit& v) {
  std::ostringstream out;
  out << '(' << v.entry << " [" << v.entry_edge << "] " << v.mid << " [" << v.exit_edge
      << "] " << v.exit << ')';
  return out.str();
}

bool are_twins(const Visit& p, const Visit& q) {
  if (p.mid != q.mid || !p.has_ends(q.entry, q.exit)) return false;
  const EdgeId ids[] = {p.entry_edge, p.exit_edge, q.entry_edge, q.exit_edge};
  std::set<EdgeId> distinct(std::begin(ids), std::end(ids));
  return distinct.size() == 4;
}

bool has_twin_visits(std::span<const Visit> visits) {
  for (std::size_t i = 0; i < visits.size(); ++i)
    for (std::size_t j = i + 1; j < visits.size(); ++j)
      if (are_twins(visits[i], visits[j])) return true;
  return false;
}

bool compatible(std::span<const Visit> c_at_x, std::span<const VisitShape> j) {
  std::vector<bool> used(c_at_x.size(), false);
  for (const VisitShape& s : j) {
    bool found = false;
    for (std::size_t i = 0; i < c_at_x.size() && !found; ++i) {
      if (used[i] || c_at_x[i].mid != s.x || !c_at_x[i].has_ends(s.a, s.b)) continue;
      used[i] = true;
      found = true;
    }
    if (!found) return false;
  }
  return true;
}

void check_visit_decomposition(const Multigraph& m, const VisitDecomposition& j) {
  std::vector<EdgeId> used;
  for (const Visit& p : j.visits) {
    if (p.mid != j.mid) throw GraphError("visit " + to_string(p) + " is not at the decomposed vertex");
    if (p.entry_edge == p.exit_edge) throw GraphError("visit " + to_string(p) + " repeats an edge");
    for (auto [e, end] : {std::pair{p.entry_edge, p.entry}, std::pair{p.exit_edge, p.exit}}) {
      if (e < 0 || static_cast<std::size_t>(e) >= m.edge_count() || !m.incident(e, j.mid) ||
          m.other_end(e, j.mid) != end)
        throw GraphError("visit " + to_string(p) + " names an edge it does not traverse");
      used.push_back(e);
    }
  }
  std::sort(used.begin(), used.end());
  std::vector<EdgeId> expected(m.incident_edges(j.mid).begin(), m.incident_edges(j.mid).end());
  std::sort(expected.begin(), expected.end());
  if (used != expected)
    throw GraphError("visits do not partition the edges at vertex " + std::to_string(j.mid));
}

Visit visit_at(const Trail& c, std::size_t position) {
  const std::size_t len = c.length();
  if (c.closed && position == 0 && len >= 2)
    return {c.vertices[len - 1], c.vertices[0], c.vertices[1], c.edges[len - 1], c.edges[0]};
  if (position == 0 || position >= len)
    throw GraphError("no visit at trail position " + std::to_string(position));
  return {c.vertices[position - 1], c.vertices[position], c.vertices[position + 1],
          c.edges[position - 1], c.edges[position]};
}

std::vector<std::size_t> visit_positions(const Trail& c, Vertex x) {
  if (!c.closed && (c.front() == x || c.back() == x))
    throw GraphError("visits to endpoint " + std::to_string(x) + " of an open trail are undefined");
  std::vector<std::size_t> out;
  const std::size_t len = c.length();
  for (std::size_t k = c.closed ? 0 : 1; k < len; ++k)
    if (c.vertices[k] == x) out.push_back(k);
  return out;
}

std::vector<Visit> visits_of_trail(const Trail& c, Vertex x) {
  std::vector<Visit> out;
  for (std::size_t k : visit_positions(c, x)) out.push_back(visit_at(c, k));
  return out;
}

std::optional<std::size_t> locate_visit(const Trail& c, const Visit& p) {
  const std::size_t len = c.length();
  for (std::size_t k = 0; k < len; ++k) {
    if (c.edges[k] != p.entry_edge && c.edges[k] != p.exit_edge) continue;
    // Edge k sits between positions k and k + 1.
    for (std::size_t pos : {k, k + 1}) {
      if (pos == len && c.closed) pos = 0;
      if (pos == 0 && !c.closed) continue;
      if (pos >= len && !c.closed) continue;
      if (c.vertices[pos] != p.mid) continue;
      if (visit_at(c, pos).same_as(p)) return pos;
    }
  }
  return std::nullopt;
}

VisitDecomposition decomposition_at(const Trail& c, Vertex x) {
  return {x, visits_of_trail(c, x)};
}

// ---------------------------------------------------------------------------
// H(x) and matchings

VisitArcGraph::VisitArcGraph(std::vector<Visit> left, std::vector<Arc> right,
                             bool allow_unbalanced)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!allow_unbalanced && left_.size() != right_.size())
    throw GraphError("visit/arc bipartition sizes differ: " + std::to_string(left_.size()) +
                     " visits, " + std::to_string(right_.size()) + " arcs");
  if (!left_.empty()) {
    const Vertex x = left_.front().mid;
    for (const Visit& p : left_)
      if (p.mid != x) throw GraphError("visits at different mid-vertices");
    for (const Arc& a : right_)
      if (a.tail != x) throw GraphError("arc " + to_string(a) + " does not leave the mid-vertex");
  }
}

std::optional<std::size_t> VisitArcGraph::find_left(const Visit& v) const {
  for (std::size_t i = 0; i < left_.size(); ++i)
    if (left_[i].same_as(v)) return i;
  return std::nullopt;
}

std::optional<std::size_t> VisitArcGraph::find_right(const Arc& a) const {
  for (std::size_t j = 0; j < right_.size(); ++j)
    if (right_[j] == a) return j;
  return std::nullopt;
}

VisitArcGraph VisitArcGraph::without(std::span<const std::size_t> left_drop,
                                     std::span<const std::size_t> right_drop) const {
  std::vector<Visit> l;
  std::vector<Arc> r;
  for (std::size_t i = 0; i < left_.size(); ++i)
    if (std::find(left_drop.begin(), left_drop.end(), i) == left_drop.end()) l.push_back(left_[i]);
  for (std::size_t j = 0; j < right_.size(); ++j)
    if (std::find(right_drop.begin(), right_drop.end(), j) == right_drop.end())
      r.push_back(right_[j]);
  return VisitArcGraph(std::move(l), std::move(r), true);
}

std::vector<Arc> arcs_with_tail(const SimpleGraph& g, Vertex x) {
  std::vector<Arc> out;
  for (Vertex y : g.neighbors(x)) out.push_back({x, y});
  return out;
}

std::vector<Arc> arcs_with_tail(const Multigraph& m, Vertex x) {
  std::vector<Arc> out;
  for (Vertex y : m.neighbors(x)) out.push_back({x, y});
  return out;
}

VisitArcGraph build_H(const VisitDecomposition& j, std::span<const Arc> arcs,
                      bool allow_unbalanced) {
  for (const Arc& a : arcs)
    if (a.tail != j.mid) throw GraphError("arc " + to_string(a) + " does not leave the mid-vertex");
  return VisitArcGraph(j.visits, std::vector<Arc>(arcs.begin(), arcs.end()), allow_unbalanced);
}

Matching maximum_matching(const VisitArcGraph& h) {
  const std::size_t nl = h.left().size();
  const std::size_t nr = h.right().size();
  std::vector<int> owner(nr, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < nr; ++j)
      if (!seen[j] && owner[j] < 0 && h.adjacent(i, j)) {
        seen[j] = 1;
        owner[j] = static_cast<int>(i);
        return true;
      }
    for (std::size_t j = 0; j < nr; ++j) {
      if (seen[j] || !h.adjacent(i, j)) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]))) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < nl; ++i) {
    seen.assign(nr, 0);
    augment(i);
  }
  Matching m;
  m.arc_of.assign(nl, -1);
  for (std::size_t j = 0; j < nr; ++j)
    if (owner[j] >= 0) m.arc_of[owner[j]] = static_cast<int>(j);
  for (std::size_t i = 0; i < nl; ++i)
    if (m.arc_of[i] >= 0) m.pairs.emplace_back(h.left()[i], h.right()[m.arc_of[i]]);
  return m;
}

std::optional<Matching> perfect_matching(const VisitArcGraph& h) {
  if (!h.balanced()) return std::nullopt;
  Matching m = maximum_matching(h);
  if (m.size() != h.left().size()) return std::nullopt;
  return m;
}

std::optional<Matching> perfect_matching_with(
    const VisitArcGraph& h, std::span<const std::pair<std::size_t, std::size_t>> forced) {
  if (!h.balanced()) return std::nullopt;
  std::vector<std::size_t> ldrop, rdrop;
  for (auto [i, j] : forced) {
    if (i >= h.left().size() || j >= h.right().size() || !h.adjacent(i, j)) return std::nullopt;
    if (std::find(ldrop.begin(), ldrop.end(), i) != ldrop.end() ||
        std::find(rdrop.begin(), rdrop.end(), j) != rdrop.end())
      return std::nullopt;
    ldrop.push_back(i);
    rdrop.push_back(j);
  }
  const VisitArcGraph rest = h.without(ldrop, rdrop);
  const auto sub = perfect_matching(rest);
  if (!sub) return std::nullopt;

  std::vector<std::size_t> lmap, rmap;
  for (std::size_t i = 0; i < h.left().size(); ++i)
    if (std::find(ldrop.begin(), ldrop.end(), i) == ldrop.end()) lmap.push_back(i);
  for (std::size_t j = 0; j < h.right().size(); ++j)
    if (std::find(rdrop.begin(), rdrop.end(), j) == rdrop.end()) rmap.push_back(j);

  Matching m;
  m.arc_of.assign(h.left().size(), -1);
  for (auto [i, j] : forced) m.arc_of[i] = static_cast<int>(j);
  for (std::size_t k = 0; k < lmap.size(); ++k)
    m.arc_of[lmap[k]] = static_cast<int>(rmap[sub->arc_of[k]]);
  for (std::size_t i = 0; i < h.left().size(); ++i)
    m.pairs.emplace_back(h.left()[i], h.right()[m.arc_of[i]]);
  return m;
}

// ---------------------------------------------------------------------------
// Eulerian trails

Trail euler_trail(const Multigraph& m, Vertex start, std::span<const char> usable,
                  std::mt19937_64* rng) {
  const std::size_t n = m.vertex_count();
  const std::size_t edge_total = m.edge_count();
  if (!usable.empty() && usable.size() != edge_total)
    throw GraphError("usable-edge mask has the wrong size");
  if (start < 0 || static_cast<std::size_t>(start) >= n)
    throw GraphError("euler trail start out of range");
  auto enabled = [&](EdgeId e) { return usable.empty() || usable[e] != 0; };

  std::vector<std::vector<EdgeId>> order(n);
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (EdgeId e : m.incident_edges(static_cast<Vertex>(v)))
      if (enabled(e)) order[v].push_back(e);
  for (std::size_t e = 0; e < edge_total; ++e)
    if (enabled(static_cast<EdgeId>(e))) ++count;

  Trail t;
  t.vertices.push_back(start);
  if (count == 0) {
    t.closed = true;
    return t;
  }
  std::vector<Vertex> odd;
  for (std::size_t v = 0; v < n; ++v)
    if (order[v].size() % 2 == 1) odd.push_back(static_cast<Vertex>(v));
  if (odd.empty()) {
    if (order[start].empty())
      throw GraphError("euler trail start " + std::to_string(start) + " has no usable edge");
  } else if (odd.size() != 2 || (odd[0] != start && odd[1] != start)) {
    throw GraphError("no Eulerian trail from " + std::to_string(start) + ": " +
                     std::to_string(odd.size()) + " odd-degree vertices");
  }
  if (rng != nullptr)
    for (auto& list : order) std::shuffle(list.begin(), list.end(), *rng);

  std::vector<std::size_t> next(n, 0);
  std::vector<char> used(edge_total, 0);
  std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
  std::vector<std::pair<Vertex, EdgeId>> out;
  while (!stack.empty()) {
    const Vertex v = stack.back().first;
    auto& k = next[v];
    while (k < order[v].size() && used[order[v][k]]) ++k;
    if (k == order[v].size()) {
      out.push_back(stack.back());
      stack.pop_back();
    } else {
      const EdgeId e = order[v][k++];
      used[e] = 1;
      stack.emplace_back(m.other_end(e, v), e);
    }
  }
  std::reverse(out.begin(), out.end());
  t.vertices.clear();
  for (std::size_t i = 0; i < out.size(); ++i) {
    t.vertices.push_back(out[i].first);
    if (i > 0) t.edges.push_back(out[i].second);
  }
  if (t.edges.size() != count)
    throw GraphError("usable edges are not connected: trail covers " +
                     std::to_string(t.edges.size()) + " of " + std::to_string(count));
  t.closed = odd.empty();
  return t;
}

Trail euler_tour(const Multigraph& m, Vertex start) {
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.degree(static_cast<Vertex>(v)) % 2 == 1)
      throw GraphError("vertex " + std::to_string(v) + " has odd degree");
  return euler_trail(m, start);
}

Trail random_euler_tour(const Multigraph& m, Vertex start, std::mt19937_64& rng) {
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.degree(static_cast<Vertex>(v)) % 2 == 1)
      throw GraphError("vertex " + std::to_string(v) + " has odd degree");
  return euler_trail(m, start, {}, &rng);
}

Trail euler_tour_through(const Multigraph& m, const Visit& anchor) {
  if (anchor.entry_edge == anchor.exit_edge) throw GraphError("anchor visit repeats an edge");
  if (m.other_end(anchor.entry_edge, anchor.mid) != anchor.entry ||
      m.other_end(anchor.exit_edge, anchor.mid) != anchor.exit)
    throw GraphError("anchor visit " + to_string(anchor) + " does not match the multigraph");
  std::vector<char> usable(m.edge_count(), 1);
  usable[anchor.entry_edge] = 0;
  usable[anchor.exit_edge] = 0;
  const Trail rest = euler_trail(m, anchor.exit, usable);
  if (rest.back() != anchor.entry)
    throw GraphError("anchor visit cannot be extended to an Eulerian tour");
  Trail t;
  t.closed = true;
  t.vertices = {anchor.entry, anchor.mid};
  t.edges = {anchor.entry_edge, anchor.exit_edge};
  t.vertices.insert(t.vertices.end(), rest.vertices.begin(), rest.vertices.end());
  t.edges.insert(t.edges.end(), rest.edges.begin(), rest.edges.end());
  return t;
}

Trail euler_tour_s2_compatible(const Multigraph& m, std::span<const Vertex> s2) {
  std::vector<char> in_s2(m.vertex_count(), 0);
  for (Vertex v : s2) in_s2[v] = 1;
  std::vector<char> usable(m.edge_count(), 1);
  for (Vertex v : s2)
    for (EdgeId e : m.incident_edges(v)) usable[e] = 0;

  Vertex start = -1;
  for (std::size_t v = 0; v < m.vertex_count() && start < 0; ++v) {
    if (in_s2[v]) continue;
    for (EdgeId e : m.incident_edges(static_cast<Vertex>(v)))
      if (usable[e]) {
        start = static_cast<Vertex>(v);
        break;
      }
  }
  if (start < 0) throw GraphError("no edges outside the degree-two vertices");
  Trail tour = euler_trail(m, start, usable);
  if (!tour.closed) throw GraphError("multigraph without degree-two vertices is not Eulerian");

  std::vector<Vertex> sorted(s2.begin(), s2.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    const auto nbrs = m.neighbors(v);
    if (nbrs.size() != 2 || m.degree(v) != 4)
      throw GraphError("vertex " + std::to_string(v) + " is not a doubled degree-two vertex");
    for (Vertex u : nbrs) {
      if (in_s2[u]) throw GraphError("adjacent degree-two vertices " + std::to_string(v) + ", " +
                                     std::to_string(u));
      const auto parallel = m.edges_between(v, u);
      auto it = std::find(tour.vertices.begin(), tour.vertices.end(), u);
      if (it == tour.vertices.end())
        throw GraphError("neighbor " + std::to_string(u) + " is not on the tour");
      const auto k = static_cast<std::size_t>(it - tour.vertices.begin());
      tour.vertices.insert(tour.vertices.begin() + static_cast<std::ptrdiff_t>(k) + 1, {v, u});
      tour.edges.insert(tour.edges.begin() + static_cast<std::ptrdiff_t>(k),
                        {parallel[0], parallel[1]});
    }
  }
  return tour;
}

// ---------------------------------------------------------------------------
// Bow-tie and concatenation

Trail bow_tie(const Trail& c, const Visit& p, const Visit& q) {
  if (c.length() < 4) throw GraphError("bow-tie needs a trail of length at least four");
  if (p.same_as(q)) throw GraphError("bow-tie needs two distinct visits");
  if (p.mid != q.mid) throw GraphError("bow-tie visits have different mid-vertices");
  auto ip = locate_visit(c, p);
  auto iq = locate_visit(c, q);
  if (!ip) throw GraphError("visit " + to_string(p) + " is not induced by the trail");
  if (!iq) throw GraphError("visit " + to_string(q) + " is not induced by the trail");
  Trail t = c;
  std::size_t i = *ip, j = *iq;
  if (t.closed && (i == 0 || j == 0)) {
    const std::size_t len = t.length();
    t = rotated(t, 1);
    i = (i + len - 1) % len;
    j = (j + len - 1) % len;
  }
  if (i > j) std::swap(i, j);
  std::reverse(t.vertices.begin() + static_cast<std::ptrdiff_t>(i),
               t.vertices.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  std::reverse(t.edges.begin() + static_cast<std::ptrdiff_t>(i),
               t.edges.begin() + static_cast<std::ptrdiff_t>(j));
  return t;
}

namespace {

// Closed trail rotated so the visit at `position` sits at position 1.
Trail with_visit_first(const Trail& c, std::size_t position) {
  const std::size_t len = c.length();
  return rotated(c, (position + len - 1) % len);
}

}  // namespace

Trail concatenate(const Trail& c1, const Trail& c2, const Visit& p, const Visit& q) {
  if (!c1.closed || !c2.closed) throw GraphError("concatenation needs closed trails");
  if (p.mid != q.mid) throw GraphError("concatenation visits have different mid-vertices");
  std::set<EdgeId> first(c1.edges.begin(), c1.edges.end());
  for (EdgeId e : c2.edges)
    if (first.count(e)) throw GraphError("concatenated trails share edge " + std::to_string(e));
  auto ip = locate_visit(c1, p);
  auto iq = locate_visit(c2, q);
  if (!ip) throw GraphError("visit " + to_string(p) + " is not induced by the first trail");
  if (!iq) throw GraphError("visit " + to_string(q) + " is not induced by the second trail");

  // a: x1 e1 x e2 P ;  b: x3 e3 x e4 Q
  const Trail a = with_visit_first(c1, *ip);
  const Trail b = with_visit_first(c2, *iq);
  const std::size_t la = a.length(), lb = b.length();

  Trail out;
  out.closed = true;
  // x1 e1 x e3^-1 x3 Q^-1 x4 e4^-1 x e2 P
  out.vertices = {a.vertices[0], a.vertices[1]};
  out.edges = {a.edges[0], b.edges[0]};
  for (std::size_t k = lb; k >= 2; --k) {
    out.vertices.push_back(b.vertices[k]);
    if (k > 2) out.edges.push_back(b.edges[k - 1]);
  }
  out.edges.push_back(b.edges[1]);
  out.vertices.push_back(b.vertices[1]);
  out.edges.push_back(a.edges[1]);
  for (std::size_t k = 2; k <= la; ++k) {
    out.vertices.push_back(a.vertices[k]);
    if (k < la) out.edges.push_back(a.edges[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Twin-visit repair

namespace {

bool matched_at(const Trail& c, const Multigraph& m, Vertex x) {
  VisitArcGraph h(visits_of_trail(c, x), arcs_with_tail(m, x), true);
  return perfect_matching(h).has_value();
}

std::string dump_vertex(const Trail& c, const Multigraph& m, Vertex w) {
  std::ostringstream out;
  out << "vertex " << w << " (d*=" << m.degree(w) << "; multiplicities";
  for (Vertex y : m.neighbors(w)) out << ' ' << y << 'x' << m.multiplicity(w, y);
  out << "); visits";
  for (const Visit& p : visits_of_trail(c, w)) out << ' ' << to_string(p);
  return out.str();
}

struct TwinSplit {
  std::size_t first, second, other;
};

std::optional<TwinSplit> find_twins(const std::vector<Visit>& vs) {
  if (vs.size() != 3) return std::nullopt;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (are_twins(vs[i], vs[j])) return TwinSplit{i, j, 3 - i - j};
  return std::nullopt;
}

// 1/2/3 multiplicity pattern with the twins traversed in opposite
// directions: split the tour at w into two closed trails and concatenate
// them through the third visit.
Trail split_and_concatenate(Trail cur, Vertex w, Vertex w1, Vertex w2) {
  auto vs = visits_of_trail(cur, w);
  auto twins = find_twins(vs);
  Visit r = vs[twins->other];
  if (r.entry == w2) {
    cur = reversed(cur);
    vs = visits_of_trail(cur, w);
    twins = find_twins(vs);
    r = vs[twins->other];
  }
  const Visit& a = vs[twins->first];
  const Visit& b = vs[twins->second];
  const Visit p = a.entry == w1 ? a : b;  // (w1, w, w2)
  const Visit q = a.entry == w1 ? b : a;  // (w2, w, w1)

  cur = with_visit_first(cur, *locate_visit(cur, p));
  const std::size_t jq = *locate_visit(cur, q);
  const std::size_t len = cur.length();
  const auto& v = cur.vertices;
  const auto& e = cur.edges;

  // c1: w1 e1 w e3^-1 w1 ... w1 ;  c2: w2 e4^-1 w e2 w2 ... w2
  Trail c1, c2;
  c1.closed = c2.closed = true;
  c1.vertices = {v[0], v[1]};
  c1.edges = {e[0]};
  for (std::size_t k = jq + 1; k <= len; ++k) c1.vertices.push_back(v[k]);
  for (std::size_t k = jq; k < len; ++k) c1.edges.push_back(e[k]);
  c2.vertices = {v[jq - 1], v[jq]};
  c2.edges = {e[jq - 1]};
  for (std::size_t k = 2; k + 1 <= jq; ++k) c2.vertices.push_back(v[k]);
  for (std::size_t k = 1; k + 2 <= jq; ++k) c2.edges.push_back(e[k]);

  if (auto pos = locate_visit(c2, r)) {
    const Trail c2r = with_visit_first(c2, *pos);
    return concatenate(c1, c2r, visit_at(c1, 1), visit_at(c2r, 1));
  }
  const auto pos = locate_visit(c1, r);
  const Trail c1r = with_visit_first(c1, *pos);
  return concatenate(c2, c1r, visit_at(c2, 1), visit_at(c1r, 1));
}

Trail repair_at(const Trail& cur, const Multigraph& m, Vertex w,
                const std::optional<Visit>& keep, RepairStats* stats) {
  auto acceptable = [&](const Trail& t) {
    return matched_at(t, m, w) && (!keep || locate_visit(t, *keep).has_value());
  };
  const auto vs = visits_of_trail(cur, w);
  const auto nbrs = m.neighbors(w);
  if (m.degree(w) != 6 || nbrs.size() != 3)
    throw RepairError("unhandled multiplicity pattern at " + dump_vertex(cur, m, w));
  std::vector<std::size_t> mult;
  for (Vertex y : nbrs) mult.push_back(m.multiplicity(w, y));

  const auto twins = find_twins(vs);
  if (!twins)
    throw RepairError("no twin visits although H has no perfect matching at " +
                      dump_vertex(cur, m, w));

  auto any_pair = [&]() -> std::optional<Trail> {
    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
      Trail t = bow_tie(cur, vs[i], vs[j]);
      if (acceptable(t)) return t;
    }
    return std::nullopt;
  };

  if (std::all_of(mult.begin(), mult.end(), [](std::size_t k) { return k == 2; })) {
    for (std::size_t twin : {twins->first, twins->second}) {
      Trail t = bow_tie(cur, vs[twin], vs[twins->other]);
      if (acceptable(t)) {
        if (stats) ++stats->doubled_bow_ties;
        return t;
      }
    }
    if (auto t = any_pair()) {
      if (stats) ++stats->doubled_bow_ties;
      return *t;
    }
    throw RepairError("bow-tie failed at " + dump_vertex(cur, m, w));
  }

  std::vector<std::size_t> sorted = mult;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<std::size_t>{1, 2, 3})
    throw RepairError("unhandled multiplicity pattern at " + dump_vertex(cur, m, w));
  Vertex w1 = -1, w2 = -1;
  for (std::size_t i = 0; i < 3; ++i) {
    if (mult[i] == 2) w1 = nbrs[i];
    if (mult[i] == 3) w2 = nbrs[i];
  }
  const Visit& a = vs[twins->first];
  const Visit& b = vs[twins->second];
  if (!a.has_ends(w1, w2))
    throw RepairError("twin visits do not join the doubled and tripled neighbors at " +
                      dump_vertex(cur, m, w));

  if (a.entry == b.entry) {
    Trail t = bow_tie(cur, a, b);
    if (acceptable(t)) {
      if (stats) ++stats->same_orientation_bow_ties;
      return t;
    }
  } else {
    Trail t = split_and_concatenate(cur, w, w1, w2);
    if (acceptable(t)) {
      if (stats) ++stats->split_concatenations;
      return t;
    }
  }
  if (auto t = any_pair()) {
    if (stats) ++stats->same_orientation_bow_ties;
    return *t;
  }
  throw RepairError("no rewrite preserves the protected visit at " + dump_vertex(cur, m, w));
}

Trail repair_closed(Trail cur, const Multigraph& m, const std::vector<Vertex>& excluded,
                    const std::optional<Visit>& keep, RepairStats* stats) {
  auto z = unmatched_vertices(cur, m, excluded);
  std::size_t rounds = 0;
  while (!z.empty()) {
    if (++rounds > m.vertex_count())
      throw RepairError("repair exceeded " + std::to_string(m.vertex_count()) + " rounds");
    const Vertex w = z.front();
    Trail next = repair_at(cur, m, w, keep, stats);
    check_trail(m, next);
    auto nz = unmatched_vertices(next, m, excluded);
    if (nz.size() >= z.size())
      throw RepairError("|Z| did not decrease after rewriting " + dump_vertex(next, m, w) +
                        "\ntrail: " + format_trail(next));
    cur = std::move(next);
    z = std::move(nz);
  }
  return cur;
}

}  // namespace

std::vector<Vertex> unmatched_vertices(const Trail& c, const Multigraph& m,
                                       std::span<const Vertex> excluded) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const auto x = static_cast<Vertex>(v);
    if (m.degree(x) == 0) continue;
    if (std::find(excluded.begin(), excluded.end(), x) != excluded.end()) continue;
    if (!c.closed && (c.front() == x || c.back() == x)) continue;
    if (!matched_at(c, m, x)) out.push_back(x);
  }
  return out;
}

Trail repair_twin_visits(const Trail& c, const Multigraph& m, const RepairOptions& options) {
  check_trail(m, c);
  if (options.protected_visit && !locate_visit(c, *options.protected_visit))
    throw RepairError("protected visit is not induced by the trail");
  if (c.closed) {
    Trail out = repair_closed(c, m, options.excluded, options.protected_visit, options.stats);
    return out;
  }

  // Close the trail with a virtual edge, repair, and reopen at that edge.
  if (c.front() == c.back()) throw RepairError("open trail with equal endpoints");
  Multigraph closed_graph = m;
  const EdgeId virtual_edge = closed_graph.add_edge(c.back(), c.front());
  Trail closed = c;
  closed.vertices.push_back(c.front());
  closed.edges.push_back(virtual_edge);
  closed.closed = true;
  std::vector<Vertex> excluded = options.excluded;
  excluded.push_back(c.front());
  excluded.push_back(c.back());
  Trail repaired =
      repair_closed(closed, closed_graph, excluded, options.protected_visit, options.stats);

  const auto k = static_cast<std::size_t>(
      std::find(repaired.edges.begin(), repaired.edges.end(), virtual_edge) -
      repaired.edges.begin());
  Trail open = rotated(repaired, k + 1);
  open.vertices.pop_back();
  open.edges.pop_back();
  open.closed = false;
  if (open.front() != c.front()) open = reversed(open);
  return open;
}

}  // namespace threearc
