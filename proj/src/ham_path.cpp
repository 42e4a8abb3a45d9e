#include "threearc/ham_path.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "threearc/verify.hpp"

namespace threearc {

std::vector<Edge> OddPath::even_edges() const {
  std::vector<Edge> out;
  for (std::size_t j = 0; j + 1 < vertices.size(); j += 2)
    out.push_back(Edge::of(vertices[j], vertices[j + 1]));
  return out;
}

std::vector<Edge> OddPath::odd_edges() const {
  std::vector<Edge> out;
  for (std::size_t j = 1; j + 1 < vertices.size(); j += 2)
    out.push_back(Edge::of(vertices[j], vertices[j + 1]));
  return out;
}

// ---------------------------------------------------------------------------
// Odd paths

namespace {

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex from) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

std::optional<OddPath> shortest_odd_path(const SimpleGraph& g, Vertex a, Vertex b) {
  if (!g.contains(a) || !g.contains(b)) throw GraphError("odd path endpoint out of range");
  if (a == b) throw GraphError("odd path needs distinct endpoints");
  const auto to_b = bfs_distances(g, b);
  if (to_b[a] < 0) return std::nullopt;

  std::vector<Vertex> path{a};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[a] = 1;
  std::size_t target = 0;
  std::function<bool(Vertex)> search = [&](Vertex cur) {
    const std::size_t used = path.size() - 1;
    if (used == target) return cur == b;
    if (cur == b) return false;
    const auto left = static_cast<int>(target - used);
    for (Vertex w : g.neighbors(cur)) {
      if (on_path[w] || to_b[w] < 0 || to_b[w] > left - 1) continue;
      if (w == b && left != 1) continue;
      on_path[w] = 1;
      path.push_back(w);
      if (search(w)) return true;
      path.pop_back();
      on_path[w] = 0;
    }
    return false;
  };
  for (target = 1; target < g.vertex_count(); target += 2)
    if (search(a)) return OddPath{path};
  return std::nullopt;
}

bool has_all_pairs_odd_paths(const SimpleGraph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!shortest_odd_path(g, a, b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Auxiliary multigraphs

namespace {

std::map<Edge, int> uniform(const SimpleGraph& g, int k) {
  std::map<Edge, int> out;
  for (const Edge& e : g.edges()) out[e] = k;
  return out;
}

std::ptrdiff_t index_on(const OddPath& p, Vertex x) {
  auto it = std::find(p.vertices.begin(), p.vertices.end(), x);
  return it == p.vertices.end() ? -1 : it - p.vertices.begin();
}

}  // namespace

SameTailMultigraph build_same_tail_multigraph(const SimpleGraph& g, Vertex x, Vertex y, Vertex v,
                                              const OddPath& p) {
  if (p.front() != y || p.back() != v) throw GraphError("odd path does not join y and v");
  if (p.length() % 2 == 0) throw GraphError("path length is even");
  auto mult = uniform(g, 2);
  const auto j = index_on(p, x);
  SameTailMultigraph out;
  out.path = p;
  Vertex a = y;
  if (j < 0) {
    for (const Edge& e : p.even_edges()) mult[e] = 3;
    for (const Edge& e : p.odd_edges()) mult[e] = 1;
    mult[Edge::of(x, y)] = 1;
    mult[Edge::of(x, v)] = 1;
  } else {
    if (j != 1)
      throw GraphError("x sits at position " + std::to_string(j) +
                       " of the odd path; only position 1 is admissible");
    out.x_on_path = true;
    for (const Edge& e : p.even_edges()) mult[e] = 3;
    for (const Edge& e : p.odd_edges()) mult[e] = 1;
    mult[Edge::of(x, y)] = 2;
    mult[Edge::of(x, v)] = 1;
    a = p.vertices[2];
  }
  out.multigraph = build_multigraph(g, mult);
  out.anchor = {a, x, v, out.multigraph.edges_between(a, x).front(),
                out.multigraph.edges_between(x, v).front()};
  return out;
}

PendantTrailGraph build_distinct_tail_multigraph(const SimpleGraph& g, Vertex x, Vertex u,
                                                 const OddPath& p) {
  if (p.front() != x || p.back() != u) throw GraphError("odd path does not join x and u");
  if (p.length() % 2 == 0) throw GraphError("path length is even");
  auto mult = uniform(g, 2);
  for (const Edge& e : p.even_edges()) mult[e] = 1;
  for (const Edge& e : p.odd_edges()) mult[e] = 3;
  PendantTrailGraph out;
  out.multigraph = build_multigraph(g, mult);
  out.x = x;
  out.u = u;
  out.t = out.multigraph.add_vertex();
  out.t_prime = out.multigraph.add_vertex();
  out.t_edge = out.multigraph.add_edge(out.t, x);
  out.t_prime_edge = out.multigraph.add_edge(u, out.t_prime);
  return out;
}

GuardNeighbors choose_guard_neighbors(const SimpleGraph& g, Vertex x, Vertex y, Vertex u,
                                      Vertex v, const OddPath& p) {
  const Vertex x1 = p.vertices[1];
  const Vertex xl = p.vertices[p.length() - 1];
  std::vector<Vertex> cx, cu;
  for (Vertex w : g.neighbors(x))
    if (w != y && w != x1) cx.push_back(w);
  for (Vertex w : g.neighbors(u))
    if (w != v && w != xl) cu.push_back(w);
  if (cx.empty() || cu.empty())
    throw HypothesisError("no guard neighbor available; minimum degree below three");
  const bool bounce_x = g.degree(x) == 3 && y == x1;
  const bool bounce_u = g.degree(u) == 3 && v == xl;
  const bool degenerate = bounce_x && bounce_u;
  for (std::size_t iu = 0; iu < cu.size(); ++iu)
    for (std::size_t ix = 0; ix < cx.size(); ++ix) {
      const Vertex xp = cx[ix], up = cu[iu];
      const Vertex z = bounce_x ? cx[1 - ix] : -1;
      const Vertex w = bounce_u ? cu[1 - iu] : -1;
      // The doubled edge of a bounce visit cannot also carry a guard edge.
      if (bounce_x && z == u && (up == x || w == x)) continue;
      if (bounce_u && w == x && xp == u) continue;
      if (degenerate && is_edge_cut_pair(g, Edge::of(x, z), Edge::of(u, w))) continue;
      return {xp, up};
    }
  throw HypothesisError("every choice of guard neighbors leaves a 2-edge cut or a shared bounce edge");
}

namespace {

Vertex third_neighbor(const SimpleGraph& g, Vertex x, Vertex a, Vertex b) {
  for (Vertex w : g.neighbors(x))
    if (w != a && w != b) return w;
  throw GraphError("vertex " + std::to_string(x) + " has no third neighbor");
}

void splice_bounce(Trail& w, const Multigraph& m, Vertex z, Vertex x) {
  const auto parallel = m.edges_between(z, x);
  if (parallel.size() != 2) throw GraphError("bounce visit needs a doubled edge");
  auto it = std::find(w.vertices.begin() + 1, w.vertices.end() - 1, z);
  if (it == w.vertices.end() - 1) throw GraphError("vertex " + std::to_string(z) + " is not on the trail");
  const auto k = it - w.vertices.begin();
  w.vertices.insert(w.vertices.begin() + k + 1, {x, z});
  w.edges.insert(w.edges.begin() + k, {parallel[0], parallel[1]});
}

}  // namespace

Trail open_euler_trail_with_anchors(const PendantTrailGraph& ptg, const SimpleGraph& g,
                                    Vertex y, Vertex v, const OddPath& p,
                                    const GuardNeighbors& guards) {
  const Multigraph& m = ptg.multigraph;
  const Vertex x = ptg.x, u = ptg.u;
  const Vertex xp = guards.x_prime, up = guards.u_prime;
  const Vertex x1 = p.vertices[1];
  const Vertex xl = p.vertices[p.length() - 1];
  const bool bx = g.degree(x) == 3 && y == x1;
  const bool bu = g.degree(u) == 3 && v == xl;

  std::vector<char> usable(m.edge_count(), 1);
  const EdgeId exp = m.edges_between(x, xp).front();
  const auto up_edges = m.edges_between(u, up);
  const EdgeId eup = up_edges.front() == exp ? up_edges.back() : up_edges.front();
  for (EdgeId e : {ptg.t_edge, ptg.t_prime_edge, exp, eup}) usable[e] = 0;
  Vertex z = -1, w = -1;
  if (bx) {
    z = third_neighbor(g, x, y, xp);
    for (EdgeId e : m.edges_between(x, z)) usable[e] = 0;
  }
  if (bu) {
    w = third_neighbor(g, u, v, up);
    for (EdgeId e : m.edges_between(u, w)) usable[e] = 0;
  }
  const Trail middle = euler_trail(m, xp, usable);
  if (middle.back() != up)
    throw GraphError("trail from x' ends at " + std::to_string(middle.back()) + ", not u'");

  Trail out;
  out.closed = false;
  out.vertices = {ptg.t, x};
  out.edges = {ptg.t_edge, exp};
  out.vertices.insert(out.vertices.end(), middle.vertices.begin(), middle.vertices.end());
  out.edges.insert(out.edges.end(), middle.edges.begin(), middle.edges.end());
  out.vertices.insert(out.vertices.end(), {u, ptg.t_prime});
  out.edges.insert(out.edges.end(), {eup, ptg.t_prime_edge});
  if (bx) splice_bounce(out, m, z, x);
  if (bu) splice_bounce(out, m, w, u);
  check_trail(m, out);
  return out;
}

KAndL build_K_and_L(const Trail& w, const SimpleGraph& g) {
  const std::size_t len = w.length();
  if (w.closed || len < 4 || w.vertices[1] != w.vertices[len - 1])
    throw GraphError("trail is not of the form t, x, ..., x, t'");
  const Vertex x = w.vertices[1];
  VisitArcGraph k(visits_of_trail(w, x), arcs_with_tail(g, x), true);
  const Vertex z2 = w.vertices[2], z1 = w.vertices[len - 2];
  std::vector<std::size_t> ldrop{0, k.left().size() - 1};
  std::vector<std::size_t> rdrop;
  for (Vertex z : {z1, z2})
    if (auto j = k.find_right({x, z}); j && std::find(rdrop.begin(), rdrop.end(), *j) == rdrop.end())
      rdrop.push_back(*j);
  VisitArcGraph l = k.without(ldrop, rdrop);
  return {std::move(k), std::move(l)};
}

// ---------------------------------------------------------------------------
// Same tail

namespace {

std::vector<Vertex> others(const SimpleGraph& g, Vertex x, std::initializer_list<Vertex> skip) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(x))
    if (std::find(skip.begin(), skip.end(), w) == skip.end()) out.push_back(w);
  return out;
}

std::vector<Visit> visits_with_ends(const Trail& c, Vertex x, Vertex a, Vertex b) {
  std::vector<Visit> out;
  for (const Visit& p : visits_of_trail(c, x))
    if (p.has_ends(a, b)) out.push_back(p);
  return out;
}

// c (or its reverse) in which s is induced with s.entry_edge entering.
Trail oriented_for(const Trail& c, const Visit& s) {
  const auto k = locate_visit(c, s);
  if (!k) throw GraphError("visit " + to_string(s) + " is not induced by the tour");
  if (visit_at(c, *k).entry_edge == s.entry_edge) return c;
  return reversed(c);
}

Visit as_induced(const Trail& c, const Visit& s) { return visit_at(c, *locate_visit(c, s)); }

// W = t, x, z2, ..., z1, x, t' for the split visit s = (z1, x, z2) of c.
Trail split_trail(const Trail& c, const Visit& s, Vertex t, Vertex t_prime, EdgeId first_id) {
  const auto k = locate_visit(c, s);
  const Visit here = visit_at(c, *k);
  if (here.entry_edge != s.entry_edge) throw GraphError("split visit has the wrong orientation");
  const Trail r = rotated(c, *k);
  Trail w;
  w.closed = false;
  w.vertices.push_back(t);
  w.vertices.insert(w.vertices.end(), r.vertices.begin(), r.vertices.end());
  w.vertices.push_back(t_prime);
  w.edges.push_back(first_id);
  w.edges.insert(w.edges.end(), r.edges.begin(), r.edges.end());
  w.edges.push_back(first_id + 1);
  return w;
}

class SameTailBuilder {
 public:
  SameTailBuilder(const SimpleGraph& g, Vertex x, Vertex y, Vertex v, const Multigraph& m)
      : g_(g), x_(x), y_(y), v_(v), t_(static_cast<Vertex>(m.vertex_count())),
        first_id_(static_cast<EdgeId>(m.edge_count())) {}

  Trail w_for(const Trail& c, const Visit& s) const { return split_trail(c, s, t_, t_ + 1, first_id_); }

  // K has a perfect matching sending the first visit to xy, the last to xv.
  bool admissible(const Trail& c, const Visit& s) const {
    const Trail w = w_for(c, s);
    const auto kl = build_K_and_L(w, g_);
    if (!kl.k.balanced()) return false;
    const auto jy = kl.k.find_right({x_, y_});
    const auto jv = kl.k.find_right({x_, v_});
    const std::pair<std::size_t, std::size_t> pins[] = {{0, *jy}, {kl.k.left().size() - 1, *jv}};
    return perfect_matching_with(kl.k, pins).has_value();
  }

  ForcedPairs forced(const Trail& w) const {
    ForcedPairs f;
    f[x_] = {{visit_at(w, 1), Arc{x_, y_}}, {visit_at(w, w.length() - 1), Arc{x_, v_}}};
    return f;
  }

  // Every visit at x in both orientations, then bow-tie rewrites at x.
  std::optional<std::pair<Trail, Visit>> search(const Trail& start) const {
    std::deque<Trail> queue{start};
    std::set<std::vector<std::pair<EdgeId, EdgeId>>> seen;
    auto signature = [&](const Trail& c) {
      std::vector<std::pair<EdgeId, EdgeId>> sig;
      for (const Visit& p : visits_of_trail(c, x_))
        sig.emplace_back(std::min(p.entry_edge, p.exit_edge), std::max(p.entry_edge, p.exit_edge));
      std::sort(sig.begin(), sig.end());
      return sig;
    };
    seen.insert(signature(start));
    constexpr std::size_t kStateLimit = 20000;
    while (!queue.empty()) {
      const Trail c = std::move(queue.front());
      queue.pop_front();
      const auto vs = visits_of_trail(c, x_);
      for (const Visit& p : vs)
        for (const Visit& s : {p, p.reversed()}) {
          const Trail oc = oriented_for(c, s);
          if (admissible(oc, s)) return std::pair{oc, s};
        }
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          Trail next = bow_tie(c, vs[i], vs[j]);
          if (seen.size() < kStateLimit && seen.insert(signature(next)).second)
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
  }

 private:
  const SimpleGraph& g_;
  Vertex x_, y_, v_;
  Vertex t_;
  EdgeId first_id_;
};

struct SplitChoice {
  Trail tour;
  Visit split;
  std::string route;
};

std::string dump_visits(const Trail& c, Vertex x) {
  std::ostringstream out;
  for (const Visit& p : visits_of_trail(c, x)) out << ' ' << to_string(p);
  return out.str();
}

// Case analysis choosing the tour and split visit at x. Returns nullopt
// when the visit pattern at x is outside the enumerated cases.
std::optional<SplitChoice> dispatch_same_tail(const SimpleGraph& g, const SameTailBuilder& b,
                                              const Trail& c, const SameTailMultigraph& st,
                                              Vertex x, Vertex y, Vertex v, std::string& why) {
  const std::size_t d = g.degree(x);
  const Visit anchor = st.anchor;
  const bool anchored = locate_visit(c, anchor).has_value();
  auto anchor_split = [&]() -> std::optional<SplitChoice> {
    if (!anchored) return std::nullopt;
    const Trail oc = oriented_for(c, anchor);
    return SplitChoice{oc, as_induced(oc, anchor), ""};
  };
  auto named = [](std::optional<SplitChoice> s, const char* route) {
    if (s) s->route = route;
    return s;
  };

  if (!st.x_on_path) {
    if (d == 3) {
      const Vertex z1 = others(g, x, {y, v}).front();
      const auto loops = visits_with_ends(c, x, z1, z1);
      if (loops.size() == 1) return SplitChoice{c, loops.front(), "case1/d3"};
      why = "no (z1,x,z1) visit";
      return std::nullopt;
    }
    if (d == 4) {
      const auto z = others(g, x, {y, v});
      if (!visits_with_ends(c, x, z[0], z[0]).empty())
        return named(anchor_split(), "case1/d4/loops");
      const auto twins = visits_with_ends(c, x, z[0], z[1]);
      if (twins.size() == 2 && anchored) {
        const Trail next = bow_tie(c, twins[0], as_induced(c, anchor));
        return SplitChoice{next, as_induced(next, twins[1]), "case1/d4/twins"};
      }
      why = "d(x)=4 without loops or twins";
      return std::nullopt;
    }
    if (auto s = anchor_split(); s && b.admissible(s->tour, s->split))
      return named(s, "case1/d>=5");
    if (d == 5) {
      const auto z = others(g, x, {y, v});
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
          const auto twins = visits_with_ends(c, x, z[i], z[j]);
          if (twins.size() == 2) return SplitChoice{c, as_induced(c, twins[0]), "case1/d5/twins"};
        }
    }
    why = "L(y,x,v) has no perfect matching and d(x)=5 twin pattern absent";
    return std::nullopt;
  }

  const Vertex x2 = st.path.vertices[2];
  if (d == 3) return named(anchor_split(), "case2/d3");
  if (d == 4) {
    const Vertex z1 = others(g, x, {y, v, x2}).front();
    const auto twins = visits_with_ends(c, x, z1, y);
    if (twins.size() == 2) {
      // Split on the twin traversed y -> x -> z1.
      for (const Visit& p : twins) {
        const Visit s = p.entry == y ? p : p.reversed();
        const Trail oc = oriented_for(c, s);
        if (as_induced(oc, s).entry == y) return SplitChoice{oc, as_induced(oc, s), "case2/d4/twins"};
      }
    }
    const auto loops = visits_with_ends(c, x, z1, z1);
    if (loops.size() == 1) return SplitChoice{c, loops.front(), "case2/d4/loops"};
    why = "d(x)=4 without twins or loops";
    return std::nullopt;
  }
  if (auto s = anchor_split(); s && b.admissible(s->tour, s->split))
    return named(s, "case2/d>=5");
  if (d == 5) {
    const auto z = others(g, x, {v, x2});  // y, z1, z2
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const auto twins = visits_with_ends(c, x, z[i], z[j]);
        if (twins.size() != 2) continue;
        const Visit p = twins[0];
        const Trail oc = p.exit == y ? reversed(c) : c;
        return SplitChoice{oc, as_induced(oc, p), "case2/d5/twins"};
      }
  }
  why = "L(x2,x,v) has no perfect matching and d(x)=5 twin pattern absent";
  return std::nullopt;
}

CertifiedPath same_tail_path(const SimpleGraph& g, Vertex x, Vertex y, Vertex v) {
  auto p = shortest_odd_path(g, y, v);
  if (!p) throw HypothesisError("no odd path between " + std::to_string(y) + " and " + std::to_string(v));
  bool swapped = false;
  const auto j = index_on(*p, x);
  if (j >= 2 && static_cast<std::size_t>(j) == p->length() - 1) {
    std::swap(y, v);
    std::reverse(p->vertices.begin(), p->vertices.end());
    swapped = true;
  }
  const SameTailMultigraph st = build_same_tail_multigraph(g, x, y, v, *p);
  const Multigraph& m = st.multigraph;

  CertifiedPath out;
  out.route = "same-tail ";
  Trail c;
  bool anchored = true;
  try {
    c = euler_tour_through(m, st.anchor);
  } catch (const GraphError&) {
    // {xa, xv} separates G: no tour passes through the anchor.
    anchored = false;
    c = euler_tour(m, x);
  }
  RepairOptions options;
  options.excluded = {x};
  if (anchored) options.protected_visit = st.anchor;
  c = repair_twin_visits(c, m, options);

  const SameTailBuilder builder(g, x, y, v, m);
  std::string why = anchored ? "" : "no Eulerian tour through the anchor visit";
  std::optional<SplitChoice> choice;
  if (anchored) choice = dispatch_same_tail(g, builder, c, st, x, y, v, why);
  if (choice && !builder.admissible(choice->tour, choice->split)) {
    why = "route " + choice->route + " yields no admissible matching; visits at x:" +
          dump_visits(choice->tour, x);
    choice.reset();
  }
  if (!choice) {
    auto found = builder.search(c);
    if (!found)
      throw InternalError("no split visit at " + std::to_string(x) + " (" + why + "); visits:" +
                          dump_visits(c, x));
    choice = SplitChoice{found->first, found->second, "search (" + why + ")"};
    out.fallback = true;
  }
  out.route += choice->route;

  const Trail w = builder.w_for(choice->tour, choice->split);
  out.arcs = phi_sequence(w, g, builder.forced(w));
  if (swapped) std::reverse(out.arcs.begin(), out.arcs.end());
  return out;
}

// ---------------------------------------------------------------------------
// Distinct tails

bool side_admissible(const Trail& w, const SimpleGraph& g, Vertex x, Vertex y) {
  const VisitArcGraph h(visits_of_trail(w, x), arcs_with_tail(g, x), true);
  const auto i = h.find_left(visit_at(w, 1));
  const auto j = h.find_right({x, y});
  const std::pair<std::size_t, std::size_t> pins[] = {{*i, *j}};
  return perfect_matching_with(h, pins).has_value();
}

// Rewrites w at its first interior vertex x until the first visit can be
// matched to xy. Only visits other than the first are touched.
Trail fix_first_side(const Trail& w, const SimpleGraph& g, Vertex x, Vertex y, Vertex x1,
                     Vertex xp, std::string& route, bool& fallback) {
  if (side_admissible(w, g, x, y)) return w;
  const std::size_t d = g.degree(x);
  std::optional<Trail> next;
  if (y != x1 && d == 3) {
    const auto a = visits_with_ends(w, x, xp, x1);
    const auto b = visits_with_ends(w, x, y, y);
    if (a.size() == 1 && b.size() == 1) {
      next = bow_tie(w, a[0], b[0]);
      route += " bow-tie(x',x,x1|y,x,y)";
    }
  } else if (y == x1 && d == 4) {
    const auto z = others(g, x, {xp, x1});
    const auto a = visits_with_ends(w, x, xp, x1);
    const auto b = visits_with_ends(w, x, z[0], z[1]);
    if (a.size() == 1 && !b.empty()) {
      next = bow_tie(w, a[0], b[0]);
      route += " bow-tie(x',x,x1|z1,x,z2)";
    }
  }
  if (next && side_admissible(*next, g, x, y)) return *next;

  // Bow-tie rewrites among the visits after the first one.
  fallback = true;
  route += " search";
  const Visit first = visit_at(w, 1);
  std::deque<Trail> queue{w};
  std::set<std::vector<std::pair<EdgeId, EdgeId>>> seen;
  constexpr std::size_t kStateLimit = 20000;
  while (!queue.empty()) {
    const Trail c = std::move(queue.front());
    queue.pop_front();
    if (side_admissible(c, g, x, y)) return c;
    std::vector<Visit> vs;
    for (const Visit& p : visits_of_trail(c, x))
      if (!p.same_as(first)) vs.push_back(p);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        Trail n = bow_tie(c, vs[i], vs[j]);
        std::vector<std::pair<EdgeId, EdgeId>> sig;
        for (const Visit& q : visits_of_trail(n, x)) sig.emplace_back(q.entry_edge, q.exit_edge);
        if (seen.size() < kStateLimit && seen.insert(sig).second) queue.push_back(std::move(n));
      }
  }
  throw InternalError("no admissible visit set at " + std::to_string(x) + "; visits:" +
                      dump_visits(w, x));
}

CertifiedPath distinct_tail_path(const SimpleGraph& g, Vertex x, Vertex y, Vertex u, Vertex v) {
  const auto p = shortest_odd_path(g, x, u);
  if (!p) throw HypothesisError("no odd path between " + std::to_string(x) + " and " + std::to_string(u));
  const PendantTrailGraph ptg = build_distinct_tail_multigraph(g, x, u, *p);
  const GuardNeighbors guards = choose_guard_neighbors(g, x, y, u, v, *p);
  Trail w = open_euler_trail_with_anchors(ptg, g, y, v, *p, guards);
  RepairOptions options;
  options.excluded = {x, u, ptg.t, ptg.t_prime};
  w = repair_twin_visits(w, ptg.multigraph, options);

  CertifiedPath out;
  out.route = "distinct-tail";
  const Vertex x1 = p->vertices[1];
  const Vertex xl = p->vertices[p->length() - 1];
  w = fix_first_side(w, g, x, y, x1, guards.x_prime, out.route, out.fallback);
  w = reversed(fix_first_side(reversed(w), g, u, v, xl, guards.u_prime, out.route, out.fallback));

  ForcedPairs forced;
  forced[x] = {{visit_at(w, 1), Arc{x, y}}};
  forced[u] = {{visit_at(w, w.length() - 1), Arc{u, v}}};
  out.arcs = phi_sequence(w, g, forced);
  return out;
}

}  // namespace

std::optional<std::string> path_hypothesis_failure(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return "graph is empty";
  if (g.min_degree() < 3) return "minimum degree is below three";
  if (!is_two_edge_connected(g)) return "graph is not 2-edge-connected";
  if (!has_all_pairs_odd_paths(g)) return "some pair of vertices has no odd-length path";
  return std::nullopt;
}

CertifiedPath hamilton_path_of_X(const SimpleGraph& g, const Arc& a1, const Arc& a2) {
  if (!g.is_arc(a1)) throw GraphError(to_string(a1) + " is not an arc of the graph");
  if (!g.is_arc(a2)) throw GraphError(to_string(a2) + " is not an arc of the graph");
  if (a1 == a2) throw GraphError("path endpoints must be distinct arcs");
  if (auto failure = path_hypothesis_failure(g)) throw HypothesisError(*failure);

  CertifiedPath out = a1.tail == a2.tail ? same_tail_path(g, a1.tail, a1.head, a2.head)
                                         : distinct_tail_path(g, a1.tail, a1.head, a2.tail, a2.head);
  out.endpoints = {a1, a2};
  if (auto err = validate_path(g, out.arcs, a1, a2))
    throw InternalError("Hamilton path failed validation (" + out.route + "): " + to_string(*err));
  out.verified = true;
  return out;
}

}  // namespace threearc
