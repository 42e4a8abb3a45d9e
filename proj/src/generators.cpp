#include "threearc/generators.hpp"

#include <algorithm>
#include <numeric>

namespace threearc {

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return g;
}

SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
  SimpleGraph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least three vertices");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return g;
}

SimpleGraph star_graph(std::size_t k) {
  SimpleGraph g(k + 1);
  for (std::size_t i = 1; i <= k; ++i) g.add_edge(0, static_cast<Vertex>(i));
  return g;
}

SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

SimpleGraph cube_graph() {
  SimpleGraph g(8);
  for (Vertex v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      const Vertex w = v ^ (1 << bit);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
  const auto shift = static_cast<Vertex>(g.vertex_count());
  SimpleGraph out(g.vertex_count() + h.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + shift, e.v + shift);
  for (Vertex a = 0; a < shift; ++a)
    for (std::size_t b = 0; b < h.vertex_count(); ++b) out.add_edge(a, shift + static_cast<Vertex>(b));
  return out;
}

SimpleGraph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return g;
}

SimpleGraph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  SimpleGraph g(n);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    g.add_edge(static_cast<Vertex>(parent(rng)), static_cast<Vertex>(v));
  }
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!g.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)) && coin(rng))
        g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return g;
}

SimpleGraph random_cubic_graph(std::size_t n, std::mt19937_64& rng) {
  if (n < 4 || n % 2 == 1) throw GraphError("cubic graphs need an even order of at least four");
  std::vector<Vertex> points;
  for (std::size_t v = 0; v < n; ++v)
    for (int k = 0; k < 3; ++k) points.push_back(static_cast<Vertex>(v));
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    SimpleGraph g(n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const Vertex a = points[i], b = points[i + 1];
      if (a == b || g.adjacent(a, b)) simple = false;
      else g.add_edge(a, b);
    }
    if (simple && is_connected(g)) return g;
  }
}

SimpleGraph random_graph_with_degree_two(std::size_t core_n, std::mt19937_64& rng) {
  for (;;) {
    SimpleGraph core = random_connected_graph(core_n, 0.45, rng);
    if (core.min_degree() < 3) continue;
    // Spanning tree by DFS; subdivide a random nonempty set of other edges.
    std::vector<bool> seen(core_n, false);
    std::vector<Vertex> stack{0};
    std::vector<Edge> tree;
    seen[0] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : core.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          tree.push_back(Edge::of(v, w));
          stack.push_back(w);
        }
    }
    std::vector<Edge> spare;
    for (const Edge& e : core.edges())
      if (std::find(tree.begin(), tree.end(), e) == tree.end()) spare.push_back(e);
    if (spare.empty()) continue;
    std::shuffle(spare.begin(), spare.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, spare.size());
    spare.resize(count(rng));
    std::sort(spare.begin(), spare.end());

    SimpleGraph g(core_n + spare.size());
    auto next = static_cast<Vertex>(core_n);
    for (const Edge& e : core.edges()) {
      if (std::binary_search(spare.begin(), spare.end(), e)) {
        g.add_edge(e.u, next);
        g.add_edge(next, e.v);
        ++next;
      } else {
        g.add_edge(e.u, e.v);
      }
    }
    return g;
  }
}

namespace {

std::uint64_t code_under(const SimpleGraph& g, const std::vector<Vertex>& perm) {
  const auto n = g.vertex_count();
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b, ++bit)
      if (g.adjacent(perm[a], perm[b])) code |= std::uint64_t{1} << bit;
  return code;
}

SimpleGraph from_code(std::size_t n, std::uint64_t code) {
  SimpleGraph g(n);
  std::size_t bit = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b, ++bit)
      if (code >> bit & 1) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return g;
}

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  if (n > 8) throw GraphError("canonical codes are limited to eight vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = code_under(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, code_under(g, perm));
  return best;
}

void for_each_graph(std::size_t n, bool up_to_isomorphism,
                    const std::function<void(const SimpleGraph&)>& visit) {
  if (n > 7) throw GraphError("graph enumeration is limited to seven vertices");
  if (up_to_isomorphism && n > 6) throw GraphError("isomorphism classes are enumerated up to six vertices");
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    SimpleGraph g = from_code(n, code);
    if (up_to_isomorphism && canonical_code(g) != code) continue;
    visit(g);
  }
}

}  // namespace threearc
