#include "threearc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace threearc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string to_string(const Arc& a) {
  return std::to_string(a.tail) + ">" + std::to_string(a.head);
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

SimpleGraph SimpleGraph::from_edges(std::size_t vertex_count,
                                    std::span<const Edge> edges) {
  SimpleGraph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

SimpleGraph SimpleGraph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  SimpleGraph g;
  const auto n = adjacency.size();
  std::size_t endpoints = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw GraphError("parallel edge at vertex " + std::to_string(v));
    for (Vertex w : list) {
      if (w < 0 || static_cast<std::size_t>(w) >= n)
        throw GraphError("neighbor index out of range at vertex " + std::to_string(v));
      if (static_cast<std::size_t>(w) == v)
        throw GraphError("loop at vertex " + std::to_string(v));
    }
    endpoints += list.size();
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : adjacency[v]) {
      if (!std::binary_search(adjacency[w].begin(), adjacency[w].end(),
                              static_cast<Vertex>(v)))
        throw GraphError("asymmetric adjacency between " + std::to_string(v) +
                         " and " + std::to_string(w));
    }
  }
  g.adjacency_ = std::move(adjacency);
  g.edge_count_ = endpoints / 2;
  return g;
}

void SimpleGraph::add_edge(Vertex a, Vertex b) {
  if (!contains(a) || !contains(b))
    throw GraphError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                     "} out of range");
  if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
  auto& la = adjacency_[a];
  auto it = std::lower_bound(la.begin(), la.end(), b);
  if (it != la.end() && *it == b)
    throw GraphError("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  la.insert(it, b);
  auto& lb = adjacency_[b];
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++edge_count_;
}

std::size_t SimpleGraph::min_degree() const {
  std::size_t best = adjacency_.empty() ? 0 : adjacency_[0].size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

bool SimpleGraph::adjacent(Vertex a, Vertex b) const {
  const auto& la = adjacency_[a];
  return std::binary_search(la.begin(), la.end(), b);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (static_cast<std::size_t>(v) > u) out.push_back({static_cast<Vertex>(u), v});
  return out;
}

std::vector<Arc> SimpleGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(2 * edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u]) out.push_back({static_cast<Vertex>(u), v});
  return out;
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph::Multigraph(std::size_t vertex_count) : incidence_(vertex_count) {}

Vertex Multigraph::add_vertex() {
  incidence_.emplace_back();
  return static_cast<Vertex>(incidence_.size() - 1);
}

EdgeId Multigraph::add_edge(Vertex a, Vertex b) {
  const auto n = static_cast<Vertex>(incidence_.size());
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw GraphError("multigraph edge endpoint out of range");
  if (a == b) throw GraphError("multigraph loop at vertex " + std::to_string(a));
  const auto id = static_cast<EdgeId>(ends_.size());
  ends_.emplace_back(a, b);
  incidence_[a].push_back(id);
  incidence_[b].push_back(id);
  return id;
}

Vertex Multigraph::other_end(EdgeId e, Vertex v) const {
  const auto [a, b] = ends_[e];
  if (a == v) return b;
  if (b == v) return a;
  throw GraphError("edge " + std::to_string(e) + " is not incident to vertex " +
                   std::to_string(v));
}

std::size_t Multigraph::multiplicity(Vertex a, Vertex b) const {
  return static_cast<std::size_t>(std::count_if(
      incidence_[a].begin(), incidence_[a].end(),
      [&](EdgeId e) { return other_end(e, a) == b; }));
}

std::vector<EdgeId> Multigraph::edges_between(Vertex a, Vertex b) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incidence_[a])
    if (other_end(e, a) == b) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId e : incidence_[v]) out.push_back(other_end(e, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Multigraph build_multigraph(const SimpleGraph& g, std::span<const int> multiplicity) {
  const auto edges = g.edges();
  if (multiplicity.size() != edges.size())
    throw GraphError("multiplicity vector does not match edge count");
  Multigraph m(g.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (multiplicity[i] <= 0)
      throw GraphError("non-positive multiplicity for edge {" + std::to_string(edges[i].u) +
                       "," + std::to_string(edges[i].v) + "}");
    for (int c = 0; c < multiplicity[i]; ++c) m.add_edge(edges[i].u, edges[i].v);
  }
  return m;
}

Multigraph build_multigraph(const SimpleGraph& g, const std::map<Edge, int>& multiplicity) {
  const auto edges = g.edges();
  std::vector<int> counts;
  counts.reserve(edges.size());
  for (const Edge& e : edges) {
    auto it = multiplicity.find(e);
    if (it == multiplicity.end())
      throw GraphError("no multiplicity given for edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "}");
    counts.push_back(it->second);
  }
  if (multiplicity.size() != edges.size())
    throw GraphError("multiplicity given for a non-edge");
  return build_multigraph(g, counts);
}

Multigraph build_multigraph(const SimpleGraph& g, int uniform_multiplicity) {
  std::vector<int> counts(g.edge_count(), uniform_multiplicity);
  return build_multigraph(g, counts);
}

// ---------------------------------------------------------------------------
// Trails

void check_trail(const Multigraph& m, const Trail& t) {
  if (t.vertices.size() != t.edges.size() + 1)
    throw GraphError("trail must alternate vertices and edges");
  for (Vertex v : t.vertices)
    if (v < 0 || static_cast<std::size_t>(v) >= m.vertex_count())
      throw GraphError("trail vertex out of range");
  std::vector<bool> seen(m.edge_count(), false);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const EdgeId e = t.edges[i];
    if (e < 0 || static_cast<std::size_t>(e) >= m.edge_count())
      throw GraphError("trail edge id out of range");
    if (seen[e]) throw GraphError("trail repeats edge " + std::to_string(e));
    seen[e] = true;
    const auto [a, b] = m.endpoints(e);
    const Vertex p = t.vertices[i], q = t.vertices[i + 1];
    if (!((a == p && b == q) || (a == q && b == p)))
      throw GraphError("edge " + std::to_string(e) + " does not join " + std::to_string(p) +
                       " and " + std::to_string(q));
  }
  if (t.closed && t.vertices.front() != t.vertices.back())
    throw GraphError("closed trail does not return to its start");
}

bool is_trail(const Multigraph& m, const Trail& t) {
  try {
    check_trail(m, t);
    return true;
  } catch (const GraphError&) {
    return false;
  }
}

bool covers_all_edges(const Multigraph& m, const Trail& t) {
  return is_trail(m, t) && t.edges.size() == m.edge_count();
}

Trail reversed(const Trail& t) {
  Trail r = t;
  std::reverse(r.vertices.begin(), r.vertices.end());
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

Trail rotated(const Trail& t, std::size_t start) {
  if (!t.closed) throw GraphError("only closed trails can be rotated");
  const std::size_t len = t.length();
  if (len == 0) return t;
  start %= len;
  Trail r;
  r.closed = true;
  r.vertices.reserve(len + 1);
  r.edges.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    r.vertices.push_back(t.vertices[(start + k) % len]);
    r.edges.push_back(t.edges[(start + k) % len]);
  }
  r.vertices.push_back(r.vertices.front());
  return r;
}

std::string format_trail(const Trail& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (i > 0) out << " (" << t.edges[i - 1] << ") ";
    out << t.vertices[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

std::vector<long long> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    const char* first = line.data() + i;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first)
      throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    out.push_back(value);
  }
  return out;
}

bool is_blank_or_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  long long expected = 0;
  long long seen = 0;
  std::size_t last_content = 0;
  SimpleGraph g;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (is_blank_or_comment(line)) {
      if (end == text.size()) break;
      continue;
    }
    const auto nums = parse_numbers(line, line_no);
    last_content = line_no;
    if (nums.size() != 2) throw ParseError(line_no, "expected two integers");
    if (!have_header) {
      if (nums[0] < 0 || nums[1] < 0) throw ParseError(line_no, "negative size in header");
      g = SimpleGraph(static_cast<std::size_t>(nums[0]));
      expected = nums[1];
      have_header = true;
    } else {
      if (seen == expected) throw ParseError(line_no, "more edges than declared");
      const long long n = static_cast<long long>(g.vertex_count());
      if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n)
        throw ParseError(line_no, "vertex index out of range");
      if (nums[0] == nums[1]) throw ParseError(line_no, "loop at vertex " + std::to_string(nums[0]));
      const auto a = static_cast<Vertex>(nums[0]);
      const auto b = static_cast<Vertex>(nums[1]);
      if (g.adjacent(a, b)) throw ParseError(line_no, "duplicate edge");
      g.add_edge(a, b);
      ++seen;
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header line 'n m'");
  if (seen != expected)
    throw ParseError(last_content, "declared " + std::to_string(expected) + " edges, found " +
                                  std::to_string(seen));
  return g;
}

std::string serialize_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SimpleGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

// ---------------------------------------------------------------------------
// Connectivity

std::vector<std::vector<Vertex>> components(const SimpleGraph& g,
                                            const std::vector<bool>& keep) {
  const auto n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (!keep[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (keep[w] && comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw GraphError("connectivity of the empty graph is undefined");
  return components(g, std::vector<bool>(g.vertex_count(), true)).size() == 1;
}

std::vector<Edge> bridges(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int tick = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    disc[s] = low[s] = tick++;
    stack.push_back({static_cast<Vertex>(s), -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;  // simple graph: one parent edge
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = tick++;
          stack.push_back({w, f.v, 0});
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& up = stack.back();
          low[up.v] = std::min(low[up.v], low[done.v]);
          if (low[done.v] > disc[up.v]) out.push_back(Edge::of(up.v, done.v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_edge_connected(const SimpleGraph& g) {
  return is_connected(g) && bridges(g).empty();
}

bool connected_without(const SimpleGraph& g, std::span<const Edge> removed) {
  const auto n = g.vertex_count();
  if (n == 0) return true;
  std::set<Edge> gone(removed.begin(), removed.end());
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w] || gone.count(Edge::of(v, w))) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n;
}

bool is_edge_cut_pair(const SimpleGraph& g, Edge e1, Edge e2) {
  e1 = Edge::of(e1.u, e1.v);
  e2 = Edge::of(e2.u, e2.v);
  if (e1 == e2) throw GraphError("edge cut pair needs two distinct edges");
  if (!g.adjacent(e1.u, e1.v) || !g.adjacent(e2.u, e2.v))
    throw GraphError("edge cut pair names a non-edge");
  const Edge both[] = {e1, e2};
  return !connected_without(g, both);
}

}  // namespace threearc
