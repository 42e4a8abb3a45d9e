#include "threearc/verify.hpp"

#include <bit>
#include <cstdint>
#include <set>
#include <sstream>

namespace threearc {

std::string to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::WrongLength: return "wrong-length";
    case ValidationKind::RepeatedArc: return "repeated-arc";
    case ValidationKind::MissingArc: return "missing-arc";
    case ValidationKind::WrongEndpoint: return "wrong-endpoint";
    case ValidationKind::NonAdjacentPair: return "non-adjacent-pair";
  }
  return "unknown";
}

std::string to_string(const ValidationError& e) {
  std::ostringstream out;
  out << to_string(e.kind) << " at position " << e.position << ": " << e.detail;
  return out.str();
}

bool three_arc_adjacent(const SimpleGraph& g, const Arc& a, const Arc& b) {
  // (v, u, x, y) with a = uv and b = xy.
  const Vertex v = a.head, u = a.tail, x = b.tail, y = b.head;
  if (!g.is_arc(a) || !g.is_arc(b)) return false;
  const bool first_path = g.adjacent(v, u) && g.adjacent(u, x) && v != x;
  const bool second_path = g.adjacent(u, x) && g.adjacent(x, y) && u != y;
  return first_path && second_path;
}

namespace {

// Arcs and 3-arc adjacency read off the base graph.
struct BaseView {
  const SimpleGraph& g;
  std::size_t arc_count() const { return 2 * g.edge_count(); }
  bool is_arc(const Arc& a) const { return g.is_arc(a); }
  std::vector<Arc> arcs() const { return g.arcs(); }
  bool adjacent(const Arc& a, const Arc& b) const { return three_arc_adjacent(g, a, b); }
};

// Arcs and adjacency read off a constructed X(G) through its index.
struct ThreeArcView {
  const ThreeArcGraph& x;
  std::size_t arc_count() const { return x.index.size(); }
  bool is_arc(const Arc& a) const { return x.index.contains(a); }
  std::vector<Arc> arcs() const { return {x.index.arcs().begin(), x.index.arcs().end()}; }
  bool adjacent(const Arc& a, const Arc& b) const {
    return x.graph.adjacent(static_cast<Vertex>(x.index.index(a)),
                            static_cast<Vertex>(x.index.index(b)));
  }
};

template <class View>
std::optional<ValidationError> check_common(const View& g, std::span<const Arc> seq) {
  const std::size_t expected = g.arc_count();
  if (seq.size() != expected)
    return ValidationError{ValidationKind::WrongLength, seq.size(),
                           "expected " + std::to_string(expected) + " arcs, got " +
                               std::to_string(seq.size()),
                           {}};
  std::set<Arc> seen;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!seen.insert(seq[i]).second)
      return ValidationError{ValidationKind::RepeatedArc, i,
                             "arc " + to_string(seq[i]) + " appears twice", {seq[i]}};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (g.is_arc(seq[i])) continue;
    Arc absent{};
    for (const Arc& a : g.arcs())
      if (!seen.count(a)) {
        absent = a;
        break;
      }
    return ValidationError{ValidationKind::MissingArc, i,
                           to_string(seq[i]) + " is not an arc of the graph; " +
                               to_string(absent) + " is never visited",
                           {seq[i], absent}};
  }
  return std::nullopt;
}

template <class View>
std::optional<ValidationError> check_pair(const View& g, std::span<const Arc> seq,
                                          std::size_t i, std::size_t j) {
  if (g.adjacent(seq[i], seq[j])) return std::nullopt;
  return ValidationError{ValidationKind::NonAdjacentPair, i,
                         to_string(seq[i]) + " and " + to_string(seq[j]) +
                             " do not form a 3-arc",
                         {seq[i], seq[j]}};
}

template <class View>
std::optional<ValidationError> check_cycle(const View& g, std::span<const Arc> seq) {
  if (auto e = check_common(g, seq)) return e;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (auto e = check_pair(g, seq, i, (i + 1) % seq.size())) return e;
  return std::nullopt;
}

template <class View>
std::optional<ValidationError> check_path(const View& g, std::span<const Arc> seq,
                                          const Arc& first, const Arc& last) {
  if (auto e = check_common(g, seq)) return e;
  if (seq.front() != first)
    return ValidationError{ValidationKind::WrongEndpoint, 0,
                           "path starts at " + to_string(seq.front()) + ", expected " +
                               to_string(first),
                           {seq.front(), first}};
  if (seq.back() != last)
    return ValidationError{ValidationKind::WrongEndpoint, seq.size() - 1,
                           "path ends at " + to_string(seq.back()) + ", expected " +
                               to_string(last),
                           {seq.back(), last}};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (auto e = check_pair(g, seq, i, i + 1)) return e;
  return std::nullopt;
}

}  // namespace

std::optional<ValidationError> validate_cycle(const SimpleGraph& g, std::span<const Arc> seq) {
  return check_cycle(BaseView{g}, seq);
}

std::optional<ValidationError> validate_cycle(const ThreeArcGraph& x, std::span<const Arc> seq) {
  return check_cycle(ThreeArcView{x}, seq);
}

std::optional<ValidationError> validate_path(const SimpleGraph& g, std::span<const Arc> seq,
                                             const Arc& first, const Arc& last) {
  return check_path(BaseView{g}, seq, first, last);
}

std::optional<ValidationError> validate_path(const ThreeArcGraph& x, std::span<const Arc> seq,
                                             const Arc& first, const Arc& last) {
  return check_path(ThreeArcView{x}, seq, first, last);
}

namespace {

using Mask = std::uint64_t;

class Backtracker {
 public:
  Backtracker(const SimpleGraph& g, std::size_t cap) : n_(g.vertex_count()) {
    if (n_ > cap || n_ > 64)
      throw GraphError("brute-force search limited to " + std::to_string(std::min<std::size_t>(cap, 64)) +
                       " vertices, graph has " + std::to_string(n_));
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    adj_.assign(n_, 0);
    for (std::size_t v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj_[v] |= Mask{1} << w;
  }

  bool cycle() {
    if (n_ < 3) return false;
    target_ = 0;
    closing_ = true;
    return extend(0, Mask{1});
  }

  bool path(Vertex s, Vertex t) {
    if (s == t) return n_ == 1;
    target_ = t;
    closing_ = false;
    return extend(s, Mask{1} << s);
  }

 private:
  // Every vertex of `remaining` is reachable from `from` inside remaining.
  bool reachable(Vertex from, Mask remaining) const {
    Mask seen = 0;
    Mask frontier = adj_[from] & remaining;
    while (frontier) {
      seen |= frontier;
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      frontier = next & remaining & ~seen;
    }
    return seen == remaining;
  }

  bool extend(Vertex cur, Mask visited) {
    if (visited == full_)
      return closing_ ? (adj_[cur] >> target_ & 1) != 0 : cur == target_;
    const Mask remaining = full_ & ~visited;
    if (!closing_ && cur == target_) return false;
    if (closing_ && !(adj_[target_] & remaining)) return false;
    if (!reachable(cur, remaining)) return false;
    for (Mask c = adj_[cur] & remaining; c; c &= c - 1) {
      const Vertex w = std::countr_zero(c);
      if (!closing_ && w == target_ && remaining != (Mask{1} << w)) continue;
      if (extend(w, visited | Mask{1} << w)) return true;
    }
    return false;
  }

  std::size_t n_;
  Mask full_ = 0;
  std::vector<Mask> adj_;
  Vertex target_ = 0;
  bool closing_ = true;
};

}  // namespace

bool brute_force_hamiltonian(const SimpleGraph& g, std::size_t cap) {
  return Backtracker(g, cap).cycle();
}

bool brute_force_hamilton_path(const SimpleGraph& g, Vertex s, Vertex t, std::size_t cap) {
  if (!g.contains(s) || !g.contains(t)) throw GraphError("path endpoint out of range");
  return Backtracker(g, cap).path(s, t);
}

bool brute_force_hamilton_connected(const SimpleGraph& g, std::size_t cap) {
  Backtracker b(g, cap);
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t)
      if (!b.path(s, t)) return false;
  return true;
}

}  // namespace threearc
