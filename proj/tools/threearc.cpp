// Command-line front end: construct X(G), decide and certify its Hamilton
// cycles and paths, and check certificates.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "threearc/euler.hpp"
#include "threearc/generators.hpp"
#include "threearc/graph.hpp"
#include "threearc/ham_cycle.hpp"
#include "threearc/ham_path.hpp"
#include "threearc/three_arc.hpp"
#include "threearc/verify.hpp"

using namespace threearc;

namespace {

constexpr int kOk = 0;
constexpr int kHypothesis = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

// Error reading input or writing output; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t max_vertices = kDefaultMaxVertices;
  bool emit_arc_index = false;
  bool deterministic = true;
};

SimpleGraph load(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_certificate(const std::string& path, const char* kind, const std::vector<Arc>& arcs) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << kind << ' ' << arcs.size() << '\n';
  for (const Arc& a : arcs) out << to_string(a) << '\n';
  if (!out) throw InputError("error writing " + path);
}

Arc parse_arc(const std::string& text, std::size_t line) {
  const auto sep = text.find('>');
  if (sep == std::string::npos) throw InputError("line " + std::to_string(line) + ": expected tail>head");
  try {
    std::size_t used1 = 0, used2 = 0;
    const std::string tail = text.substr(0, sep), head = text.substr(sep + 1);
    const int t = std::stoi(tail, &used1);
    const int h = std::stoi(head, &used2);
    if (used1 != tail.size() || used2 != head.size()) throw std::invalid_argument("trailing");
    return {t, h};
  } catch (const std::logic_error&) {
    throw InputError("line " + std::to_string(line) + ": malformed arc '" + text + "'");
  }
}

struct Certificate {
  bool cycle = true;
  std::vector<Arc> arcs;
};

// Header form "cycle|path n" followed by arcs, or the bare listing printed
// by hamcycle/hampath (a cycle repeats its first arc at the end).
Certificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Certificate cert;
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> declared;
  bool headed = false;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string word;
    if (!(fields >> word) || word[0] == '#') continue;
    if (!headed && cert.arcs.empty() && (word == "cycle" || word == "path")) {
      std::size_t n = 0;
      if (!(fields >> n)) throw InputError(path + ":" + std::to_string(line) + ": header needs an arc count");
      cert.cycle = word == "cycle";
      declared = n;
      headed = true;
      continue;
    }
    cert.arcs.push_back(parse_arc(word, line));
  }
  if (declared) {
    if (*declared != cert.arcs.size())
      throw InputError(path + ": header declares " + std::to_string(*declared) + " arcs, found " +
                       std::to_string(cert.arcs.size()));
  } else {
    cert.cycle = cert.arcs.size() >= 2 && cert.arcs.front() == cert.arcs.back();
    if (cert.cycle) cert.arcs.pop_back();
  }
  if (cert.arcs.empty()) throw InputError(path + ": certificate lists no arcs");
  return cert;
}

int cmd_xgraph(const std::string& path, const Options& opt) {
  const SimpleGraph g = load(path);
  if (2 * g.edge_count() > opt.max_vertices)
    throw InputError("X(G) would have " + std::to_string(2 * g.edge_count()) + " vertices, cap is " +
                     std::to_string(opt.max_vertices));
  const ThreeArcGraph x = three_arc_graph(g);
  std::cout << serialize_edge_list(x.graph);
  if (opt.emit_arc_index) {
    std::istringstream lines(x.index.serialize());
    std::string l;
    std::cout << "# arc index: vertex tail head\n";
    while (std::getline(lines, l)) std::cout << "# " << l << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& path) {
  const SimpleGraph g = load(path);
  const ConditionReport r = check_conditions(g);
  std::cout << to_string(r);
  const bool ham = is_X_hamiltonian(g);
  std::cout << "X(G) hamiltonian: " << (ham ? "yes" : "no") << '\n';
  return ham ? kOk : kHypothesis;
}

// Construction failures other than hypothesis violations are defects.
template <class F>
auto pipeline(F&& run) {
  try {
    return run();
  } catch (const HypothesisError&) {
    throw;
  } catch (const InternalError&) {
    throw;
  } catch (const GraphError& e) {
    throw InternalError(e.what());
  }
}

void print_arcs(const std::vector<Arc>& arcs, bool closing) {
  for (const Arc& a : arcs) std::cout << to_string(a) << '\n';
  if (closing && !arcs.empty()) std::cout << to_string(arcs.front()) << '\n';
}

int cmd_hamcycle(const std::string& path, const std::string& out) {
  const SimpleGraph g = load(path);
  const CertifiedCycle c = pipeline([&] { return hamilton_cycle_of_X(g); });
  print_arcs(c.arcs, true);
  if (!out.empty()) write_certificate(out, "cycle", c.arcs);
  return kOk;
}

int cmd_hampath(const std::string& path, const std::vector<int>& ends, const std::string& out) {
  const SimpleGraph g = load(path);
  const Arc a1{ends[0], ends[1]}, a2{ends[2], ends[3]};
  for (const Arc& a : {a1, a2})
    if (!g.is_arc(a)) throw InputError(to_string(a) + " is not an arc of the graph");
  if (a1 == a2) throw InputError("path endpoints must be distinct arcs");
  const CertifiedPath p = pipeline([&] { return hamilton_path_of_X(g, a1, a2); });
  print_arcs(p.arcs, false);
  if (!out.empty()) write_certificate(out, "path", p.arcs);
  return kOk;
}

int cmd_iterate(const std::string& path, int times, bool certify, const Options& opt) {
  if (times < 1) throw InputError("iteration count must be positive");
  SimpleGraph current = load(path);
  for (int level = 1; level <= times; ++level) {
    if (2 * current.edge_count() > opt.max_vertices)
      throw InputError("level " + std::to_string(level) + " would have " +
                       std::to_string(2 * current.edge_count()) + " vertices, cap is " +
                       std::to_string(opt.max_vertices));
    if (certify) {
      const CertifiedCycle c = pipeline([&] { return hamilton_cycle_of_X(current); });
      current = three_arc_graph(current).graph;
      std::cout << "level " << level << ": " << current.vertex_count() << " vertices, "
                << current.edge_count() << " edges\n";
      std::cout << "level " << level << ": hamilton cycle verified (" << c.arcs.size() << " arcs)\n";
    } else {
      current = iterate_three_arc(current, 1, opt.max_vertices);
      std::cout << "level " << level << ": " << current.vertex_count() << " vertices, "
                << current.edge_count() << " edges\n";
    }
  }
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, const std::string& from,
               const std::string& to) {
  const SimpleGraph g = load(graph_path);
  const Certificate cert = read_certificate(cert_path);
  std::optional<ValidationError> err;
  if (cert.cycle) {
    err = validate_cycle(g, cert.arcs);
  } else {
    const Arc first = from.empty() ? cert.arcs.front() : parse_arc(from, 0);
    const Arc last = to.empty() ? cert.arcs.back() : parse_arc(to, 0);
    err = validate_path(g, cert.arcs, first, last);
  }
  if (err) {
    std::cout << "invalid " << (cert.cycle ? "cycle" : "path") << ": " << to_string(*err) << '\n';
    return kHypothesis;
  }
  std::cout << "valid " << (cert.cycle ? "cycle" : "path") << " (" << cert.arcs.size() << " arcs)\n";
  return kOk;
}

struct SweepRow {
  std::size_t graphs = 0, hamiltonian = 0, agree = 0, conditions_agree = 0, certified = 0;
};

int cmd_sweep(int max_n, int threads, std::optional<std::uint64_t> shuffle, int fuzz) {
  if (max_n < 3 || max_n > 6) throw InputError("--max-n must lie in 3..6");
  threads = std::max(1, threads);
  struct Instance {
    int n;
    SimpleGraph g;
  };
  std::vector<Instance> instances;
  for (int n = 3; n <= max_n; ++n)
    for_each_graph(static_cast<std::size_t>(n), true, [&](const SimpleGraph& g) {
      if (is_connected(g)) instances.push_back({n, g});
    });
  std::mt19937_64 rng(shuffle.value_or(1));
  if (shuffle) std::shuffle(instances.begin(), instances.end(), rng);

  std::vector<SweepRow> rows(static_cast<std::size_t>(max_n) + 1);
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < instances.size();) {
      const Instance& inst = instances[i];
      const bool predicted = is_X_hamiltonian(inst.g);
      const bool conditions = check_conditions(inst.g).all();
      const bool actual = brute_force_hamiltonian(three_arc_graph(inst.g).graph);
      bool certified = false;
      if (predicted) {
        try {
          certified = hamilton_cycle_of_X(inst.g).verified;
        } catch (const GraphError&) {
          certified = false;
        }
      }
      std::lock_guard<std::mutex> guard(lock);
      SweepRow& row = rows[static_cast<std::size_t>(inst.n)];
      ++row.graphs;
      row.hamiltonian += actual;
      row.agree += predicted == actual;
      row.conditions_agree += conditions == predicted;
      row.certified += predicted && certified;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool ok = true;
  std::cout << "n  graphs  X-hamiltonian  predicate-agrees  conditions-agree  certified\n";
  for (int n = 3; n <= max_n; ++n) {
    const SweepRow& r = rows[static_cast<std::size_t>(n)];
    std::cout << n << "  " << r.graphs << "  " << r.hamiltonian << "  " << r.agree << "  "
              << r.conditions_agree << "  " << r.certified << '\n';
    ok = ok && r.agree == r.graphs && r.conditions_agree == r.graphs && r.certified == r.hamiltonian;
  }

  if (fuzz > 0) {
    int repaired = 0;
    for (int i = 0; i < fuzz; ++i) {
      SimpleGraph g;
      do {
        g = random_connected_graph(6 + rng() % 10, 0.3, rng);
      } while (g.min_degree() < 3);
      const Multigraph m = build_multigraph(g, 2);
      const Trail c = random_euler_tour(m, 0, rng);
      try {
        const Trail r = repair_twin_visits(c, m);
        repaired += covers_all_edges(m, r) && unmatched_vertices(r, m).empty();
      } catch (const GraphError&) {
      }
    }
    std::cout << "fuzz: " << repaired << " of " << fuzz << " random tours repaired\n";
    ok = ok && repaired == fuzz;
  }
  return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-arc graph construction and Hamilton certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--seedless-deterministic", opt.deterministic, "Deterministic output (default)");
  app.add_option("--max-vertices", opt.max_vertices, "Vertex cap for constructed graphs");
  app.add_flag("--emit-arc-index", opt.emit_arc_index, "Append the arc index to xgraph output");

  std::string graph, cert, out, from, to;
  int times = 1, max_n = 6, threads = 1, fuzz = 0;
  bool certify = false;
  std::vector<int> ends;
  std::optional<std::uint64_t> shuffle;

  auto* xgraph = app.add_subcommand("xgraph", "Print X(G) as an edge list");
  xgraph->add_option("graph", graph, "Edge-list file")->required();
  auto* check = app.add_subcommand("check", "Report the Hamilton cycle conditions");
  check->add_option("graph", graph, "Edge-list file")->required();
  auto* hamcycle = app.add_subcommand("hamcycle", "Print a verified Hamilton cycle of X(G)");
  hamcycle->add_option("graph", graph, "Edge-list file")->required();
  hamcycle->add_option("-o,--output", out, "Also write a certificate file");
  auto* hampath = app.add_subcommand("hampath", "Print a verified Hamilton path of X(G)");
  hampath->add_option("graph", graph, "Edge-list file")->required();
  hampath->add_option("arcs", ends, "tail1 head1 tail2 head2")->required()->expected(4);
  hampath->add_option("-o,--output", out, "Also write a certificate file");
  auto* iterate = app.add_subcommand("iterate", "Sizes of the iterated 3-arc graphs");
  iterate->add_option("graph", graph, "Edge-list file")->required();
  iterate->add_option("times", times, "Number of iterations")->required();
  iterate->add_flag("--certify", certify, "Certify a Hamilton cycle at every level");
  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("graph", graph, "Edge-list file")->required();
  verify->add_option("certificate", cert, "Certificate file")->required();
  verify->add_option("--from", from, "Required first arc of a path (tail>head)");
  verify->add_option("--to", to, "Required last arc of a path (tail>head)");
  auto* sweep = app.add_subcommand("sweep", "Exhaustive equivalence check over small graphs");
  sweep->add_option("--max-n", max_n, "Largest order enumerated (3..6)");
  sweep->add_option("--threads", threads, "Worker threads");
  sweep->add_option("--shuffle", shuffle, "Seed for instance order and fuzzing");
  sweep->add_option("--fuzz", fuzz, "Random tours to repair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*xgraph) return cmd_xgraph(graph, opt);
    if (*check) return cmd_check(graph);
    if (*hamcycle) return cmd_hamcycle(graph, out);
    if (*hampath) return cmd_hampath(graph, ends, out);
    if (*iterate) return cmd_iterate(graph, times, certify, opt);
    if (*verify) return cmd_verify(graph, cert, from, to);
    if (*sweep) return cmd_sweep(max_n, threads, shuffle, fuzz);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.what() << '\n';
    return kHypothesis;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
