#include "gatecolor/reduction.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gatecolor/commutation.hpp"
#include "gatecolor/depth.hpp"
#include "gatecolor/errors.hpp"

namespace gatecolor {

Circuit to_circuit(const ColoredGraph& colored, const Circuit& source) {
  const ConflictGraph& graph = colored.graph();
  std::vector<std::size_t> positions(graph.vertex_count());
  std::vector<char> taken(source.size(), 0);
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    const auto pos = source.position_of(graph.vertex_gate(v));
    if (!pos) {
      throw ValidationError("to_circuit: vertex " + std::to_string(v) + " maps to gate " +
                            std::to_string(graph.vertex_gate(v)) + ", which is not in the circuit");
    }
    if (taken[*pos]) throw ValidationError("to_circuit: two vertices map to gate " + std::to_string(graph.vertex_gate(v)));
    taken[*pos] = 1;
    positions[v] = *pos;
  }

  std::vector<Vertex> order(graph.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  const Coloring& coloring = colored.coloring();
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (coloring.color(a) != coloring.color(b)) return coloring.color(a) < coloring.color(b);
    return graph.vertex_gate(a) < graph.vertex_gate(b);
  });

  std::vector<Gate> gates;
  gates.reserve(order.size());
  for (Vertex v : order) gates.push_back(source[positions[v]]);
  return Circuit(source.qubit_count(), std::move(gates));
}

ColoredCircuit to_colored_graph(const Circuit& circuit, const ConflictPolicy& policy) {
  auto graph = std::make_shared<const ConflictGraph>(construct_graph(circuit, policy));
  const std::size_t n = graph->vertex_count();
  std::vector<Color> colors(n, 0);
  Color color = 0;

  if (graph->has_matrix()) {
    // blocked = union of the adjacency rows of the open run; gate j extends
    // the run iff its bit is clear.
    DynamicBitset blocked(n);
    for (Vertex j = 0; j < n; ++j) {
      if (j == 0 || blocked.test(j)) {
        blocked.clear();
        ++color;
      }
      colors[j] = color;
      blocked.or_with(graph->row(j));
    }
  } else {
    std::vector<Color> blocked_in(n, 0);  // blocked_in[v] == color iff v conflicts with the open run
    for (Vertex j = 0; j < n; ++j) {
      if (j == 0 || blocked_in[j] == color) ++color;
      colors[j] = color;
      for (Vertex u : graph->neighbors(j)) blocked_in[u] = color;
    }
  }

  Coloring coloring = Coloring::from_colors(std::move(colors));
  const std::size_t depth = coloring.count();
  return ColoredCircuit{ColoredGraph(std::move(graph), std::move(coloring)), depth};
}

Circuit construct_circuit(const ConflictGraph& graph) {
  const std::size_t n = graph.vertex_count();
  // Qubit sets per gate, kept sorted.
  std::vector<std::vector<Qubit>> sets(n);
  const auto holds = [&](std::size_t k, Qubit q) { return std::binary_search(sets[k].begin(), sets[k].end(), q); };
  const auto add = [&](std::size_t k, Qubit q) {
    auto& s = sets[k];
    s.insert(std::upper_bound(s.begin(), s.end(), q), q);
  };
  const auto disjoint = [&](std::size_t a, std::size_t b) {
    std::vector<Qubit> common;
    std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(), std::back_inserter(common));
    return common.empty();
  };

  Qubit qubits = 1;
  for (Vertex i = 0; i < n; ++i) {
    // Start from every qubit and drop those held by any earlier non-neighbor.
    std::vector<Qubit> mine(qubits);
    std::iota(mine.begin(), mine.end(), Qubit{0});
    for (Vertex j = 0; j < i; ++j) {
      if (graph.adjacent(i, j)) continue;
      std::vector<Qubit> kept;
      std::set_difference(mine.begin(), mine.end(), sets[j].begin(), sets[j].end(), std::back_inserter(kept));
      mine = std::move(kept);
    }
    sets[i] = std::move(mine);

    // Qubits created while placing gate i, in creation order.
    std::vector<Qubit> shared;
    for (Vertex j = 0; j < i; ++j) {
      if (!graph.adjacent(i, j) || !disjoint(i, j)) continue;
      bool reused = false;
      for (Qubit q : shared) {
        bool usable = true;
        for (Vertex k = 0; k < j; ++k) {
          if (!graph.adjacent(k, j) && holds(k, q)) {
            usable = false;
            break;
          }
        }
        if (usable) {
          add(j, q);  // i already holds q
          reused = true;
          break;
        }
      }
      if (!reused) {
        const Qubit fresh = qubits++;
        add(i, fresh);
        add(j, fresh);
        shared.push_back(fresh);
      }
    }
    if (sets[i].empty()) add(i, qubits++);
  }

  std::vector<Gate> gates;
  gates.reserve(n);
  for (Vertex i = 0; i < n; ++i) gates.push_back(Gate::multi_controlled_phase(i, sets[i], Angle{1, 1}));
  return Circuit(qubits, std::move(gates));
}

nlohmann::json report_to_json(const OptimizationReport& report) {
  return nlohmann::json{
      {"input_depth", report.input_depth},   {"output_depth", report.output_depth},
      {"color_count", report.color_count},   {"solver", report.solver_name},
      {"lower_bound", report.lower_bound},   {"gap_bound", report.gap_bound},
      {"kept_input_order", report.kept_input_order},
  };
}

OptimizationResult optimize(const Circuit& circuit, const ConflictPolicy& policy, const OptimizeOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (!options.allow_noncommuting) {
    if (const auto pair = find_uncertified_pair(circuit)) {
      throw NonCommutingError("gates " + std::to_string(pair->first) + " and " + std::to_string(pair->second) +
                                  " are not certified to commute (pass --allow-noncommuting to override)",
                              pair->first, pair->second);
    }
  }

  auto graph = std::make_shared<const ConflictGraph>(construct_graph(circuit, policy));
  Coloring coloring = solve_coloring(*graph, options.solver);
  const std::size_t colors = coloring.count();
  const std::size_t clique = greedy_clique(*graph).size();
  Circuit reordered = to_circuit(ColoredGraph(graph, std::move(coloring)), circuit);

  OptimizationReport report;
  report.input_depth = compute_depth(circuit, policy).depth;
  report.output_depth = compute_depth(reordered, policy).depth;
  report.color_count = colors;
  report.solver_name = std::string(solver_name(options.solver.kind));
  report.lower_bound = clique;
  report.gap_bound = colors - clique;
  if (report.output_depth > report.input_depth) {
    report.kept_input_order = true;
    report.output_depth = report.input_depth;
    reordered = circuit;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
  return OptimizationResult{std::move(reordered), std::move(report)};
}

namespace {

using Mask = std::uint64_t;

// Greedy clique inside the vertex set `within`.
std::size_t clique_bound(const std::vector<Mask>& adj, Mask within) {
  std::size_t best = 0;
  for (Mask starts = within; starts != 0; starts &= starts - 1) {
    Mask candidates = within;
    std::size_t size = 0;
    int v = std::countr_zero(starts);
    while (true) {
      ++size;
      candidates &= adj[v];
      if (candidates == 0) break;
      int next = std::countr_zero(candidates);
      int next_degree = -1;
      for (Mask c = candidates; c != 0; c &= c - 1) {
        const int u = std::countr_zero(c);
        const int degree = std::popcount(adj[u] & candidates);
        if (degree > next_degree) {
          next_degree = degree;
          next = u;
        }
      }
      v = next;
    }
    best = std::max(best, size);
  }
  return best;
}

// Depth-first search over orderings. Gates inside one block are placed in
// ascending position (their order within a block cannot change the depth),
// and a gate opens a new block exactly when it conflicts with the open one.
class OrderSearch {
 public:
  explicit OrderSearch(std::vector<Mask> conflicts) : adj_(std::move(conflicts)), n_(adj_.size()) {
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  MinDepthResult run() {
    best_ = n_ + 1;
    floor_ = clique_bound(adj_, full_);
    order_.clear();
    descend(0, 0, 0, -1);
    return MinDepthResult{best_, best_order_};
  }

 private:
  void descend(Mask placed, Mask open, std::size_t blocks, int last) {
    if (placed == full_) {
      if (blocks < best_) {
        best_ = blocks;
        best_order_ = order_;
      }
      return;
    }
    // At most one member of a clique among the rest can still join the open
    // block.
    const std::size_t clique = clique_bound(adj_, full_ & ~placed);
    const std::size_t bound = blocks + clique - (open != 0 ? 1 : 0);
    if (bound >= best_) return;
    for (Mask rest = full_ & ~placed; rest != 0; rest &= rest - 1) {
      const int g = std::countr_zero(rest);
      const Mask bit = Mask{1} << g;
      const bool joins = open != 0 && (adj_[g] & open) == 0;
      if (joins && g < last) continue;
      order_.push_back(static_cast<std::size_t>(g));
      if (joins) {
        descend(placed | bit, open | bit, blocks, g);
      } else {
        descend(placed | bit, bit, blocks + 1, g);
      }
      order_.pop_back();
      if (best_ <= floor_) return;  // already optimal
    }
  }

  std::vector<Mask> adj_;
  std::size_t n_;
  Mask full_ = 0;
  std::size_t best_ = 0;
  std::size_t floor_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_order_;
};

bool colorable(const ConflictGraph& graph, std::vector<Color>& colors, Vertex v, std::size_t k, std::size_t used) {
  if (v == graph.vertex_count()) return true;
  // Symmetry: vertex v may open at most one new color.
  const std::size_t limit = std::min(k, used + 1);
  for (Color c = 1; c <= limit; ++c) {
    bool clash = false;
    for (Vertex u : graph.neighbors(v)) {
      if (u < v && colors[u] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    colors[v] = c;
    if (colorable(graph, colors, v + 1, k, std::max<std::size_t>(used, c))) return true;
  }
  colors[v] = 0;
  return false;
}

}  // namespace

MinDepthResult brute_force_min_depth(const Circuit& circuit, const ConflictPolicy& policy, std::size_t max_gates) {
  const std::size_t n = circuit.size();
  if (n > max_gates) {
    throw ValidationError("brute force: circuit has " + std::to_string(n) + " gates, limit is " + std::to_string(max_gates));
  }
  if (n > 64) throw ValidationError("brute force: more than 64 gates is not supported");
  if (n == 0) return {};

  std::vector<Mask> conflicts(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (policy.conflicts(circuit[a], circuit[b])) {
        conflicts[a] |= Mask{1} << b;
        conflicts[b] |= Mask{1} << a;
      }
    }
  }
  return OrderSearch(std::move(conflicts)).run();
}

std::size_t brute_force_chromatic_number(const ConflictGraph& graph, std::size_t max_vertices) {
  const std::size_t n = graph.vertex_count();
  if (n > max_vertices) {
    throw ValidationError("brute force: graph has " + std::to_string(n) + " vertices, limit is " +
                          std::to_string(max_vertices));
  }
  std::vector<Color> colors(n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (colorable(graph, colors, 0, k, 0)) return k;
  }
  return 0;
}

Circuit random_commuting_circuit(std::mt19937_64& rng, std::size_t gates, std::size_t qubits) {
  if (qubits == 0) throw ValidationError("random circuit: need at least one qubit");
  std::vector<Qubit> pool(qubits);
  std::iota(pool.begin(), pool.end(), Qubit{0});
  std::uniform_int_distribution<std::size_t> arity(1, std::min<std::size_t>(3, qubits));
  std::uniform_int_distribution<std::uint32_t> denominator(1, 4);
  std::vector<Gate> out;
  out.reserve(gates);
  for (std::size_t i = 0; i < gates; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t k = arity(rng);
    std::vector<Qubit> support(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    const Angle angle{1, denominator(rng)};
    const auto id = static_cast<GateId>(i);
    if (k == 2) {
      out.push_back(Gate::controlled_phase(id, support[0], support[1], angle));
    } else if (k == 3) {
      out.push_back(Gate::doubly_controlled_phase(id, support[0], support[1], support[2], angle));
    } else {
      out.push_back(Gate::multi_controlled_phase(id, std::move(support), angle));
    }
  }
  return Circuit(qubits, std::move(out));
}

Coloring random_proper_coloring(const ConflictGraph& graph, std::mt19937_64& rng) {
  const std::size_t n = graph.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Color> colors(n, 0);
  for (Vertex v : order) {
    std::vector<Color> feasible;
    for (Color c = 1; c <= n; ++c) {
      const auto nb = graph.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return colors[u] == c; })) feasible.push_back(c);
    }
    std::uniform_int_distribution<std::size_t> pick(0, feasible.size() - 1);
    colors[v] = feasible[pick(rng)];
  }
  return Coloring::normalized(colors);
}

VerificationReport verify_propositions(const VerifyOptions& options) {
  if (options.min_gates < 1 || options.min_gates > options.max_gates) {
    throw ValidationError("verify: gate range must satisfy 1 <= min <= max");
  }
  if (options.max_qubits < 1) throw ValidationError("verify: need at least one qubit");
  const ConflictPolicy policy = ConflictPolicy::qubit_disjoint();
  VerificationReport report;
  report.trials = options.trials;

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> gate_count(options.min_gates, options.max_gates);
    std::uniform_int_distribution<std::size_t> qubit_count(std::min<std::size_t>(3, options.max_qubits),
                                                           options.max_qubits);
    const Circuit circuit = random_commuting_circuit(rng, gate_count(rng), qubit_count(rng));
    auto graph = std::make_shared<const ConflictGraph>(construct_graph(circuit, policy));

    const MinDepthResult min_depth = brute_force_min_depth(circuit, policy, options.max_gates);
    const std::size_t chromatic = brute_force_chromatic_number(*graph, options.max_gates);

    const Circuit from_minimum = to_circuit(ColoredGraph(graph, color_exact(*graph)), circuit);
    if (compute_depth(from_minimum, policy).depth == min_depth.depth) ++report.minimum_coloring_passes;

    const ColoredCircuit from_ordering = to_colored_graph(circuit.reordered(min_depth.order), policy);
    if (from_ordering.colored.color_count() == chromatic && from_ordering.depth == min_depth.depth) {
      ++report.minimum_depth_passes;
    }

    bool bound_ok = true;
    bool gap_ok = true;
    for (std::size_t s = 0; s < options.colorings_per_trial; ++s) {
      Coloring coloring = random_proper_coloring(*graph, rng);
      const std::size_t colors = coloring.count();
      const std::size_t depth = compute_depth(to_circuit(ColoredGraph(graph, std::move(coloring)), circuit), policy).depth;
      bound_ok = bound_ok && depth <= colors;
      gap_ok = gap_ok && depth >= min_depth.depth && depth - min_depth.depth <= colors - chromatic;
    }
    if (bound_ok) ++report.color_bound_passes;
    if (gap_ok) ++report.gap_passes;
  }
  return report;
}

}  // namespace gatecolor
