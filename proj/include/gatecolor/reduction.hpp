#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gatecolor/circuit.hpp"
#include "gatecolor/coloring.hpp"
#include "gatecolor/conflict_graph.hpp"
#include "gatecolor/policy.hpp"

namespace gatecolor {

/// Orders the source circuit's gates by ascending color; equal colors keep
/// ascending gate id. Vertex v of the graph must map (via vertex_gate) to a
/// gate of source. The canonical depth of the result never exceeds the color
/// count.
Circuit to_circuit(const ColoredGraph& colored, const Circuit& source);

struct ColoredCircuit {
  ColoredGraph colored;
  std::size_t depth = 0;
};

/// Colors the circuit's conflict graph by its canonical layering: each
/// maximal run of pairwise-parallelizable consecutive gates shares a color,
/// and every new run takes the next color. depth equals the color count and
/// compute_depth(circuit).
ColoredCircuit to_colored_graph(const Circuit& circuit, const ConflictPolicy& policy);

/// Builds a circuit of multi-controlled phase gates whose qubit-disjointness
/// conflict graph is exactly graph (vertex i ↦ gate i). Uses at most |V|²/2
/// qubits for |V| >= 2.
Circuit construct_circuit(const ConflictGraph& graph);

struct OptimizationReport {
  std::size_t input_depth = 0;
  std::size_t output_depth = 0;
  std::size_t color_count = 0;
  std::string solver_name;
  std::chrono::nanoseconds elapsed{0};
  /// Size of the greedy clique found in the conflict graph.
  std::size_t lower_bound = 0;
  /// color_count - lower_bound.
  std::size_t gap_bound = 0;
  /// True when the colored ordering was deeper than the input and the input
  /// ordering was returned instead.
  bool kept_input_order = false;
};

/// Report as JSON. Wall-clock time is left out so the artifact is
/// reproducible.
nlohmann::json report_to_json(const OptimizationReport& report);

struct OptimizeOptions {
  SolverConfig solver;
  /// Proceed even if the structural commutation check cannot certify every
  /// gate pair.
  bool allow_noncommuting = false;
};

struct OptimizationResult {
  Circuit circuit;
  OptimizationReport report;
};

/// construct_graph → coloring solver → to_circuit. Returns the input
/// ordering instead if it is shallower. Throws NonCommutingError for
/// uncertified input unless allowed, and propagates BudgetExceeded.
OptimizationResult optimize(const Circuit& circuit, const ConflictPolicy& policy, const OptimizeOptions& options);

struct MinDepthResult {
  std::size_t depth = 0;
  /// order[i] = original position of the gate placed i-th in a minimum-depth
  /// ordering.
  std::vector<std::size_t> order;
};

/// Exhaustive minimum of compute_depth over all gate orderings. Throws
/// ValidationError when the circuit has more than max_gates gates.
MinDepthResult brute_force_min_depth(const Circuit& circuit, const ConflictPolicy& policy, std::size_t max_gates = 8);

/// Chromatic number by exhaustive enumeration of colorings with k = 1, 2, ...
/// colors. Throws ValidationError above max_vertices.
std::size_t brute_force_chromatic_number(const ConflictGraph& graph, std::size_t max_vertices = 10);

/// Random circuit of multi-controlled phase gates, each on 1-3 distinct
/// qubits drawn from [0, qubits).
Circuit random_commuting_circuit(std::mt19937_64& rng, std::size_t gates, std::size_t qubits);

/// Random proper coloring (not necessarily minimal) of graph.
Coloring random_proper_coloring(const ConflictGraph& graph, std::mt19937_64& rng);

struct VerifyOptions {
  std::size_t trials = 100;
  std::size_t min_gates = 3;
  std::size_t max_gates = 8;
  std::size_t max_qubits = 8;
  /// Random proper colorings checked per trial for the color-count bound.
  std::size_t colorings_per_trial = 4;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::size_t trials = 0;
  /// Minimum coloring → to_circuit reaches the brute-force minimum depth.
  std::size_t minimum_coloring_passes = 0;
  /// Minimum-depth ordering → to_colored_graph uses chromatic-number colors.
  std::size_t minimum_depth_passes = 0;
  /// depth(to_circuit(b)) <= colors(b) for random proper colorings b.
  std::size_t color_bound_passes = 0;
  /// depth(to_circuit(b)) - min depth <= colors(b) - chromatic number.
  std::size_t gap_passes = 0;

  bool all_passed() const {
    return minimum_coloring_passes == trials && minimum_depth_passes == trials && color_bound_passes == trials &&
           gap_passes == trials;
  }
};

/// Runs the reduction checks on random commuting circuits, each trial seeded
/// from options.seed and the trial index.
VerificationReport verify_propositions(const VerifyOptions& options);

}  // namespace gatecolor
