#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gatecolor/circuit.hpp"
#include "gatecolor/coloring.hpp"

namespace gatecolor {

enum class AdderVariant {
  /// |a>|phi(b)> -> |a>|phi(b + a)>.
  Add,
  /// |a>|b>|phi(c)> -> |a>|b>|phi(c + ab)> with a 2n-qubit target.
  ProductAdd,
};

std::string_view variant_name(AdderVariant variant);
/// Accepts "add", "product" and "product_add".
std::optional<AdderVariant> parse_variant(std::string_view name);

/// The commuting rotation block between the two QFTs of a Draper adder.
/// Registers: add uses a = [0, n), phi = [n, 2n); product_add uses
/// a = [0, n), b = [n, 2n), phi = [2n, 4n).
struct AdderInstance {
  std::size_t n = 0;
  AdderVariant variant = AdderVariant::Add;
  std::size_t qubit_count = 0;
  std::vector<Gate> gates;

  Qubit a(std::size_t i) const { return static_cast<Qubit>(i); }
  /// product_add only.
  Qubit b(std::size_t j) const { return static_cast<Qubit>(n + j); }
  Qubit phi(std::size_t m) const {
    return static_cast<Qubit>((variant == AdderVariant::Add ? n : 2 * n) + m);
  }
  /// Computational-basis operand qubits (a, and b for product_add).
  std::vector<Qubit> operand_qubits() const;
  Circuit circuit() const { return Circuit(qubit_count, gates); }
};

/// add: cphase{a_j, phi[m]} with angle 2pi/2^(m-j+1) for 0 <= j <= m < n.
/// product_add: ccphase{a_i, b_j, phi[m]} with angle 2pi/2^(m-i-j+1) for
/// i + j <= m < 2n. Throws ValidationError for n < 1.
AdderInstance generate_adder(std::size_t n, AdderVariant variant);

/// Depth of the rotation block after conflict-graph coloring.
std::size_t base_depth(const AdderInstance& instance, const SolverConfig& solver = {});

enum class ReplicaScope {
  /// Any qubit may be copied; all gates in the block are diagonal, so a CNOT
  /// copy serves every qubit alike.
  AllQubits,
  /// Only operand qubits (a, b) of an adder instance.
  ControlsOnly,
};

struct ParallelizeOptions {
  SolverConfig solver;
  /// Add 2*ceil(log2 r) CNOT fan-out layers, r = largest copy count.
  bool count_fanout_overhead = true;
  /// Qubits allowed to be copied; nullopt means every qubit.
  std::optional<std::vector<Qubit>> replicable;
};

struct ParallelizedCircuit {
  /// Rotation block on the widened register, in colored order.
  Circuit circuit;
  std::size_t extra_qubits = 0;
  std::size_t qubit_count = 0;
  std::size_t rotation_depth = 0;
  std::size_t fanout_overhead = 0;
  /// rotation_depth, plus fanout_overhead when counted.
  std::size_t depth = 0;
  /// copies[q] lists the qubits that hold q, starting with q itself. New
  /// qubits are numbered from the original qubit count in allocation order.
  std::vector<std::vector<Qubit>> copies;
};

/// Greedy copy allocation: each step gives one more copy to the qubit whose
/// split removes the most conflict-graph edges (lowest qubit on ties), its
/// gates spread over the copies in contiguous, near-equal chunks. Stops
/// early once no split removes an edge. Every gate must be diagonal.
ParallelizedCircuit parallelize_with_extra_qubits(const Circuit& block, std::size_t budget,
                                                  const ParallelizeOptions& options = {});

ParallelizedCircuit parallelize_with_extra_qubits(const AdderInstance& instance, std::size_t budget,
                                                  const ParallelizeOptions& options = {},
                                                  ReplicaScope scope = ReplicaScope::AllQubits);

/// Every original gate appears exactly once in the result, with each qubit
/// replaced by one of its copies and nothing else changed.
bool replicas_sound(const Circuit& original, const ParallelizedCircuit& result);

struct CostMetrics {
  std::size_t space = 0;  ///< depth * qubits
  std::size_t time = 0;   ///< depth^2 * qubits
};

CostMetrics cost_metrics(std::size_t depth, std::size_t qubits);

struct TradeoffPoint {
  std::size_t extra_qubits = 0;
  std::size_t qubit_count = 0;
  std::size_t rotation_depth = 0;
  std::size_t depth = 0;
  CostMetrics cost;
};

struct TradeoffCurve {
  /// Ascending qubit count, strictly decreasing depth; starts at budget 0.
  std::vector<TradeoffPoint> points;
  std::size_t s_optimal = 0;
  std::size_t t_optimal = 0;

  /// Endpoint cost over the curve minimum: first and last point, S and T.
  double space_extreme_s_ratio() const;
  double space_extreme_t_ratio() const;
  double time_extreme_s_ratio() const;
  double time_extreme_t_ratio() const;
};

/// Sweeps budgets 0..budget_max and keeps the points that lower the depth.
TradeoffCurve build_tradeoff_curve(const AdderInstance& instance, std::size_t budget_max,
                                   const ParallelizeOptions& options = {},
                                   ReplicaScope scope = ReplicaScope::AllQubits);

/// Summary naming the S- and T-optimal points and the endpoint ratios.
nlohmann::json tradeoff_summary_json(const TradeoffCurve& curve);

/// "qubits,depth,S,T" header plus one row per point.
std::string tradeoff_csv(const TradeoffCurve& curve);

}  // namespace gatecolor
