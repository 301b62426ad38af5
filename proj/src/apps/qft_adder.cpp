#include "gatecolor/qft_adder.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>

#include "gatecolor/errors.hpp"
#include "gatecolor/reduction.hpp"

namespace gatecolor {

std::string_view variant_name(AdderVariant variant) {
  return variant == AdderVariant::Add ? "add" : "product_add";
}

std::optional<AdderVariant> parse_variant(std::string_view name) {
  if (name == "add") return AdderVariant::Add;
  if (name == "product" || name == "product_add") return AdderVariant::ProductAdd;
  return std::nullopt;
}

std::vector<Qubit> AdderInstance::operand_qubits() const {
  const std::size_t count = variant == AdderVariant::Add ? n : 2 * n;
  std::vector<Qubit> out(count);
  for (std::size_t q = 0; q < count; ++q) out[q] = static_cast<Qubit>(q);
  return out;
}

AdderInstance generate_adder(std::size_t n, AdderVariant variant) {
  if (n < 1) throw ValidationError("generate_adder: n must be at least 1");
  AdderInstance inst;
  inst.n = n;
  inst.variant = variant;
  GateId next = 0;
  if (variant == AdderVariant::Add) {
    inst.qubit_count = 2 * n;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = j; m < n; ++m) {
        const Angle angle{1, static_cast<std::uint32_t>(m - j + 1)};
        inst.gates.push_back(Gate::controlled_phase(next++, inst.a(j), inst.phi(m), angle));
      }
    }
  } else {
    inst.qubit_count = 4 * n;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = i + j; m < 2 * n; ++m) {
          const Angle angle{1, static_cast<std::uint32_t>(m - i - j + 1)};
          inst.gates.push_back(Gate::doubly_controlled_phase(next++, inst.a(i), inst.b(j), inst.phi(m), angle));
        }
      }
    }
  }
  return inst;
}

std::size_t base_depth(const AdderInstance& instance, const SolverConfig& solver) {
  return optimize(instance.circuit(), ConflictPolicy::qubit_disjoint(), OptimizeOptions{solver, false})
      .report.output_depth;
}

namespace {

std::size_t ceil_log2(std::size_t r) { return r <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(r - 1)); }

// Greedy copy allocation state. Gate p's use of qubit q goes to copy
// chunk(q, slot) where slot is p's index in gates_on_[q].
class CopyPlanner {
 public:
  CopyPlanner(const Circuit& block, const std::optional<std::vector<Qubit>>& replicable)
      : block_(block), gates_on_(block.qubit_count()), slots_(block.size()), copies_(block.qubit_count(), 1),
        allowed_(block.qubit_count(), replicable ? 0 : 1) {
    if (replicable) {
      for (Qubit q : *replicable) {
        if (q >= block.qubit_count()) throw ValidationError("replicable qubit " + std::to_string(q) + " out of range");
        allowed_[q] = 1;
      }
    }
    for (std::size_t p = 0; p < block.size(); ++p) {
      if (!block[p].is_diagonal()) {
        throw ValidationError("parallelize: gate " + std::to_string(block[p].id()) +
                              " is not diagonal; only phase gates can share copied qubits");
      }
      for (Qubit q : block[p].support()) {
        slots_[p].push_back(gates_on_[q].size());
        gates_on_[q].push_back(p);
      }
    }
  }

  std::size_t extra() const { return allocation_.size(); }

  std::size_t max_copies() const { return *std::max_element(copies_.begin(), copies_.end()); }

  bool step() {
    std::size_t best_gain = 0;
    Qubit best = 0;
    for (Qubit q = 0; q < gates_on_.size(); ++q) {
      if (!allowed_[q] || copies_[q] >= gates_on_[q].size()) continue;
      const std::size_t g = gain(q);
      if (g > best_gain) {
        best_gain = g;
        best = q;
      }
    }
    if (best_gain == 0) return false;
    ++copies_[best];
    allocation_.push_back(best);
    return true;
  }

  ParallelizedCircuit materialize() const {
    ParallelizedCircuit out{Circuit(block_.qubit_count(), {}), 0, 0, 0, 0, 0, {}};
    out.copies.resize(block_.qubit_count());
    for (Qubit q = 0; q < block_.qubit_count(); ++q) out.copies[q].push_back(q);
    Qubit next = static_cast<Qubit>(block_.qubit_count());
    for (Qubit q : allocation_) out.copies[q].push_back(next++);

    std::vector<Gate> gates;
    gates.reserve(block_.size());
    for (std::size_t p = 0; p < block_.size(); ++p) {
      const Gate& gate = block_[p];
      gates.push_back(gate.with_qubits([&](Qubit q) {
        const auto support = gate.support();
        const auto s = static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), q) - support.begin());
        return out.copies[q][chunk(q, slots_[p][s], copies_[q])];
      }));
    }
    out.extra_qubits = allocation_.size();
    out.qubit_count = block_.qubit_count() + allocation_.size();
    out.circuit = Circuit(out.qubit_count, std::move(gates));
    return out;
  }

 private:
  std::size_t chunk(Qubit q, std::size_t slot, std::size_t copies) const {
    return slot * copies / gates_on_[q].size();
  }

  // Edges among gates on q that disappear when q gets one more copy.
  std::size_t gain(Qubit q) const {
    const auto& on = gates_on_[q];
    const std::size_t now = copies_[q];
    std::size_t removed = 0;
    for (std::size_t x = 0; x < on.size(); ++x) {
      for (std::size_t y = x + 1; y < on.size(); ++y) {
        if (chunk(q, x, now) != chunk(q, y, now)) continue;  // not joined by q today
        if (chunk(q, x, now + 1) == chunk(q, y, now + 1)) continue;
        if (!shares_other(on[x], on[y], q)) ++removed;
      }
    }
    return removed;
  }

  bool shares_other(std::size_t p, std::size_t r, Qubit skip) const {
    const auto sp = block_[p].support();
    const auto sr = block_[r].support();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < sp.size() && j < sr.size()) {
      if (sp[i] < sr[j]) {
        ++i;
      } else if (sr[j] < sp[i]) {
        ++j;
      } else {
        const Qubit q = sp[i];
        if (q != skip && chunk(q, slots_[p][i], copies_[q]) == chunk(q, slots_[r][j], copies_[q])) return true;
        ++i;
        ++j;
      }
    }
    return false;
  }

  const Circuit& block_;
  std::vector<std::vector<std::size_t>> gates_on_;
  std::vector<std::vector<std::size_t>> slots_;
  std::vector<std::size_t> copies_;
  std::vector<char> allowed_;
  std::vector<Qubit> allocation_;
};

ParallelizedCircuit evaluate(const CopyPlanner& planner, const ParallelizeOptions& options) {
  ParallelizedCircuit out = planner.materialize();
  OptimizationResult opt =
      optimize(out.circuit, ConflictPolicy::qubit_disjoint(), OptimizeOptions{options.solver, false});
  out.circuit = std::move(opt.circuit);
  out.rotation_depth = opt.report.output_depth;
  out.fanout_overhead = 2 * ceil_log2(planner.max_copies());
  out.depth = out.rotation_depth + (options.count_fanout_overhead ? out.fanout_overhead : 0);
  return out;
}

ParallelizeOptions scoped(const AdderInstance& instance, ParallelizeOptions options, ReplicaScope scope) {
  if (scope == ReplicaScope::ControlsOnly) options.replicable = instance.operand_qubits();
  return options;
}

}  // namespace

ParallelizedCircuit parallelize_with_extra_qubits(const Circuit& block, std::size_t budget,
                                                  const ParallelizeOptions& options) {
  CopyPlanner planner(block, options.replicable);
  while (planner.extra() < budget && planner.step()) {
  }
  return evaluate(planner, options);
}

ParallelizedCircuit parallelize_with_extra_qubits(const AdderInstance& instance, std::size_t budget,
                                                  const ParallelizeOptions& options, ReplicaScope scope) {
  return parallelize_with_extra_qubits(instance.circuit(), budget, scoped(instance, options, scope));
}

bool replicas_sound(const Circuit& original, const ParallelizedCircuit& result) {
  if (result.copies.size() != original.qubit_count() || result.circuit.size() != original.size()) return false;
  std::vector<Qubit> origin(result.qubit_count, 0);
  std::vector<char> seen(result.qubit_count, 0);
  for (Qubit q = 0; q < result.copies.size(); ++q) {
    if (result.copies[q].empty() || result.copies[q].front() != q) return false;
    for (Qubit c : result.copies[q]) {
      if (c >= result.qubit_count || seen[c]) return false;
      seen[c] = 1;
      origin[c] = q;
    }
  }
  const auto lift = [&](std::span<const Qubit> qubits) {
    std::vector<Qubit> out;
    for (Qubit c : qubits) out.push_back(origin[c]);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<char> used(original.size(), 0);
  for (const Gate& gate : result.circuit.gates()) {
    const auto pos = original.position_of(gate.id());
    if (!pos || used[*pos]) return false;
    used[*pos] = 1;
    const Gate& src = original[*pos];
    if (gate.kind() != src.kind() || gate.angle() != src.angle()) return false;
    const auto controls = lift(gate.controls());
    const auto targets = lift(gate.targets());
    if (!std::equal(controls.begin(), controls.end(), src.controls().begin(), src.controls().end())) return false;
    if (!std::equal(targets.begin(), targets.end(), src.targets().begin(), src.targets().end())) return false;
  }
  return true;
}

CostMetrics cost_metrics(std::size_t depth, std::size_t qubits) {
  return CostMetrics{depth * qubits, depth * depth * qubits};
}

namespace {

double ratio(std::size_t value, std::size_t minimum) {
  return minimum == 0 ? 1.0 : static_cast<double>(value) / static_cast<double>(minimum);
}

}  // namespace

double TradeoffCurve::space_extreme_s_ratio() const {
  return ratio(points.front().cost.space, points[s_optimal].cost.space);
}
double TradeoffCurve::space_extreme_t_ratio() const {
  return ratio(points.front().cost.time, points[t_optimal].cost.time);
}
double TradeoffCurve::time_extreme_s_ratio() const {
  return ratio(points.back().cost.space, points[s_optimal].cost.space);
}
double TradeoffCurve::time_extreme_t_ratio() const {
  return ratio(points.back().cost.time, points[t_optimal].cost.time);
}

TradeoffCurve build_tradeoff_curve(const AdderInstance& instance, std::size_t budget_max,
                                   const ParallelizeOptions& options, ReplicaScope scope) {
  const ParallelizeOptions opts = scoped(instance, options, scope);
  const Circuit block = instance.circuit();
  CopyPlanner planner(block, opts.replicable);
  TradeoffCurve curve;
  for (std::size_t budget = 0; budget <= budget_max; ++budget) {
    if (budget > 0 && !planner.step()) break;
    const ParallelizedCircuit p = evaluate(planner, opts);
    if (!curve.points.empty() && p.depth >= curve.points.back().depth) continue;
    curve.points.push_back(
        TradeoffPoint{p.extra_qubits, p.qubit_count, p.rotation_depth, p.depth, cost_metrics(p.depth, p.qubit_count)});
  }
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    if (curve.points[i].cost.space < curve.points[curve.s_optimal].cost.space) curve.s_optimal = i;
    if (curve.points[i].cost.time < curve.points[curve.t_optimal].cost.time) curve.t_optimal = i;
  }
  return curve;
}

namespace {

nlohmann::json point_json(const TradeoffCurve& curve, std::size_t index) {
  const TradeoffPoint& p = curve.points[index];
  return nlohmann::json{{"index", index},       {"qubits", p.qubit_count}, {"extra_qubits", p.extra_qubits},
                        {"depth", p.depth},     {"rotation_depth", p.rotation_depth},
                        {"S", p.cost.space},    {"T", p.cost.time}};
}

}  // namespace

nlohmann::json tradeoff_summary_json(const TradeoffCurve& curve) {
  return nlohmann::json{
      {"points", curve.points.size()},
      {"s_optimal", point_json(curve, curve.s_optimal)},
      {"t_optimal", point_json(curve, curve.t_optimal)},
      {"space_extreme", point_json(curve, 0)},
      {"time_extreme", point_json(curve, curve.points.size() - 1)},
      {"ratios",
       {{"space_extreme_S", curve.space_extreme_s_ratio()},
        {"space_extreme_T", curve.space_extreme_t_ratio()},
        {"time_extreme_S", curve.time_extreme_s_ratio()},
        {"time_extreme_T", curve.time_extreme_t_ratio()}}},
  };
}

std::string tradeoff_csv(const TradeoffCurve& curve) {
  std::ostringstream out;
  out << "qubits,depth,S,T\n";
  for (const TradeoffPoint& p : curve.points) {
    out << p.qubit_count << ',' << p.depth << ',' << p.cost.space << ',' << p.cost.time << '\n';
  }
  return out.str();
}

}  // namespace gatecolor
