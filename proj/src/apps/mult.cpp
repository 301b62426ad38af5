#include "gatecolor/mult.hpp"

#include <algorithm>
#include <string>

#include "gatecolor/errors.hpp"
#include "gatecolor/reduction.hpp"

namespace gatecolor {

Circuit MultInstance::phase1_circuit() const { return Circuit(qubit_count(), phase1); }
Circuit MultInstance::phase3_circuit() const { return Circuit(qubit_count(), phase3); }

CircuitDocument MultInstance::document() const {
  std::vector<Gate> gates = phase1;
  gates.insert(gates.end(), phase3.begin(), phase3.end());
  return CircuitDocument{Circuit(qubit_count(), std::move(gates)), phase1.size()};
}

MultInstance generate_mult(std::size_t n) {
  if (n < 2) throw ValidationError("generate_mult: n must be at least 2, got " + std::to_string(n));
  MultInstance inst;
  inst.n = n;
  GateId next = 0;
  // Stage 1: out[k] collects a_i b_j with i + j = n + k.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n; i-- > k + 1;) {
      const std::size_t j = n + k - i;
      inst.phase1.push_back(Gate::toffoli(next++, inst.a(i), inst.b(j), inst.out(k)));
    }
  }
  // Stage 3: out[k] collects a_i b_j with i + j = k.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k + 1; i-- > 0;) {
      inst.phase3.push_back(Gate::toffoli(next++, inst.a(i), inst.b(k - i), inst.out(k)));
    }
  }
  return inst;
}

std::size_t toffoli_depth_lower_bound(std::size_t n) {
  if (n < 6) throw ValidationError("bound formula not applicable for n < 6 (got " + std::to_string(n) + ")");
  return 2 * n - 1;
}

namespace {

std::size_t optimize_phase(const Circuit& phase, const MultOptions& options) {
  const ConflictPolicy policy = ConflictPolicy::qubit_disjoint();
  OptimizeOptions opt{options.solver, false};
  std::size_t best = optimize(phase, policy, opt).report.output_depth;
  if (options.solver.kind != SolverKind::Dsatur) return best;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    opt.solver.dsatur.seed = options.seed + r;
    best = std::min(best, optimize(phase, policy, opt).report.output_depth);
  }
  return best;
}

}  // namespace

MultResult optimize_mult(std::size_t n, const MultOptions& options) {
  const MultInstance inst = generate_mult(n);
  MultResult result;
  result.n = n;
  result.phase1_depth = optimize_phase(inst.phase1_circuit(), options);
  result.phase3_depth = optimize_phase(inst.phase3_circuit(), options);
  result.total = result.phase1_depth + result.phase3_depth;
  result.baseline = 4 * n - 4;
  if (n >= 6) result.bound = toffoli_depth_lower_bound(n);
  return result;
}

nlohmann::json mult_result_to_json(const MultResult& result) {
  nlohmann::json j{
      {"n", result.n},
      {"phase1_depth", result.phase1_depth},
      {"phase3_depth", result.phase3_depth},
      {"total", result.total},
      {"baseline", result.baseline},
  };
  j["bound"] = result.bound ? nlohmann::json(*result.bound) : nlohmann::json(nullptr);
  return j;
}

}  // namespace gatecolor
