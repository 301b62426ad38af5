#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "gatecolor/circuit.hpp"
#include "gatecolor/circuit_json.hpp"
#include "gatecolor/coloring.hpp"

namespace gatecolor {

/// Toffoli stages of a GF(2^n) multiplier. Registers: a = [0, n),
/// b = [n, 2n), out = [2n, 3n). The CNOT reduction between the stages is
/// not synthesized.
struct MultInstance {
  std::size_t n = 0;
  /// a_i b_j with i + j >= n, targeting out[i + j - n].
  std::vector<Gate> phase1;
  /// a_i b_j with i + j < n, targeting out[i + j].
  std::vector<Gate> phase3;

  Qubit a(std::size_t i) const { return static_cast<Qubit>(i); }
  Qubit b(std::size_t j) const { return static_cast<Qubit>(n + j); }
  Qubit out(std::size_t k) const { return static_cast<Qubit>(2 * n + k); }
  std::size_t qubit_count() const { return 3 * n; }

  Circuit phase1_circuit() const;
  Circuit phase3_circuit() const;
  /// Both stages concatenated; phase_boundary marks the first stage-3 gate.
  CircuitDocument document() const;
};

/// Gates are listed by ascending target, then descending i. Ids run through
/// phase 1 first. Throws ValidationError for n < 2.
MultInstance generate_mult(std::size_t n);

/// 2n - 1. Throws ValidationError for n < 6, where no closed form is known.
std::size_t toffoli_depth_lower_bound(std::size_t n);

struct MultOptions {
  SolverConfig solver;
  /// Extra seeded DSatur runs per phase (ignored for other solvers); the
  /// best result is kept.
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
};

struct MultResult {
  std::size_t n = 0;
  std::size_t phase1_depth = 0;
  std::size_t phase3_depth = 0;
  std::size_t total = 0;
  /// 4n - 4.
  std::size_t baseline = 0;
  /// 2n - 1 for n >= 6.
  std::optional<std::size_t> bound;
};

/// Optimizes each stage on its own and sums the depths.
MultResult optimize_mult(std::size_t n, const MultOptions& options = {});

/// {"n", "phase1_depth", "phase3_depth", "total", "baseline", "bound"}; bound
/// is null below n = 6.
nlohmann::json mult_result_to_json(const MultResult& result);

}  // namespace gatecolor
