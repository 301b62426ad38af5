#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace gatecolor::cli {

/// Seed used when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 24301;

enum class Command { Optimize, Graph, Chromatic, GenMult, GenQftAdd, OptimizeMult, Tradeoff, Verify };

enum ExitCode : int { kOk = 0, kInvalid = 1, kBudget = 2 };

struct RunConfig {
  Command command = Command::Optimize;
  std::optional<std::string> input;
  std::optional<std::string> output;
  /// Unset picks the command's default: exact for chromatic, dsatur elsewhere.
  std::optional<std::string> solver;
  std::uint64_t seed = kDefaultSeed;
  std::size_t n = 0;
  std::string variant = "add";
  std::size_t trials = 100;
  std::size_t max_gates = 8;
  std::size_t budget_max = 0;
  bool allow_noncommuting = false;
  bool fanout_overhead = true;
};

/// Executes one command. Artifacts go to config.output or, when unset, to
/// out; diagnostics go to err. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gatecolor::cli
