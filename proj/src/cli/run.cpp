#include "gatecolor/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gatecolor/circuit_json.hpp"
#include "gatecolor/coloring.hpp"
#include "gatecolor/commutation.hpp"
#include "gatecolor/conflict_graph.hpp"
#include "gatecolor/errors.hpp"
#include "gatecolor/mult.hpp"
#include "gatecolor/qft_adder.hpp"
#include "gatecolor/reduction.hpp"

namespace gatecolor::cli {
namespace {

// Below this size DSatur may miss the 2n - 1 bound, so optimize-mult adds
// seeded restarts.
constexpr std::size_t kMultRestartBelow = 20;
constexpr std::size_t kMultRestarts = 32;
constexpr std::size_t kVerifyMaxGates = 10;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw ValidationError("cannot write " + path);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const std::string& require_input(const RunConfig& config) {
  if (!config.input) throw ValidationError("--in is required");
  return *config.input;
}

SolverConfig solver_config(const RunConfig& config, SolverKind fallback) {
  SolverConfig solver;
  solver.kind = fallback;
  if (config.solver) {
    const auto kind = parse_solver(*config.solver);
    if (!kind) throw ValidationError("unknown solver '" + *config.solver + "' (expected greedy, dsatur or exact)");
    solver.kind = *kind;
  }
  return solver;
}

// Artifact to --out when given, else to out.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output) {
    write_file(*config.output, text);
  } else {
    out << text;
  }
}

int cmd_optimize(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CircuitDocument doc = parse_circuit_document(read_file(require_input(config)));
  const ConflictPolicy policy = ConflictPolicy::qubit_disjoint();
  const OptimizeOptions options{solver_config(config, SolverKind::Dsatur), config.allow_noncommuting};
  if (config.allow_noncommuting) {
    if (const auto pair = find_uncertified_pair(doc.circuit)) {
      err << "warning: gates " << pair->first << " and " << pair->second
          << " are not certified to commute; reordering anyway\n";
    }
  }

  // Phases are optimized one at a time and never interleaved.
  const std::size_t boundary = doc.phase_boundary.value_or(0);
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  if (boundary > 0 && boundary < doc.circuit.size()) {
    segments = {{0, boundary}, {boundary, doc.circuit.size()}};
  } else {
    segments = {{0, doc.circuit.size()}};
  }

  OptimizationReport total;
  total.solver_name = std::string(solver_name(options.solver.kind));
  std::vector<Gate> gates;
  for (const auto& [begin, end] : segments) {
    const auto all = doc.circuit.gates();
    const Circuit part(doc.circuit.qubit_count(), std::vector<Gate>(all.begin() + begin, all.begin() + end));
    const OptimizationResult result = optimize(part, policy, options);
    total.input_depth += result.report.input_depth;
    total.output_depth += result.report.output_depth;
    total.color_count += result.report.color_count;
    total.lower_bound += result.report.lower_bound;
    total.gap_bound += result.report.gap_bound;
    total.kept_input_order = total.kept_input_order || result.report.kept_input_order;
    total.elapsed += result.report.elapsed;
    gates.insert(gates.end(), result.circuit.gates().begin(), result.circuit.gates().end());
  }
  const CircuitDocument optimized{Circuit(doc.circuit.qubit_count(), std::move(gates)), doc.phase_boundary};

  err << "optimize: " << total.input_depth << " -> " << total.output_depth << " in "
      << std::chrono::duration<double, std::milli>(total.elapsed).count() << " ms\n";
  if (config.output) {
    write_file(*config.output, dump_json(document_to_json(optimized)));
    out << dump_json(report_to_json(total));
  } else {
    out << dump_json(nlohmann::json{{"circuit", document_to_json(optimized)}, {"report", report_to_json(total)}});
  }
  return kOk;
}

int cmd_graph(const RunConfig& config, std::ostream& out) {
  const CircuitDocument doc = parse_circuit_document(read_file(require_input(config)));
  const ConflictGraph graph = construct_graph(doc.circuit, ConflictPolicy::qubit_disjoint());
  if (config.output && ends_with(*config.output, ".json")) {
    emit(config, out, dump_json(graph_to_json(graph)));
    return kOk;
  }
  const Coloring coloring = solve_coloring(graph, solver_config(config, SolverKind::Dsatur));
  emit(config, out, export_dot(graph, &coloring));
  return kOk;
}

int cmd_chromatic(const RunConfig& config, std::ostream& out) {
  const std::string text = read_file(require_input(config));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  const ConflictGraph graph = j.is_object() && j.contains("vertices")
                                  ? graph_from_json(j)
                                  : construct_graph(document_from_json(j).circuit, ConflictPolicy::qubit_disjoint());
  const SolverConfig solver = solver_config(config, SolverKind::Exact);
  const Coloring coloring = solve_coloring(graph, solver);
  const std::size_t clique = greedy_clique(graph).size();
  emit(config, out,
       dump_json(nlohmann::json{{"colors", coloring.count()},
                                {"lower_bound", clique},
                                {"exact", solver.kind == SolverKind::Exact || coloring.count() == clique},
                                {"solver", solver_name(solver.kind)},
                                {"coloring", coloring_to_json(coloring)}}));
  return kOk;
}

std::size_t require_n(const RunConfig& config) {
  if (config.n == 0) throw ValidationError("--n is required");
  return config.n;
}

int cmd_gen_mult(const RunConfig& config, std::ostream& out) {
  emit(config, out, dump_json(document_to_json(generate_mult(require_n(config)).document())));
  return kOk;
}

AdderVariant require_variant(const RunConfig& config) {
  const auto variant = parse_variant(config.variant);
  if (!variant) throw ValidationError("unknown variant '" + config.variant + "' (expected add or product)");
  return *variant;
}

int cmd_gen_qft_add(const RunConfig& config, std::ostream& out) {
  const AdderInstance inst = generate_adder(require_n(config), require_variant(config));
  emit(config, out, dump_json(circuit_to_json(inst.circuit())));
  return kOk;
}

int cmd_optimize_mult(const RunConfig& config, std::ostream& out) {
  MultOptions options;
  options.solver = solver_config(config, SolverKind::Dsatur);
  options.seed = config.seed;
  const std::size_t n = require_n(config);
  if (n < kMultRestartBelow) options.restarts = kMultRestarts;
  emit(config, out, dump_json(mult_result_to_json(optimize_mult(n, options))));
  return kOk;
}

int cmd_tradeoff(const RunConfig& config, std::ostream& out) {
  const AdderInstance inst = generate_adder(require_n(config), require_variant(config));
  ParallelizeOptions options;
  options.solver = solver_config(config, SolverKind::Dsatur);
  options.count_fanout_overhead = config.fanout_overhead;
  const TradeoffCurve curve = build_tradeoff_curve(inst, config.budget_max, options);
  const std::string summary = dump_json(tradeoff_summary_json(curve));
  if (config.output) {
    write_file(*config.output, tradeoff_csv(curve));
    out << summary;
  } else {
    out << tradeoff_csv(curve) << '\n' << summary;
  }
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  if (config.max_gates < 3 || config.max_gates > kVerifyMaxGates) {
    throw ValidationError("--max-gates must be between 3 and " + std::to_string(kVerifyMaxGates));
  }
  VerifyOptions options;
  options.trials = config.trials;
  options.max_gates = config.max_gates;
  options.seed = config.seed;
  const VerificationReport report = verify_propositions(options);
  const auto frac = [&](std::size_t passed) { return std::to_string(passed) + "/" + std::to_string(report.trials); };
  std::string text = frac(report.minimum_coloring_passes) + " P1, " + frac(report.minimum_depth_passes) + " P2, " +
                     frac(report.color_bound_passes) + " Remark1\n" + "gap bound: " + frac(report.gap_passes) + "\n";
  emit(config, out, text);
  return report.all_passed() ? kOk : kInvalid;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Optimize:
        return cmd_optimize(config, out, err);
      case Command::Graph:
        return cmd_graph(config, out);
      case Command::Chromatic:
        return cmd_chromatic(config, out);
      case Command::GenMult:
        return cmd_gen_mult(config, out);
      case Command::GenQftAdd:
        return cmd_gen_qft_add(config, out);
      case Command::OptimizeMult:
        return cmd_optimize_mult(config, out);
      case Command::Tradeoff:
        return cmd_tradeoff(config, out);
      case Command::Verify:
        return cmd_verify(config, out);
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace gatecolor::cli
