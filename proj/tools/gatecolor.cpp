#include <iostream>

#include <CLI11.hpp>

#include "gatecolor/cli.hpp"

namespace {

using gatecolor::cli::Command;
using gatecolor::cli::RunConfig;

void add_io(CLI::App* cmd, RunConfig& config, bool needs_input) {
  if (needs_input) cmd->add_option("--in", config.input, "Input JSON file")->required();
  cmd->add_option("--out", config.output, "Output file (default: stdout)");
}

void add_solver(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--solver", config.solver, "greedy, dsatur or exact");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate ordering by conflict-graph coloring"};
  app.require_subcommand(1);
  RunConfig config;

  auto* optimize = app.add_subcommand("optimize", "Reorder a commuting circuit to reduce depth");
  add_io(optimize, config, true);
  add_solver(optimize, config);
  optimize->add_flag("--allow-noncommuting", config.allow_noncommuting,
                     "Skip the structural commutation check");
  optimize->callback([&] { config.command = Command::Optimize; });

  auto* graph = app.add_subcommand("graph", "Write the conflict graph (.dot or .json by --out extension)");
  add_io(graph, config, true);
  add_solver(graph, config);
  graph->callback([&] { config.command = Command::Graph; });

  auto* chromatic = app.add_subcommand("chromatic", "Color a circuit's conflict graph or a graph file");
  add_io(chromatic, config, true);
  add_solver(chromatic, config);
  chromatic->callback([&] { config.command = Command::Chromatic; });

  auto* gen = app.add_subcommand("gen", "Generate benchmark circuits");
  gen->require_subcommand(1);
  auto* gen_mult = gen->add_subcommand("mult", "GF(2^n) multiplier Toffoli stages");
  gen_mult->add_option("--n", config.n, "Field degree")->required();
  add_io(gen_mult, config, false);
  gen_mult->callback([&] { config.command = Command::GenMult; });
  auto* gen_add = gen->add_subcommand("qft-add", "QFT adder rotation block");
  gen_add->add_option("--n", config.n, "Operand width")->required();
  gen_add->add_option("--variant", config.variant, "add or product");
  add_io(gen_add, config, false);
  gen_add->callback([&] { config.command = Command::GenQftAdd; });

  auto* mult = app.add_subcommand("optimize-mult", "Optimize both multiplier stages and report Toffoli depth");
  mult->add_option("--n", config.n, "Field degree")->required();
  add_solver(mult, config);
  mult->add_option("--seed", config.seed, "Seed for restarts");
  add_io(mult, config, false);
  mult->callback([&] { config.command = Command::OptimizeMult; });

  auto* tradeoff = app.add_subcommand("tradeoff", "Depth/qubit tradeoff curve for a QFT adder");
  tradeoff->add_option("--n", config.n, "Operand width")->required();
  tradeoff->add_option("--variant", config.variant, "add or product");
  tradeoff->add_option("--budget-max", config.budget_max, "Largest extra-qubit budget");
  add_solver(tradeoff, config);
  tradeoff->add_flag("--no-fanout-overhead", [&](std::int64_t) { config.fanout_overhead = false; },
                     "Report rotation depth only");
  add_io(tradeoff, config, false);
  tradeoff->callback([&] { config.command = Command::Tradeoff; });

  auto* verify = app.add_subcommand("verify", "Check the reduction properties on random circuits");
  verify->add_option("--trials", config.trials, "Number of random circuits");
  verify->add_option("--max-gates", config.max_gates, "Largest circuit size (3..10)");
  verify->add_option("--seed", config.seed, "Seed");
  add_io(verify, config, false);
  verify->callback([&] { config.command = Command::Verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gatecolor::cli::kInvalid;
  }
  return gatecolor::cli::run(config, std::cout, std::cerr);
}
