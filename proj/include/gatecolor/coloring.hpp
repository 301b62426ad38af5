#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gatecolor/conflict_graph.hpp"

namespace gatecolor {

using Color = std::uint32_t;

/// Vertex → color map with colors drawn from {1, ..., count()} and every
/// color in that range used at least once.
class Coloring {
 public:
  Coloring() = default;

  /// Takes colors that already form the contiguous range 1..k; throws
  /// ValidationError otherwise.
  static Coloring from_colors(std::vector<Color> colors);

  /// Relabels arbitrary positive colors onto 1..k, preserving their relative
  /// order.
  static Coloring normalized(std::span<const Color> raw);

  std::size_t size() const { return colors_.size(); }
  std::size_t count() const { return count_; }
  Color color(Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const { return colors_; }

  bool operator==(const Coloring&) const = default;

 private:
  Coloring(std::vector<Color> colors, std::size_t count) : colors_(std::move(colors)), count_(count) {}

  std::vector<Color> colors_;
  std::size_t count_ = 0;
};

/// True iff colors has one entry per vertex and no edge is monochromatic.
bool is_proper(const ConflictGraph& graph, std::span<const Color> colors);

/// A conflict graph with a proper coloring of every vertex.
class ColoredGraph {
 public:
  /// Throws ValidationError when the coloring does not cover the vertex set
  /// or is not proper.
  ColoredGraph(std::shared_ptr<const ConflictGraph> graph, Coloring coloring);

  const ConflictGraph& graph() const { return *graph_; }
  const std::shared_ptr<const ConflictGraph>& graph_ptr() const { return graph_; }
  const Coloring& coloring() const { return coloring_; }
  std::size_t color_count() const { return coloring_.count(); }

 private:
  std::shared_ptr<const ConflictGraph> graph_;
  Coloring coloring_;
};

/// Each vertex, in the given order, gets the smallest color absent from its
/// already-colored neighbors. Throws ValidationError if order is not a
/// permutation of the vertices.
Coloring color_greedy(const ConflictGraph& graph, std::span<const Vertex> order);

enum class DsaturTieBreak {
  /// Among maximum-saturation vertices prefer the largest degree in the
  /// uncolored subgraph, then the smallest rank.
  LargestUncoloredDegree,
  /// Smallest rank only.
  SmallestIndex,
};

struct DsaturOptions {
  DsaturTieBreak tie_break = DsaturTieBreak::LargestUncoloredDegree;
  /// When set, the final tie-break ranks vertices by a seeded random
  /// permutation instead of by index.
  std::optional<std::uint64_t> seed;
};

/// Brélaz's DSatur: repeatedly color the uncolored vertex with the most
/// distinct neighbor colors using the smallest feasible color.
Coloring color_dsatur(const ConflictGraph& graph, const DsaturOptions& options = {});

struct ExactOptions {
  std::uint64_t node_budget = 5'000'000;
};

/// Minimum coloring by DSatur-ordered branch and bound, seeded with a DSatur
/// upper bound and a greedy clique lower bound. Throws BudgetExceeded when the
/// search visits more than node_budget nodes.
Coloring color_exact(const ConflictGraph& graph, const ExactOptions& options = {});

/// Greedily grown clique (vertices sorted ascending); its size is a lower
/// bound on the chromatic number.
std::vector<Vertex> greedy_clique(const ConflictGraph& graph);

enum class SolverKind { Greedy, Dsatur, Exact };

std::string_view solver_name(SolverKind kind);
std::optional<SolverKind> parse_solver(std::string_view name);

struct SolverConfig {
  SolverKind kind = SolverKind::Dsatur;
  DsaturOptions dsatur;
  ExactOptions exact;
};

/// Dispatches to the configured solver (greedy uses index order).
Coloring solve_coloring(const ConflictGraph& graph, const SolverConfig& config);

/// {"colors": [c_0, c_1, ...], "count": k}
nlohmann::json coloring_to_json(const Coloring& coloring);

}  // namespace gatecolor
