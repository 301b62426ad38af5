#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gatecolor/bitset.hpp"
#include "gatecolor/circuit.hpp"
#include "gatecolor/policy.hpp"

namespace gatecolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Coloring;

/// Simple undirected graph whose vertices stand for gates. Keeps sorted
/// neighbor lists and, up to 32768 vertices, a bit-matrix for constant-time
/// adjacency and SIMD row operations. Immutable after construction.
class ConflictGraph {
 public:
  ConflictGraph() : ConflictGraph(0, {}) {}

  /// Vertex v maps to gate id v. Rejects self-loops and out-of-range
  /// endpoints; duplicate edges (in either orientation) collapse.
  ConflictGraph(std::size_t vertex_count, std::span<const Edge> edges);

  /// Same, with an explicit vertex → gate id map.
  ConflictGraph(std::vector<GateId> vertex_gates, std::span<const Edge> edges);

  std::size_t vertex_count() const { return vertex_gates_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_matrix() const;
  /// Adjacency row of v as bit words (row_words() long). Requires has_matrix().
  std::span<const Word> row(Vertex v) const;
  std::size_t row_words() const { return row_words_; }

  GateId vertex_gate(Vertex v) const { return vertex_gates_[v]; }
  std::span<const GateId> vertex_gates() const { return vertex_gates_; }

  /// Edges as (i, j) with i < j, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Identical vertex count and identical edge sets under identical labels.
  /// The vertex → gate map is not compared.
  bool operator==(const ConflictGraph& other) const;

 private:
  void build(std::span<const Edge> edges);

  std::vector<GateId> vertex_gates_;
  std::size_t row_words_ = 0;
  std::vector<Word> rows_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Vertex i is gate i of the circuit; edge (i, j) iff the policy says the two
/// gates are not parallelizable. The default policy is served from a
/// per-qubit incidence index; other policies are evaluated pairwise.
ConflictGraph construct_graph(const Circuit& circuit, const ConflictPolicy& policy);

/// Literal pairwise construction (every i > j pair goes through the policy).
/// Reference route for cross-checking construct_graph.
ConflictGraph construct_graph_pairwise(const Circuit& circuit, const ConflictPolicy& policy);

/// Builds the graph of the permuted circuit and compares it with the
/// original graph relabeled through the permutation. permutation[i] is the
/// original position of the gate placed at position i. Throws
/// ValidationError if permutation is not a bijection on positions.
bool permutation_invariance_check(const Circuit& circuit, std::span<const std::size_t> permutation,
                                  const ConflictPolicy& policy);

/// Graphviz DOT. When a coloring is given it must be proper; vertices then
/// carry a palette color and a "color" index attribute.
std::string export_dot(const ConflictGraph& graph, const Coloring* coloring = nullptr);

/// {"vertices": N, "edges": [[i, j], ...]} with sorted edges.
nlohmann::json graph_to_json(const ConflictGraph& graph);
ConflictGraph graph_from_json(const nlohmann::json& j);

}  // namespace gatecolor
