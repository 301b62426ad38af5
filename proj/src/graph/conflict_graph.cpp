#include "gatecolor/conflict_graph.hpp"

#include <algorithm>
#include <numeric>

#include "gatecolor/errors.hpp"

namespace gatecolor {

namespace {

// Above this many vertices the bit-matrix is skipped (it would need more than
// 128 MiB) and adjacency queries fall back to binary search.
constexpr std::size_t kMatrixVertexLimit = 32768;

std::vector<GateId> identity_gates(std::size_t n) {
  std::vector<GateId> ids(n);
  std::iota(ids.begin(), ids.end(), GateId{0});
  return ids;
}

}  // namespace

ConflictGraph::ConflictGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : ConflictGraph(identity_gates(vertex_count), edges) {}

ConflictGraph::ConflictGraph(std::vector<GateId> vertex_gates, std::span<const Edge> edges)
    : vertex_gates_(std::move(vertex_gates)) {
  build(edges);
}

void ConflictGraph::build(std::span<const Edge> input) {
  const std::size_t n = vertex_gates_.size();
  std::vector<Edge> edges;
  edges.reserve(input.size());
  for (auto [u, v] : input) {
    if (u >= n || v >= n) {
      throw ValidationError("graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") references a vertex >= " + std::to_string(n));
    }
    if (u == v) throw ValidationError("graph: self-loop on vertex " + std::to_string(u));
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edge_count_ = edges.size();

  offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }

  if (n <= kMatrixVertexLimit) {
    row_words_ = words_for_bits(n);
    rows_.assign(n * row_words_, 0);
    for (auto [u, v] : edges) {
      rows_[u * row_words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
      rows_[v * row_words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
    }
  }
}

bool ConflictGraph::has_matrix() const { return rows_.size() == vertex_count() * row_words_ && row_words_ > 0; }

bool ConflictGraph::adjacent(Vertex u, Vertex v) const {
  if (has_matrix()) return (rows_[u * row_words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::span<const Word> ConflictGraph::row(Vertex v) const {
  if (!has_matrix()) throw std::logic_error("graph: adjacency matrix not available for this size");
  return {rows_.data() + v * row_words_, row_words_};
}

std::vector<Edge> ConflictGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool ConflictGraph::operator==(const ConflictGraph& other) const {
  return vertex_count() == other.vertex_count() && offsets_ == other.offsets_ && adjacency_ == other.adjacency_;
}

ConflictGraph construct_graph(const Circuit& circuit, const ConflictPolicy& policy) {
  if (!policy.is_qubit_disjoint()) return construct_graph_pairwise(circuit, policy);

  std::vector<std::vector<Vertex>> on_qubit(circuit.qubit_count());
  for (Vertex i = 0; i < circuit.size(); ++i) {
    for (Qubit q : circuit[i].support()) on_qubit[q].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& gates : on_qubit) {
    for (std::size_t a = 0; a < gates.size(); ++a) {
      for (std::size_t b = a + 1; b < gates.size(); ++b) edges.emplace_back(gates[a], gates[b]);
    }
  }
  std::vector<GateId> ids;
  ids.reserve(circuit.size());
  for (const Gate& g : circuit.gates()) ids.push_back(g.id());
  return ConflictGraph(std::move(ids), edges);
}

ConflictGraph construct_graph_pairwise(const Circuit& circuit, const ConflictPolicy& policy) {
  std::vector<Edge> edges;
  const auto gates = circuit.gates();
  for (Vertex i = 0; i < gates.size(); ++i) {
    for (Vertex j = 0; j < i; ++j) {
      if (!policy.parallelizable(gates[i], gates[j])) edges.emplace_back(j, i);
    }
  }
  std::vector<GateId> ids;
  ids.reserve(gates.size());
  for (const Gate& g : gates) ids.push_back(g.id());
  return ConflictGraph(std::move(ids), edges);
}

bool permutation_invariance_check(const Circuit& circuit, std::span<const std::size_t> permutation,
                                  const ConflictPolicy& policy) {
  const Circuit permuted = circuit.reordered(permutation);  // validates the bijection
  const ConflictGraph original = construct_graph(circuit, policy);
  const ConflictGraph rebuilt = construct_graph(permuted, policy);

  // Vertex i of the permuted graph is vertex permutation[i] of the original.
  std::vector<Edge> relabeled;
  for (auto [u, v] : rebuilt.edges()) {
    relabeled.emplace_back(static_cast<Vertex>(permutation[u]), static_cast<Vertex>(permutation[v]));
  }
  return ConflictGraph(original.vertex_count(), relabeled) == original;
}

}  // namespace gatecolor
