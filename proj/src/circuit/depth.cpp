#include "gatecolor/depth.hpp"

#include <algorithm>
#include <unordered_set>

namespace gatecolor {

namespace {

DepthResult block_depth_disjoint(const Circuit& circuit) {
  DepthResult result;
  // stamp[q] == current layer number (1-based) iff q is used in the open layer.
  std::vector<std::size_t> stamp(circuit.qubit_count(), 0);
  for (const Gate& gate : circuit.gates()) {
    const std::size_t open = result.layering.layers.size();
    const bool fits = open > 0 && std::none_of(gate.support().begin(), gate.support().end(),
                                               [&](Qubit q) { return stamp[q] == open; });
    if (!fits) result.layering.layers.emplace_back();
    const std::size_t layer = result.layering.layers.size();
    for (Qubit q : gate.support()) stamp[q] = layer;
    result.layering.layers.back().push_back(gate.id());
  }
  result.depth = result.layering.layers.size();
  return result;
}

DepthResult block_depth_generic(const Circuit& circuit, const ConflictPolicy& policy) {
  DepthResult result;
  std::vector<std::size_t> block;  // positions in the open layer
  const auto gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const bool fits = !block.empty() && std::all_of(block.begin(), block.end(), [&](std::size_t j) {
      return policy.parallelizable(gates[j], gates[i]);
    });
    if (!fits) {
      block.clear();
      result.layering.layers.emplace_back();
    }
    block.push_back(i);
    result.layering.layers.back().push_back(gates[i].id());
  }
  result.depth = result.layering.layers.size();
  return result;
}

DepthResult to_result(const Circuit& circuit, const std::vector<std::size_t>& level, std::size_t depth) {
  DepthResult result;
  result.depth = depth;
  result.layering.layers.resize(depth);
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    result.layering.layers[level[i] - 1].push_back(circuit[i].id());
  }
  return result;
}

}  // namespace

DepthResult compute_depth(const Circuit& circuit, const ConflictPolicy& policy) {
  if (policy.is_qubit_disjoint()) return block_depth_disjoint(circuit);
  return block_depth_generic(circuit, policy);
}

DepthResult compute_depth_asap(const Circuit& circuit, const ConflictPolicy& policy) {
  const auto gates = circuit.gates();
  std::vector<std::size_t> level(gates.size(), 0);
  std::size_t depth = 0;
  if (policy.is_qubit_disjoint()) {
    std::vector<std::size_t> last(circuit.qubit_count(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
      std::size_t below = 0;
      for (Qubit q : gates[i].support()) below = std::max(below, last[q]);
      level[i] = below + 1;
      for (Qubit q : gates[i].support()) last[q] = level[i];
      depth = std::max(depth, level[i]);
    }
  } else {
    for (std::size_t i = 0; i < gates.size(); ++i) {
      std::size_t below = 0;
      for (std::size_t j = 0; j < i; ++j) {
        if (policy.conflicts(gates[j], gates[i])) below = std::max(below, level[j]);
      }
      level[i] = below + 1;
      depth = std::max(depth, level[i]);
    }
  }
  return to_result(circuit, level, depth);
}

bool is_valid_layering(const Circuit& circuit, const Layering& layering, const ConflictPolicy& policy) {
  std::unordered_set<GateId> seen;
  std::size_t total = 0;
  for (const auto& layer : layering.layers) {
    if (layer.empty()) return false;
    for (std::size_t a = 0; a < layer.size(); ++a) {
      const auto pa = circuit.position_of(layer[a]);
      if (!pa || !seen.insert(layer[a]).second) return false;
      for (std::size_t b = a + 1; b < layer.size(); ++b) {
        const auto pb = circuit.position_of(layer[b]);
        if (!pb || !policy.parallelizable(circuit[*pa], circuit[*pb])) return false;
      }
    }
    total += layer.size();
  }
  return total == circuit.size();
}

}  // namespace gatecolor
