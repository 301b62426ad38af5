#pragma once

#include <cstddef>
#include <vector>

#include "gatecolor/circuit.hpp"
#include "gatecolor/policy.hpp"

namespace gatecolor {

/// Ordered layers of gate ids. Layers partition the circuit's gates and every
/// pair inside a layer is parallelizable under the policy that produced it.
struct Layering {
  std::vector<std::vector<GateId>> layers;

  std::size_t depth() const { return layers.size(); }
  bool operator==(const Layering&) const = default;
};

struct DepthResult {
  std::size_t depth = 0;
  Layering layering;
};

/// Canonical depth: scan left to right and keep extending the current layer
/// while the new gate is parallelizable with every gate already in it; the
/// first conflicting gate opens a new layer. Layers are contiguous runs of
/// the input order.
DepthResult compute_depth(const Circuit& circuit, const ConflictPolicy& policy);

/// As-soon-as-possible depth: each gate lands one layer after the latest
/// earlier gate it conflicts with. Never exceeds the canonical depth.
DepthResult compute_depth_asap(const Circuit& circuit, const ConflictPolicy& policy);

/// True iff the layering partitions the circuit's gate ids and each layer is
/// pairwise parallelizable under policy.
bool is_valid_layering(const Circuit& circuit, const Layering& layering, const ConflictPolicy& policy);

}  // namespace gatecolor
