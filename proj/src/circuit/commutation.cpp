#include "gatecolor/commutation.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace gatecolor {

namespace {

bool contains(std::span<const Qubit> sorted, Qubit q) { return std::binary_search(sorted.begin(), sorted.end(), q); }

// Qubits a gate reads "as a control" for the purposes of the X-target rule:
// the control set of an X-type gate, the whole support of a diagonal gate.
std::span<const Qubit> sensitive_qubits(const Gate& g) { return g.is_diagonal() ? g.support() : g.controls(); }

}  // namespace

bool commutes_structurally(const Gate& a, const Gate& b) {
  if (a.is_diagonal() && b.is_diagonal()) return true;
  if (!a.is_diagonal() && contains(sensitive_qubits(b), a.targets().front())) return false;
  if (!b.is_diagonal() && contains(sensitive_qubits(a), b.targets().front())) return false;
  return true;
}

std::optional<std::pair<GateId, GateId>> find_uncertified_pair(const Circuit& circuit) {
  // A pair is uncertified iff one member is X-type with target t and the
  // other is sensitive to t. Per qubit, the lexicographically smallest such
  // position pair is (earliest member, earliest member of the opposite list).
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const std::size_t nq = circuit.qubit_count();
  std::vector<std::size_t> first_target(nq, kNone);
  std::vector<std::size_t> first_sensitive(nq, kNone);

  const auto note = [](std::vector<std::size_t>& first, Qubit q, std::size_t pos) {
    if (first[q] == kNone) first[q] = pos;
  };

  const auto gates = circuit.gates();
  for (std::size_t pos = 0; pos < gates.size(); ++pos) {
    const Gate& g = gates[pos];
    if (!g.is_diagonal()) note(first_target, g.targets().front(), pos);
    for (Qubit q : sensitive_qubits(g)) note(first_sensitive, q, pos);
  }

  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (Qubit q = 0; q < nq; ++q) {
    if (first_target[q] == kNone || first_sensitive[q] == kNone) continue;
    // The earliest gate on either list pairs with the earliest gate on the
    // other list; both lists hold distinct gates since a gate's target is
    // never one of its own controls.
    std::pair<std::size_t, std::size_t> candidate =
        first_target[q] < first_sensitive[q] ? std::pair{first_target[q], first_sensitive[q]}
                                             : std::pair{first_sensitive[q], first_target[q]};
    if (!best || candidate < *best) best = candidate;
  }
  if (!best) return std::nullopt;
  return std::pair{gates[best->first].id(), gates[best->second].id()};
}

bool validate_commuting(const Circuit& circuit) { return !find_uncertified_pair(circuit).has_value(); }

}  // namespace gatecolor
