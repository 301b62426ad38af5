#include "gatecolor/circuit.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <utility>

#include "gatecolor/errors.hpp"

namespace gatecolor {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 6> kKinds{{
    {GateKind::Toffoli, "toffoli"},
    {GateKind::Cnot, "cnot"},
    {GateKind::MultiControlledX, "mcx"},
    {GateKind::ControlledPhase, "cphase"},
    {GateKind::DoublyControlledPhase, "ccphase"},
    {GateKind::MultiControlledPhase, "mcphase"},
}};

std::string gate_label(GateId id) { return "gate " + std::to_string(id); }

void sort_unique_checked(std::vector<Qubit>& qubits, GateId id, std::string_view field) {
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw ValidationError(gate_label(id) + ": duplicate qubit in " + std::string(field));
  }
}

void require_arity(bool ok, GateId id, GateKind kind, std::string_view rule) {
  if (!ok) {
    throw ValidationError(gate_label(id) + " (" + std::string(gate_kind_name(kind)) +
                          "): " + std::string(rule));
  }
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info.name;
  }
  return "unknown";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (const auto& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

bool is_phase_kind(GateKind kind) {
  return kind == GateKind::ControlledPhase || kind == GateKind::DoublyControlledPhase ||
         kind == GateKind::MultiControlledPhase;
}

Gate::Gate(GateId id, GateKind kind, std::vector<Qubit> controls, std::vector<Qubit> targets,
           std::optional<Angle> angle)
    : id_(id), kind_(kind), controls_(std::move(controls)), targets_(std::move(targets)), angle_(angle) {
  sort_unique_checked(controls_, id_, "controls");
  sort_unique_checked(targets_, id_, "targets");

  const std::size_t nc = controls_.size();
  const std::size_t nt = targets_.size();
  switch (kind_) {
    case GateKind::Toffoli:
      require_arity(nc == 2 && nt == 1, id_, kind_, "needs 2 controls and 1 target");
      break;
    case GateKind::Cnot:
      require_arity(nc == 1 && nt == 1, id_, kind_, "needs 1 control and 1 target");
      break;
    case GateKind::MultiControlledX:
      require_arity(nc >= 1 && nt == 1, id_, kind_, "needs at least 1 control and 1 target");
      break;
    case GateKind::ControlledPhase:
      require_arity(nc == 2 && nt == 0, id_, kind_, "needs 2 qubits and no target");
      break;
    case GateKind::DoublyControlledPhase:
      require_arity(nc == 3 && nt == 0, id_, kind_, "needs 3 qubits and no target");
      break;
    case GateKind::MultiControlledPhase:
      require_arity(nc >= 1 && nt == 0, id_, kind_, "needs at least 1 qubit and no target");
      break;
  }
  if (angle_ && !is_phase_kind(kind_)) {
    throw ValidationError(gate_label(id_) + ": angle is only allowed on phase gates");
  }

  support_.reserve(nc + nt);
  std::set_union(controls_.begin(), controls_.end(), targets_.begin(), targets_.end(),
                 std::back_inserter(support_));
  if (support_.size() != nc + nt) {
    throw ValidationError(gate_label(id_) + ": controls and targets overlap");
  }
}

Gate Gate::toffoli(GateId id, Qubit c0, Qubit c1, Qubit target) {
  return Gate(id, GateKind::Toffoli, {c0, c1}, {target});
}

Gate Gate::cnot(GateId id, Qubit control, Qubit target) {
  return Gate(id, GateKind::Cnot, {control}, {target});
}

Gate Gate::controlled_phase(GateId id, Qubit q0, Qubit q1, Angle angle) {
  return Gate(id, GateKind::ControlledPhase, {q0, q1}, {}, angle);
}

Gate Gate::doubly_controlled_phase(GateId id, Qubit q0, Qubit q1, Qubit q2, Angle angle) {
  return Gate(id, GateKind::DoublyControlledPhase, {q0, q1, q2}, {}, angle);
}

Gate Gate::multi_controlled_phase(GateId id, std::vector<Qubit> qubits, Angle angle) {
  return Gate(id, GateKind::MultiControlledPhase, std::move(qubits), {}, angle);
}

bool Gate::touches(Qubit q) const { return std::binary_search(support_.begin(), support_.end(), q); }

Gate Gate::with_id(GateId id) const {
  Gate copy = *this;
  copy.id_ = id;
  return copy;
}

Gate Gate::with_qubits(const std::function<Qubit(Qubit)>& remap) const {
  std::vector<Qubit> controls;
  std::vector<Qubit> targets;
  controls.reserve(controls_.size());
  targets.reserve(targets_.size());
  for (Qubit q : controls_) controls.push_back(remap(q));
  for (Qubit q : targets_) targets.push_back(remap(q));
  return Gate(id_, kind_, std::move(controls), std::move(targets), angle_);
}

Circuit::Circuit(std::size_t qubit_count, std::vector<Gate> gates)
    : qubit_count_(qubit_count), gates_(std::move(gates)) {
  if (qubit_count_ == 0) throw ValidationError("circuit: qubit count must be positive");
  positions_.reserve(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (!positions_.emplace(g.id(), i).second) {
      throw ValidationError("circuit: duplicate " + gate_label(g.id()) + " at position " + std::to_string(i));
    }
    if (!g.support().empty() && g.support().back() >= qubit_count_) {
      throw ValidationError(gate_label(g.id()) + ": qubit " + std::to_string(g.support().back()) +
                            " out of range (qubits = " + std::to_string(qubit_count_) + ")");
    }
  }
}

std::optional<std::size_t> Circuit::position_of(GateId id) const {
  const auto it = positions_.find(id);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

Circuit Circuit::reordered(std::span<const std::size_t> order) const {
  if (order.size() != gates_.size()) throw ValidationError("reorder: permutation has wrong length");
  std::vector<char> used(gates_.size(), 0);
  std::vector<Gate> out;
  out.reserve(gates_.size());
  for (std::size_t pos : order) {
    if (pos >= gates_.size() || used[pos]) throw ValidationError("reorder: not a permutation");
    used[pos] = 1;
    out.push_back(gates_[pos]);
  }
  return Circuit(qubit_count_, std::move(out));
}

}  // namespace gatecolor
