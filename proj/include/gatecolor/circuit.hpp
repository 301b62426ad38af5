#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gatecolor {

using Qubit = std::uint32_t;
using GateId = std::uint32_t;

enum class GateKind {
  Toffoli,
  Cnot,
  MultiControlledX,
  ControlledPhase,
  DoublyControlledPhase,
  MultiControlledPhase,
};

/// Canonical wire name of a gate kind ("toffoli", "cnot", "mcx", "cphase",
/// "ccphase", "mcphase").
std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// X-type kinds carry exactly one target; phase kinds are diagonal and carry
/// none.
bool is_phase_kind(GateKind kind);

/// Exact dyadic rotation angle 2*pi*num / 2^den_pow2.
struct Angle {
  std::int64_t num = 0;
  std::uint32_t den_pow2 = 0;

  auto operator<=>(const Angle&) const = default;
};

/// One commuting operation. Controls and targets are stored sorted and
/// duplicate-free; construction validates the per-kind arity rules.
class Gate {
 public:
  Gate(GateId id, GateKind kind, std::vector<Qubit> controls, std::vector<Qubit> targets,
       std::optional<Angle> angle = std::nullopt);

  static Gate toffoli(GateId id, Qubit c0, Qubit c1, Qubit target);
  static Gate cnot(GateId id, Qubit control, Qubit target);
  static Gate controlled_phase(GateId id, Qubit q0, Qubit q1, Angle angle);
  static Gate doubly_controlled_phase(GateId id, Qubit q0, Qubit q1, Qubit q2, Angle angle);
  static Gate multi_controlled_phase(GateId id, std::vector<Qubit> qubits, Angle angle);

  GateId id() const { return id_; }
  GateKind kind() const { return kind_; }
  std::span<const Qubit> controls() const { return controls_; }
  std::span<const Qubit> targets() const { return targets_; }
  const std::optional<Angle>& angle() const { return angle_; }

  /// controls ∪ targets, sorted.
  std::span<const Qubit> support() const { return support_; }
  bool touches(Qubit q) const;
  bool is_diagonal() const { return is_phase_kind(kind_); }

  /// Same gate with a new id.
  Gate with_id(GateId id) const;
  /// Same gate with every referenced qubit passed through remap.
  Gate with_qubits(const std::function<Qubit(Qubit)>& remap) const;

  bool operator==(const Gate&) const = default;

 private:
  GateId id_;
  GateKind kind_;
  std::vector<Qubit> controls_;
  std::vector<Qubit> targets_;
  std::optional<Angle> angle_;
  std::vector<Qubit> support_;
};

/// Ordered gate sequence over a fixed register. Immutable after construction.
class Circuit {
 public:
  /// Throws ValidationError when qubit_count is zero, a gate references a
  /// qubit >= qubit_count, or gate ids repeat.
  Circuit(std::size_t qubit_count, std::vector<Gate> gates);

  std::size_t qubit_count() const { return qubit_count_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  std::span<const Gate> gates() const { return gates_; }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  /// Position of the gate with the given id, if present.
  std::optional<std::size_t> position_of(GateId id) const;

  /// New circuit whose i-th gate is gates()[order[i]]. order must be a
  /// permutation of positions.
  Circuit reordered(std::span<const std::size_t> order) const;

  bool operator==(const Circuit& other) const {
    return qubit_count_ == other.qubit_count_ && gates_ == other.gates_;
  }

 private:
  std::size_t qubit_count_;
  std::vector<Gate> gates_;
  std::unordered_map<GateId, std::size_t> positions_;
};

}  // namespace gatecolor
