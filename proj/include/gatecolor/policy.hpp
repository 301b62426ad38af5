#pragma once

#include <functional>
#include <memory>
#include <string>

#include "gatecolor/circuit.hpp"

namespace gatecolor {

/// Decides whether two gates may run in the same layer. The default policy
/// treats gates as parallelizable iff their qubit supports are disjoint.
class ConflictPolicy {
 public:
  using Predicate = std::function<bool(const Gate&, const Gate&)>;

  static ConflictPolicy qubit_disjoint();

  /// Wraps an arbitrary predicate. The wrapper is symmetrized: two gates are
  /// parallelizable only if the predicate accepts them in both argument
  /// orders.
  static ConflictPolicy custom(std::string name, Predicate parallelizable);

  bool parallelizable(const Gate& a, const Gate& b) const;
  bool conflicts(const Gate& a, const Gate& b) const { return !parallelizable(a, b); }

  bool is_qubit_disjoint() const { return !predicate_; }
  const std::string& name() const { return name_; }

 private:
  ConflictPolicy(std::string name, std::shared_ptr<const Predicate> predicate)
      : name_(std::move(name)), predicate_(std::move(predicate)) {}

  std::string name_;
  std::shared_ptr<const Predicate> predicate_;
};

/// Support-intersection test used by the default policy.
bool supports_overlap(const Gate& a, const Gate& b);

}  // namespace gatecolor
