#pragma once

#include <stdexcept>
#include <string>

namespace gatecolor {

/// Malformed input: an invalid gate, circuit, graph, coloring or document.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search-based solver ran out of its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The optimizer was handed a circuit whose gates could not be certified as
/// pairwise commuting.
class NonCommutingError : public ValidationError {
 public:
  NonCommutingError(const std::string& what, unsigned first_gate, unsigned second_gate)
      : ValidationError(what), first_(first_gate), second_(second_gate) {}

  unsigned first_gate() const { return first_; }
  unsigned second_gate() const { return second_; }

 private:
  unsigned first_;
  unsigned second_;
};

}  // namespace gatecolor
