#include "gatecolor/policy.hpp"

#include <utility>

namespace gatecolor {

ConflictPolicy ConflictPolicy::qubit_disjoint() { return ConflictPolicy("qubit-disjoint", nullptr); }

ConflictPolicy ConflictPolicy::custom(std::string name, Predicate parallelizable) {
  return ConflictPolicy(std::move(name), std::make_shared<const Predicate>(std::move(parallelizable)));
}

bool ConflictPolicy::parallelizable(const Gate& a, const Gate& b) const {
  if (!predicate_) return !supports_overlap(a, b);
  return (*predicate_)(a, b) && (*predicate_)(b, a);
}

bool supports_overlap(const Gate& a, const Gate& b) {
  const auto sa = a.support();
  const auto sb = b.support();
  auto i = sa.begin();
  auto j = sb.begin();
  while (i != sa.end() && j != sb.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace gatecolor
