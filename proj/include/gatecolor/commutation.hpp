#pragma once

#include <optional>
#include <utility>

#include "gatecolor/circuit.hpp"

namespace gatecolor {

/// Structural commutation certificate for a gate pair:
///  - two diagonal (phase) gates always commute;
///  - two X-type gates commute iff neither target is a control of the other;
///  - an X-type and a phase gate commute iff the X target is outside the
///    phase gate's support.
/// false means "not certified", not "proven non-commuting".
bool commutes_structurally(const Gate& a, const Gate& b);

/// First pair of gate ids (in circuit order of the first member) that the
/// structural rules fail to certify, or nullopt when every pair is certified.
std::optional<std::pair<GateId, GateId>> find_uncertified_pair(const Circuit& circuit);

/// True iff every gate pair is structurally certified to commute.
bool validate_commuting(const Circuit& circuit);

}  // namespace gatecolor
