#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gatecolor/circuit.hpp"

namespace gatecolor {

/// A circuit file: the canonical circuit plus an optional phase boundary
/// (index of the first gate of the second phase) for multi-phase circuits
/// whose phases must not be interleaved.
struct CircuitDocument {
  Circuit circuit;
  std::optional<std::size_t> phase_boundary;
};

/// Canonical JSON form:
///   {"qubits": N, "gates": [{"id": 0, "kind": "toffoli", "controls": [1,3],
///    "targets": [4]}, {..., "angle": {"num": 1, "den_pow2": 3}}]}
/// Unknown fields are rejected with a ValidationError naming the field path.
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json document_to_json(const CircuitDocument& doc);
CircuitDocument document_from_json(const nlohmann::json& j);

/// Parses text; malformed JSON surfaces as ValidationError.
CircuitDocument parse_circuit_document(const std::string& text);

/// Deterministic serialization (sorted keys, two-space indent, trailing newline).
std::string dump_json(const nlohmann::json& j);

}  // namespace gatecolor
