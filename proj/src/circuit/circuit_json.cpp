#include "gatecolor/circuit_json.hpp"

#include <initializer_list>
#include <limits>
#include <string_view>
#include <vector>

#include "gatecolor/errors.hpp"

namespace gatecolor {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) fail(path + "." + key, "unknown field");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing field");
  return *it;
}

std::uint64_t as_unsigned(const json& v, const std::string& path, std::uint64_t max) {
  if (!v.is_number_integer()) fail(path, "expected a non-negative integer");
  if (v.is_number_unsigned()) {
    const auto value = v.get<std::uint64_t>();
    if (value > max) fail(path, "value " + std::to_string(value) + " too large");
    return value;
  }
  const auto value = v.get<std::int64_t>();
  if (value < 0) fail(path, "expected a non-negative integer, got " + std::to_string(value));
  if (static_cast<std::uint64_t>(value) > max) fail(path, "value " + std::to_string(value) + " too large");
  return static_cast<std::uint64_t>(value);
}

std::vector<Qubit> qubit_list(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of qubit indices");
  std::vector<Qubit> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(static_cast<Qubit>(
        as_unsigned(v[i], path + "[" + std::to_string(i) + "]", std::numeric_limits<Qubit>::max())));
  }
  return out;
}

Gate gate_from_json(const json& g, const std::string& path) {
  if (!g.is_object()) fail(path, "expected an object");
  reject_unknown(g, path, {"id", "kind", "controls", "targets", "angle"});
  const auto id = static_cast<GateId>(as_unsigned(require(g, path, "id"), path + ".id", std::numeric_limits<GateId>::max()));
  const json& kind_json = require(g, path, "kind");
  if (!kind_json.is_string()) fail(path + ".kind", "expected a string");
  const auto kind = parse_gate_kind(kind_json.get<std::string>());
  if (!kind) fail(path + ".kind", "unknown gate kind '" + kind_json.get<std::string>() + "'");
  auto controls = qubit_list(require(g, path, "controls"), path + ".controls");
  auto targets = qubit_list(require(g, path, "targets"), path + ".targets");

  std::optional<Angle> angle;
  if (const auto it = g.find("angle"); it != g.end()) {
    const std::string apath = path + ".angle";
    if (!it->is_object()) fail(apath, "expected an object");
    reject_unknown(*it, apath, {"num", "den_pow2"});
    const json& num = require(*it, apath, "num");
    if (!num.is_number_integer()) fail(apath + ".num", "expected an integer");
    if (num.is_number_unsigned() && num.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(apath + ".num", "value too large");
    }
    angle = Angle{num.get<std::int64_t>(),
                  static_cast<std::uint32_t>(as_unsigned(require(*it, apath, "den_pow2"), apath + ".den_pow2", 63))};
  }

  try {
    return Gate(id, *kind, std::move(controls), std::move(targets), angle);
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

}  // namespace

json circuit_to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const Gate& g : circuit.gates()) {
    json entry = {
        {"id", g.id()},
        {"kind", std::string(gate_kind_name(g.kind()))},
        {"controls", std::vector<Qubit>(g.controls().begin(), g.controls().end())},
        {"targets", std::vector<Qubit>(g.targets().begin(), g.targets().end())},
    };
    if (g.angle()) entry["angle"] = {{"num", g.angle()->num}, {"den_pow2", g.angle()->den_pow2}};
    gates.push_back(std::move(entry));
  }
  return json{{"qubits", circuit.qubit_count()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) { return document_from_json(j).circuit; }

json document_to_json(const CircuitDocument& doc) {
  json j = circuit_to_json(doc.circuit);
  if (doc.phase_boundary) j["phase_boundary"] = *doc.phase_boundary;
  return j;
}

CircuitDocument document_from_json(const json& j) {
  const std::string root = "circuit";
  if (!j.is_object()) fail(root, "expected an object");
  reject_unknown(j, root, {"qubits", "gates", "phase_boundary"});
  const auto qubits = as_unsigned(require(j, root, "qubits"), root + ".qubits", std::numeric_limits<Qubit>::max());
  const json& gates_json = require(j, root, "gates");
  if (!gates_json.is_array()) fail(root + ".gates", "expected an array");

  std::vector<Gate> gates;
  gates.reserve(gates_json.size());
  for (std::size_t i = 0; i < gates_json.size(); ++i) {
    gates.push_back(gate_from_json(gates_json[i], root + ".gates[" + std::to_string(i) + "]"));
  }

  std::optional<std::size_t> boundary;
  if (const auto it = j.find("phase_boundary"); it != j.end()) {
    boundary = as_unsigned(*it, root + ".phase_boundary", gates.size());
  }
  try {
    return CircuitDocument{Circuit(qubits, std::move(gates)), boundary};
  } catch (const ValidationError& e) {
    fail(root, e.what());
  }
}

CircuitDocument parse_circuit_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gatecolor
