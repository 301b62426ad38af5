#include <doctest.h>

#include <random>

#include "gatecolor/circuit.hpp"
#include "gatecolor/circuit_json.hpp"
#include "gatecolor/commutation.hpp"
#include "gatecolor/depth.hpp"
#include "gatecolor/errors.hpp"
#include "gatecolor/policy.hpp"
#include "oracles.hpp"

using namespace gatecolor;

namespace {

// CX_{134}, CX_{235}, CX_{167}, CX_{268} on qubits 1..8.
Circuit four_toffolis(std::initializer_list<int> order) {
  const std::vector<Gate> base{Gate::toffoli(0, 1, 3, 4), Gate::toffoli(1, 2, 3, 5), Gate::toffoli(2, 1, 6, 7),
                               Gate::toffoli(3, 2, 6, 8)};
  std::vector<Gate> gates;
  for (int i : order) gates.push_back(base[static_cast<std::size_t>(i)]);
  return Circuit(9, gates);
}

const ConflictPolicy kDefault = ConflictPolicy::qubit_disjoint();

}  // namespace

TEST_CASE("gate arity and overlap rules") {
  CHECK_NOTHROW(Gate::toffoli(0, 1, 2, 3));
  CHECK_THROWS_AS(Gate::toffoli(0, 1, 1, 3), ValidationError);
  CHECK_THROWS_AS(Gate::toffoli(0, 1, 2, 2), ValidationError);
  CHECK_THROWS_AS(Gate(0, GateKind::Toffoli, {1}, {2}), ValidationError);
  CHECK_THROWS_AS(Gate(0, GateKind::Cnot, {1}, {}), ValidationError);
  CHECK_THROWS_AS(Gate(0, GateKind::MultiControlledX, {}, {2}), ValidationError);
  CHECK_THROWS_AS(Gate(0, GateKind::ControlledPhase, {1, 2}, {3}), ValidationError);
  CHECK_THROWS_AS(Gate(0, GateKind::MultiControlledPhase, {}, {}), ValidationError);
  CHECK_THROWS_AS(Gate(0, GateKind::Cnot, {1}, {2}, Angle{1, 1}), ValidationError);

  const Gate g(4, GateKind::MultiControlledX, {7, 2, 5}, {0});
  CHECK(std::vector<Qubit>(g.controls().begin(), g.controls().end()) == std::vector<Qubit>{2, 5, 7});
  CHECK(std::vector<Qubit>(g.support().begin(), g.support().end()) == std::vector<Qubit>{0, 2, 5, 7});
  CHECK(g.touches(5));
  CHECK_FALSE(g.touches(1));
  CHECK_FALSE(g.is_diagonal());
  CHECK(Gate::multi_controlled_phase(0, {3}, {1, 1}).is_diagonal());
}

TEST_CASE("gate kind names round trip") {
  for (auto kind : {GateKind::Toffoli, GateKind::Cnot, GateKind::MultiControlledX, GateKind::ControlledPhase,
                    GateKind::DoublyControlledPhase, GateKind::MultiControlledPhase}) {
    CHECK(parse_gate_kind(gate_kind_name(kind)) == kind);
  }
  CHECK_FALSE(parse_gate_kind("swap").has_value());
}

TEST_CASE("circuit validation") {
  CHECK_THROWS_AS(Circuit(0, {}), ValidationError);
  CHECK_NOTHROW(Circuit(1, {}));
  CHECK_THROWS_AS(Circuit(3, {Gate::cnot(0, 0, 3)}), ValidationError);
  CHECK_THROWS_AS(Circuit(3, {Gate::cnot(0, 0, 1), Gate::cnot(0, 1, 2)}), ValidationError);

  const Circuit c = four_toffolis({0, 1, 2, 3});
  CHECK(c.position_of(2) == 2u);
  CHECK_FALSE(c.position_of(9).has_value());
  const std::vector<std::size_t> order{3, 2, 1, 0};
  CHECK(c.reordered(order)[0].id() == 3);
  const std::vector<std::size_t> bad{0, 0, 1, 2};
  CHECK_THROWS_AS(c.reordered(bad), ValidationError);
}

TEST_CASE("default policy is qubit disjointness") {
  CHECK(kDefault.is_qubit_disjoint());
  CHECK(kDefault.conflicts(Gate::toffoli(0, 1, 3, 4), Gate::toffoli(1, 2, 3, 5)));
  CHECK(kDefault.parallelizable(Gate::toffoli(0, 1, 3, 4), Gate::toffoli(1, 2, 6, 8)));
}

TEST_CASE("custom policies are symmetrized") {
  // Accepts (a, b) only when a's id is smaller: asymmetric on purpose.
  const auto policy =
      ConflictPolicy::custom("ordered", [](const Gate& a, const Gate& b) { return a.id() < b.id(); });
  const Gate x = Gate::cnot(0, 0, 1);
  const Gate y = Gate::cnot(1, 2, 3);
  CHECK_FALSE(policy.is_qubit_disjoint());
  CHECK(policy.parallelizable(x, y) == policy.parallelizable(y, x));
  CHECK(policy.conflicts(x, y));
}

TEST_CASE("policy symmetry on random gate pairs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Circuit c = oracle::random_mixed_circuit(rng, 2, 6);
    CHECK(kDefault.parallelizable(c[0], c[1]) == kDefault.parallelizable(c[1], c[0]));
    CHECK(kDefault.conflicts(c[0], c[1]) == oracle::share_qubit(c[0], c[1]));
  }
}

TEST_CASE("canonical depth of the four-Toffoli example") {
  CHECK(compute_depth(four_toffolis({0, 1}), kDefault).depth == 2);
  CHECK(compute_depth(four_toffolis({0, 1, 2, 3}), kDefault).depth == 3);
  CHECK(compute_depth(four_toffolis({0, 3, 1, 2}), kDefault).depth == 2);
  CHECK(compute_depth(Circuit(1, {}), kDefault).depth == 0);

  const DepthResult r = compute_depth(four_toffolis({0, 1, 2, 3}), kDefault);
  CHECK(r.layering.layers == std::vector<std::vector<GateId>>{{0}, {1, 2}, {3}});
}

TEST_CASE("ASAP depth") {
  // 268 conflicts with both 235 (qubit 2) and 167 (qubit 6), which conflict
  // with 134, so in this order the chain 134 -> 235 -> 268 forces 3 layers.
  const Circuit c = four_toffolis({0, 1, 2, 3});
  CHECK(oracle::asap_depth(c) == 3);
  CHECK(compute_depth_asap(c, kDefault).depth == 3);
  CHECK(compute_depth_asap(four_toffolis({0, 3, 1, 2}), kDefault).depth == 2);
  CHECK(compute_depth_asap(four_toffolis({2}), kDefault).depth == 1);

  std::vector<Gate> disjoint;
  for (Qubit q = 0; q < 6; ++q) disjoint.push_back(Gate::multi_controlled_phase(q, {q}, {1, 2}));
  CHECK(compute_depth_asap(Circuit(6, disjoint), kDefault).depth == 1);
}

TEST_CASE("depth matches the oracles on random circuits") {
  std::mt19937_64 rng(5);
  const auto custom = ConflictPolicy::custom("targets-only", [](const Gate& a, const Gate& b) {
    // Only a target touched by the other gate blocks parallel execution.
    for (Qubit q : a.targets()) {
      if (b.touches(q)) return false;
    }
    return true;
  });
  const oracle::Conflict custom_conflict = [](const Gate& a, const Gate& b) {
    for (Qubit q : a.targets()) {
      if (b.touches(q)) return true;
    }
    return false;
  };
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> gates(0, 12);
    std::uniform_int_distribution<std::size_t> qubits(3, 8);
    const Circuit c = oracle::random_mixed_circuit(rng, gates(rng), qubits(rng));
    const DepthResult canonical = compute_depth(c, kDefault);
    const DepthResult asap = compute_depth_asap(c, kDefault);
    CHECK(canonical.depth == oracle::block_depth(c));
    CHECK(asap.depth == oracle::asap_depth(c));
    CHECK(asap.depth <= canonical.depth);
    CHECK(is_valid_layering(c, canonical.layering, kDefault));
    CHECK(is_valid_layering(c, asap.layering, kDefault));
    if (!c.empty()) {
      CHECK(canonical.depth >= 1);
      CHECK(canonical.depth <= c.size());
    }

    const DepthResult generic = compute_depth(c, custom);
    CHECK(generic.depth == oracle::block_depth(c, custom_conflict));
    CHECK(compute_depth_asap(c, custom).depth == oracle::asap_depth(c, custom_conflict));
    CHECK(is_valid_layering(c, generic.layering, custom));
  }
}

TEST_CASE("layering validity rejects bad layerings") {
  const Circuit c = four_toffolis({0, 1, 2, 3});
  CHECK(is_valid_layering(c, Layering{{{0, 3}, {1, 2}}}, kDefault));
  CHECK_FALSE(is_valid_layering(c, Layering{{{0, 1}, {2, 3}}}, kDefault));
  CHECK_FALSE(is_valid_layering(c, Layering{{{0, 3}, {1}}}, kDefault));
  CHECK_FALSE(is_valid_layering(c, Layering{{{0, 3}, {1, 2, 2}}}, kDefault));
}

TEST_CASE("structural commutation rules") {
  CHECK(commutes_structurally(Gate::toffoli(0, 1, 3, 4), Gate::toffoli(1, 2, 3, 5)));
  CHECK(commutes_structurally(Gate::controlled_phase(0, 0, 1, {1, 2}), Gate::controlled_phase(1, 1, 2, {1, 3})));
  CHECK_FALSE(commutes_structurally(Gate::cnot(0, 0, 1), Gate::cnot(1, 1, 2)));
  CHECK(commutes_structurally(Gate::cnot(0, 0, 1), Gate::cnot(1, 0, 2)));
  CHECK(commutes_structurally(Gate::cnot(0, 0, 1), Gate::cnot(1, 2, 1)));
  CHECK_FALSE(commutes_structurally(Gate::cnot(0, 0, 1), Gate::controlled_phase(1, 1, 2, {1, 1})));
  CHECK(commutes_structurally(Gate::cnot(0, 0, 1), Gate::controlled_phase(1, 0, 2, {1, 1})));

  CHECK(validate_commuting(four_toffolis({0, 1})));
  CHECK(validate_commuting(four_toffolis({0, 1, 2, 3})));
  const Circuit bad(3, {Gate::cnot(0, 0, 1), Gate::cnot(1, 1, 2)});
  CHECK_FALSE(validate_commuting(bad));
  CHECK(find_uncertified_pair(bad) == std::pair<GateId, GateId>{0, 1});
}

TEST_CASE("uncertified pair search matches a pairwise scan") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const Circuit c = oracle::random_mixed_circuit(rng, 6, 7);
    std::optional<std::pair<GateId, GateId>> expected;
    for (std::size_t i = 0; i < c.size() && !expected; ++i) {
      for (std::size_t j = i + 1; j < c.size() && !expected; ++j) {
        if (!commutes_structurally(c[i], c[j])) expected = {c[i].id(), c[j].id()};
      }
    }
    CHECK(find_uncertified_pair(c) == expected);

    // Same verdict for any ordering.
    std::vector<std::size_t> perm(c.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(validate_commuting(c.reordered(perm)) == validate_commuting(c));
  }
}

TEST_CASE("circuit JSON round trip") {
  const Circuit c(6, {Gate::toffoli(0, 1, 3, 4), Gate::controlled_phase(1, 0, 5, {1, 3}),
                      Gate(2, GateKind::MultiControlledX, {0, 1, 2}, {5}),
                      Gate::multi_controlled_phase(7, {2}, {-3, 63})});
  const auto j = circuit_to_json(c);
  CHECK(j["gates"][1]["angle"]["den_pow2"] == 3);
  CHECK(circuit_from_json(j) == c);
  CHECK(parse_circuit_document(dump_json(j)).circuit == c);

  const CircuitDocument doc{c, 2};
  const auto back = parse_circuit_document(dump_json(document_to_json(doc)));
  CHECK(back.phase_boundary == 2u);
  CHECK(back.circuit == c);
}

TEST_CASE("circuit JSON rejects bad input with a field path") {
  const auto message = [](const std::string& text) {
    try {
      parse_circuit_document(text);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message("{").find("malformed JSON") != std::string::npos);
  CHECK(message(R"({"qubits": 3, "gates": [], "extra": 1})").find("circuit.extra") != std::string::npos);
  CHECK(message(R"({"qubits": 3})").find("circuit.gates") != std::string::npos);
  CHECK(message(R"({"qubits": 3, "gates": [{"id": 0, "kind": "cnot", "controls": [0], "targets": [1], "x": 0}]})")
            .find("circuit.gates[0].x") != std::string::npos);
  CHECK(message(R"({"qubits": 3, "gates": [{"id": 0, "kind": "cnot", "controls": [-1], "targets": [1]}]})")
            .find("circuit.gates[0].controls[0]") != std::string::npos);
  CHECK(message(R"({"qubits": 3, "gates": [{"id": 0, "kind": "nope", "controls": [0], "targets": [1]}]})")
            .find("circuit.gates[0].kind") != std::string::npos);
  CHECK(message(R"({"qubits": 2, "gates": [{"id": 0, "kind": "cnot", "controls": [0], "targets": [2]}]})")
            .find("gate 0") != std::string::npos);
  CHECK(message(R"({"qubits": 3, "gates": [{"id": 0, "kind": "cphase", "controls": [0, 1], "targets": [],
                    "angle": {"num": 1, "den_pow2": 64}}]})")
            .find("den_pow2") != std::string::npos);
  CHECK(message(R"({"qubits": 3, "gates": [], "phase_boundary": 1})").find("phase_boundary") != std::string::npos);
}
