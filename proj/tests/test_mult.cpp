#include <doctest.h>

#include <tuple>

#include "gatecolor/commutation.hpp"
#include "gatecolor/errors.hpp"
#include "gatecolor/mult.hpp"
#include "gatecolor/reduction.hpp"
#include "oracles.hpp"

using namespace gatecolor;

namespace {

using Term = std::tuple<std::size_t, std::size_t, std::size_t>;  // (i, j, k)

Term term_of(const MultInstance& inst, const Gate& g) {
  REQUIRE(g.kind() == GateKind::Toffoli);
  const std::size_t i = g.controls()[0];
  const std::size_t j = g.controls()[1] - inst.n;
  const std::size_t k = g.targets()[0] - 2 * inst.n;
  return {i, j, k};
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const ConflictGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (auto [u, v] : g.edges()) out.insert({u, v});
  return out;
}

}  // namespace

TEST_CASE("n = 4 stage 1 lists the upper-triangle terms") {
  const MultInstance inst = generate_mult(4);
  std::vector<Term> terms;
  for (const Gate& g : inst.phase1) terms.push_back(term_of(inst, g));
  CHECK(terms == std::vector<Term>{{3, 1, 0}, {2, 2, 0}, {1, 3, 0}, {3, 2, 1}, {2, 3, 1}, {3, 3, 2}});
  CHECK(inst.phase3.size() == 10);
  CHECK(term_of(inst, inst.phase3.front()) == Term{0, 0, 0});
  CHECK(term_of(inst, inst.phase3.back()) == Term{0, 3, 3});
}

TEST_CASE("gate counts and term placement") {
  CHECK(generate_mult(2).phase1.size() == 1);
  CHECK(generate_mult(2).phase3.size() == 3);
  CHECK(generate_mult(8).phase1.size() == 28);
  CHECK(generate_mult(8).phase3.size() == 36);
  for (std::size_t n = 2; n <= 64; ++n) {
    const MultInstance inst = generate_mult(n);
    CHECK(inst.phase1.size() == n * (n - 1) / 2);
    CHECK(inst.phase3.size() == n * (n + 1) / 2);
    CHECK(inst.phase1.size() + inst.phase3.size() == n * n);
  }
  for (std::size_t n = 2; n <= 16; ++n) {
    const MultInstance inst = generate_mult(n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Gate& g : inst.phase1) {
      const auto [i, j, k] = term_of(inst, g);
      CHECK(i + j >= n);
      CHECK(k == i + j - n);
      seen.insert({i, j});
    }
    for (const Gate& g : inst.phase3) {
      const auto [i, j, k] = term_of(inst, g);
      CHECK(i + j < n);
      CHECK(k == i + j);
      seen.insert({i, j});
    }
    CHECK(seen.size() == n * n);
  }
  CHECK_THROWS_AS(generate_mult(1), ValidationError);
  CHECK_THROWS_AS(generate_mult(0), ValidationError);
}

TEST_CASE("stages commute internally and carry the expected cliques") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const MultInstance inst = generate_mult(n);
    CHECK(validate_commuting(inst.phase1_circuit()));
    CHECK(validate_commuting(inst.phase3_circuit()));
    std::size_t on_top = 0;
    for (const Gate& g : inst.phase3) on_top += g.touches(inst.out(n - 1));
    CHECK(on_top == n);
    std::size_t on_bottom = 0;
    for (const Gate& g : inst.phase1) on_bottom += g.touches(inst.out(0));
    CHECK(on_bottom == n - 1);
  }
}

TEST_CASE("document marks the stage boundary") {
  const CircuitDocument doc = generate_mult(5).document();
  CHECK(doc.phase_boundary == 10u);
  CHECK(doc.circuit.size() == 25);
  CHECK(doc.circuit.qubit_count() == 15);
  CHECK(doc.circuit[10].id() == 10);
}

TEST_CASE("Toffoli depth lower bound") {
  CHECK(toffoli_depth_lower_bound(6) == 11);
  CHECK(toffoli_depth_lower_bound(32) == 63);
  CHECK(toffoli_depth_lower_bound(512) == 1023);
  CHECK_THROWS_WITH_AS(toffoli_depth_lower_bound(5), doctest::Contains("bound formula not applicable"),
                       ValidationError);
}

TEST_CASE("n = 4 stage depths match the exhaustive minimum") {
  MultOptions options;
  options.solver.kind = SolverKind::Exact;
  const MultResult r = optimize_mult(4, options);
  const MultInstance inst = generate_mult(4);
  const ConflictPolicy policy = ConflictPolicy::qubit_disjoint();
  const Circuit p1 = inst.phase1_circuit();
  const Circuit p3 = inst.phase3_circuit();
  CHECK(r.phase1_depth == oracle::min_depth(p1));
  CHECK(r.phase3_depth == brute_force_min_depth(p3, policy, 10).depth);
  CHECK(r.phase3_depth == oracle::chromatic_number(p3.size(), edge_set(construct_graph(p3, policy))));
  CHECK(r.total == r.phase1_depth + r.phase3_depth);
  CHECK_FALSE(r.bound.has_value());
}

TEST_CASE("DSatur reaches the lower bound") {
  for (std::size_t n : {8, 20, 32}) {
    const MultResult r = optimize_mult(n);
    CHECK(r.total == 2 * n - 1);
    CHECK(r.phase1_depth == n - 1);
    CHECK(r.phase3_depth == n);
    CHECK(r.baseline == 4 * n - 4);
    CHECK(r.bound == 2 * n - 1);
  }
}

TEST_CASE("small n with restarts stays within the baseline") {
  MultOptions options;
  options.restarts = 32;
  options.seed = 5;
  for (std::size_t n = 2; n <= 19; ++n) {
    const MultResult r = optimize_mult(n, options);
    CHECK(r.total <= 4 * n - 4);
    if (n >= 6) CHECK(r.total <= 2 * n + 3);
    CHECK(r.phase1_depth >= n - 1);
    CHECK(r.phase3_depth >= n);
  }
}

TEST_CASE("result JSON") {
  const auto small = mult_result_to_json(optimize_mult(3));
  CHECK(small["bound"].is_null());
  CHECK(small["baseline"] == 8);
  const auto big = mult_result_to_json(optimize_mult(6));
  CHECK(big["bound"] == 11);
  CHECK(big.size() == 6);
}
