#pragma once

// Deliberately naive reference computations. None of these call into the
// library's graph, depth or coloring code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gatecolor/circuit.hpp"

namespace oracle {

using gatecolor::Circuit;
using gatecolor::Gate;
using gatecolor::Qubit;

inline std::set<Qubit> qubits_of(const Gate& g) {
  std::set<Qubit> out(g.controls().begin(), g.controls().end());
  out.insert(g.targets().begin(), g.targets().end());
  return out;
}

inline bool share_qubit(const Gate& a, const Gate& b) {
  const auto qa = qubits_of(a);
  for (Qubit q : qubits_of(b)) {
    if (qa.count(q)) return true;
  }
  return false;
}

using Conflict = std::function<bool(const Gate&, const Gate&)>;

inline std::set<std::pair<std::size_t, std::size_t>> edges(const Circuit& c, const Conflict& conflict = share_qubit) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (conflict(c[i], c[j]) || conflict(c[j], c[i])) out.insert({i, j});
    }
  }
  return out;
}

// Consecutive blocks: a gate joins the open block only if it is compatible
// with every gate already in it.
inline std::size_t block_depth(const std::vector<Gate>& gates, const Conflict& conflict = share_qubit) {
  std::size_t depth = 0;
  std::vector<const Gate*> block;
  for (const Gate& g : gates) {
    const bool fits = std::none_of(block.begin(), block.end(),
                                   [&](const Gate* h) { return conflict(*h, g) || conflict(g, *h); });
    if (block.empty() || !fits) {
      ++depth;
      block.clear();
    }
    block.push_back(&g);
  }
  return depth;
}

inline std::size_t block_depth(const Circuit& c, const Conflict& conflict = share_qubit) {
  return block_depth(std::vector<Gate>(c.gates().begin(), c.gates().end()), conflict);
}

// Longest chain of pairwise-conflicting gates taken in circuit order.
inline std::size_t asap_depth(const Circuit& c, const Conflict& conflict = share_qubit) {
  std::vector<std::size_t> level(c.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (conflict(c[j], c[i]) || conflict(c[i], c[j])) level[i] = std::max(level[i], level[j] + 1);
    }
    best = std::max(best, level[i]);
  }
  return best;
}

inline std::size_t min_depth(const Circuit& c, const Conflict& conflict = share_qubit) {
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t best = c.size();
  do {
    std::vector<Gate> gates;
    for (std::size_t p : perm) gates.push_back(c[p]);
    best = std::min(best, block_depth(gates, conflict));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Enumerates every set partition of the vertices (restricted growth
// strings) and returns the fewest blocks among those with no internal edge.
inline std::size_t chromatic_number(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edge_set) {
  if (n == 0) return 0;
  std::vector<std::size_t> label(n, 0);
  std::size_t best = n;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t blocks) {
    if (v == n) {
      for (const auto& [a, b] : edge_set) {
        if (label[a] == label[b]) return;
      }
      best = std::min(best, blocks);
      return;
    }
    for (std::size_t c = 0; c <= blocks; ++c) {
      label[v] = c;
      rec(v + 1, std::max(blocks, c + 1));
    }
  };
  rec(0, 0);
  return best;
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> random_edges(std::mt19937_64& rng, std::size_t n,
                                                                         double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (coin(rng)) out.emplace_back(i, j);
    }
  }
  return out;
}

// Mixed X-type and phase gates on distinct qubits.
inline Circuit random_mixed_circuit(std::mt19937_64& rng, std::size_t gates, std::size_t qubits) {
  std::vector<Qubit> pool(qubits);
  std::iota(pool.begin(), pool.end(), Qubit{0});
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<Gate> out;
  for (std::size_t i = 0; i < gates; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto id = static_cast<gatecolor::GateId>(i);
    switch (qubits >= 3 ? kind(rng) : 3) {
      case 0:
        out.push_back(Gate::toffoli(id, pool[0], pool[1], pool[2]));
        break;
      case 1:
        out.push_back(Gate::cnot(id, pool[0], pool[1]));
        break;
      case 2:
        out.push_back(Gate::doubly_controlled_phase(id, pool[0], pool[1], pool[2], {1, 3}));
        break;
      default:
        out.push_back(Gate::multi_controlled_phase(id, {pool[0]}, {1, 2}));
        break;
    }
  }
  return Circuit(qubits, std::move(out));
}

}  // namespace oracle
