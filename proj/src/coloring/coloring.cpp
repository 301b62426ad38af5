#include "gatecolor/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "gatecolor/errors.hpp"

namespace gatecolor {

// ---------------------------------------------------------------------------
// Coloring / ColoredGraph

Coloring Coloring::from_colors(std::vector<Color> colors) {
  Color max_color = 0;
  for (Color c : colors) {
    if (c == 0) throw ValidationError("coloring: colors start at 1");
    max_color = std::max(max_color, c);
  }
  std::vector<char> used(max_color + 1, 0);
  for (Color c : colors) used[c] = 1;
  for (Color c = 1; c <= max_color; ++c) {
    if (!used[c]) throw ValidationError("coloring: color " + std::to_string(c) + " unused; colors must be 1..k");
  }
  return Coloring(std::move(colors), max_color);
}

Coloring Coloring::normalized(std::span<const Color> raw) {
  std::vector<Color> distinct(raw.begin(), raw.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Color> colors;
  colors.reserve(raw.size());
  for (Color c : raw) {
    colors.push_back(static_cast<Color>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin()) + 1);
  }
  return Coloring(std::move(colors), distinct.size());
}

bool is_proper(const ConflictGraph& graph, std::span<const Color> colors) {
  if (colors.size() != graph.vertex_count()) return false;
  for (auto [u, v] : graph.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

ColoredGraph::ColoredGraph(std::shared_ptr<const ConflictGraph> graph, Coloring coloring)
    : graph_(std::move(graph)), coloring_(std::move(coloring)) {
  if (!graph_) throw ValidationError("colored graph: null graph");
  if (coloring_.size() != graph_->vertex_count()) {
    throw ValidationError("colored graph: coloring covers " + std::to_string(coloring_.size()) + " vertices, graph has " +
                          std::to_string(graph_->vertex_count()));
  }
  for (auto [u, v] : graph_->edges()) {
    if (coloring_.color(u) == coloring_.color(v)) {
      throw ValidationError("colored graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") is monochromatic");
    }
  }
}

// ---------------------------------------------------------------------------
// Greedy

Coloring color_greedy(const ConflictGraph& graph, std::span<const Vertex> order) {
  const std::size_t n = graph.vertex_count();
  if (order.size() != n) throw ValidationError("greedy: order must list every vertex once");
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw ValidationError("greedy: order is not a permutation of the vertices");
    seen[v] = 1;
  }

  std::vector<Color> colors(n, 0);
  std::vector<std::size_t> stamp(n + 2, 0);  // stamp[c] == step iff c is blocked for the current vertex
  std::size_t step = 0;
  for (Vertex v : order) {
    ++step;
    for (Vertex u : graph.neighbors(v)) {
      if (colors[u] != 0) stamp[colors[u]] = step;
    }
    Color c = 1;
    while (stamp[c] == step) ++c;
    colors[v] = c;
  }
  return Coloring::from_colors(std::move(colors));
}

// ---------------------------------------------------------------------------
// DSatur

namespace {

struct DsaturKey {
  std::size_t saturation;
  std::size_t uncolored_degree;
  std::size_t rank;
  Vertex vertex;

  // Best candidate sorts first.
  bool operator<(const DsaturKey& o) const {
    return std::tie(o.saturation, o.uncolored_degree, rank) < std::tie(saturation, uncolored_degree, o.rank);
  }
};

std::vector<std::size_t> vertex_ranks(std::size_t n, const std::optional<std::uint64_t>& seed) {
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(rank.begin(), rank.end(), rng);
  }
  return rank;
}

class NeighborColorSet {
 public:
  bool contains(Color c) const { return c / kWordBits < words_.size() && ((words_[c / kWordBits] >> (c % kWordBits)) & 1U); }
  void insert(Color c) {
    if (c / kWordBits >= words_.size()) words_.resize(c / kWordBits + 1, 0);
    words_[c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  Color smallest_absent() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word free = ~words_[w];
      if (w == 0) free &= ~Word{1};  // color 0 is not a color
      if (free != 0) return static_cast<Color>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(free)));
    }
    return static_cast<Color>(std::max<std::size_t>(1, words_.size() * kWordBits));
  }

 private:
  std::vector<Word> words_;
};

}  // namespace

Coloring color_dsatur(const ConflictGraph& graph, const DsaturOptions& options) {
  const std::size_t n = graph.vertex_count();
  const bool use_degree = options.tie_break == DsaturTieBreak::LargestUncoloredDegree;
  const std::vector<std::size_t> rank = vertex_ranks(n, options.seed);

  std::vector<Color> colors(n, 0);
  std::vector<NeighborColorSet> neighbor_colors(n);
  std::vector<std::size_t> saturation(n, 0);
  std::vector<std::size_t> uncolored_degree(n);
  std::set<DsaturKey> queue;
  const auto key_of = [&](Vertex v) {
    return DsaturKey{saturation[v], use_degree ? uncolored_degree[v] : 0, rank[v], v};
  };
  for (Vertex v = 0; v < n; ++v) {
    uncolored_degree[v] = graph.degree(v);
    queue.insert(key_of(v));
  }

  while (!queue.empty()) {
    const Vertex v = queue.begin()->vertex;
    queue.erase(queue.begin());
    const Color c = neighbor_colors[v].smallest_absent();
    colors[v] = c;
    for (Vertex u : graph.neighbors(v)) {
      if (colors[u] != 0) continue;
      queue.erase(key_of(u));
      --uncolored_degree[u];
      if (!neighbor_colors[u].contains(c)) {
        neighbor_colors[u].insert(c);
        ++saturation[u];
      }
      queue.insert(key_of(u));
    }
  }
  return Coloring::from_colors(std::move(colors));
}

// ---------------------------------------------------------------------------
// Clique bound

namespace {

DynamicBitset row_bits(const ConflictGraph& graph, Vertex v) {
  DynamicBitset bits(graph.vertex_count());
  if (graph.has_matrix()) {
    const auto row = graph.row(v);
    std::copy(row.begin(), row.end(), bits.words().begin());
  } else {
    for (Vertex u : graph.neighbors(v)) bits.set(u);
  }
  return bits;
}

std::vector<Vertex> grow_clique(const ConflictGraph& graph, Vertex start) {
  std::vector<Vertex> clique{start};
  DynamicBitset candidates = row_bits(graph, start);
  while (!candidates.none()) {
    Vertex best = 0;
    std::size_t best_links = 0;
    bool found = false;
    candidates.for_each_set([&](std::size_t u) {
      std::size_t links = 0;
      if (graph.has_matrix()) {
        links = simd::active().and_popcount(graph.row(static_cast<Vertex>(u)).data(), candidates.words().data(),
                                            candidates.word_count());
      } else {
        for (Vertex w : graph.neighbors(static_cast<Vertex>(u))) links += candidates.test(w) ? 1 : 0;
      }
      if (!found || links > best_links) {
        best = static_cast<Vertex>(u);
        best_links = links;
        found = true;
      }
    });
    clique.push_back(best);
    candidates.and_with(row_bits(graph, best).words());
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace

std::vector<Vertex> greedy_clique(const ConflictGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return {};
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return graph.degree(a) > graph.degree(b); });
  constexpr std::size_t kStarts = 8;
  std::vector<Vertex> best;
  for (std::size_t s = 0; s < std::min(kStarts, n); ++s) {
    if (graph.degree(by_degree[s]) + 1 <= best.size()) break;
    auto clique = grow_clique(graph, by_degree[s]);
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exact branch and bound

namespace {

class ExactSearch {
 public:
  ExactSearch(const ConflictGraph& graph, std::uint64_t budget)
      : graph_(graph), n_(graph.vertex_count()), budget_(budget), uncolored_(n_) {}

  Coloring run() {
    if (n_ == 0) return Coloring::from_colors({});
    if (!graph_.has_matrix()) throw BudgetExceeded("exact coloring: graph too large for the exact solver");

    const Coloring upper = color_dsatur(graph_);
    best_.assign(upper.colors().begin(), upper.colors().end());
    upper_bound_ = upper.count();
    const std::vector<Vertex> clique = greedy_clique(graph_);
    lower_bound_ = clique.size();
    if (lower_bound_ == upper_bound_) return upper;

    colors_.assign(n_, 0);
    classes_.assign(upper_bound_ + 1, DynamicBitset(n_));
    uncolored_.set_all();
    // Clique members need distinct colors in any solution; fixing them to
    // 1..|clique| removes color-permutation symmetry.
    Color next = 0;
    for (Vertex v : clique) assign(v, ++next);
    search(clique.size(), clique.size());
    return Coloring::from_colors(best_);
  }

 private:
  void assign(Vertex v, Color c) {
    colors_[v] = c;
    classes_[c].set(v);
    uncolored_.reset(v);
  }

  void unassign(Vertex v) {
    classes_[colors_[v]].reset(v);
    colors_[v] = 0;
    uncolored_.set(v);
  }

  bool color_blocked(Vertex v, Color c) const { return classes_[c].intersects(graph_.row(v)); }

  Vertex select(std::size_t used) const {
    Vertex best = 0;
    std::size_t best_sat = 0;
    std::size_t best_deg = 0;
    bool found = false;
    const auto& kernels = simd::active();
    uncolored_.for_each_set([&](std::size_t u) {
      const auto v = static_cast<Vertex>(u);
      std::size_t sat = 0;
      for (Color c = 1; c <= used; ++c) sat += color_blocked(v, c) ? 1 : 0;
      const std::size_t deg =
          kernels.and_popcount(graph_.row(v).data(), uncolored_.words().data(), uncolored_.word_count());
      if (!found || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
        found = true;
      }
    });
    return best;
  }

  void search(std::size_t colored, std::size_t used) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("exact coloring: node budget of " + std::to_string(budget_) + " exhausted");
    }
    if (used >= upper_bound_) return;
    if (colored == n_) {
      if (used < upper_bound_) {
        upper_bound_ = used;
        best_ = colors_;
      }
      return;
    }
    const Vertex v = select(used);
    const std::size_t limit = std::min(used + 1, upper_bound_ - 1);
    for (Color c = 1; c <= limit; ++c) {
      if (color_blocked(v, c)) continue;
      assign(v, c);
      search(colored + 1, std::max<std::size_t>(used, c));
      unassign(v);
      if (upper_bound_ == lower_bound_ || c >= upper_bound_ - 1) break;
    }
  }

  const ConflictGraph& graph_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t upper_bound_ = 0;
  std::size_t lower_bound_ = 0;
  std::vector<Color> best_;
  std::vector<Color> colors_;
  std::vector<DynamicBitset> classes_;
  DynamicBitset uncolored_;
};

}  // namespace

Coloring color_exact(const ConflictGraph& graph, const ExactOptions& options) {
  return ExactSearch(graph, options.node_budget).run();
}

// ---------------------------------------------------------------------------
// Dispatch / export

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Greedy:
      return "greedy";
    case SolverKind::Dsatur:
      return "dsatur";
    case SolverKind::Exact:
      return "exact";
  }
  return "unknown";
}

std::optional<SolverKind> parse_solver(std::string_view name) {
  for (auto kind : {SolverKind::Greedy, SolverKind::Dsatur, SolverKind::Exact}) {
    if (solver_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Coloring solve_coloring(const ConflictGraph& graph, const SolverConfig& config) {
  switch (config.kind) {
    case SolverKind::Greedy: {
      std::vector<Vertex> order(graph.vertex_count());
      std::iota(order.begin(), order.end(), Vertex{0});
      return color_greedy(graph, order);
    }
    case SolverKind::Dsatur:
      return color_dsatur(graph, config.dsatur);
    case SolverKind::Exact:
      return color_exact(graph, config.exact);
  }
  throw std::logic_error("unknown solver kind");
}

nlohmann::json coloring_to_json(const Coloring& coloring) {
  return nlohmann::json{{"colors", std::vector<Color>(coloring.colors().begin(), coloring.colors().end())},
                        {"count", coloring.count()}};
}

}  // namespace gatecolor
