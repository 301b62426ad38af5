#include <cstdint>
#include <limits>
#include <sstream>

#include "gatecolor/coloring.hpp"
#include "gatecolor/conflict_graph.hpp"
#include "gatecolor/errors.hpp"

namespace gatecolor {

using nlohmann::json;

std::string export_dot(const ConflictGraph& graph, const Coloring* coloring) {
  if (coloring != nullptr && !is_proper(graph, coloring->colors())) {
    throw ValidationError("dot export: coloring is not proper for this graph");
  }
  // Graphviz's set312 scheme has 12 entries; palette indices wrap around.
  constexpr std::size_t kPalette = 12;
  std::ostringstream out;
  out << "graph conflicts {\n";
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << v;
    if (coloring != nullptr) {
      const Color c = coloring->color(v);
      out << " [label=\"" << v << ":" << c << "\", style=filled, colorscheme=set312, fillcolor="
          << ((c - 1) % kPalette) + 1 << "]";
    }
    out << ";\n";
  }
  for (auto [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

json graph_to_json(const ConflictGraph& graph) {
  json edges = json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  return json{{"vertices", graph.vertex_count()}, {"edges", std::move(edges)}};
}

ConflictGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("graph: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "vertices" && key != "edges") throw ValidationError("graph." + key + ": unknown field");
  }
  if (!j.contains("vertices") || !j["vertices"].is_number_unsigned()) {
    throw ValidationError("graph.vertices: expected a non-negative integer");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) throw ValidationError("graph.edges: expected an array");
  const auto n = j["vertices"].get<std::uint64_t>();
  if (n > std::numeric_limits<Vertex>::max()) throw ValidationError("graph.vertices: too many vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& e = j["edges"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ValidationError("graph.edges[" + std::to_string(i) + "]: expected [i, j]");
    }
    const auto u = e[0].get<std::uint64_t>();
    const auto v = e[1].get<std::uint64_t>();
    if (u >= n || v >= n) throw ValidationError("graph.edges[" + std::to_string(i) + "]: endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return ConflictGraph(n, edges);
}

}  // namespace gatecolor
