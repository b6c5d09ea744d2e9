#pragma once

// Isomorph-free enumeration of small graphs.
//
// Every graph on n vertices arises from a graph on n-1 vertices by adding a vertex with
// some neighbourhood, so extending one representative per class on n-1 vertices in all
// 2^(n-1) ways and deduplicating by canonical code reaches every class on n vertices.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhnlab/graph.hpp"

namespace bhnlab {

inline constexpr int kEnumerateMaxOrder = 8;

namespace detail {

inline std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& smaller, int n) {
  std::map<std::string, Graph> classes;
  for (const Graph& h : smaller) {
    for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
      GraphBuilder b(n);
      for (auto [u, v] : h.edges()) b.add_edge(u, v);
      b.connect(n - 1, VertexSet(nb));
      const Graph c = canonical_form(b.build());
      classes.try_emplace(upper_triangle_code(c), c);
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(g);
  return out;
}

}  // namespace detail

/// One canonical representative per isomorphism class of graphs of order n, ordered by
/// canonical code.
inline std::vector<Graph> enumerate_all_graphs(int n, bool connected_only = false) {
  if (n < 1) throw std::invalid_argument("enumerate_all_graphs: order must be positive");
  if (n > kEnumerateMaxOrder)
    throw std::length_error("enumerate_all_graphs: built-in enumeration stops at order " +
                            std::to_string(kEnumerateMaxOrder) +
                            "; pipe a graph6 catalog (e.g. from geng) through --input instead");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) level = detail::extend_by_one_vertex(level, k);
  if (!connected_only) return level;
  std::vector<Graph> connected;
  for (const Graph& g : level)
    if (is_connected(g)) connected.push_back(g);
  return connected;
}

}  // namespace bhnlab
