#pragma once

// Hamilton cycles and paths by subset dynamic programming, plus the path-position
// primitives (shifted sets, crossing closure) used when reasoning about a fixed path.
//
// reach[mask] is the set of vertices v such that some path visits exactly `mask` and
// ends at v. For cycles the path is anchored at vertex 0; for paths every singleton
// is a start.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhnlab/graph.hpp"

namespace bhnlab {

inline constexpr int kHamiltonMaxOrder = 24;

struct Path {
  std::vector<int> order;

  int length() const { return static_cast<int>(order.size()); }
  bool operator==(const Path&) const = default;
};

struct Cycle {
  std::vector<int> order;

  int length() const { return static_cast<int>(order.size()); }
  bool operator==(const Cycle&) const = default;
};

/// Distinct in-range vertices with consecutive ones adjacent.
inline bool is_valid_path(const Graph& g, const std::vector<int>& order) {
  VertexSet seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(order[i - 1], v)) return false;
  }
  return true;
}

inline bool is_valid_path(const Graph& g, const Path& p) { return is_valid_path(g, p.order); }

inline bool is_valid_cycle(const Graph& g, const Cycle& c) {
  return c.length() >= 3 && is_valid_path(g, c.order) && g.adjacent(c.order.back(), c.order.front());
}

inline bool is_hamilton_path(const Graph& g, const Path& p) {
  return p.length() == g.order() && is_valid_path(g, p);
}

inline bool is_hamilton_cycle(const Graph& g, const Cycle& c) {
  return c.length() == g.order() && is_valid_cycle(g, c);
}

namespace detail {

inline void check_dp_order(const Graph& g, const char* who) {
  if (g.order() > kHamiltonMaxOrder)
    throw std::length_error(std::string(who) + ": order " + std::to_string(g.order()) +
                            " exceeds the dynamic-programming limit " +
                            std::to_string(kHamiltonMaxOrder));
}

// reach[] over subsets of `within`, with paths allowed to begin at any vertex of `starts`.
// Increasing numeric order of masks respects set inclusion.
inline std::vector<std::uint32_t> path_reach(const Graph& g, VertexSet starts, VertexSet within) {
  const int n = g.order();
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  starts.for_each([&](int v) { reach[std::size_t{1} << v] = std::uint32_t{1} << v; });
  std::array<std::uint32_t, kHamiltonMaxOrder> row{};
  for (int v = 0; v < n; ++v) row[v] = static_cast<std::uint32_t>(g.neighbors(v).bits());
  const std::uint32_t allowed = static_cast<std::uint32_t>(within.bits());
  for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
    const std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    std::uint32_t grow = allowed & ~mask;
    while (grow != 0) {
      const int w = std::countr_zero(grow);
      grow &= grow - 1;
      if (row[w] & ends) reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
    }
  }
  return reach;
}

// Walks back from (mask, end) choosing the smallest admissible predecessor each step.
inline std::vector<int> trace_back(const Graph& g, const std::vector<std::uint32_t>& reach,
                                   std::uint32_t mask, int end) {
  std::vector<int> rev{end};
  while (std::popcount(mask) > 1) {
    const std::uint32_t prev = mask & ~(std::uint32_t{1} << end);
    const std::uint32_t options = reach[prev] & static_cast<std::uint32_t>(g.neighbors(end).bits());
    end = std::countr_zero(options);
    mask = prev;
    rev.push_back(end);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace detail

inline std::optional<Cycle> hamilton_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("hamilton_cycle: order must be at least 3");
  detail::check_dp_order(g, "hamilton_cycle");
  if (min_degree(g) < 2 || !is_connected(g)) return std::nullopt;
  const auto reach = detail::path_reach(g, VertexSet::single(0), g.vertices());
  const auto full = static_cast<std::uint32_t>(g.vertices().bits());
  const std::uint32_t closing = reach[full] & static_cast<std::uint32_t>(g.neighbors(0).bits());
  if (closing == 0) return std::nullopt;
  return Cycle{detail::trace_back(g, reach, full, std::countr_zero(closing))};
}

inline bool is_hamiltonian(const Graph& g) {
  return g.order() >= 3 && hamilton_cycle(g).has_value();
}

inline std::optional<Path> hamilton_path(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("hamilton_path: empty graph");
  detail::check_dp_order(g, "hamilton_path");
  if (n == 1) return Path{{0}};
  if (!is_connected(g)) return std::nullopt;
  const auto reach = detail::path_reach(g, g.vertices(), g.vertices());
  const auto full = static_cast<std::uint32_t>(g.vertices().bits());
  if (reach[full] == 0) return std::nullopt;
  return Path{detail::trace_back(g, reach, full, std::countr_zero(reach[full]))};
}

inline bool is_traceable(const Graph& g) { return hamilton_path(g).has_value(); }

/// A Hamilton path from x to y, if one exists.
inline std::optional<Path> hamilton_path_between(const Graph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("hamilton_path_between: endpoints must differ");
  g.neighbors(x);  // range checks
  g.neighbors(y);
  detail::check_dp_order(g, "hamilton_path_between");
  const auto reach = detail::path_reach(g, VertexSet::single(x), g.vertices());
  const auto full = static_cast<std::uint32_t>(g.vertices().bits());
  if (((reach[full] >> y) & 1U) == 0) return std::nullopt;
  return Path{detail::trace_back(g, reach, full, y)};
}

/// Every pair of distinct vertices is joined by a Hamilton path. One anchored DP per
/// start vertex; the full-mask row lists every reachable far endpoint at once.
inline bool is_hamiltonian_connected(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("is_hamiltonian_connected: order must be at least 3");
  detail::check_dp_order(g, "is_hamiltonian_connected");
  if (min_degree(g) < 2 || !is_connected(g)) return false;
  const auto full = static_cast<std::uint32_t>(g.vertices().bits());
  for (int x = 0; x + 1 < n; ++x) {
    const auto reach = detail::path_reach(g, VertexSet::single(x), g.vertices());
    const std::uint32_t later = full & ~static_cast<std::uint32_t>(VertexSet::range(x + 1).bits());
    if ((reach[full] & later) != later) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Positions along a fixed path. Positions are 0-based; position i holds order[i].

/// Moves every member of s by `offset` positions along p; members that would leave the
/// path are dropped.
inline VertexSet shift_set(const Path& p, VertexSet s, int offset) {
  const int len = p.length();
  if (offset <= -len || offset >= len)
    throw std::invalid_argument("shift_set: |offset| must be smaller than the path length");
  VertexSet on_path;
  for (int v : p.order) on_path.insert(v);
  if (!s.is_subset_of(on_path)) throw std::invalid_argument("shift_set: set is not on the path");
  VertexSet out;
  for (int i = 0; i < len; ++i) {
    const int j = i + offset;
    if (s.contains(p.order[i]) && j >= 0 && j < len) out.insert(p.order[j]);
  }
  return out;
}

/// Closes a Hamilton path into a Hamilton cycle either directly (ends adjacent) or by
/// the crossing v1..vi vn..v(i+1) with v1 ~ v(i+1) and vn ~ vi, taking the first such i.
inline std::optional<Cycle> crossing_closure(const Graph& g, const Path& p) {
  if (!is_hamilton_path(g, p)) throw std::invalid_argument("crossing_closure: not a Hamilton path");
  const int n = p.length();
  if (n < 3) return std::nullopt;
  const auto& v = p.order;
  if (g.adjacent(v.front(), v.back())) return Cycle{v};
  for (int i = 1; i + 1 < n; ++i) {
    if (!g.adjacent(v.front(), v[i + 1]) || !g.adjacent(v.back(), v[i])) continue;
    std::vector<int> c(v.begin(), v.begin() + i + 1);
    c.insert(c.end(), v.rbegin(), v.rend() - (i + 1));
    return Cycle{std::move(c)};
  }
  return std::nullopt;
}

inline int count_cut_vertices(const Graph& g) {
  if (g.order() < 1 || !is_connected(g))
    throw std::invalid_argument("count_cut_vertices: graph must be connected");
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += is_cut_vertex(g, v) ? 1 : 0;
  return count;
}

}  // namespace bhnlab
