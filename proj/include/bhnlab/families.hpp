#pragma once

// The exceptional graph families of the hamiltonicity and traceability results.
//
//   exc_a(l)   = H ∨ (l+1)K1 for an arbitrary H of order l     (order 2l+1, odd)
//   exc_b(m)   = K1 ∨ 2Km                                     (order 2m+1, odd)
//   trace_a(l) = H ∨ (l+2)K1 for an arbitrary H of order l     (order 2l+2, even)
//   trace_b(m) = 2Km                                          (order 2m, even)
//
// Recognition is structural: in H ∨ qK1 the q independent vertices all have the same
// neighbourhood, namely the H side, so one vertex of the right degree pins the split.

#include <optional>
#include <stdexcept>
#include <string>

#include "bhnlab/graph.hpp"

namespace bhnlab {

enum class FamilyKind {
  exc_a,
  exc_b,
  trace_a,
  trace_b,
  complete_bipartite,
  complete,
  edgeless,
};

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::exc_a: return "exc_a";
    case FamilyKind::exc_b: return "exc_b";
    case FamilyKind::trace_a: return "trace_a";
    case FamilyKind::trace_b: return "trace_b";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::complete: return "complete";
    case FamilyKind::edgeless: return "edgeless";
  }
  return "unknown";
}

struct FamilyTag {
  FamilyKind kind;
  /// exc_a/trace_a: order of the arbitrary side; exc_b/trace_b: clique order.
  int param = 0;

  bool operator==(const FamilyTag&) const = default;
};

/// inner ∨ (inner.order()+1)K1.
inline Graph build_exc_a(const Graph& inner) {
  if (inner.order() < 1) throw std::invalid_argument("build_exc_a: inner graph must be non-empty");
  return join(inner, empty_graph(inner.order() + 1));
}

/// K1 ∨ 2Km with the apex at vertex 0.
inline Graph build_exc_b(int m) {
  if (m < 1) throw std::invalid_argument("build_exc_b: m must be positive");
  if (2 * m + 1 > kMaxOrder) throw std::length_error("build_exc_b: order exceeds 64");
  return join(complete_graph(1), copies(2, complete_graph(m)));
}

/// inner ∨ (inner.order()+2)K1.
inline Graph build_trace_a(const Graph& inner) {
  return join(inner, empty_graph(inner.order() + 2));
}

inline Graph build_trace_b(int m) {
  if (m < 1) throw std::invalid_argument("build_trace_b: m must be positive");
  return copies(2, complete_graph(m));
}

/// Whether some independent set of size `side` is complete to all other vertices.
inline bool has_dominated_independent_side(const Graph& g, int side) {
  const int n = g.order();
  if (side < 1 || side > n) return false;
  const int other = n - side;
  for (int v = 0; v < n; ++v) {
    if (degree(g, v) != other) continue;
    const VertexSet rest = g.neighbors(v);
    const VertexSet independent = g.vertices() - rest;
    if (independent.size() != side || !is_independent(g, independent)) continue;
    bool complete = true;
    independent.for_each([&](int u) { complete = complete && g.neighbors(u) == rest; });
    if (complete) return true;
  }
  return false;
}

inline bool recognize_exc_a(const Graph& g) {
  const int n = g.order();
  if (n < 5 || n % 2 == 0) return false;
  return has_dominated_independent_side(g, (n + 1) / 2);
}

inline bool recognize_exc_b(const Graph& g) {
  const int n = g.order();
  if (n < 3 || n % 2 == 0) return false;
  int apex = -1;
  for (int v = 0; v < n; ++v) {
    if (degree(g, v) != n - 1) continue;
    if (apex >= 0) return false;
    apex = v;
  }
  if (apex < 0) return false;
  // Without the apex every vertex must sit in a clique of order (n-1)/2.
  const int m = (n - 1) / 2;
  const VertexSet rest = g.vertices() - VertexSet::single(apex);
  const int first = rest.first();
  const VertexSet first_side = (g.closed_neighbors(first) & rest);
  if (first_side.size() != m) return false;
  bool ok = true;
  rest.for_each([&](int v) {
    const VertexSet side = first_side.contains(v) ? first_side : rest - first_side;
    ok = ok && (g.closed_neighbors(v) & rest) == side;
  });
  return ok;
}

inline bool recognize_trace_a(const Graph& g) {
  const int n = g.order();
  if (n < 2 || n % 2 != 0) return false;
  return has_dominated_independent_side(g, (n + 2) / 2);
}

/// Two disjoint cliques of equal order and nothing else.
inline bool recognize_trace_b(const Graph& g) {
  const int n = g.order();
  if (n < 2 || n % 2 != 0) return false;
  const VertexSet side = g.closed_neighbors(0);
  if (side.size() != n / 2) return false;
  const VertexSet other = g.vertices() - side;
  for (int v = 0; v < n; ++v)
    if (g.closed_neighbors(v) != (side.contains(v) ? side : other)) return false;
  return true;
}

/// trace_a is reported first when a graph belongs to both families (only 2K1 does).
inline std::optional<FamilyTag> recognize_trace_families(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("recognize_trace_families: order must be at least 2");
  if (recognize_trace_a(g)) return FamilyTag{FamilyKind::trace_a, (g.order() - 2) / 2};
  if (recognize_trace_b(g)) return FamilyTag{FamilyKind::trace_b, g.order() / 2};
  return std::nullopt;
}

}  // namespace bhnlab
