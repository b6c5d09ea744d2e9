#pragma once

// Immutable bitset-backed simple graphs on at most 64 vertices.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bhnlab {

inline constexpr int kMaxOrder = 64;

/// A set of vertex indices packed into one 64-bit word.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) bits_ |= bit(v);
  }

  /// The set {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet& insert(int v) { bits_ |= bit(v); return *this; }
  constexpr VertexSet& erase(int v) { bits_ &= ~bit(v); return *this; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr auto operator<=>(const VertexSet&) const = default;

  /// Members in increasing order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (auto b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

/// Degree-sum value that may be infinite (sigma2 of a complete graph).
class DegreeBound {
public:
  constexpr DegreeBound() = default;
  static constexpr DegreeBound infinity() { return DegreeBound(kInf); }
  static constexpr DegreeBound finite(int v) { return DegreeBound(v); }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr int value() const {
    if (is_infinite()) throw std::logic_error("DegreeBound: value() of infinity");
    return value_;
  }
  /// True when this bound is at least `rhs`; infinity dominates everything.
  constexpr bool at_least(int rhs) const { return is_infinite() || value_ >= rhs; }
  constexpr bool equals(int rhs) const { return !is_infinite() && value_ == rhs; }
  constexpr bool operator==(const DegreeBound&) const = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  constexpr explicit DegreeBound(int v) : value_(v) {}
  int value_ = 0;
};

class Graph {
public:
  using Edge = std::pair<int, int>;

  /// Edgeless graph of order n.
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder)
      throw std::invalid_argument("Graph: order must be in [0, 64], got " + std::to_string(n));
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) link(u, v);
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) link(u, v);
  }

  /// Build from neighbourhood rows; rows must describe a symmetric loopless relation.
  static Graph from_rows(int n, const std::vector<VertexSet>& rows) {
    Graph g(n);
    if (static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("Graph::from_rows: row count does not match order");
    for (int v = 0; v < n; ++v) g.adj_[v] = rows[v];
    if (!g.is_valid()) throw std::invalid_argument("Graph::from_rows: rows are not a simple graph");
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  VertexSet closed_neighbors(int v) const { return neighbors(v) | VertexSet::single(v); }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v)
      (adj_[v] - VertexSet::range(v + 1)).for_each([&](int w) { out.emplace_back(v, w); });
    return out;
  }

  /// Union of the open neighbourhoods of `s`.
  VertexSet neighbors_of(VertexSet s) const {
    VertexSet out;
    s.for_each([&](int v) { out |= adj_[v]; });
    return out;
  }

  /// Symmetry, loop-freeness and range of every row.
  bool is_valid() const {
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
      if (!adj_[v].is_subset_of(all) || adj_[v].contains(v)) return false;
      bool symmetric = true;
      adj_[v].for_each([&](int w) { symmetric = symmetric && adj_[w].contains(v); });
      if (!symmetric) return false;
    }
    for (int v = n_; v < kMaxOrder; ++v)
      if (!adj_[v].empty()) return false;
    return true;
  }

  /// Subgraph induced on the vertices of `keep`, relabelled in increasing order.
  Graph induced(VertexSet keep) const {
    const auto vs = keep.to_vector();
    Graph h(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (adj_[vs[i]].contains(vs[j])) h.link(static_cast<int>(i), static_cast<int>(j));
    return h;
  }

  /// The graph with vertex v renamed to perm[v].
  Graph relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
      throw std::invalid_argument("Graph::relabel: permutation has wrong length");
    VertexSet seen;
    for (int p : perm) {
      if (p < 0 || p >= n_ || seen.contains(p))
        throw std::invalid_argument("Graph::relabel: not a permutation");
      seen.insert(p);
    }
    Graph h(n_);
    for (auto [u, v] : edges()) h.link(perm[u], perm[v]);
    return h;
  }

  bool operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    return std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
  }

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
  }
  void link(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  friend class GraphBuilder;

  int n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

/// Mutable staging area for hot loops that assemble graphs edge by edge.
class GraphBuilder {
public:
  explicit GraphBuilder(int n) : g_(n) {}
  GraphBuilder& add_edge(int u, int v) {
    g_.link(u, v);
    return *this;
  }
  GraphBuilder& connect(int v, VertexSet targets) {
    targets.for_each([&](int w) { g_.link(v, w); });
    return *this;
  }
  Graph build() const { return g_; }

private:
  Graph g_;
};

// ---------------------------------------------------------------------------
// Named small graphs.

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: order must be at least 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Invariants.

inline int degree(const Graph& g, int v) { return g.neighbors(v).size(); }

inline int min_degree(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("min_degree: empty graph");
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, degree(g, v));
  return best;
}

/// Minimum degree sum over non-adjacent pairs; infinity for complete graphs.
inline DegreeBound sigma2(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("sigma2: empty graph");
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[v] = degree(g, v);
  int best = std::numeric_limits<int>::max();
  for (int u = 0; u < n; ++u) {
    const VertexSet non = g.vertices() - g.closed_neighbors(u) - VertexSet::range(u + 1);
    non.for_each([&](int v) { best = std::min(best, deg[u] + deg[v]); });
  }
  return best == std::numeric_limits<int>::max() ? DegreeBound::infinity()
                                                 : DegreeBound::finite(best);
}

/// Vertices reachable from `start` without entering `blocked`.
inline VertexSet reachable_from(const Graph& g, int start, VertexSet blocked = {}) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    const VertexSet next = g.neighbors_of(frontier) - seen - blocked;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("is_connected: empty graph");
  return reachable_from(g, 0) == g.vertices();
}

/// True when deleting v leaves the rest of the graph disconnected.
inline bool is_cut_vertex(const Graph& g, int v) {
  const VertexSet rest = g.vertices() - VertexSet::single(v);
  if (rest.size() <= 1) return false;
  return reachable_from(g, rest.first(), VertexSet::single(v)) != rest;
}

inline bool is_2connected(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("is_2connected: order must be at least 3");
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (is_cut_vertex(g, v)) return false;
  return true;
}

/// True when every vertex is adjacent to every other one.
inline bool is_complete(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.closed_neighbors(v) != g.vertices()) return false;
  return true;
}

inline bool is_independent(const Graph& g, VertexSet s) {
  return !g.neighbors_of(s).intersects(s);
}

// ---------------------------------------------------------------------------
// Constructions. The left operand's vertices keep their labels.

namespace detail {
inline GraphBuilder place_side_by_side(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxOrder)
    throw std::length_error("graph order " + std::to_string(g.order() + h.order()) +
                            " exceeds the 64-vertex limit");
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + g.order(), v + g.order());
  return b;
}
}  // namespace detail

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  return detail::place_side_by_side(g, h).build();
}

inline Graph join(const Graph& g, const Graph& h) {
  auto b = detail::place_side_by_side(g, h);
  const VertexSet right(VertexSet::range(g.order() + h.order()) - VertexSet::range(g.order()));
  for (int v = 0; v < g.order(); ++v) b.connect(v, right);
  return b.build();
}

/// k vertex-disjoint copies of g.
inline Graph copies(int k, const Graph& g) {
  Graph out(0);
  for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int v = 0; v < g.order(); ++v)
    b.connect(v, g.vertices() - g.closed_neighbors(v) - VertexSet::range(v + 1));
  return b.build();
}

inline Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

// ---------------------------------------------------------------------------
// Canonical form by permutation minimisation.

inline constexpr int kCanonicalMaxOrder = 10;

namespace detail {

// Assigns vertices to positions 0..n-1, minimising the column-major upper-triangle
// bit string. Column j holds adjacency of position j to positions 0..j-1 with position 0
// as the most significant bit, so columns compare as integers. Only vertices that
// realise the smallest column at a position can lead to the minimum, and a prefix that
// already exceeds the incumbent is cut; the result equals the minimum over all n!
// relabellings.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  /// position -> vertex of a minimising relabelling.
  std::vector<int> run() {
    if (n_ == 0) return {};
    for (int v = 0; v < n_; ++v) columns_[0][v] = 0;
    descend(0, VertexSet{}, true);
    return {best_order_.begin(), best_order_.begin() + n_};
  }

private:
  void descend(int pos, VertexSet used, bool below) {
    if (pos == n_) {
      if (below) {
        best_ = current_;
        best_order_ = order_;
        found_ = true;
      }
      return;
    }
    const VertexSet free = g_.vertices() - used;
    auto& cols = columns_[pos];
    std::uint64_t lowest = ~std::uint64_t{0};
    free.for_each([&](int v) { lowest = std::min(lowest, cols[v]); });
    if (!below && lowest > best_[pos]) return;

    free.for_each([&](int v) {
      if (cols[v] != lowest) return;
      if (!below && lowest > best_[pos]) return;
      const bool child_below = below || !found_ || lowest < best_[pos];
      order_[pos] = v;
      current_[pos] = lowest;
      if (pos + 1 < n_) {
        auto& next = columns_[pos + 1];
        const VertexSet nb = g_.neighbors(v);
        (free - VertexSet::single(v)).for_each([&](int w) {
          next[w] = (cols[w] << 1) | (nb.contains(w) ? 1U : 0U);
        });
      }
      descend(pos + 1, used | VertexSet::single(v), child_below);
      // The incumbent now shares this prefix (or was never beaten from it).
      below = false;
    });
  }

  const Graph& g_;
  int n_;
  bool found_ = false;
  std::array<int, kMaxOrder> order_{};
  std::array<int, kMaxOrder> best_order_{};
  std::array<std::uint64_t, kMaxOrder> current_{};
  std::array<std::uint64_t, kMaxOrder> best_{};
  std::array<std::array<std::uint64_t, kMaxOrder>, kMaxOrder> columns_{};
};

inline void check_canonical_order(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw std::length_error("canonical form supports order <= " +
                            std::to_string(kCanonicalMaxOrder) + ", got " +
                            std::to_string(g.order()));
}

}  // namespace detail

/// The isomorphic copy of g whose upper-triangle string is lexicographically minimal.
inline Graph canonical_form(const Graph& g) {
  detail::check_canonical_order(g);
  const auto position_to_vertex = detail::CanonicalSearch(g).run();
  std::vector<int> perm(position_to_vertex.size());
  for (std::size_t p = 0; p < perm.size(); ++p) perm[position_to_vertex[p]] = static_cast<int>(p);
  return g.relabel(perm);
}

namespace detail {
/// Order byte followed by the upper triangle, column-major, packed 8 bits per byte
/// (most significant first).
inline std::string upper_triangle_code(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n));
  unsigned acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(acc << (8 - filled)));
  return out;
}
}  // namespace detail

/// Upper-triangle code of the canonical form; equal codes iff isomorphic graphs.
inline std::string canonical_code(const Graph& g) {
  return detail::upper_triangle_code(canonical_form(g));
}

}  // namespace bhnlab
