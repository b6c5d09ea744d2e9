#pragma once

// Bipartite holes and the bipartite-hole-number.
//
// An (s,t)-hole is a pair of disjoint sets S, T with |S| = s, |T| = t and no S-T edge.
// Edges inside T are allowed, so for a fixed S every vertex outside S ∪ N(S) may join T,
// and the largest t for a given s is max over |S| = s of n - |S ∪ N(S)|. The fast path
// computes that profile in one depth-first sweep over all 2^n subsets.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhnlab/graph.hpp"

namespace bhnlab {

struct HoleWitness {
  VertexSet s_side;
  VertexSet t_side;
};

/// Largest hole size t for each s, with the lexicographically smallest maximising S.
struct HoleProfile {
  /// max_t[s] for s = 0..n; max_t[0] is n (the empty S leaves everything uncovered).
  std::vector<int> max_t;
  /// best_s[s] is the smallest bitmask among the S of size s attaining max_t[s].
  std::vector<VertexSet> best_s;

  int order() const { return static_cast<int>(max_t.size()) - 1; }
};

inline constexpr int kHoleProfileMaxOrder = 40;

namespace detail {

class ProfileSweep {
public:
  explicit ProfileSweep(const Graph& g) : g_(g), n_(g.order()) {
    profile_.max_t.assign(static_cast<std::size_t>(n_ + 1), -1);
    profile_.best_s.assign(static_cast<std::size_t>(n_ + 1), VertexSet{});
    for (int v = 0; v < n_; ++v) closed_[v] = g.closed_neighbors(v);
  }

  HoleProfile run() {
    visit(0, VertexSet{}, VertexSet{});
    return profile_;
  }

private:
  // Subsets are enumerated by deciding vertex `next` onward; the covered set of the
  // current S is carried down so each visit costs one OR.
  void visit(int next, VertexSet s, VertexSet covered) {
    const int size = s.size();
    const int uncovered = n_ - covered.size();
    auto& best = profile_.max_t[size];
    auto& arg = profile_.best_s[size];
    if (uncovered > best || (uncovered == best && s.bits() < arg.bits())) {
      best = uncovered;
      arg = s;
    }
    for (int v = next; v < n_; ++v)
      visit(v + 1, s | VertexSet::single(v), covered | closed_[v]);
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, kMaxOrder> closed_{};
  HoleProfile profile_;
};

}  // namespace detail

inline HoleProfile hole_profile(const Graph& g) {
  if (g.order() > kHoleProfileMaxOrder)
    throw std::length_error("hole_profile: order " + std::to_string(g.order()) +
                            " exceeds the exhaustive limit " +
                            std::to_string(kHoleProfileMaxOrder));
  return detail::ProfileSweep(g).run();
}

/// Largest t such that g has an (s,t)-bipartite-hole (0 if none).
inline int max_hole_t(const Graph& g, int s) {
  if (s < 1 || s > g.order())
    throw std::out_of_range("max_hole_t: s must be in [1, n], got " + std::to_string(s));
  return hole_profile(g).max_t[s];
}

/// Whether g has an (s,t)-hole; the witness uses the smallest maximising S and the t
/// smallest uncovered vertices.
inline std::optional<HoleWitness> find_bipartite_hole(const Graph& g, int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("find_bipartite_hole: s and t must be positive");
  if (s + t > g.order())
    throw std::invalid_argument("find_bipartite_hole: s + t = " + std::to_string(s + t) +
                                " exceeds the order " + std::to_string(g.order()));
  const auto profile = hole_profile(g);
  if (profile.max_t[s] < t) return std::nullopt;
  const VertexSet s_side = profile.best_s[s];
  VertexSet outside = g.vertices() - s_side - g.neighbors_of(s_side);
  VertexSet t_side;
  for (int i = 0; i < t; ++i) {
    const int v = outside.first();
    t_side.insert(v);
    outside.erase(v);
  }
  return HoleWitness{s_side, t_side};
}

inline bool has_bipartite_hole(const Graph& g, int s, int t) {
  return find_bipartite_hole(g, s, t).has_value();
}

/// Least s + t - 1 over positive (s,t) admitting no hole, read off a profile.
inline int bipartite_hole_number(const HoleProfile& profile) {
  int best = profile.order();
  for (int s = 1; s <= profile.order(); ++s) best = std::min(best, s + profile.max_t[s]);
  return best;
}

inline int bipartite_hole_number(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("bipartite_hole_number: empty graph");
  return bipartite_hole_number(hole_profile(g));
}

/// Split (s, t) with s + t = alpha~ + 1 and no (s,t)-hole, smallest s first.
inline std::pair<int, int> hole_free_split(const HoleProfile& profile) {
  const int k = bipartite_hole_number(profile);
  for (int s = 1; s <= profile.order(); ++s)
    if (s + profile.max_t[s] == k) return {s, k + 1 - s};
  throw std::logic_error("hole_free_split: inconsistent profile");
}

// ---------------------------------------------------------------------------
// Brute-force oracle straight from the definition.

inline constexpr int kBruteForceMaxOrder = 16;

/// hole[s][t] for 0 <= s, t <= n: does some disjoint (S,T) of those sizes have no S-T edge.
/// Every ordered pair of disjoint sets is visited and its edge set tested directly.
inline std::vector<std::vector<bool>> hole_table_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder)
    throw std::length_error("bhn_bruteforce: order " + std::to_string(n) + " exceeds " +
                            std::to_string(kBruteForceMaxOrder));
  std::vector<std::vector<bool>> hole(static_cast<std::size_t>(n + 1),
                                      std::vector<bool>(static_cast<std::size_t>(n + 1), false));
  const std::uint64_t full = VertexSet::range(n).bits();
  for (std::uint64_t s = 0;; ++s) {
    const VertexSet sset(s);
    const std::uint64_t rest = full & ~s;
    // T ranges over every subset of the complement, including the empty set.
    for (std::uint64_t t = rest;; t = (t - 1) & rest) {
      const VertexSet tset(t);
      bool edge = false;
      tset.for_each([&](int v) { edge = edge || g.neighbors(v).intersects(sset); });
      if (!edge) hole[sset.size()][tset.size()] = true;
      if (t == 0) break;
    }
    if (s == full) break;
  }
  return hole;
}

/// Least k such that some positive s, t with s + t = k + 1 admit no hole.
inline int bhn_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("bhn_bruteforce: empty graph");
  const auto hole = hole_table_bruteforce(g);
  for (int k = 1;; ++k)
    for (int s = 1; s <= k; ++s) {
      const int t = k + 1 - s;
      if (s > n || t > n || s + t > n || !hole[s][t]) return k;
    }
}

/// Largest r such that every split s + t = r into nonnegative parts admits a hole.
inline int bhn_bruteforce_max_r(const Graph& g) {
  const int n = g.order();
  const auto hole = hole_table_bruteforce(g);
  int best = 0;
  for (int r = 0; r <= n; ++r) {
    bool all = true;
    for (int s = 0; s <= r; ++s) all = all && hole[s][r - s];
    if (all) best = r;
  }
  return best;
}

}  // namespace bhnlab
