#pragma once

// Theorem verification over graph catalogs.
//
// Each checked result is a (hypothesis, conclusion, exceptions) triple. A graph is
// not-applicable when the hypothesis fails, confirmed when the conclusion holds, an
// exception when the conclusion fails but the graph belongs to an allowed family, and a
// counterexample otherwise.

#include <algorithm>
#include <array>
#include <cctype>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bhnlab/bhn.hpp"
#include "bhnlab/enumerate.hpp"
#include "bhnlab/families.hpp"
#include "bhnlab/graph.hpp"
#include "bhnlab/graph6.hpp"
#include "bhnlab/hamilton.hpp"

namespace bhnlab {

enum class TheoremId {
  my_thm,       // delta >= bhn  =>  hamiltonian
  ehw_thm,      // 2-connected, sigma2 >= 2 bhn - 1  =>  hamiltonian
  ore_stab,     // 2-connected, sigma2 >= 2 bhn - 2  =>  hamiltonian unless exc_a
  deg_stab,     // delta >= bhn - 1  =>  hamiltonian unless exc_a / exc_b
  trace_lemma,  // delta >= bhn - 1  =>  traceable
  dirac_stab,   // delta >= (n-1)/2  =>  hamiltonian unless n odd and exc_a / exc_b
  trace_ore,    // connected, sigma2 >= 2 bhn - 4  =>  traceable unless trace_a (n >= 4)
  trace_deg,    // delta >= bhn - 2  =>  traceable unless trace_a / trace_b
};

inline constexpr std::array<TheoremId, 8> kAllTheorems = {
    TheoremId::my_thm,      TheoremId::ehw_thm,    TheoremId::ore_stab,  TheoremId::deg_stab,
    TheoremId::trace_lemma, TheoremId::dirac_stab, TheoremId::trace_ore, TheoremId::trace_deg,
};

inline std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::my_thm: return "my_thm";
    case TheoremId::ehw_thm: return "ehw_thm";
    case TheoremId::ore_stab: return "ore_stab";
    case TheoremId::deg_stab: return "deg_stab";
    case TheoremId::trace_lemma: return "trace_lemma";
    case TheoremId::dirac_stab: return "dirac_stab";
    case TheoremId::trace_ore: return "trace_ore";
    case TheoremId::trace_deg: return "trace_deg";
  }
  return "unknown";
}

/// Case-insensitive lookup by name.
inline std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == lower) return id;
  return std::nullopt;
}

/// Invariants of one graph, computed on first use.
class GraphFacts {
public:
  explicit GraphFacts(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }
  int min_degree() const { return cached(delta_, [&] { return bhnlab::min_degree(g_); }); }
  DegreeBound sigma2() const { return cached(sigma2_, [&] { return bhnlab::sigma2(g_); }); }
  int alpha_tilde() const { return cached(bhn_, [&] { return bipartite_hole_number(g_); }); }
  bool connected() const { return cached(connected_, [&] { return is_connected(g_); }); }
  bool two_connected() const {
    return cached(two_connected_, [&] { return order() >= 3 && is_2connected(g_); });
  }
  bool hamiltonian() const { return cached(hamiltonian_, [&] { return is_hamiltonian(g_); }); }
  bool traceable() const { return cached(traceable_, [&] { return is_traceable(g_); }); }

private:
  template <typename T, typename F>
  static T cached(std::optional<T>& slot, F&& compute) {
    if (!slot) slot = compute();
    return *slot;
  }

  const Graph& g_;
  mutable std::optional<int> delta_;
  mutable std::optional<DegreeBound> sigma2_;
  mutable std::optional<int> bhn_;
  mutable std::optional<bool> connected_;
  mutable std::optional<bool> two_connected_;
  mutable std::optional<bool> hamiltonian_;
  mutable std::optional<bool> traceable_;
};

struct Hypothesis {
  bool holds = false;
  /// The defining inequality holds with equality.
  bool tight = false;
};

struct TheoremCheck {
  TheoremId id;
  std::function<Hypothesis(const GraphFacts&)> hypothesis;
  std::function<bool(const GraphFacts&)> conclusion;
  std::function<bool(const GraphFacts&)> exception;
};

namespace detail {

inline Hypothesis at_least(int lhs, int rhs) { return {lhs >= rhs, lhs == rhs}; }
inline Hypothesis at_least(DegreeBound lhs, int rhs) { return {lhs.at_least(rhs), lhs.equals(rhs)}; }
inline bool never(const GraphFacts&) { return false; }
inline bool hamiltonian(const GraphFacts& f) { return f.hamiltonian(); }
inline bool traceable(const GraphFacts& f) { return f.traceable(); }

}  // namespace detail

inline const TheoremCheck& theorem_check(TheoremId id) {
  using detail::at_least;
  static const std::array<TheoremCheck, 8> table = {{
      {TheoremId::my_thm,
       [](const GraphFacts& f) {
         if (f.order() < 3) return Hypothesis{};
         return at_least(f.min_degree(), f.alpha_tilde());
       },
       detail::hamiltonian, detail::never},
      {TheoremId::ehw_thm,
       [](const GraphFacts& f) {
         if (f.order() < 3 || !f.two_connected()) return Hypothesis{};
         return at_least(f.sigma2(), 2 * f.alpha_tilde() - 1);
       },
       detail::hamiltonian, detail::never},
      {TheoremId::ore_stab,
       [](const GraphFacts& f) {
         if (f.order() < 3 || !f.two_connected()) return Hypothesis{};
         return at_least(f.sigma2(), 2 * f.alpha_tilde() - 2);
       },
       detail::hamiltonian, [](const GraphFacts& f) { return recognize_exc_a(f.graph()); }},
      {TheoremId::deg_stab,
       [](const GraphFacts& f) {
         if (f.order() < 3) return Hypothesis{};
         return at_least(f.min_degree(), f.alpha_tilde() - 1);
       },
       detail::hamiltonian,
       [](const GraphFacts& f) {
         return recognize_exc_a(f.graph()) || recognize_exc_b(f.graph());
       }},
      {TheoremId::trace_lemma,
       [](const GraphFacts& f) {
         if (f.order() < 3) return Hypothesis{};
         return at_least(f.min_degree(), f.alpha_tilde() - 1);
       },
       detail::traceable, detail::never},
      {TheoremId::dirac_stab,
       [](const GraphFacts& f) {
         if (f.order() < 3) return Hypothesis{};
         return at_least(2 * f.min_degree(), f.order() - 1);
       },
       detail::hamiltonian,
       [](const GraphFacts& f) {
         return f.order() % 2 == 1 && (recognize_exc_a(f.graph()) || recognize_exc_b(f.graph()));
       }},
      {TheoremId::trace_ore,
       [](const GraphFacts& f) {
         if (!f.connected()) return Hypothesis{};
         return at_least(f.sigma2(), 2 * f.alpha_tilde() - 4);
       },
       detail::traceable,
       [](const GraphFacts& f) { return f.order() >= 4 && recognize_trace_a(f.graph()); }},
      {TheoremId::trace_deg,
       [](const GraphFacts& f) { return at_least(f.min_degree(), f.alpha_tilde() - 2); },
       detail::traceable,
       [](const GraphFacts& f) {
         return recognize_trace_a(f.graph()) || recognize_trace_b(f.graph());
       }},
  }};
  return table[static_cast<std::size_t>(id)];
}

enum class Verdict { not_applicable, confirmed, exception, counterexample };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::confirmed: return "confirmed";
    case Verdict::exception: return "exception";
    case Verdict::counterexample: return "COUNTEREXAMPLE";
  }
  return "unknown";
}

struct CheckResult {
  Verdict verdict = Verdict::not_applicable;
  bool tight = false;
};

inline CheckResult evaluate(TheoremId id, const GraphFacts& facts) {
  const auto& check = theorem_check(id);
  const Hypothesis h = check.hypothesis(facts);
  if (!h.holds) return {Verdict::not_applicable, false};
  if (check.conclusion(facts)) return {Verdict::confirmed, h.tight};
  if (check.exception(facts)) return {Verdict::exception, h.tight};
  return {Verdict::counterexample, h.tight};
}

inline Verdict check_one(TheoremId id, const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("check_one: empty graph");
  return evaluate(id, GraphFacts(g)).verdict;
}

struct VerifyReport {
  TheoremId theorem = TheoremId::my_thm;
  std::size_t graphs_checked = 0;
  std::size_t hypothesis_hits = 0;
  /// graph6 words, sorted.
  std::vector<std::string> counterexamples;
  std::size_t equality_cases = 0;
  std::size_t exceptions_found = 0;

  bool certified() const { return counterexamples.empty(); }
  bool operator==(const VerifyReport&) const = default;
};

// ---------------------------------------------------------------------------
// Catalog sources.

/// Pull-style producer of graphs; returns nullopt when exhausted.
using GraphSource = std::function<std::optional<Graph>()>;

/// All isomorphism classes for each order in [lo, hi], in enumeration order.
inline GraphSource builtin_source(int lo, int hi, bool connected_only) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("builtin_source: invalid order range");
  if (hi > kEnumerateMaxOrder) enumerate_all_graphs(hi);  // raises the size error up front
  struct State {
    int next_order;
    int hi;
    bool connected_only;
    std::vector<Graph> batch;
    std::size_t pos = 0;
  };
  auto state = std::make_shared<State>(State{lo, hi, connected_only, {}, 0});
  return [state]() -> std::optional<Graph> {
    while (state->pos == state->batch.size()) {
      if (state->next_order > state->hi) return std::nullopt;
      state->batch = enumerate_all_graphs(state->next_order++, state->connected_only);
      state->pos = 0;
    }
    return state->batch[state->pos++];
  };
}

inline GraphSource graph6_source(Graph6Reader& reader) {
  return [&reader]() -> std::optional<Graph> {
    auto rec = reader.next();
    if (!rec) return std::nullopt;
    return rec->graph;
  };
}

inline GraphSource vector_source(std::vector<Graph> graphs) {
  auto state = std::make_shared<std::pair<std::vector<Graph>, std::size_t>>(std::move(graphs), 0);
  return [state]() -> std::optional<Graph> {
    if (state->second == state->first.size()) return std::nullopt;
    return state->first[state->second++];
  };
}

struct VerifyOptions {
  int jobs = 1;
  std::size_t batch_size = 2048;
};

struct VerifyRun {
  std::vector<VerifyReport> reports;
  /// Per theorem (same order as reports): tight hypothesis and failed conclusion.
  std::vector<std::vector<std::string>> census;
};

namespace detail {

struct Tally {
  std::vector<VerifyReport> reports;
  std::vector<std::vector<std::string>> census;

  explicit Tally(const std::vector<TheoremId>& ids) : reports(ids.size()), census(ids.size()) {
    for (std::size_t i = 0; i < ids.size(); ++i) reports[i].theorem = ids[i];
  }

  void add(const std::vector<TheoremId>& ids, const Graph& g) {
    const GraphFacts facts(g);
    std::optional<std::string> word;
    auto encoded = [&]() -> const std::string& {
      if (!word) word = emit_graph6(g);
      return *word;
    };
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto& r = reports[i];
      const CheckResult c = evaluate(ids[i], facts);
      ++r.graphs_checked;
      if (c.verdict == Verdict::not_applicable) continue;
      ++r.hypothesis_hits;
      if (c.tight) ++r.equality_cases;
      if (c.verdict == Verdict::exception) ++r.exceptions_found;
      if (c.verdict == Verdict::counterexample) r.counterexamples.push_back(encoded());
      if (c.tight && c.verdict != Verdict::confirmed) census[i].push_back(encoded());
    }
  }

  void merge(Tally&& other) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      auto& r = reports[i];
      auto& o = other.reports[i];
      r.graphs_checked += o.graphs_checked;
      r.hypothesis_hits += o.hypothesis_hits;
      r.equality_cases += o.equality_cases;
      r.exceptions_found += o.exceptions_found;
      r.counterexamples.insert(r.counterexamples.end(), o.counterexamples.begin(),
                               o.counterexamples.end());
      census[i].insert(census[i].end(), other.census[i].begin(), other.census[i].end());
    }
  }

  void finish() {
    for (auto& r : reports) std::sort(r.counterexamples.begin(), r.counterexamples.end());
    for (auto& c : census) std::sort(c.begin(), c.end());
  }
};

}  // namespace detail

/// Checks every graph of `source` against every theorem in `ids`. Graphs are pulled in
/// batches and split across `jobs` workers; totals and sorted lists do not depend on the
/// worker count.
inline VerifyRun run_verification_full(const std::vector<TheoremId>& ids, const GraphSource& source,
                                       const VerifyOptions& options = {}) {
  if (options.jobs < 1) throw std::invalid_argument("run_verification: jobs must be at least 1");
  detail::Tally total(ids);
  std::vector<Graph> batch;
  batch.reserve(options.batch_size);
  auto drain = [&] {
    if (batch.empty()) return;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(options.jobs), batch.size());
    if (workers == 1) {
      for (const Graph& g : batch) total.add(ids, g);
    } else {
      std::vector<detail::Tally> partial(workers, detail::Tally(ids));
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < batch.size(); i += workers) partial[w].add(ids, batch[i]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
      for (auto& p : partial) total.merge(std::move(p));
    }
    batch.clear();
  };
  while (auto g = source()) {
    batch.push_back(*g);
    if (batch.size() == options.batch_size) drain();
  }
  drain();
  total.finish();
  return {std::move(total.reports), std::move(total.census)};
}

inline std::vector<VerifyReport> run_verification(const std::vector<TheoremId>& ids,
                                                  const GraphSource& source,
                                                  const VerifyOptions& options = {}) {
  return run_verification_full(ids, source, options).reports;
}

/// Graphs meeting the hypothesis with equality whose conclusion fails, as sorted graph6.
inline std::vector<std::string> equality_census(TheoremId id, const GraphSource& source,
                                                const VerifyOptions& options = {}) {
  return run_verification_full({id}, source, options).census.front();
}

}  // namespace bhnlab
