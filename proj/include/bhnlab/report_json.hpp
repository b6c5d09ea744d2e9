#pragma once

// JSON and CSV renderings of verification reports and per-graph invariants.

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "bhnlab/verify.hpp"

namespace bhnlab {

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = std::string(to_string(r.theorem));
  j["graphs_checked"] = r.graphs_checked;
  j["hypothesis_hits"] = r.hypothesis_hits;
  j["counterexamples"] = r.counterexamples;
  j["equality_cases"] = r.equality_cases;
  j["exceptions_found"] = r.exceptions_found;
  return j;
}

inline nlohmann::ordered_json to_json(DegreeBound b) {
  if (b.is_infinite()) return "inf";
  return b.value();
}

inline void write_reports_csv(std::ostream& out, const std::vector<VerifyReport>& reports) {
  out << "theorem,graphs_checked,hypothesis_hits,counterexamples,equality_cases,exceptions_found\n";
  for (const auto& r : reports)
    out << to_string(r.theorem) << ',' << r.graphs_checked << ',' << r.hypothesis_hits << ','
        << r.counterexamples.size() << ',' << r.equality_cases << ',' << r.exceptions_found
        << '\n';
}

/// The invariant line printed per graph by `bhnlab invariants`.
inline nlohmann::ordered_json invariants_json(const Graph& g) {
  const GraphFacts f(g);
  nlohmann::ordered_json j;
  j["graph6"] = emit_graph6(g);
  j["n"] = g.order();
  j["e"] = g.edge_count();
  j["min_degree"] = f.min_degree();
  j["sigma2"] = to_json(f.sigma2());
  j["alpha_tilde"] = f.alpha_tilde();
  j["connected"] = f.connected();
  j["two_connected"] = f.two_connected();
  j["hamiltonian"] = f.hamiltonian();
  j["traceable"] = f.traceable();
  return j;
}

}  // namespace bhnlab
