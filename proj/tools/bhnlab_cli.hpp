#pragma once

// The bhnlab command line. Kept in a header so tests can drive it with in-memory streams.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bhnlab/bhnlab.hpp"
#include "bhnlab/report_json.hpp"

namespace bhnlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input = "-";
  std::string builtin;
  bool connected_only = false;
  std::string theorems = "all";
  int jobs = 1;
  bool lenient = false;
  std::string format = "json";
  bool witness = false;
  bool census = false;
  std::string counterexamples_path;
  std::string family;
  int order = 0;
  int m = 0;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::pair<int, int> parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--builtin expects N or N..M, got '" + text + "'");
  }
}

inline std::vector<TheoremId> parse_theorems(const std::string& text) {
  if (text == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
  std::vector<TheoremId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto id = parse_theorem_id(item);
    if (!id) throw UsageError("unknown theorem '" + item + "'");
    if (std::find(ids.begin(), ids.end(), *id) == ids.end()) ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("--theorems is empty");
  std::sort(ids.begin(), ids.end());
  return ids;
}

/// Owns the input stream named by `path` ("-" is the caller's stdin).
class Input {
public:
  Input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw UsageError("cannot open input '" + path + "'");
    stream_ = file_.get();
  }
  std::istream& stream() { return *stream_; }

private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

inline Graph6Reader::Mode mode(const RunConfig& cfg) {
  return cfg.lenient ? Graph6Reader::Mode::lenient : Graph6Reader::Mode::strict;
}

template <typename PerGraph>
int for_each_input_graph(const RunConfig& cfg, Streams io, PerGraph&& per_graph) {
  Input input(cfg.input, io.in);
  Graph6Reader reader(input.stream(), mode(cfg));
  while (auto rec = reader.next()) per_graph(rec->graph);
  if (reader.skipped() > 0) io.err << "skipped " << reader.skipped() << " malformed line(s)\n";
  return kExitOk;
}

inline nlohmann::ordered_json vertex_list(VertexSet s) { return s.to_vector(); }

}  // namespace detail

inline int cmd_invariants(const RunConfig& cfg, Streams io) {
  if (cfg.format != "json" && cfg.format != "csv")
    throw UsageError("invariants supports --format json|csv");
  bool header = false;
  return detail::for_each_input_graph(cfg, io, [&](const Graph& g) {
    const auto j = invariants_json(g);
    if (cfg.format == "json") {
      io.out << j.dump() << '\n';
      return;
    }
    if (!header) {
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it, first = false) io.out << (first ? "" : ",") << it.key();
      io.out << '\n';
      header = true;
    }
    bool first = true;
    for (const auto& v : j) {
      io.out << (first ? "" : ",") << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    io.out << '\n';
  });
}

inline int cmd_ham(const RunConfig& cfg, Streams io) {
  return detail::for_each_input_graph(cfg, io, [&](const Graph& g) {
    nlohmann::ordered_json j;
    j["graph6"] = emit_graph6(g);
    const auto cycle = g.order() >= 3 ? hamilton_cycle(g) : std::nullopt;
    const auto path = hamilton_path(g);
    j["hamiltonian"] = cycle.has_value();
    j["traceable"] = path.has_value();
    j["hamiltonian_connected"] = g.order() >= 3 && is_hamiltonian_connected(g);
    if (cfg.witness) {
      j["cycle"] = cycle ? nlohmann::ordered_json(cycle->order) : nlohmann::ordered_json();
      j["path"] = path ? nlohmann::ordered_json(path->order) : nlohmann::ordered_json();
    }
    io.out << j.dump() << '\n';
  });
}

inline int cmd_bhn(const RunConfig& cfg, Streams io) {
  return detail::for_each_input_graph(cfg, io, [&](const Graph& g) {
    const auto profile = hole_profile(g);
    const auto [s, t] = hole_free_split(profile);
    nlohmann::ordered_json j;
    j["graph6"] = emit_graph6(g);
    j["alpha_tilde"] = bipartite_hole_number(profile);
    j["max_hole_t"] = std::vector<int>(profile.max_t.begin() + 1, profile.max_t.end());
    j["hole_free_split"] = {s, t};
    if (cfg.witness) {
      // The split (s, t) has no hole; (s, t-1) does whenever t > 1.
      if (t > 1) {
        const auto w = find_bipartite_hole(g, s, t - 1);
        j["witness"] = {{"s_side", detail::vertex_list(w->s_side)},
                        {"t_side", detail::vertex_list(w->t_side)}};
      } else {
        j["witness"] = nullptr;
      }
    }
    io.out << j.dump() << '\n';
  });
}

inline int cmd_verify(const RunConfig& cfg, Streams io) {
  const auto ids = detail::parse_theorems(cfg.theorems);
  if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "g6")
    throw UsageError("verify supports --format json|csv|g6");
  const bool from_builtin = !cfg.builtin.empty();
  if (from_builtin && cfg.input != "-")
    throw UsageError("choose exactly one of --builtin and --input");

  VerifyRun run;
  const VerifyOptions options{cfg.jobs};
  std::size_t skipped = 0;
  if (from_builtin) {
    const auto [lo, hi] = detail::parse_range(cfg.builtin);
    if (lo < 1 || hi < lo) throw UsageError("--builtin range must satisfy 1 <= N <= M");
    if (hi > kEnumerateMaxOrder)
      throw UsageError("--builtin supports orders up to " + std::to_string(kEnumerateMaxOrder) +
                       "; feed larger catalogs through --input");
    run = run_verification_full(ids, builtin_source(lo, hi, cfg.connected_only), options);
  } else {
    detail::Input input(cfg.input, io.in);
    Graph6Reader reader(input.stream(), detail::mode(cfg));
    GraphSource source = graph6_source(reader);
    if (cfg.connected_only)
      source = [inner = std::move(source)]() -> std::optional<Graph> {
        while (auto g = inner())
          if (is_connected(*g)) return g;
        return std::nullopt;
      };
    run = run_verification_full(ids, source, options);
    skipped = reader.skipped();
  }
  if (skipped > 0) io.err << "skipped " << skipped << " malformed line(s)\n";

  bool any_counterexample = false;
  for (const auto& r : run.reports) any_counterexample = any_counterexample || !r.certified();

  if (cfg.format == "json") {
    for (std::size_t i = 0; i < run.reports.size(); ++i) {
      auto j = to_json(run.reports[i]);
      if (cfg.census) j["census"] = run.census[i];
      io.out << j.dump() << '\n';
    }
  } else if (cfg.format == "csv") {
    write_reports_csv(io.out, run.reports);
  } else {
    for (const auto& r : run.reports)
      for (const auto& w : r.counterexamples) io.out << w << '\n';
  }

  if (!cfg.counterexamples_path.empty()) {
    std::ofstream file(cfg.counterexamples_path);
    if (!file) throw UsageError("cannot write '" + cfg.counterexamples_path + "'");
    for (const auto& r : run.reports)
      for (const auto& w : r.counterexamples) file << w << '\n';
  }
  return any_counterexample ? kExitCounterexample : kExitOk;
}

inline int cmd_gen(const RunConfig& cfg, Streams io) {
  const std::string& f = cfg.family;
  auto emit_all = [&](const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) io.out << emit_graph6(g) << '\n';
    return kExitOk;
  };
  auto clique_order = [&](bool odd_total) {
    if (cfg.m > 0 && cfg.order > 0) throw UsageError("give either --m or --order, not both");
    if (cfg.m > 0) return cfg.m;
    if (cfg.order <= 0) throw UsageError("--family " + f + " needs --m or --order");
    if ((cfg.order % 2 == 1) != odd_total)
      throw UsageError("--family " + f + " needs an " + (odd_total ? "odd" : "even") + " order");
    return odd_total ? (cfg.order - 1) / 2 : cfg.order / 2;
  };
  auto over_inner = [&](int inner_order, auto build) {
    if (inner_order > kEnumerateMaxOrder)
      throw UsageError("inner graphs are enumerated up to order " +
                       std::to_string(kEnumerateMaxOrder));
    std::vector<Graph> out;
    for (const auto& h : enumerate_all_graphs(inner_order)) out.push_back(build(h));
    return emit_all(out);
  };

  if (f == "exc_a") {
    if (cfg.order < 5 || cfg.order % 2 == 0) throw UsageError("exc_a needs an odd --order >= 5");
    return over_inner((cfg.order - 1) / 2, [](const Graph& h) { return build_exc_a(h); });
  }
  if (f == "trace_a") {
    if (cfg.order < 4 || cfg.order % 2 == 1) throw UsageError("trace_a needs an even --order >= 4");
    return over_inner((cfg.order - 2) / 2, [](const Graph& h) { return build_trace_a(h); });
  }
  if (f == "exc_b") {
    const int m = clique_order(true);
    if (m < 1 || 2 * m + 1 > kGraph6MaxOrder) throw UsageError("exc_b needs 1 <= m <= 30");
    return emit_all({build_exc_b(m)});
  }
  if (f == "trace_b") {
    const int m = clique_order(false);
    if (m < 1 || 2 * m > kGraph6MaxOrder) throw UsageError("trace_b needs 1 <= m <= 31");
    return emit_all({build_trace_b(m)});
  }
  throw UsageError("unknown family '" + f + "' (exc_a, exc_b, trace_a, trace_b)");
}

/// Runs the CLI on `args` (without the program name). `env_jobs` is the value of
/// BHNLAB_JOBS, if set.
inline int run(std::vector<std::string> args, Streams io, const char* env_jobs = nullptr) {
  RunConfig cfg;
  if (env_jobs != nullptr && *env_jobs != '\0') {
    try {
      cfg.jobs = std::stoi(env_jobs);
    } catch (const std::logic_error&) {
      io.err << "BHNLAB_JOBS must be an integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"bhnlab: bipartite-hole-number and hamiltonicity toolkit"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "graph6 file, '-' for stdin");
    auto* strict = sub->add_flag("--strict", "abort on the first malformed line (default)");
    auto* lenient = sub->add_flag("--lenient", cfg.lenient, "skip malformed lines");
    strict->excludes(lenient);
  };

  auto* invariants = app.add_subcommand("invariants", "per-graph invariants as JSON lines");
  add_input(invariants);
  invariants->add_option("--format", cfg.format, "json|csv");

  auto* ham = app.add_subcommand("ham", "Hamilton cycle / path decisions");
  add_input(ham);
  ham->add_flag("--witness", cfg.witness, "print the cycle and path found");

  auto* bhn = app.add_subcommand("bhn", "bipartite-hole-number and hole profile");
  add_input(bhn);
  bhn->add_flag("--witness", cfg.witness, "print a maximal bipartite hole");

  auto* verify = app.add_subcommand("verify", "check theorems over a graph catalog");
  add_input(verify);
  verify->add_option("--builtin", cfg.builtin, "built-in catalog orders, N or N..M");
  verify->add_flag("--connected-only", cfg.connected_only, "restrict to connected graphs");
  verify->add_option("--theorems", cfg.theorems, "comma-separated ids or 'all'");
  verify->add_option("-j,--jobs", cfg.jobs, "worker threads (default $BHNLAB_JOBS or 1)");
  verify->add_option("--format", cfg.format, "json|csv|g6");
  verify->add_flag("--census", cfg.census, "add the tight non-confirmed graphs to each report");
  verify->add_option("--counterexamples", cfg.counterexamples_path,
                     "also write counterexamples as graph6 to this file");

  auto* gen = app.add_subcommand("gen", "emit exceptional family members as graph6");
  gen->add_option("--family", cfg.family, "exc_a|exc_b|trace_a|trace_b")->required();
  gen->add_option("--order", cfg.order, "graph order");
  gen->add_option("--m", cfg.m, "clique order for exc_b / trace_b");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    io.err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(cfg, io);
    if (ham->parsed()) return cmd_ham(cfg, io);
    if (bhn->parsed()) return cmd_bhn(cfg, io);
    if (verify->parsed()) return cmd_verify(cfg, io);
    if (gen->parsed()) return cmd_gen(cfg, io);
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Graph6Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bhnlab::cli
