#include <gtest/gtest.h>

#include <set>

#include "bhnlab/families.hpp"
#include "bhnlab/report_json.hpp"
#include "bhnlab/verify.hpp"
#include "test_support.hpp"

namespace bhnlab {
namespace {

Graph bowtie() { return join(complete_graph(1), copies(2, complete_graph(2))); }

std::vector<TheoremId> all_ids() { return {kAllTheorems.begin(), kAllTheorems.end()}; }

TEST(CheckOne, Examples) {
  EXPECT_EQ(check_one(TheoremId::deg_stab, bowtie()), Verdict::exception);
  EXPECT_EQ(check_one(TheoremId::my_thm, cycle_graph(4)), Verdict::confirmed);
  EXPECT_EQ(check_one(TheoremId::ore_stab, complete_bipartite(2, 3)), Verdict::exception);
  EXPECT_EQ(check_one(TheoremId::ehw_thm, complete_bipartite(2, 3)), Verdict::not_applicable);
  EXPECT_EQ(check_one(TheoremId::my_thm, path_graph(2)), Verdict::not_applicable);
  EXPECT_EQ(check_one(TheoremId::trace_deg, empty_graph(2)), Verdict::exception);
  EXPECT_EQ(check_one(TheoremId::trace_lemma, bowtie()), Verdict::confirmed);
  EXPECT_EQ(check_one(TheoremId::dirac_stab, path_graph(3)), Verdict::exception);
  EXPECT_EQ(check_one(TheoremId::trace_ore, join(complete_graph(1), empty_graph(3))),
            Verdict::exception);
}

TEST(CheckOne, CompleteGraphsAreConfirmed) {
  for (int n = 3; n <= 7; ++n)
    for (TheoremId id : kAllTheorems)
      EXPECT_EQ(check_one(id, complete_graph(n)), Verdict::confirmed) << to_string(id);
}

TEST(CheckOne, ExceptionsAreGenuine) {
  // An exception verdict needs a failed conclusion and an accepting recogniser.
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      const GraphFacts facts(g);
      for (TheoremId id : kAllTheorems) {
        const auto r = evaluate(id, facts);
        const auto& check = theorem_check(id);
        if (r.verdict == Verdict::exception) {
          EXPECT_FALSE(check.conclusion(facts));
          EXPECT_TRUE(check.exception(facts));
        }
        if (r.verdict == Verdict::confirmed) EXPECT_TRUE(check.conclusion(facts));
        if (r.verdict != Verdict::not_applicable) EXPECT_TRUE(check.hypothesis(facts).holds);
      }
    }
  }
}

TEST(CheckOne, MinDegreeHypothesisImpliesOreHypothesis) {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : enumerate_all_graphs(n)) {
      if (is_complete(g) || !is_2connected(g)) continue;
      if (check_one(TheoremId::my_thm, g) == Verdict::not_applicable) continue;
      EXPECT_NE(check_one(TheoremId::ehw_thm, g), Verdict::not_applicable);
      EXPECT_NE(check_one(TheoremId::ore_stab, g), Verdict::not_applicable);
    }
}

TEST(ParseTheoremId, Names) {
  EXPECT_EQ(parse_theorem_id("deg_stab"), TheoremId::deg_stab);
  EXPECT_EQ(parse_theorem_id("ORE_STAB"), TheoremId::ore_stab);
  EXPECT_FALSE(parse_theorem_id("bogus").has_value());
  for (TheoremId id : kAllTheorems) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
}

TEST(EnumerateAllGraphs, Counts) {
  EXPECT_EQ(enumerate_all_graphs(1).size(), 1U);
  EXPECT_EQ(enumerate_all_graphs(4).size(), 11U);
  EXPECT_EQ(enumerate_all_graphs(4, true).size(), 6U);
  EXPECT_EQ(enumerate_all_graphs(5).size(), 34U);
  EXPECT_EQ(enumerate_all_graphs(6).size(), 156U);
  EXPECT_EQ(enumerate_all_graphs(6, true).size(), 112U);
  EXPECT_THROW(enumerate_all_graphs(9), std::length_error);
  EXPECT_THROW(enumerate_all_graphs(0), std::invalid_argument);
}

TEST(EnumerateAllGraphs, CountMatchesLabelledDedup) {
  // Independent route: scan all 2^10 labelled graphs on 5 vertices, group by bijection search.
  std::vector<Graph> classes;
  for (const Graph& g : testing::all_labelled_graphs(5)) {
    bool seen = false;
    for (const Graph& c : classes) seen = seen || testing::isomorphic_bruteforce(g, c);
    if (!seen) classes.push_back(g);
  }
  EXPECT_EQ(enumerate_all_graphs(5).size(), classes.size());
}

TEST(EnumerateAllGraphs, DeterministicAndPairwiseNonIsomorphic) {
  const auto a = enumerate_all_graphs(5);
  const auto b = enumerate_all_graphs(5);
  EXPECT_EQ(a, b);
  std::set<std::string> codes;
  for (const Graph& g : a) codes.insert(canonical_code(g));
  EXPECT_EQ(codes.size(), a.size());
}

TEST(RunVerification, SmallOrdersCertified) {
  const auto reports = run_verification(all_ids(), builtin_source(3, 6, false));
  ASSERT_EQ(reports.size(), kAllTheorems.size());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.certified()) << to_string(r.theorem);
    EXPECT_EQ(r.graphs_checked, 4U + 11U + 34U + 156U);
    EXPECT_GT(r.hypothesis_hits, 0U);
  }
}

TEST(RunVerification, DegStabExceptionsAtOrderFive) {
  const auto reports = run_verification({TheoremId::deg_stab}, builtin_source(5, 5, false));
  ASSERT_EQ(reports.size(), 1U);
  // Two exc_a members (inner graph K2 or 2K1) and the bowtie.
  EXPECT_EQ(reports[0].exceptions_found, 3U);
  EXPECT_TRUE(reports[0].certified());
}

TEST(RunVerification, EmptyCatalog) {
  const auto reports = run_verification(all_ids(), vector_source({}));
  for (const auto& r : reports) {
    EXPECT_EQ(r.graphs_checked, 0U);
    EXPECT_EQ(r.hypothesis_hits, 0U);
    EXPECT_TRUE(r.certified());
  }
}

TEST(RunVerification, WorkerCountDoesNotChangeReports) {
  const VerifyOptions one{1, 64};
  const VerifyOptions many{5, 64};
  const auto a = run_verification_full(all_ids(), builtin_source(3, 6, false), one);
  const auto b = run_verification_full(all_ids(), builtin_source(3, 6, false), many);
  EXPECT_EQ(a.reports, b.reports);
  EXPECT_EQ(a.census, b.census);
}

TEST(RunVerification, FlagsPlantedCounterexample) {
  // A checker whose exception recogniser is bypassed must report the family members.
  const auto reports = run_verification({TheoremId::ehw_thm}, vector_source({build_exc_b(2)}));
  EXPECT_TRUE(reports[0].certified());  // not 2-connected: hypothesis fails
  const auto ore = run_verification({TheoremId::my_thm}, vector_source({complete_bipartite(2, 3)}));
  EXPECT_EQ(ore[0].hypothesis_hits, 0U);
}

TEST(RunVerification, RejectsZeroJobs) {
  EXPECT_THROW(run_verification(all_ids(), vector_source({}), VerifyOptions{0}),
               std::invalid_argument);
}

TEST(RunVerification, SourcesRejectBadRanges) {
  EXPECT_THROW(builtin_source(0, 3, false), std::invalid_argument);
  EXPECT_THROW(builtin_source(4, 3, false), std::invalid_argument);
  EXPECT_THROW(builtin_source(3, 9, false), std::length_error);
}

std::set<std::string> canonical_codes_of(const std::vector<std::string>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(canonical_code(parse_graph6(w)));
  return out;
}

TEST(EqualityCensus, OreStabOrderFiveIsExcA) {
  const auto census = equality_census(TheoremId::ore_stab, builtin_source(5, 5, false));
  std::set<std::string> expected;
  for (const Graph& h : enumerate_all_graphs(2)) expected.insert(canonical_code(build_exc_a(h)));
  EXPECT_EQ(census.size(), 2U);
  EXPECT_EQ(canonical_codes_of(census), expected);
}

TEST(EqualityCensus, DegStabOrderFiveAddsBowtie) {
  const auto census = equality_census(TheoremId::deg_stab, builtin_source(5, 5, false));
  std::set<std::string> expected;
  for (const Graph& h : enumerate_all_graphs(2)) expected.insert(canonical_code(build_exc_a(h)));
  expected.insert(canonical_code(bowtie()));
  EXPECT_EQ(canonical_codes_of(census), expected);
}

TEST(ReportJson, FieldsAndOrder) {
  VerifyReport r;
  r.theorem = TheoremId::ore_stab;
  r.graphs_checked = 5;
  r.hypothesis_hits = 3;
  r.counterexamples = {"D?{"};
  r.equality_cases = 2;
  r.exceptions_found = 1;
  EXPECT_EQ(to_json(r).dump(),
            R"({"theorem":"ore_stab","graphs_checked":5,"hypothesis_hits":3,)"
            R"("counterexamples":["D?{"],"equality_cases":2,"exceptions_found":1})");
}

TEST(ReportJson, InvariantsLine) {
  const auto j = invariants_json(cycle_graph(5));
  EXPECT_EQ(j["alpha_tilde"], 3);
  EXPECT_EQ(j["sigma2"], 4);
  EXPECT_EQ(invariants_json(complete_graph(4))["sigma2"], "inf");
}

}  // namespace
}  // namespace bhnlab
