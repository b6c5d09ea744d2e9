#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bhnlab/enumerate.hpp"
#include "bhnlab/hamilton.hpp"
#include "test_support.hpp"

namespace bhnlab {
namespace {

Graph bowtie() { return join(complete_graph(1), copies(2, complete_graph(2))); }

TEST(HamiltonCycle, Examples) {
  const auto c5 = hamilton_cycle(cycle_graph(5));
  ASSERT_TRUE(c5.has_value());
  EXPECT_TRUE(testing::valid_hamilton_sequence(cycle_graph(5), c5->order, true));
  EXPECT_FALSE(hamilton_cycle(petersen_graph()).has_value());
  EXPECT_FALSE(hamilton_cycle(complete_bipartite(2, 3)).has_value());
  EXPECT_TRUE(hamilton_cycle(complete_graph(3)).has_value());
  EXPECT_THROW(hamilton_cycle(complete_graph(2)), std::invalid_argument);
  EXPECT_THROW(hamilton_cycle(empty_graph(25)), std::length_error);
}

TEST(HamiltonPath, Examples) {
  const auto p4 = hamilton_path(path_graph(4));
  ASSERT_TRUE(p4.has_value());
  EXPECT_TRUE(is_hamilton_path(path_graph(4), *p4));
  const auto bt = hamilton_path(bowtie());
  ASSERT_TRUE(bt.has_value());
  EXPECT_TRUE(testing::valid_hamilton_sequence(bowtie(), bt->order, false));
  EXPECT_FALSE(hamilton_path(copies(2, complete_graph(2))).has_value());
  EXPECT_EQ(hamilton_path(complete_graph(1)), (Path{{0}}));
  EXPECT_TRUE(hamilton_path(complete_graph(2)).has_value());
  EXPECT_FALSE(hamilton_path(empty_graph(2)).has_value());
  EXPECT_TRUE(is_traceable(petersen_graph()));
}

TEST(HamiltonPathBetween, EndpointsRespected) {
  const auto p = hamilton_path_between(cycle_graph(5), 0, 1);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->order.front(), 0);
  EXPECT_EQ(p->order.back(), 1);
  EXPECT_FALSE(hamilton_path_between(cycle_graph(5), 0, 2).has_value());
}

TEST(HamiltonianConnected, Examples) {
  EXPECT_TRUE(is_hamiltonian_connected(complete_graph(4)));
  EXPECT_FALSE(is_hamiltonian_connected(cycle_graph(5)));
  EXPECT_FALSE(is_hamiltonian_connected(cycle_graph(4)));
  EXPECT_THROW(is_hamiltonian_connected(complete_graph(2)), std::invalid_argument);
}

TEST(HamiltonianConnected, MatchesPairwiseSearch) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      bool all_pairs = true;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          const auto p = hamilton_path_between(g, x, y);
          if (p) EXPECT_TRUE(is_hamilton_path(g, *p));
          all_pairs = all_pairs && p.has_value();
        }
      EXPECT_EQ(is_hamiltonian_connected(g), all_pairs);
    }
  }
}

TEST(HamiltonProperties, AgreesWithPermutationSearch) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      const auto path = hamilton_path(g);
      EXPECT_EQ(path.has_value(), testing::traceable_bruteforce(g));
      if (path) EXPECT_TRUE(testing::valid_hamilton_sequence(g, path->order, false));
      if (n < 3) continue;
      const auto cycle = hamilton_cycle(g);
      EXPECT_EQ(cycle.has_value(), testing::hamiltonian_bruteforce(g));
      if (cycle) EXPECT_TRUE(testing::valid_hamilton_sequence(g, cycle->order, true));
    }
  }
}

TEST(HamiltonProperties, OreConditionImpliesHamiltonian) {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : enumerate_all_graphs(n))
      if (sigma2(g).at_least(n)) EXPECT_TRUE(is_hamiltonian(g));
}

TEST(HamiltonProperties, LargerRandomWitnessesValid) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 10 + trial % 8;
    const Graph g = testing::random_graph(rng, n, 0.3);
    if (const auto c = hamilton_cycle(g)) EXPECT_TRUE(testing::valid_hamilton_sequence(g, c->order, true));
    if (const auto p = hamilton_path(g)) EXPECT_TRUE(testing::valid_hamilton_sequence(g, p->order, false));
  }
}

TEST(ShiftSet, Examples) {
  const Path p{{10, 11, 12, 13, 14}};
  EXPECT_EQ(shift_set(p, VertexSet{10, 12}, 1), (VertexSet{11, 13}));
  EXPECT_EQ(shift_set(p, VertexSet{14}, 1), VertexSet{});
  EXPECT_EQ(shift_set(p, VertexSet{10, 11}, -1), VertexSet{10});
  EXPECT_EQ(shift_set(p, VertexSet{10, 14}, 4), VertexSet{14});
  EXPECT_THROW(shift_set(p, VertexSet{10}, 5), std::invalid_argument);
  EXPECT_THROW(shift_set(p, VertexSet{3}, 1), std::invalid_argument);
}

TEST(ShiftSet, ShiftBackIsContained) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 10;
    Path p{testing::random_permutation(rng, n)};
    const VertexSet s(rng() & VertexSet::range(n).bits());
    const VertexSet back = shift_set(p, shift_set(p, s, 1), -1);
    EXPECT_TRUE(back.is_subset_of(s));
    if (!s.contains(p.order.back())) EXPECT_EQ(back, s);
  }
}

TEST(CrossingClosure, Examples) {
  const Graph c5 = cycle_graph(5);
  const auto closed = crossing_closure(c5, Path{{0, 1, 2, 3, 4}});
  ASSERT_TRUE(closed.has_value());
  EXPECT_EQ(closed->order, (std::vector<int>{0, 1, 2, 3, 4}));

  // Path 0-1-2-3 plus chords 0-2 and 1-3: crossing at the second vertex.
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
  const auto crossed = crossing_closure(g, Path{{0, 1, 2, 3}});
  ASSERT_TRUE(crossed.has_value());
  EXPECT_EQ(crossed->order, (std::vector<int>{0, 1, 3, 2}));
  EXPECT_TRUE(is_hamilton_cycle(g, *crossed));
  EXPECT_TRUE(hamilton_cycle(g).has_value());

  EXPECT_THROW(crossing_closure(g, Path{{0, 1, 2}}), std::invalid_argument);
}

TEST(CrossingClosure, NeverClosesOnNonHamiltonianGraph) {
  const Graph k23 = complete_bipartite(2, 3);
  std::vector<int> seq{0, 1, 2, 3, 4};
  int paths = 0;
  do {
    const Path p{seq};
    if (!is_hamilton_path(k23, p)) continue;
    ++paths;
    EXPECT_FALSE(crossing_closure(k23, p).has_value());
  } while (std::next_permutation(seq.begin(), seq.end()));
  EXPECT_GT(paths, 0);
}

TEST(CrossingClosure, ResultsAreHamiltonCycles) {
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : enumerate_all_graphs(n))
      if (const auto p = hamilton_path(g))
        if (const auto c = crossing_closure(g, *p))
          EXPECT_TRUE(testing::valid_hamilton_sequence(g, c->order, true));
}

TEST(CountCutVertices, Examples) {
  EXPECT_EQ(count_cut_vertices(path_graph(3)), 1);
  EXPECT_EQ(count_cut_vertices(cycle_graph(4)), 0);
  EXPECT_EQ(count_cut_vertices(join(complete_graph(1), copies(2, complete_graph(3)))), 1);
  EXPECT_EQ(count_cut_vertices(path_graph(5)), 3);
  EXPECT_THROW(count_cut_vertices(empty_graph(2)), std::invalid_argument);
}

}  // namespace
}  // namespace bhnlab
