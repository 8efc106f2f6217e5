#include "support.hpp"

#include <gtest/gtest.h>

using namespace hypercol;
using namespace hypercol::testing;

TEST(Proper, FindsMonochromaticEdge)
{
  Hypergraph h(4, {{0, 1, 2}, {1, 3}});
  auto r = is_proper(h, Coloring({1, 1, 1, 2}, 2));
  EXPECT_FALSE(r.proper);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (Edge{0, 1, 2}));
  EXPECT_TRUE(is_proper(h, Coloring({1, 1, 2, 2}, 2)).proper);
  EXPECT_THROW(is_proper(h, Coloring({1, 1}, 2)), InputError);
}

TEST(Chromatic, SmallFamilies)
{
  EXPECT_EQ(chromatic_number(Hypergraph(3, {})).chi, 1);
  EXPECT_EQ(chromatic_number(complete_graph(2)).chi, 2);
  EXPECT_EQ(chromatic_number(complete_graph(5)).chi, 5);
  // odd cycle
  Hypergraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_EQ(chromatic_number(c5).chi, 3);
  // Fano plane is not 2-colorable
  Hypergraph fano(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  EXPECT_EQ(chromatic_number(fano).chi, 3);
}

TEST(Chromatic, PointSetsFrozen)
{
  EXPECT_EQ(chromatic_number(unit_graph(moser_spindle())).chi, 4);
  EXPECT_EQ(chromatic_number(unit_graph(golomb_graph())).chi, 4);
  EXPECT_EQ(chromatic_number(unit_graph(triangular_lattice(1))).chi, 3);
  EXPECT_EQ(chromatic_number(unit_graph(integer_grid(3, 3))).chi, 2);
}

TEST(Chromatic, MatchesBruteForce)
{
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto h = random_hypergraph(rng, 1, 7, 2, 4, 18);
    auto r = chromatic_number(h);
    EXPECT_EQ(r.chi, brute_chi(h)) << "trial " << trial;
    EXPECT_TRUE(is_proper(h, r.witness).proper);
    EXPECT_EQ(r.witness.palette(), r.chi);
  }
}

TEST(Chromatic, MonotoneUnderRestriction)
{
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, 3, 8, 2, 3, 20);
    auto chi = chromatic_number(h).chi;
    auto u = random_subset(rng, h.vertex_count(), uniform_int(rng, 2, h.vertex_count()));
    EXPECT_LE(chromatic_number(induced(h, u).graph).chi, chi);
  }
}

TEST(Chromatic, AddingEdgesNeverDecreases)
{
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, 3, 8, 2, 3, 15);
    auto edges = h.edges();
    edges.push_back(random_subset(rng, h.vertex_count(), uniform_int(rng, 2, 3)));
    Hypergraph bigger(h.vertex_count(), edges);
    EXPECT_GE(chromatic_number(bigger).chi, chromatic_number(h).chi);
  }
}

TEST(Chromatic, SymmetryBreakingIsSound)
{
  Rng rng(34);
  SolverOptions plain;
  plain.symmetry_breaking = false;
  SolverOptions nocache;
  nocache.failure_cache_bytes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, 2, 8, 2, 4, 20);
    auto chi = chromatic_number(h).chi;
    EXPECT_EQ(chromatic_number(h, plain).chi, chi);
    EXPECT_EQ(chromatic_number(h, nocache).chi, chi);
  }
}

TEST(Chromatic, ThreadCountDoesNotChangeAnswer)
{
  Rng rng(35);
  SolverOptions par;
  par.threads = 4;
  for (int trial = 0; trial < 40; ++trial) {
    auto h = random_hypergraph(rng, 5, 10, 2, 3, 30);
    auto r = chromatic_number(h, par);
    EXPECT_EQ(r.chi, chromatic_number(h).chi);
    EXPECT_TRUE(is_proper(h, r.witness).proper);
  }
  auto lifted = lift(unit_graph(moser_spindle())).lifted;
  EXPECT_EQ(chromatic_number(lifted, par).chi, 4);
}

TEST(Chromatic, SingleThreadWitnessDeterministic)
{
  auto h = unit_graph(golomb_graph());
  EXPECT_EQ(chromatic_number(h).witness, chromatic_number(h).witness);
}

TEST(KColorable, DecisionAndBudget)
{
  auto h = unit_graph(moser_spindle());
  EXPECT_FALSE(is_k_colorable(h, 3).has_value());
  auto c = is_k_colorable(h, 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_proper(h, *c).proper);
  EXPECT_THROW(is_k_colorable(h, 0), InputError);

  SolverOptions tiny;
  tiny.node_budget = 3;
  tiny.failure_cache_bytes = 0;
  EXPECT_THROW(is_k_colorable(complete_graph(9), 8, tiny), BudgetExhausted);
}

TEST(Greedy, UpperBound)
{
  Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, 2, 9, 2, 3, 20);
    auto order = degree_order(h);
    auto g = greedy_coloring(h, order);
    EXPECT_TRUE(is_proper(h, g).proper);
    EXPECT_GE(greedy_upper_bound(h, order), chromatic_number(h).chi);
  }
  std::vector<Vertex> bad{0, 0, 1};
  EXPECT_THROW(greedy_coloring(complete_graph(3), bad), InputError);
}
