#include "support.hpp"

#include <gtest/gtest.h>

using namespace hypercol;
using namespace hypercol::testing;

TEST(Lift, K2Exact)
{
  auto r = lift(complete_graph(2));
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(r.lifted.vertex_count(), 4u);
  // a1 b1 | a2 b2
  EXPECT_EQ(r.lifted.edges(), (std::vector<Edge>{{0, 1, 2}, {0, 1, 3}}));
  EXPECT_EQ(chromatic_number(r.lifted).chi, 2);
  EXPECT_EQ(r.copy_map[2], (CopyVertex{2, 0}));
}

TEST(Lift, K3Frozen)
{
  auto r = lift(complete_graph(3));
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.lifted.vertex_count(), 9u);
  EXPECT_EQ(r.lifted.edge_count(), 27u);
  EXPECT_EQ(r.lifted.edges().front(), (Edge{0, 1, 3}));
  EXPECT_EQ(r.lifted.edges().back(), (Edge{4, 5, 8}));
  EXPECT_EQ(chromatic_number(r.lifted).chi, 3);
}

TEST(Lift, MoserFrozen)
{
  auto h = unit_graph(moser_spindle());
  auto r = lift(h);
  EXPECT_EQ(r.lifted.vertex_count(), 28u);
  EXPECT_EQ(r.lifted.edge_count(), 462u);
  EXPECT_TRUE(is_uniform(r.lifted, 3));
  ASSERT_TRUE(r.lifted.embedding().has_value());
  EXPECT_EQ(r.lifted.embedding()->size(), 28u);
}

TEST(Lift, CardinalitiesAndUniformity)
{
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = uniform_int(rng, 2, 3);
    auto h = random_uniform(rng, 3, 6, m, 6);
    int k = static_cast<int>(uniform_int(rng, 1, 4));
    auto r = lift(h, k);
    EXPECT_EQ(r.lifted.vertex_count(), k * h.vertex_count());
    EXPECT_EQ(r.lifted.edge_count(), lifted_edge_count(h.edge_count(), h.vertex_count(), k));
    EXPECT_EQ(r.lifted.edge_count(), h.edge_count() * h.vertex_count() * k * (k - 1) / 2);
    if (k > 1)
      EXPECT_EQ(uniformity(r.lifted), m + 1);
    EXPECT_EQ(r.lifted.merged_duplicates(), 0u);
  }
}

TEST(Lift, ChiPreserved)
{
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = uniform_int(rng, 2, 3);
    auto h = random_uniform(rng, m, 6, m, 10);
    auto chi = chromatic_number(h).chi;
    auto r = lift(h);
    EXPECT_EQ(r.k, chi);
    EXPECT_EQ(chromatic_number(r.lifted).chi, chi) << "trial " << trial;
  }
}

TEST(Lift, ExtendColoringStaysProper)
{
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    auto h = random_uniform(rng, 3, 6, 2, 8);
    auto r = lift(h);
    // random proper colorings by rejection
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<int> colors(h.vertex_count());
      for (auto & c : colors)
        c = static_cast<int>(uniform_int(rng, 1, static_cast<std::size_t>(r.k)));
      if (! brute_proper(h, colors))
        continue;
      auto ext = extend_coloring(Coloring(colors, r.k), r);
      EXPECT_TRUE(is_proper(r.lifted, ext).proper);
    }
  }
  auto r = lift(complete_graph(3));
  EXPECT_THROW(extend_coloring(Coloring({1, 1, 2}, 3), r), InputError);
}

TEST(Lift, FewerColorsImpossibleBruteForce)
{
  Rng rng(44);
  int checked = 0;
  while (checked < 15) {
    auto h = random_uniform(rng, 2, 4, 2, 5);
    auto chi = chromatic_number(h).chi;
    if (chi < 2 || static_cast<std::size_t>(chi) * h.vertex_count() > 12)
      continue;
    auto r = lift(h);
    EXPECT_FALSE(brute_colorable(r.lifted, chi - 1));
    ++checked;
  }
}

TEST(Lift, Errors)
{
  EXPECT_THROW(lift(Hypergraph(4, {{0, 1}, {1, 2, 3}})), InputError);
  EXPECT_THROW(lift(Hypergraph(3, {})), InputError);
  LiftOptions verify;
  verify.verify = true;
  EXPECT_THROW(lift(complete_graph(3), 2, verify), ConsistencyError);
  LiftOptions capped;
  capped.edge_cap = 10;
  EXPECT_THROW(lift(complete_graph(3), std::nullopt, capped), ResourceError);
}

TEST(Lift, ByteReproducible)
{
  auto h = unit_graph(moser_spindle());
  EXPECT_EQ(io::hypergraph_to_json(lift(h).lifted), io::hypergraph_to_json(lift(h).lifted));
}

TEST(Chain, K3ToFourUniform)
{
  ChainOptions options;
  options.verify_each = true;
  auto chain = iterated_lift(complete_graph(3), 4, options);
  ASSERT_EQ(chain.stages.size(), 3u);
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  for (const auto & s : chain.stages) {
    sizes.emplace_back(s.vertices, s.edges);
    EXPECT_EQ(s.chi, 3);
    EXPECT_EQ(s.k, 3);
  }
  EXPECT_EQ(sizes, (std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {9, 27}, {27, 729}}));
}

TEST(Chain, BudgetExceededCarriesPartial)
{
  ChainOptions options;
  options.lift.edge_cap = 100;
  try {
    iterated_lift(complete_graph(3), 4, options);
    FAIL() << "expected ChainBudgetExceeded";
  }
  catch (const ChainBudgetExceeded & e) {
    EXPECT_EQ(e.partial().stages.size(), 2u);
  }
}

TEST(Chain, TargetBelowInput)
{
  EXPECT_THROW(iterated_lift(Hypergraph(3, {{0, 1, 2}}), 2), InputError);
}
