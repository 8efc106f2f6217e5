#include "support.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hypercol;
using namespace hypercol::testing;

namespace {

/// Sorted vertex-degree sequence together with the sorted edge-size
/// sequence; equal for isomorphic hypergraphs.
auto shape(const Hypergraph & h) -> std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
{
  std::vector<std::size_t> deg(h.vertex_count(), 0), sizes;
  for (const auto & e : h.edges()) {
    sizes.push_back(e.size());
    for (auto v : e)
      ++deg[v];
  }
  std::sort(deg.begin(), deg.end());
  std::sort(sizes.begin(), sizes.end());
  return {deg, sizes};
}

auto triangle_gon() -> GonSet
{
  return GonSet(2, 3, {PointSet{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}});
}

} // namespace

TEST(GonSet, Validation)
{
  EXPECT_THROW(GonSet(2, 2, {PointSet{{0, 0}}}), InputError);
  EXPECT_THROW(GonSet(2, 2, {PointSet{{0, 0}, {1, 0, 0}}}), InputError);
  EXPECT_THROW(GonSet(2, 2, {PointSet{{0, 0}, {0, 0}}}), InputError);
  EXPECT_TRUE(unit_segment(3).is_unit());
  EXPECT_FALSE(GonSet(2, 2, {PointSet{{0, 0}, {2, 0}}}).is_unit());
}

TEST(Instantiate, SegmentMatchesDistanceScan)
{
  Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    auto length = uniform_int(rng, 1, 2) == 1 ? 1.0 : std::sqrt(2.0);
    GonSet seg(2, 2, {PointSet{{0, 0}, {length, 0}}});
    auto window = integer_grid(uniform_int(rng, 2, 4), uniform_int(rng, 2, 4));
    auto h = instantiate(seg, window);
    auto pairs = pairs_at_distance(window, length, Norm::l2());
    EXPECT_EQ(h.edge_count(), pairs.size());
    auto expected = Hypergraph::from_pairs(window.size(), pairs);
    EXPECT_EQ(edge_set(h), edge_set(expected));
  }
}

TEST(Instantiate, TrianglesInLattice)
{
  // a hexagon with its center holds six unit triangles
  auto h = instantiate(triangle_gon(), triangular_lattice(1));
  EXPECT_EQ(h.edge_count(), 6u);
  InstantiateOptions tr;
  tr.mode = CongruenceMode::Translation;
  // only the upward-pointing ones are translates
  EXPECT_EQ(instantiate(triangle_gon(), triangular_lattice(1), tr).edge_count(), 3u);
}

TEST(Instantiate, TranslationInvariant)
{
  Rng rng(52);
  for (auto mode : {CongruenceMode::Euclidean, CongruenceMode::Translation})
    for (int trial = 0; trial < 10; ++trial) {
      InstantiateOptions opt;
      opt.mode = mode;
      opt.tol = 1e-7;
      auto window = triangular_lattice(1);
      auto v = random_point(rng, 2, 50.0);
      auto a = instantiate(triangle_gon(), window, opt);
      auto b = instantiate(triangle_gon(), translate(window, v), opt);
      // translation keeps vertex order, so even the labelled edge sets agree
      EXPECT_EQ(edge_set(a), edge_set(b));
      EXPECT_EQ(shape(a), shape(b));
    }
}

TEST(Instantiate, EuclideanNeedsL2)
{
  InstantiateOptions opt;
  opt.norm = Norm::l1();
  EXPECT_THROW(instantiate(unit_segment(), integer_grid(2, 2), opt), InputError);
  opt.mode = CongruenceMode::Translation;
  EXPECT_EQ(instantiate(unit_segment(), integer_grid(2, 2), opt).edge_count(), 2u);
}

TEST(Instantiate, SubsetCap)
{
  InstantiateOptions opt;
  opt.subset_cap = 10;
  EXPECT_THROW(instantiate(triangle_gon(), integer_grid(4, 4), opt), ResourceError);
}

TEST(Gm, TwoIsUnitDistanceGraph)
{
  for (const auto & ps : {moser_spindle(), golomb_graph(), integer_grid(3, 3)})
    for (const auto & norm : {Norm::l2(), Norm::linf(), Norm::l1()}) {
      auto h = gm_hypergraph(ps, norm, 2);
      auto pairs = unit_distance_pairs(ps, norm);
      EXPECT_EQ(edge_set(h), edge_set(Hypergraph::from_pairs(ps.size(), pairs)));
    }
}

TEST(Gm, CountsMatchBruteForce)
{
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    auto ps = integer_grid(uniform_int(rng, 2, 3), uniform_int(rng, 2, 3));
    auto m = uniform_int(rng, 2, 4);
    EXPECT_EQ(gm_hypergraph(ps, Norm::l2(), m).edge_count(), brute_gm_count(ps, Norm::l2(), m, 1e-9));
  }
  // frozen
  auto moser = moser_spindle();
  EXPECT_EQ(gm_hypergraph(moser, Norm::l2(), 2).edge_count(), 11u);
  EXPECT_EQ(gm_hypergraph(moser, Norm::l2(), 3).edge_count(), brute_gm_count(moser, Norm::l2(), 3, 1e-9));
}

TEST(Gm, ContainsUnitPairAndChiBound)
{
  for (const auto & ps : {moser_spindle(), golomb_graph(), triangular_lattice(1)}) {
    auto g2 = gm_hypergraph(ps, Norm::l2(), 2);
    auto two = edge_set(g2);
    auto chi2 = chromatic_number(g2).chi;
    for (std::size_t m = 3; m <= 4; ++m) {
      auto gm = gm_hypergraph(ps, Norm::l2(), m);
      for (const auto & e : gm.edges()) {
        bool found = false;
        for (std::size_t i = 0; i < e.size() && ! found; ++i)
          for (std::size_t j = i + 1; j < e.size() && ! found; ++j)
            found = two.count(Edge{e[i], e[j]}) > 0;
        EXPECT_TRUE(found);
      }
      EXPECT_LE(chromatic_number(gm).chi, chi2);
    }
  }
}

TEST(AugmentT, MatchesBruteForceAndChain)
{
  Rng rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    auto h0 = random_uniform(rng, 4, 7, 2, 8);
    auto prev = chromatic_number(h0).chi;
    for (std::size_t t = 1; t <= 2 && t + 2 <= h0.vertex_count(); ++t) {
      auto ht = augment_t(h0, t);
      EXPECT_EQ(edge_set(ht), brute_augment_t(h0, t));
      auto chi = chromatic_number(ht).chi;
      EXPECT_LE(chi, prev);
      prev = chi;
    }
  }
  EXPECT_EQ(augment_t(complete_graph(4), 0), complete_graph(4));
  EXPECT_THROW(augment_t(complete_graph(3), 2), InputError);
}

TEST(AugmentGons, ContainsBaseGon)
{
  auto base = unit_segment();
  GonSet empty(2, 3);
  auto points = PointSet{{0.3, 0.4}, {5, 5}, {0, 0}};
  auto r = augment_gons(empty, base, points);
  // {0,0} lies on the base segment, so F is moved clear first
  ASSERT_TRUE(r.shift.has_value());
  EXPECT_EQ(r.gons.size(), 3u);
  EXPECT_EQ(r.gons.arity(), 3u);
  for (const auto & g : r.gons.gons()) {
    bool contains = false;
    for (const auto & x : base.gons()) {
      contains = std::all_of(x.begin(), x.end(), [&](const Point & p) {
        return std::any_of(g.begin(), g.end(), [&](const Point & q) { return distance(p, q, Norm::l2()) < 1e-9; });
      });
    }
    EXPECT_TRUE(contains);
  }
  // merging with itself adds nothing new
  auto again = augment_gons(r.gons, base, points);
  EXPECT_EQ(again.gons.size(), r.gons.size());
  EXPECT_THROW(augment_gons(GonSet(2, 4), base, points), InputError);
}

TEST(Product, ForbidsBothDistances)
{
  auto pc1 = tiling_params(Norm::l2(), 2);
  auto pc2 = scaled(pc1, 2.0);
  auto as_key = [](PeriodicColoring pc) -> PointColoring {
    return [pc](const Point & x) {
      auto c = color_point(pc, x);
      return ColorKey(c.begin(), c.end());
    };
  };
  auto psi = product_coloring({as_key(pc1), as_key(pc2)});
  for (double length : {1.0, 2.0}) {
    auto check = sample_monochromatic_pairs(psi, 2, length, Norm::l2(), 20.0, 20000, 7);
    EXPECT_EQ(check.monochromatic, 0u);
    EXPECT_EQ(check.pairs_checked, 20000u);
  }
  Rng rng(55);
  auto dense = random_points(rng, 20000, 2, 30.0);
  EXPECT_LE(count_colors(psi, dense), pc1.color_count() * pc2.color_count());
  EXPECT_THROW(product_coloring({}), InputError);
}

TEST(Witness, LibraryFindsSpindleLikeSet)
{
  WitnessOptions opt;
  opt.seed = 1;
  auto w = witness_search(unit_segment(), 4, opt);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(unit_segment(), *w));
  EXPECT_FALSE(is_k_colorable(w->graph, 3).has_value());
}

TEST(Witness, StrategiesCertifyThree)
{
  for (auto s : {WitnessStrategy::Library, WitnessStrategy::Lattice, WitnessStrategy::RandomAugment}) {
    WitnessOptions opt;
    opt.strategy = s;
    opt.seed = 3;
    auto w = witness_search(unit_segment(), 3, opt);
    ASSERT_TRUE(w.has_value()) << to_string(s);
    EXPECT_TRUE(verify_witness(unit_segment(), *w));
  }
}

TEST(Witness, ExhaustedBudget)
{
  WitnessOptions opt;
  opt.budget = 4;
  EXPECT_FALSE(witness_search(unit_segment(), 6, opt).has_value());
  EXPECT_EQ(parse_witness_strategy("random-augment"), WitnessStrategy::RandomAugment);
  EXPECT_THROW(parse_witness_strategy("magic"), InputError);
}
