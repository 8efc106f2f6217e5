#include <hypercol/hypercol.hpp>

#include <benchmark/benchmark.h>

using namespace hypercol;

namespace {

auto unit_graph(const PointSet & ps) -> Hypergraph
{
  auto pairs = unit_distance_pairs(ps, Norm::l2());
  return Hypergraph::from_pairs(ps.size(), pairs, ps);
}

auto complete(std::size_t n) -> Hypergraph
{
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      edges.push_back({i, j});
  return Hypergraph(n, std::move(edges));
}

void BM_ChiMoserLift(benchmark::State & state)
{
  auto lifted = lift(unit_graph(moser_spindle())).lifted;
  SolverOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(chromatic_number(lifted, opt).chi);
}
BENCHMARK(BM_ChiMoserLift)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ChiGolombLift(benchmark::State & state)
{
  auto lifted = lift(unit_graph(golomb_graph())).lifted;
  for (auto _ : state)
    benchmark::DoNotOptimize(chromatic_number(lifted).chi);
}
BENCHMARK(BM_ChiGolombLift)->Unit(benchmark::kMillisecond);

// lifted K_n: n^2 vertices, the hardest refutations in the suite
void BM_ChiCompleteLift(benchmark::State & state)
{
  auto lifted = lift(complete(static_cast<std::size_t>(state.range(0)))).lifted;
  SolverOptions no_cache;
  no_cache.failure_cache_bytes = state.range(1) ? std::size_t{256} << 20 : 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(chromatic_number(lifted, no_cache).chi);
}
BENCHMARK(BM_ChiCompleteLift)->Args({5, 1})->Args({5, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

void BM_LiftChainK3(benchmark::State & state)
{
  auto k3 = complete(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(iterated_lift(k3, 4).stages.size());
}
BENCHMARK(BM_LiftChainK3)->Unit(benchmark::kMillisecond);

void BM_VerifyForbids(benchmark::State & state)
{
  auto pc = tiling_params(Norm::l2(), 2);
  auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_forbids(pc, 100000, 1, workers).violations);
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_VerifyForbids)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_InstantiateTriangles(benchmark::State & state)
{
  GonSet tri(2, 3, {PointSet{{0, 0}, {1, 0}, {0.5, 0.8660254037844386}}});
  auto window = triangular_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(instantiate(tri, window).edge_count());
}
BENCHMARK(BM_InstantiateTriangles)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Congruence(benchmark::State & state)
{
  auto ps = golomb_graph();
  PointSet moved;
  for (auto it = ps.rbegin(); it != ps.rend(); ++it)
    moved.push_back(Point{-(*it)[1] + 3.0, (*it)[0] - 1.0});
  for (auto _ : state)
    benchmark::DoNotOptimize(congruent_euclidean(ps, moved).has_value());
}
BENCHMARK(BM_Congruence);

} // namespace

BENCHMARK_MAIN();
