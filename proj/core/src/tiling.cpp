#include <hypercol/errors.hpp>
#include <hypercol/tiling.hpp>

#include <cmath>
#include <random>
#include <thread>

namespace hypercol {

auto PeriodicColoring::color_count() const -> std::uint64_t
{
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i)
    count *= static_cast<std::uint64_t>(m);
  return count;
}

auto PeriodicColoring::cube_diameter_ok() const -> bool
{
  return eps > 0.0 && eps * norm.upper_constant(d) < 1.0;
}

auto PeriodicColoring::cross_cell_ok() const -> bool
{
  return norm.lower_constant(d) * static_cast<double>(m - 1) * eps > 1.0;
}

auto equivalence_constants(const Norm & norm, std::size_t d) -> EquivalenceConstants
{
  if (d < 1)
    throw InputError("dimension must be at least 1");
  return {norm.lower_constant(d), norm.upper_constant(d)};
}

auto tiling_params(const Norm & norm, std::size_t d, double safety) -> PeriodicColoring
{
  if (! (safety > 0.0 && safety < 1.0))
    throw InputError("safety factor must lie in (0, 1)");
  auto [c, C] = equivalence_constants(norm, d);
  PeriodicColoring pc;
  pc.norm = norm;
  pc.d = d;
  pc.eps = safety / C;
  pc.m = static_cast<int>(std::floor(1.0 / (c * pc.eps))) + 2;
  while (pc.m > 2 && c * (pc.m - 2) * pc.eps > 1.0)
    --pc.m;
  return pc;
}

auto scaled(const PeriodicColoring & pc, double length) -> PeriodicColoring
{
  if (! (length > 0.0))
    throw InputError("scale must be positive");
  auto out = pc;
  out.eps *= length;
  return out;
}

auto color_point(const PeriodicColoring & pc, const Point & x) -> std::vector<int>
{
  if (x.dim() != pc.d)
    throw InputError("point dimension " + std::to_string(x.dim()) + " differs from tiling dimension " +
        std::to_string(pc.d));
  std::vector<int> tuple(pc.d);
  for (std::size_t i = 0; i < pc.d; ++i) {
    auto cell = static_cast<long long>(std::floor(x[i] / pc.eps));
    auto r = cell % pc.m;
    tuple[i] = static_cast<int>(r < 0 ? r + pc.m : r);
  }
  return tuple;
}

auto color_index(const PeriodicColoring & pc, const Point & x) -> std::uint64_t
{
  std::uint64_t index = 0;
  for (int c : color_point(pc, x))
    index = index * static_cast<std::uint64_t>(pc.m) + static_cast<std::uint64_t>(c);
  return index;
}

namespace {
  auto verify_chunk(const PeriodicColoring & pc, std::uint64_t samples, std::uint64_t seed) -> TilingReport
  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(0.0, pc.period());
    std::normal_distribution<double> gauss;
    TilingReport report;
    std::vector<double> x(pc.d), u(pc.d), y(pc.d);
    for (std::uint64_t s = 0; s < samples; ++s) {
      for (auto & c : x)
        c = box(rng);
      double len = 0.0;
      do {
        for (auto & c : u)
          c = gauss(rng);
        len = pc.norm.length(u);
      } while (len == 0.0);
      for (std::size_t i = 0; i < pc.d; ++i) {
        u[i] /= len;
        y[i] = x[i] + u[i];
      }
      Point px(x), py(y);
      if (std::abs(distance(px, py, pc.norm) - 1.0) > 1e-12) {
        ++report.rejected;
        continue;
      }
      ++report.pairs_checked;
      if (color_point(pc, px) == color_point(pc, py))
        ++report.violations;
    }
    return report;
  }
} // namespace

auto verify_forbids(const PeriodicColoring & pc, std::uint64_t samples, std::uint64_t seed, unsigned workers)
    -> TilingReport
{
  if (pc.d < 1 || pc.m < 1 || ! (pc.eps > 0.0))
    throw InputError("tiling parameters must be positive");
  workers = std::max(1u, workers);

  // Worker w draws from its own stream, seeded from the master seed.
  std::seed_seq master{seed};
  std::vector<std::uint32_t> seeds(2 * workers);
  master.generate(seeds.begin(), seeds.end());

  std::vector<TilingReport> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      auto share = samples / workers + (w < samples % workers ? 1 : 0);
      auto worker_seed = (std::uint64_t{seeds[2 * w]} << 32) | seeds[2 * w + 1];
      pool.emplace_back([&, w, share, worker_seed] { parts[w] = verify_chunk(pc, share, worker_seed); });
    }
  }

  TilingReport total;
  total.seed = seed;
  total.workers = workers;
  for (const auto & p : parts) {
    total.violations += p.violations;
    total.pairs_checked += p.pairs_checked;
    total.rejected += p.rejected;
  }
  return total;
}

} // namespace hypercol
