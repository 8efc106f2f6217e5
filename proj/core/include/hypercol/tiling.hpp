#pragma once

#include <hypercol/geometry.hpp>

#include <cstdint>
#include <vector>

namespace hypercol {

/// Periodic coloring of (R^d, norm) by little cubes of side eps: a point gets
/// the tuple (floor(x_i / eps) mod m)_i, so m^d colors in all.
///
/// It forbids distance 1 when two conditions hold. A little cube must have
/// diameter < 1, i.e. eps * C < 1. Two points of the same color in different
/// little cubes differ by more than (m - 1) * eps in some coordinate, so
/// c * (m - 1) * eps > 1 puts them further than 1 apart.
struct PeriodicColoring {
  Norm norm = Norm::l2();
  std::size_t d = 2;
  double eps = 0.0;
  int m = 0;

  auto color_count() const -> std::uint64_t;
  /// Side length of one period, m * eps.
  auto period() const -> double { return static_cast<double>(m) * eps; }
  auto cube_diameter_ok() const -> bool;
  auto cross_cell_ok() const -> bool;
  auto valid() const -> bool { return cube_diameter_ok() && cross_cell_ok(); }
};

struct EquivalenceConstants {
  double lower = 1.0;
  double upper = 1.0;
};

/// Tightest c, C with c |u|_inf <= |u| <= C |u|_inf in R^d.
auto equivalence_constants(const Norm & norm, std::size_t d) -> EquivalenceConstants;

/// eps = safety / C and the least m with c (m - 1) eps > 1.
auto tiling_params(const Norm & norm, std::size_t d, double safety = 0.99) -> PeriodicColoring;

/// Colors forbidding distance `length` instead of 1: every scale multiplied.
auto scaled(const PeriodicColoring & pc, double length) -> PeriodicColoring;

/// Cell coordinates modulo m, each in 0..m-1. Cells are half-open.
auto color_point(const PeriodicColoring & pc, const Point & x) -> std::vector<int>;

/// The color tuple read as a base-m number.
auto color_index(const PeriodicColoring & pc, const Point & x) -> std::uint64_t;

struct TilingReport {
  std::uint64_t violations = 0;
  std::uint64_t pairs_checked = 0;
  /// Samples dropped because rescaling missed length 1 by more than 1e-12.
  std::uint64_t rejected = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Draws pairs (x, x + u) with x uniform in one period and |u| = 1 under the
/// coloring's norm, counting pairs of equal color. Deterministic for a given
/// seed and worker count.
auto verify_forbids(const PeriodicColoring & pc, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1)
    -> TilingReport;

} // namespace hypercol
