#pragma once

#include <hypercol/chroma.hpp>
#include <hypercol/geometry.hpp>
#include <hypercol/hypergraph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hypercol {

/// A finite family of m-point sets ("gons") in R^d. Collinear points are
/// allowed; the points of each gon must be distinct.
class GonSet {
public:
  GonSet() = default;
  /// An empty family of m-gons in R^d.
  GonSet(std::size_t d, std::size_t m);
  /// Throws InputError on a gon of the wrong size or dimension, or with
  /// repeated points.
  GonSet(std::size_t d, std::size_t m, std::vector<PointSet> gons, double tol = default_tolerance);

  auto dimension() const -> std::size_t { return _d; }
  auto arity() const -> std::size_t { return _m; }
  auto gons() const -> const std::vector<PointSet> & { return _gons; }
  auto size() const -> std::size_t { return _gons.size(); }
  auto empty() const -> bool { return _gons.empty(); }

  /// True when every gon has a pair at Euclidean distance 1.
  auto is_unit(double tol = default_tolerance) const -> bool;

  auto operator==(const GonSet &) const -> bool = default;

private:
  std::size_t _d = 0;
  std::size_t _m = 0;
  std::vector<PointSet> _gons;
};

/// The single 2-gon {0, e_1} in R^d.
auto unit_segment(std::size_t d = 2) -> GonSet;

/// Same points up to order, within tol coordinatewise.
auto same_point_set(const PointSet & a, const PointSet & b, double tol = default_tolerance) -> bool;

/// Whether b = a + v for some v, up to ordering.
auto translation_congruent(const PointSet & a, const PointSet & b, double tol = default_tolerance) -> bool;

enum class CongruenceMode { Euclidean, Translation };

auto parse_congruence_mode(const std::string & text) -> CongruenceMode;

struct InstantiateOptions {
  CongruenceMode mode = CongruenceMode::Euclidean;
  Norm norm = Norm::l2();
  double tol = default_tolerance;
  /// Inputs with more m-subsets than this are refused with a ResourceError.
  std::uint64_t subset_cap = 5'000'000;
};

/// The finite window H(M)|F: vertices are F, edges are the m-subsets of F
/// congruent (by rigid motion, or by translation only) to some gon of M.
auto instantiate(const GonSet & gons, const PointSet & window, const InstantiateOptions & options = {}) -> Hypergraph;

/// Color of a point, as a tuple of integers.
using ColorKey = std::vector<std::int64_t>;
using PointColoring = std::function<ColorKey(const Point &)>;

/// psi(r) = (phi_1(r), ..., phi_n(r)), flattened. Forbids every distance
/// that some component forbids.
auto product_coloring(std::vector<PointColoring> components) -> PointColoring;

/// Number of distinct colors the coloring takes on the given points.
auto count_colors(const PointColoring & phi, const PointSet & points) -> std::size_t;

struct DistanceCheck {
  std::uint64_t pairs_checked = 0;
  std::uint64_t monochromatic = 0;
};

/// Samples pairs (x, x + u) with x uniform in the box [0, extent)^d and
/// |u| = length under `norm`, counting pairs that get the same color.
auto sample_monochromatic_pairs(const PointColoring & phi, std::size_t d, double length, const Norm & norm,
    double extent, std::uint64_t samples, std::uint64_t seed) -> DistanceCheck;

struct AugmentedGons {
  GonSet gons;
  /// Shift applied to the new points because some of them lay on a gon of M.
  std::optional<Point> shift;
};

/// S_j + {X + {z} : z in F, X in M}. Points of F that fall on a gon of M
/// are first moved clear by translating all of F.
auto augment_gons(const GonSet & current, const GonSet & base, const PointSet & points,
    double tol = default_tolerance) -> AugmentedGons;

/// Finite analogue of G_m: m-subsets of P containing a pair at distance 1.
auto gm_hypergraph(const PointSet & points, const Norm & norm, std::size_t m, double tol = default_tolerance,
    std::uint64_t subset_cap = 5'000'000) -> Hypergraph;

/// Edges e + T for every edge e of H0 and every t-set T of vertices outside e.
auto augment_t(const Hypergraph & h0, std::size_t t, std::uint64_t edge_cap = 5'000'000) -> Hypergraph;

struct AugmentReport {
  Hypergraph augmented;
  int chi_base = 0;
  int chi_augmented = 0;
};

/// augment_t together with both chromatic numbers. Only chi_augmented <=
/// chi_base is guaranteed on a finite vertex set.
auto augment_t_report(const Hypergraph & h0, std::size_t t, const SolverOptions & solver = {}) -> AugmentReport;

enum class WitnessStrategy { Library, Lattice, RandomAugment };

auto parse_witness_strategy(const std::string & text) -> WitnessStrategy;
auto to_string(WitnessStrategy strategy) -> std::string;

struct WitnessOptions {
  WitnessStrategy strategy = WitnessStrategy::Library;
  /// Number of candidate point sets examined.
  std::uint64_t budget = 64;
  std::uint64_t seed = 0;
  double tol = default_tolerance;
  /// Per-candidate solver settings.
  SolverOptions solver;
  /// random-augment stops growing a candidate beyond this many points.
  std::size_t max_points = 24;
};

struct Witness {
  PointSet points;
  Hypergraph graph;
  std::string source;
  std::size_t target_k = 0;
  /// Solver nodes spent proving that target_k - 1 colors do not suffice.
  std::uint64_t certificate_nodes = 0;
};

/// Heuristic search for a finite F with chi(instantiate(M, F)) >= target_k.
/// nullopt means the budget ran out, not that no such F exists.
auto witness_search(const GonSet & gons, std::size_t target_k, const WitnessOptions & options = {})
    -> std::optional<Witness>;

/// Recomputes the certificate: target_k - 1 colors must be infeasible.
auto verify_witness(const GonSet & gons, const Witness & witness, const SolverOptions & solver = {}) -> bool;

} // namespace hypercol
