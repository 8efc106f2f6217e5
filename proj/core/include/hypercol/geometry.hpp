#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypercol {

inline constexpr double default_tolerance = 1e-9;

/// A position in R^d. Distance 1 is the forbidden distance throughout.
class Point {
public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static auto zero(std::size_t d) -> Point;
  static auto unit(std::size_t d, std::size_t axis) -> Point;

  auto dim() const -> std::size_t { return _coords.size(); }
  auto coords() const -> std::span<const double> { return _coords; }
  auto operator[](std::size_t i) const -> double { return _coords[i]; }

  auto operator+(const Point & other) const -> Point;
  auto operator-(const Point & other) const -> Point;
  auto operator*(double s) const -> Point;

  auto operator==(const Point & other) const -> bool = default;

private:
  std::vector<double> _coords;
};

/// An L_p norm (p >= 1) or the max norm, with its equivalence constants
/// c, C against the max norm: c * |u|_inf <= |u| <= C * |u|_inf.
class Norm {
public:
  enum class Kind { Lp, Linf };

  static auto lp(double p) -> Norm;
  static auto l1() -> Norm { return lp(1.0); }
  static auto l2() -> Norm { return lp(2.0); }
  static auto linf() -> Norm { return Norm{Kind::Linf, 0.0}; }

  /// Accepts "l1", "l2", "l3", "linf", "lp:<p>".
  static auto parse(const std::string & text) -> Norm;

  auto kind() const -> Kind { return _kind; }
  auto p() const -> double { return _p; }
  auto is_euclidean() const -> bool { return _kind == Kind::Lp && _p == 2.0; }
  auto name() const -> std::string;

  auto lower_constant(std::size_t d) const -> double;
  auto upper_constant(std::size_t d) const -> double;

  auto length(std::span<const double> u) const -> double;

  auto operator==(const Norm & other) const -> bool = default;

private:
  Norm(Kind kind, double p) : _kind(kind), _p(p) {}

  Kind _kind;
  double _p;
};

using PointSet = std::vector<Point>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Throws InputError unless every point has dimension d >= 1 and finite coordinates.
auto require_uniform_dimension(std::span<const Point> points) -> std::size_t;

auto distance(const Point & x, const Point & y, const Norm & norm) -> double;

/// All pairs i < j with |dist(p_i, p_j) - 1| <= tol, in lexicographic order.
auto unit_distance_pairs(std::span<const Point> points, const Norm & norm,
    double tol = default_tolerance) -> std::vector<IndexPair>;

/// Pairs at distance `length` instead of 1.
auto pairs_at_distance(std::span<const Point> points, double length, const Norm & norm,
    double tol = default_tolerance) -> std::vector<IndexPair>;

auto translate(std::span<const Point> points, const Point & v) -> PointSet;

/// Largest pairwise distance; 0 for fewer than two points.
auto diameter(std::span<const Point> points, const Norm & norm) -> double;

/// Searches for a bijection f: X -> Y preserving all Euclidean pairwise
/// distances to within tol. Returns f as an index map (result[i] is the index
/// in Y of the image of X[i]) or nullopt. In Euclidean space such a bijection
/// always extends to an isometry, so this decides congruence.
auto congruent_euclidean(std::span<const Point> xs, std::span<const Point> ys,
    double tol = default_tolerance) -> std::optional<std::vector<std::size_t>>;

} // namespace hypercol
