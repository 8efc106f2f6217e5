#include <hypercol/errors.hpp>
#include <hypercol/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hypercol {

Point::Point(std::vector<double> coords) : _coords(std::move(coords)) {}

Point::Point(std::initializer_list<double> coords) : _coords(coords) {}

auto Point::zero(std::size_t d) -> Point
{
  return Point(std::vector<double>(d, 0.0));
}

auto Point::unit(std::size_t d, std::size_t axis) -> Point
{
  auto p = std::vector<double>(d, 0.0);
  p.at(axis) = 1.0;
  return Point(std::move(p));
}

namespace {
  auto check_same_dim(const Point & a, const Point & b) -> void
  {
    if (a.dim() != b.dim())
      throw InputError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
} // namespace

auto Point::operator+(const Point & other) const -> Point
{
  check_same_dim(*this, other);
  auto r = _coords;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += other._coords[i];
  return Point(std::move(r));
}

auto Point::operator-(const Point & other) const -> Point
{
  check_same_dim(*this, other);
  auto r = _coords;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= other._coords[i];
  return Point(std::move(r));
}

auto Point::operator*(double s) const -> Point
{
  auto r = _coords;
  for (auto & c : r)
    c *= s;
  return Point(std::move(r));
}

auto Norm::lp(double p) -> Norm
{
  if (! (p >= 1.0) || ! std::isfinite(p))
    throw InputError("L_p norm requires finite p >= 1, got " + std::to_string(p));
  return Norm{Kind::Lp, p};
}

auto Norm::parse(const std::string & text) -> Norm
{
  auto lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "linf" || lower == "l-inf" || lower == "max")
    return linf();
  if (lower == "euclidean")
    return l2();
  std::string digits;
  if (lower.rfind("lp:", 0) == 0)
    digits = lower.substr(3);
  else if (lower.size() > 1 && lower[0] == 'l')
    digits = lower.substr(1);
  else
    throw InputError("unknown norm '" + text + "'");
  try {
    std::size_t used = 0;
    double p = std::stod(digits, &used);
    if (used != digits.size())
      throw InputError("unknown norm '" + text + "'");
    return lp(p);
  }
  catch (const std::logic_error &) {
    throw InputError("unknown norm '" + text + "'");
  }
}

auto Norm::name() const -> std::string
{
  if (_kind == Kind::Linf)
    return "linf";
  if (_p == std::floor(_p) && _p < 1e6)
    return "l" + std::to_string(static_cast<long>(_p));
  return "lp:" + std::to_string(_p);
}

auto Norm::lower_constant(std::size_t) const -> double
{
  // every L_p norm dominates the max norm
  return 1.0;
}

auto Norm::upper_constant(std::size_t d) const -> double
{
  if (_kind == Kind::Linf)
    return 1.0;
  if (_p == 1.0)
    return static_cast<double>(d);
  return std::pow(static_cast<double>(d), 1.0 / _p);
}

auto Norm::length(std::span<const double> u) const -> double
{
  double mx = 0.0;
  for (double c : u)
    mx = std::max(mx, std::abs(c));
  if (_kind == Kind::Linf || mx == 0.0)
    return mx;
  if (_p == 1.0) {
    double s = 0.0;
    for (double c : u)
      s += std::abs(c);
    return s;
  }
  if (_p == 2.0) {
    double s = 0.0;
    for (double c : u)
      s += c * c;
    return std::sqrt(s);
  }
  // scale by the max coordinate to keep pow() in range
  double s = 0.0;
  for (double c : u)
    s += std::pow(std::abs(c) / mx, _p);
  return mx * std::pow(s, 1.0 / _p);
}

auto require_uniform_dimension(std::span<const Point> points) -> std::size_t
{
  if (points.empty())
    return 0;
  auto d = points.front().dim();
  if (d == 0)
    throw InputError("points must have dimension >= 1");
  for (const auto & p : points) {
    if (p.dim() != d)
      throw InputError("point set has mixed dimensions");
    for (double c : p.coords())
      if (! std::isfinite(c))
        throw InputError("point coordinate is not finite");
  }
  return d;
}

auto distance(const Point & x, const Point & y, const Norm & norm) -> double
{
  check_same_dim(x, y);
  auto diff = x - y;
  return norm.length(diff.coords());
}

auto pairs_at_distance(std::span<const Point> points, double length, const Norm & norm, double tol)
    -> std::vector<IndexPair>
{
  if (! (tol > 0.0))
    throw InputError("tolerance must be positive");
  require_uniform_dimension(points);
  std::vector<IndexPair> result;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(distance(points[i], points[j], norm) - length) <= tol)
        result.emplace_back(i, j);
  return result;
}

auto unit_distance_pairs(std::span<const Point> points, const Norm & norm, double tol) -> std::vector<IndexPair>
{
  if (points.empty())
    throw InputError("unit_distance_pairs needs a nonempty point sequence");
  return pairs_at_distance(points, 1.0, norm, tol);
}

auto translate(std::span<const Point> points, const Point & v) -> PointSet
{
  PointSet result;
  result.reserve(points.size());
  for (const auto & p : points)
    result.push_back(p + v);
  return result;
}

auto diameter(std::span<const Point> points, const Norm & norm) -> double
{
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      best = std::max(best, distance(points[i], points[j], norm));
  return best;
}

namespace {
  using Matrix = std::vector<std::vector<double>>;

  auto distance_matrix(std::span<const Point> pts) -> Matrix
  {
    auto l2 = Norm::l2();
    Matrix m(pts.size(), std::vector<double>(pts.size(), 0.0));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        m[i][j] = m[j][i] = distance(pts[i], pts[j], l2);
    return m;
  }

  auto close_sorted(std::vector<double> a, std::vector<double> b, double tol) -> bool
  {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > tol)
        return false;
    return true;
  }

  struct Matcher {
    const Matrix & dx;
    const Matrix & dy;
    const std::vector<std::vector<std::size_t>> & candidates;
    double tol;
    std::vector<std::size_t> image;
    std::vector<bool> used;

    auto extend(std::size_t i) -> bool
    {
      if (i == image.size())
        return true;
      for (auto y : candidates[i]) {
        if (used[y])
          continue;
        bool ok = true;
        for (std::size_t a = 0; a < i && ok; ++a)
          ok = std::abs(dx[a][i] - dy[image[a]][y]) <= tol;
        if (! ok)
          continue;
        used[y] = true;
        image[i] = y;
        if (extend(i + 1))
          return true;
        used[y] = false;
      }
      return false;
    }
  };
} // namespace

auto congruent_euclidean(std::span<const Point> xs, std::span<const Point> ys, double tol)
    -> std::optional<std::vector<std::size_t>>
{
  if (! (tol > 0.0))
    throw InputError("tolerance must be positive");
  auto dx_dim = require_uniform_dimension(xs);
  auto dy_dim = require_uniform_dimension(ys);
  if (! xs.empty() && ! ys.empty() && dx_dim != dy_dim)
    throw InputError("dimension mismatch between point sets");
  if (xs.size() != ys.size())
    return std::nullopt;

  auto n = xs.size();
  auto dx = distance_matrix(xs);
  auto dy = distance_matrix(ys);

  // Sorting is 1-Lipschitz in the sup norm, so comparing sorted rows (and the
  // sorted global multiset) elementwise never discards a valid bijection.
  std::vector<double> all_x, all_y;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      all_x.push_back(dx[i][j]);
      all_y.push_back(dy[i][j]);
    }
  if (! close_sorted(all_x, all_y, tol))
    return std::nullopt;

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (close_sorted(dx[i], dy[j], tol))
        candidates[i].push_back(j);
    if (candidates[i].empty())
      return std::nullopt;
  }

  Matcher matcher{dx, dy, candidates, tol, std::vector<std::size_t>(n), std::vector<bool>(n, false)};
  if (! matcher.extend(0))
    return std::nullopt;
  return matcher.image;
}

} // namespace hypercol
