#include <hypercol/errors.hpp>
#include <hypercol/pointsets.hpp>

#include <cmath>
#include <numbers>

namespace hypercol {

namespace {
  auto polar(double radius, double angle) -> Point
  {
    return Point{radius * std::cos(angle), radius * std::sin(angle)};
  }
} // namespace

auto moser_spindle() -> PointSet
{
  using std::numbers::pi;
  const double sqrt3 = std::numbers::sqrt3;
  // Tips sit at distance sqrt(3); rotating one rhombus by this angle puts
  // them at distance 1.
  const double spread = 2.0 * std::asin(1.0 / (2.0 * sqrt3));
  PointSet points{Point{0.0, 0.0}};
  for (double axis : {0.0, spread}) {
    points.push_back(polar(1.0, axis - pi / 6.0));
    points.push_back(polar(1.0, axis + pi / 6.0));
    points.push_back(polar(sqrt3, axis));
  }
  return points;
}

auto golomb_graph() -> PointSet
{
  using std::numbers::pi;
  PointSet points{Point{0.0, 0.0}};
  for (int i = 0; i < 6; ++i)
    points.push_back(polar(1.0, i * pi / 3.0));
  // |t - h| = 1 for a triangle vertex t at radius 1/sqrt(3) and a hexagon
  // vertex h at radius 1 needs cos(angle between them) = sqrt(3)/6.
  const double offset = std::acos(std::numbers::sqrt3 / 6.0);
  for (int i = 0; i < 3; ++i)
    points.push_back(polar(1.0 / std::numbers::sqrt3, offset + i * 2.0 * pi / 3.0));
  return points;
}

auto unit_simplex(std::size_t d) -> PointSet
{
  if (d < 1)
    throw InputError("unit simplex needs dimension >= 1");
  const double dd = static_cast<double>(d);
  const double s = 1.0 / std::numbers::sqrt2;
  PointSet points;
  for (std::size_t i = 0; i < d; ++i)
    points.push_back(Point::unit(d, i) * s);
  // (a, ..., a) at distance 1 from each s*e_i: d a^2 - sqrt(2) a - 1/2 = 0
  const double a = (std::numbers::sqrt2 - std::sqrt(2.0 + 2.0 * dd)) / (2.0 * dd);
  points.push_back(Point(std::vector<double>(d, a)));
  return points;
}

auto triangular_lattice(std::size_t radius) -> PointSet
{
  const auto r = static_cast<long>(radius);
  PointSet points;
  for (long i = -r; i <= r; ++i)
    for (long j = -r; j <= r; ++j) {
      if (std::abs(i + j) > r)
        continue;
      points.push_back(Point{static_cast<double>(i) + 0.5 * static_cast<double>(j),
          std::numbers::sqrt3 / 2.0 * static_cast<double>(j)});
    }
  return points;
}

auto integer_grid(std::size_t width, std::size_t height) -> PointSet
{
  PointSet points;
  for (std::size_t y = 0; y < height; ++y)
    for (std::size_t x = 0; x < width; ++x)
      points.push_back(Point{static_cast<double>(x), static_cast<double>(y)});
  return points;
}

auto builtin_pointset(const std::string & name, const std::vector<std::size_t> & params) -> PointSet
{
  auto param = [&](std::size_t i, std::size_t fallback) { return i < params.size() ? params[i] : fallback; };
  if (name == "moser-spindle")
    return moser_spindle();
  if (name == "golomb")
    return golomb_graph();
  if (name == "unit-simplex")
    return unit_simplex(param(0, 2));
  if (name == "triangular-lattice")
    return triangular_lattice(param(0, 1));
  if (name == "integer-grid") {
    auto w = param(0, 3);
    return integer_grid(w, param(1, w));
  }
  throw InputError("unknown point set '" + name + "'");
}

auto builtin_pointset_names() -> std::vector<std::string>
{
  return {"moser-spindle", "golomb", "unit-simplex", "triangular-lattice", "integer-grid"};
}

} // namespace hypercol
