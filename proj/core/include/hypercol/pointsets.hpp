#pragma once

#include <hypercol/geometry.hpp>

#include <string>
#include <vector>

namespace hypercol {

// Named point sets used as test corpus and witness-search library.
//
// moser-spindle: two unit rhombi (each a pair of equilateral unit
//   triangles) hinged at the origin, rotated until their far tips are at
//   distance 1. 7 points, 11 unit pairs.
// golomb: a unit hexagon with its center, plus a unit equilateral triangle
//   around the same center rotated so that each triangle vertex is at
//   distance 1 from every other hexagon vertex. 10 points, 18 unit pairs.
// unit-simplex(d): d + 1 points in R^d at mutual distance 1.
// triangular-lattice(r): lattice points within hex distance r of the origin.
// integer-grid(w, h): {0..w-1} x {0..h-1}.

auto moser_spindle() -> PointSet;
auto golomb_graph() -> PointSet;
auto unit_simplex(std::size_t d) -> PointSet;
auto triangular_lattice(std::size_t radius) -> PointSet;
auto integer_grid(std::size_t width, std::size_t height) -> PointSet;

/// Looks a set up by name with its integer parameters, e.g.
/// ("unit-simplex", {3}) or ("integer-grid", {3, 3}). Missing parameters take
/// small defaults. Throws InputError for unknown names.
auto builtin_pointset(const std::string & name, const std::vector<std::size_t> & params = {}) -> PointSet;

auto builtin_pointset_names() -> std::vector<std::string>;

} // namespace hypercol
