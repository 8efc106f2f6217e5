#include <hypercol/geomfam.hpp>
#include <hypercol/pointsets.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace hypercol {

GonSet::GonSet(std::size_t d, std::size_t m) : _d(d), _m(m)
{
  if (m < 2)
    throw InputError("gons need at least 2 points");
  if (d < 1)
    throw InputError("gons need dimension >= 1");
}

GonSet::GonSet(std::size_t d, std::size_t m, std::vector<PointSet> gons, double tol) : GonSet(d, m)
{
  auto linf = Norm::linf();
  for (std::size_t g = 0; g < gons.size(); ++g) {
    const auto & gon = gons[g];
    if (gon.size() != m)
      throw InputError("gon " + std::to_string(g) + " has " + std::to_string(gon.size()) + " points, expected " +
          std::to_string(m));
    if (require_uniform_dimension(gon) != d)
      throw InputError("gon " + std::to_string(g) + " is not in dimension " + std::to_string(d));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (distance(gon[i], gon[j], linf) <= tol)
          throw InputError("gon " + std::to_string(g) + " repeats a point");
  }
  _gons = std::move(gons);
}

auto GonSet::is_unit(double tol) const -> bool
{
  auto l2 = Norm::l2();
  return std::all_of(_gons.begin(), _gons.end(), [&](const PointSet & gon) {
    for (std::size_t i = 0; i < gon.size(); ++i)
      for (std::size_t j = i + 1; j < gon.size(); ++j)
        if (std::abs(distance(gon[i], gon[j], l2) - 1.0) <= tol)
          return true;
    return false;
  });
}

auto unit_segment(std::size_t d) -> GonSet
{
  return GonSet(d, 2, {{Point::zero(d), Point::unit(d, 0)}});
}

namespace {
  auto match_shifted(const PointSet & a, const PointSet & b, const Point & shift, double tol) -> bool
  {
    auto linf = Norm::linf();
    std::vector<bool> used(b.size(), false);
    for (const auto & p : a) {
      auto moved = p + shift;
      bool found = false;
      for (std::size_t j = 0; j < b.size() && ! found; ++j)
        if (! used[j] && distance(moved, b[j], linf) <= tol) {
          used[j] = true;
          found = true;
        }
      if (! found)
        return false;
    }
    return true;
  }

  auto choose(std::uint64_t n, std::uint64_t k) -> std::uint64_t
  {
    if (k > n)
      return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i))
        return std::numeric_limits<std::uint64_t>::max();
      r = r * (n - k + i) / i;
    }
    return r;
  }

  /// Calls visit(indices) for every k-subset of 0..n-1 in lexicographic order.
  template <typename Visit>
  auto for_each_subset(std::size_t n, std::size_t k, Visit && visit) -> void
  {
    if (k > n)
      return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      visit(static_cast<const std::vector<std::size_t> &>(idx));
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1)
        --i;
      if (i == 0)
        return;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }

  auto sorted_distances(const PointSet & pts) -> std::vector<double>
  {
    auto l2 = Norm::l2();
    std::vector<double> ds;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        ds.push_back(distance(pts[i], pts[j], l2));
    std::sort(ds.begin(), ds.end());
    return ds;
  }

  auto close(const std::vector<double> & a, const std::vector<double> & b, double tol) -> bool
  {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > tol)
        return false;
    return true;
  }
} // namespace

auto same_point_set(const PointSet & a, const PointSet & b, double tol) -> bool
{
  if (a.size() != b.size())
    return false;
  if (a.empty())
    return true;
  return match_shifted(a, b, Point::zero(a.front().dim()), tol);
}

auto translation_congruent(const PointSet & a, const PointSet & b, double tol) -> bool
{
  if (a.size() != b.size())
    return false;
  if (a.empty())
    return true;
  for (const auto & anchor : b)
    if (match_shifted(a, b, anchor - a.front(), tol))
      return true;
  return false;
}

auto parse_congruence_mode(const std::string & text) -> CongruenceMode
{
  if (text == "euclidean" || text == "euclidean-congruence")
    return CongruenceMode::Euclidean;
  if (text == "translation" || text == "translation-congruence")
    return CongruenceMode::Translation;
  throw InputError("unknown congruence mode '" + text + "'");
}

auto instantiate(const GonSet & gons, const PointSet & window, const InstantiateOptions & options) -> Hypergraph
{
  if (options.mode == CongruenceMode::Euclidean && ! options.norm.is_euclidean())
    throw InputError("euclidean congruence needs the l2 norm; use translation congruence for " + options.norm.name());
  auto d = require_uniform_dimension(window);
  if (! window.empty() && d != gons.dimension())
    throw InputError("gons live in dimension " + std::to_string(gons.dimension()) + ", points in " +
        std::to_string(d));

  auto m = gons.arity();
  if (choose(window.size(), m) > options.subset_cap)
    throw ResourceError(std::to_string(window.size()) + " points have too many " + std::to_string(m) +
        "-subsets to enumerate");

  std::vector<std::vector<double>> signatures;
  for (const auto & gon : gons.gons())
    signatures.push_back(sorted_distances(gon));

  std::vector<Edge> edges;
  PointSet subset(m);
  for_each_subset(window.size(), m, [&](const std::vector<std::size_t> & idx) {
    for (std::size_t i = 0; i < m; ++i)
      subset[i] = window[idx[i]];
    bool hit = false;
    if (options.mode == CongruenceMode::Euclidean) {
      auto sig = sorted_distances(subset);
      for (std::size_t g = 0; g < gons.size() && ! hit; ++g)
        hit = close(sig, signatures[g], options.tol) &&
            congruent_euclidean(subset, gons.gons()[g], options.tol).has_value();
    }
    else {
      for (std::size_t g = 0; g < gons.size() && ! hit; ++g)
        hit = translation_congruent(gons.gons()[g], subset, options.tol);
    }
    if (hit)
      edges.emplace_back(idx.begin(), idx.end());
  });
  return Hypergraph(window.size(), std::move(edges), window);
}

auto product_coloring(std::vector<PointColoring> components) -> PointColoring
{
  if (components.empty())
    throw InputError("product coloring needs at least one component");
  return [components = std::move(components)](const Point & p) {
    ColorKey key;
    for (const auto & phi : components) {
      auto part = phi(p);
      key.insert(key.end(), part.begin(), part.end());
    }
    return key;
  };
}

auto count_colors(const PointColoring & phi, const PointSet & points) -> std::size_t
{
  std::set<ColorKey> seen;
  for (const auto & p : points)
    seen.insert(phi(p));
  return seen.size();
}

auto sample_monochromatic_pairs(const PointColoring & phi, std::size_t d, double length, const Norm & norm,
    double extent, std::uint64_t samples, std::uint64_t seed) -> DistanceCheck
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(0.0, extent);
  std::normal_distribution<double> gauss;
  DistanceCheck result;
  std::vector<double> x(d), u(d);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto & c : x)
      c = box(rng);
    double len = 0.0;
    do {
      for (auto & c : u)
        c = gauss(rng);
      len = norm.length(u);
    } while (len == 0.0);
    std::vector<double> y(d);
    for (std::size_t i = 0; i < d; ++i)
      y[i] = x[i] + u[i] * (length / len);
    ++result.pairs_checked;
    if (phi(Point(x)) == phi(Point(y)))
      ++result.monochromatic;
  }
  return result;
}

auto augment_gons(const GonSet & current, const GonSet & base, const PointSet & points, double tol)
    -> AugmentedGons
{
  if (current.arity() != base.arity() + 1)
    throw InputError("augmenting " + std::to_string(base.arity()) + "-gons needs a family of " +
        std::to_string(base.arity() + 1) + "-gons, got " + std::to_string(current.arity()) + "-gons");
  if (current.dimension() != base.dimension())
    throw InputError("gon families live in different dimensions");
  auto d = base.dimension();
  if (! points.empty() && require_uniform_dimension(points) != d)
    throw InputError("new points are not in dimension " + std::to_string(d));

  AugmentedGons result;
  auto linf = Norm::linf();
  bool clash = false;
  for (const auto & z : points)
    for (const auto & gon : base.gons())
      for (const auto & p : gon)
        clash = clash || distance(z, p, linf) <= tol;

  auto fresh = points;
  if (clash) {
    double max_base = -std::numeric_limits<double>::infinity();
    for (const auto & gon : base.gons())
      for (const auto & p : gon)
        max_base = std::max(max_base, p[0]);
    double min_new = std::numeric_limits<double>::infinity();
    for (const auto & z : points)
      min_new = std::min(min_new, z[0]);
    auto shift = Point::unit(d, 0) * (max_base - min_new + 1.0);
    fresh = translate(points, shift);
    result.shift = shift;
  }

  auto gons = current.gons();
  for (const auto & x : base.gons())
    for (const auto & z : fresh) {
      auto gon = x;
      gon.push_back(z);
      bool duplicate = std::any_of(gons.begin(), gons.end(), [&](const PointSet & g) {
        return same_point_set(g, gon, tol);
      });
      if (! duplicate)
        gons.push_back(std::move(gon));
    }
  result.gons = GonSet(d, current.arity(), std::move(gons), tol);
  return result;
}

auto gm_hypergraph(const PointSet & points, const Norm & norm, std::size_t m, double tol, std::uint64_t subset_cap)
    -> Hypergraph
{
  if (m < 2)
    throw InputError("G_m needs m >= 2");
  if (m > points.size())
    throw InputError("G_m needs at least m = " + std::to_string(m) + " points, got " + std::to_string(points.size()));
  if (choose(points.size(), m) > subset_cap)
    throw ResourceError("too many " + std::to_string(m) + "-subsets to enumerate");

  auto n = points.size();
  std::vector<std::vector<bool>> unit(n, std::vector<bool>(n, false));
  for (auto [i, j] : unit_distance_pairs(points, norm, tol))
    unit[i][j] = unit[j][i] = true;

  std::vector<Edge> edges;
  for_each_subset(n, m, [&](const std::vector<std::size_t> & idx) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (unit[idx[a]][idx[b]]) {
          edges.emplace_back(idx.begin(), idx.end());
          return;
        }
  });
  return Hypergraph(n, std::move(edges), points);
}

auto augment_t(const Hypergraph & h0, std::size_t t, std::uint64_t edge_cap) -> Hypergraph
{
  require_well_formed(h0);
  auto n = h0.vertex_count();
  if (t + h0.max_edge_size() > n)
    throw InputError("t = " + std::to_string(t) + " leaves no room outside the largest edge");
  if (t == 0)
    return h0;

  std::uint64_t total = 0;
  for (const auto & e : h0.edges())
    total += choose(n - e.size(), t);
  if (total > edge_cap)
    throw ResourceError("augmentation would create " + std::to_string(total) + " edges");

  std::vector<Edge> edges;
  std::vector<Vertex> outside;
  for (const auto & e : h0.edges()) {
    outside.clear();
    for (Vertex v = 0; v < n; ++v)
      if (! std::binary_search(e.begin(), e.end(), v))
        outside.push_back(v);
    for_each_subset(outside.size(), t, [&](const std::vector<std::size_t> & idx) {
      Edge grown = e;
      for (auto i : idx)
        grown.push_back(outside[i]);
      edges.push_back(std::move(grown));
    });
  }
  return Hypergraph(n, std::move(edges), h0.embedding());
}

auto augment_t_report(const Hypergraph & h0, std::size_t t, const SolverOptions & solver) -> AugmentReport
{
  AugmentReport report;
  report.augmented = augment_t(h0, t);
  report.chi_base = chromatic_number(h0, solver).chi;
  report.chi_augmented = chromatic_number(report.augmented, solver).chi;
  return report;
}

auto parse_witness_strategy(const std::string & text) -> WitnessStrategy
{
  if (text == "library")
    return WitnessStrategy::Library;
  if (text == "lattice")
    return WitnessStrategy::Lattice;
  if (text == "random-augment")
    return WitnessStrategy::RandomAugment;
  throw InputError("unknown witness strategy '" + text + "'");
}

auto to_string(WitnessStrategy strategy) -> std::string
{
  switch (strategy) {
  case WitnessStrategy::Library: return "library";
  case WitnessStrategy::Lattice: return "lattice";
  case WitnessStrategy::RandomAugment: return "random-augment";
  }
  return "?";
}

namespace {
  /// Pads or truncates planar sets to dimension d.
  auto embed(const PointSet & pts, std::size_t d) -> PointSet
  {
    PointSet out;
    for (const auto & p : pts) {
      std::vector<double> c(d, 0.0);
      for (std::size_t i = 0; i < std::min(d, p.dim()); ++i)
        c[i] = p[i];
      out.emplace_back(std::move(c));
    }
    return out;
  }

  auto scale(const PointSet & pts, double s) -> PointSet
  {
    PointSet out;
    for (const auto & p : pts)
      out.push_back(p * s);
    return out;
  }

  /// Distinct pairwise distances inside the gons, unit distance first.
  auto gon_scales(const GonSet & gons, double tol) -> std::vector<double>
  {
    std::vector<double> all;
    for (const auto & gon : gons.gons())
      for (auto ds = sorted_distances(gon); auto x : ds)
        all.push_back(x);
    std::sort(all.begin(), all.end());
    std::vector<double> scales;
    bool has_unit = std::any_of(all.begin(), all.end(), [&](double x) { return std::abs(x - 1.0) <= tol; });
    if (has_unit)
      scales.push_back(1.0);
    for (double x : all)
      if (std::none_of(scales.begin(), scales.end(), [&](double s) { return std::abs(s - x) <= tol; }))
        scales.push_back(x);
    return scales;
  }

  struct Evaluator {
    const GonSet & gons;
    std::size_t target_k;
    const WitnessOptions & options;
    std::uint64_t used = 0;

    auto exhausted() const -> bool { return used >= options.budget; }

    auto graph(const PointSet & pts) const -> Hypergraph
    {
      InstantiateOptions inst;
      inst.tol = options.tol;
      return instantiate(gons, pts, inst);
    }

    auto try_candidate(const PointSet & pts, const std::string & source) -> std::optional<Witness>
    {
      if (exhausted())
        return std::nullopt;
      ++used;
      if (pts.size() < gons.arity())
        return std::nullopt;
      auto h = graph(pts);
      SolverStats stats;
      try {
        if (is_k_colorable(h, static_cast<int>(target_k) - 1, options.solver, &stats))
          return std::nullopt;
      }
      catch (const BudgetExhausted &) {
        return std::nullopt;
      }
      return Witness{pts, std::move(h), source, target_k, stats.nodes};
    }
  };

  auto library_candidates(std::size_t d) -> std::vector<std::pair<std::string, PointSet>>
  {
    std::vector<std::pair<std::string, PointSet>> out;
    out.emplace_back("unit-simplex(1)", embed(unit_simplex(1), d));
    if (d >= 2) {
      out.emplace_back("unit-simplex(2)", embed(unit_simplex(2), d));
      out.emplace_back("integer-grid(2,2)", embed(integer_grid(2, 2), d));
      out.emplace_back("triangular-lattice(1)", embed(triangular_lattice(1), d));
      out.emplace_back("moser-spindle", embed(moser_spindle(), d));
      out.emplace_back("golomb", embed(golomb_graph(), d));
      out.emplace_back("integer-grid(3,3)", embed(integer_grid(3, 3), d));
      out.emplace_back("triangular-lattice(2)", embed(triangular_lattice(2), d));
    }
    for (std::size_t k = 3; k <= d; ++k)
      out.emplace_back("unit-simplex(" + std::to_string(k) + ")", embed(unit_simplex(k), d));
    return out;
  }

  auto scale_tag(double s) -> std::string
  {
    return s == 1.0 ? "" : " scaled by " + std::to_string(s);
  }

  auto random_direction(std::mt19937_64 & rng, std::size_t d) -> Point
  {
    std::normal_distribution<double> gauss;
    std::vector<double> u(d);
    double len = 0.0;
    do {
      for (auto & c : u)
        c = gauss(rng);
      len = Norm::l2().length(u);
    } while (len == 0.0);
    for (auto & c : u)
      c /= len;
    return Point(std::move(u));
  }

  /// A point at distance `radius` from both p and q (planar case), or nullopt.
  auto circle_intersection(const Point & p, const Point & q, double radius, bool upper) -> std::optional<Point>
  {
    auto diff = q - p;
    double dist = Norm::l2().length(diff.coords());
    if (dist <= 1e-12 || dist >= 2.0 * radius)
      return std::nullopt;
    double h = std::sqrt(radius * radius - dist * dist / 4.0);
    auto mid = (p + q) * 0.5;
    Point normal{-diff[1] / dist, diff[0] / dist};
    return mid + normal * (upper ? h : -h);
  }
} // namespace

auto witness_search(const GonSet & gons, std::size_t target_k, const WitnessOptions & options) -> std::optional<Witness>
{
  if (target_k < 2)
    throw InputError("target_k must be at least 2");
  if (options.budget == 0)
    throw InputError("witness search budget must be positive");
  if (gons.empty())
    throw InputError("witness search needs a nonempty gon family");
  if (static_cast<int>(target_k) - 1 > max_colors)
    throw InputError("target_k is beyond the solver's palette");

  auto d = gons.dimension();
  Evaluator eval{gons, target_k, options};
  auto scales = gon_scales(gons, options.tol);

  switch (options.strategy) {
  case WitnessStrategy::Library:
    for (const auto & [name, pts] : library_candidates(d))
      for (double s : scales)
        if (auto w = eval.try_candidate(scale(pts, s), "library:" + name + scale_tag(s)))
          return w;
    return std::nullopt;

  case WitnessStrategy::Lattice:
    for (std::size_t r = 1; ! eval.exhausted(); ++r)
      for (double s : scales) {
        auto pts = d == 1 ? scale(integer_grid(2 * r + 1, 1), s) : embed(scale(triangular_lattice(r), s), d);
        if (d == 1)
          pts = embed(pts, 1);
        if (auto w = eval.try_candidate(pts, "lattice:radius " + std::to_string(r) + scale_tag(s)))
          return w;
        if (eval.exhausted())
          break;
      }
    return std::nullopt;

  case WitnessStrategy::RandomAugment: {
    std::mt19937_64 rng(options.seed);
    const auto & seed_gon = gons.gons().front();
    const double radius = scales.front();
    const std::size_t proposals = 8;
    auto linf = Norm::linf();
    PointSet current = seed_gon;
    std::size_t restarts = 0;

    while (! eval.exhausted()) {
      if (current.size() >= options.max_points) {
        current = seed_gon;
        ++restarts;
      }
      // Propose a few points at the gon scale from existing points, keep the
      // one that creates the most edges.
      std::optional<Point> best;
      std::size_t best_edges = 0;
      for (std::size_t trial = 0; trial < proposals; ++trial) {
        std::uniform_int_distribution<std::size_t> pick(0, current.size() - 1);
        std::optional<Point> cand;
        if (d == 2 && current.size() >= 2 && std::bernoulli_distribution(0.75)(rng)) {
          auto a = pick(rng), b = pick(rng);
          if (a != b)
            cand = circle_intersection(current[a], current[b], radius, std::bernoulli_distribution(0.5)(rng));
        }
        if (! cand)
          cand = current[pick(rng)] + random_direction(rng, d) * radius;
        bool duplicate = std::any_of(current.begin(), current.end(),
            [&](const Point & p) { return distance(p, *cand, linf) <= 1e3 * options.tol; });
        if (duplicate)
          continue;
        auto grown = current;
        grown.push_back(*cand);
        auto count = eval.graph(grown).edge_count();
        if (! best || count > best_edges) {
          best = cand;
          best_edges = count;
        }
      }
      if (! best) {
        // a stalled round still spends budget
        ++eval.used;
        continue;
      }
      current.push_back(*best);
      if (auto w = eval.try_candidate(current, "random-augment:restart " + std::to_string(restarts) + ", " +
                  std::to_string(current.size()) + " points"))
        return w;
    }
    return std::nullopt;
  }
  }
  return std::nullopt;
}

auto verify_witness(const GonSet & gons, const Witness & witness, const SolverOptions & solver) -> bool
{
  auto h = instantiate(gons, witness.points);
  return ! is_k_colorable(h, static_cast<int>(witness.target_k) - 1, solver).has_value();
}

} // namespace hypercol
