#pragma once

// Hand-rolled random generators and brute-force oracles shared by the unit
// tests and the acceptance runner.

#include <hypercol/hypercol.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace hypercol::testing {

using Rng = std::mt19937_64;

inline auto uniform_int(Rng & rng, std::size_t lo, std::size_t hi) -> std::size_t
{
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline auto uniform_real(Rng & rng, double lo, double hi) -> double
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline auto random_subset(Rng & rng, std::size_t n, std::size_t size) -> Edge
{
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::shuffle(all.begin(), all.end(), rng);
  Edge e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(e.begin(), e.end());
  return e;
}

/// n in [n_min, n_max], edge sizes in [lo, hi], up to max_edges edges.
inline auto random_hypergraph(Rng & rng, std::size_t n_min, std::size_t n_max, std::size_t lo, std::size_t hi,
    std::size_t max_edges) -> Hypergraph
{
  auto n = uniform_int(rng, std::max(n_min, lo), n_max);
  auto count = uniform_int(rng, 0, max_edges);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i)
    edges.push_back(random_subset(rng, n, uniform_int(rng, lo, std::min(hi, n))));
  return Hypergraph(n, std::move(edges));
}

/// Nonempty m-uniform hypergraph.
inline auto random_uniform(Rng & rng, std::size_t n_min, std::size_t n_max, std::size_t m, std::size_t max_edges)
    -> Hypergraph
{
  auto n = uniform_int(rng, std::max(n_min, m), n_max);
  auto count = uniform_int(rng, 1, max_edges);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i)
    edges.push_back(random_subset(rng, n, m));
  return Hypergraph(n, std::move(edges));
}

inline auto random_point(Rng & rng, std::size_t d, double scale) -> Point
{
  std::vector<double> c(d);
  for (auto & x : c)
    x = uniform_real(rng, -scale, scale);
  return Point(std::move(c));
}

inline auto random_points(Rng & rng, std::size_t n, std::size_t d, double scale) -> PointSet
{
  PointSet ps;
  for (std::size_t i = 0; i < n; ++i)
    ps.push_back(random_point(rng, d, scale));
  return ps;
}

/// Random orthogonal map of R^d (Gram-Schmidt on a Gaussian matrix), applied
/// to every point, then translated.
inline auto random_isometry(Rng & rng, const PointSet & ps, bool reflect) -> PointSet
{
  auto d = ps.front().dim();
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> q(d, std::vector<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (auto & x : q[i])
      x = g(rng);
    for (std::size_t j = 0; j < i; ++j) {
      double dot = 0;
      for (std::size_t t = 0; t < d; ++t)
        dot += q[i][t] * q[j][t];
      for (std::size_t t = 0; t < d; ++t)
        q[i][t] -= dot * q[j][t];
    }
    double len = 0;
    for (auto x : q[i])
      len += x * x;
    len = std::sqrt(len);
    for (auto & x : q[i])
      x /= len;
  }
  if (reflect)
    for (auto & x : q[0])
      x = -x;
  auto shift = random_point(rng, d, 3.0);
  PointSet out;
  for (const auto & p : ps) {
    std::vector<double> c(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < d; ++t)
        c[i] += q[i][t] * p[t];
    out.push_back(Point(std::move(c)) + shift);
  }
  return out;
}

// ---- oracles ----

inline auto brute_proper(const Hypergraph & h, const std::vector<int> & colors) -> bool
{
  for (const auto & e : h.edges()) {
    bool mono = true;
    for (auto v : e)
      mono = mono && colors[v] == colors[e.front()];
    if (mono)
      return false;
  }
  return true;
}

/// Tries every map V -> {1..m} in lexicographic order.
inline auto brute_colorable(const Hypergraph & h, int m) -> bool
{
  auto n = h.vertex_count();
  if (n == 0)
    return true;
  std::vector<int> colors(n, 1);
  while (true) {
    if (brute_proper(h, colors))
      return true;
    std::size_t i = 0;
    while (i < n && colors[i] == m)
      colors[i++] = 1;
    if (i == n)
      return false;
    ++colors[i];
  }
}

inline auto brute_chi(const Hypergraph & h) -> int
{
  int n = static_cast<int>(h.vertex_count());
  for (int m = 1; m <= std::max(n, 1); ++m)
    if (brute_colorable(h, m))
      return m;
  return n;
}

/// All |X|! bijections.
inline auto brute_congruent(const PointSet & xs, const PointSet & ys, double tol) -> bool
{
  if (xs.size() != ys.size())
    return false;
  std::vector<std::size_t> perm(xs.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto l2 = Norm::l2();
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < xs.size(); ++i)
      for (std::size_t j = i + 1; ok && j < xs.size(); ++j)
        ok = std::abs(distance(xs[i], xs[j], l2) - distance(ys[perm[i]], ys[perm[j]], l2)) <= tol;
    if (ok)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Calls f on every k-subset of 0..n-1 in lexicographic order.
template <class F>
auto for_each_subset(std::size_t n, std::size_t k, F && f) -> void
{
  if (k > n)
    return;
  std::vector<Vertex> s(k);
  std::iota(s.begin(), s.end(), Vertex{0});
  while (true) {
    f(static_cast<const std::vector<Vertex> &>(s));
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++s[i - 1];
    for (auto j = i; j < k; ++j)
      s[j] = s[j - 1] + 1;
  }
}

/// m-subsets of P containing a pair at distance 1.
inline auto brute_gm_count(const PointSet & ps, const Norm & norm, std::size_t m, double tol) -> std::size_t
{
  std::size_t count = 0;
  for_each_subset(ps.size(), m, [&](const std::vector<Vertex> & s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (std::abs(distance(ps[s[i]], ps[s[j]], norm) - 1.0) <= tol) {
          ++count;
          return;
        }
  });
  return count;
}

/// Distinct sets e + T over edges e and t-sets T outside e.
inline auto brute_augment_t(const Hypergraph & h, std::size_t t) -> std::set<Edge>
{
  std::set<Edge> out;
  auto n = h.vertex_count();
  for (const auto & e : h.edges())
    for_each_subset(n, t, [&](const std::vector<Vertex> & s) {
      for (auto v : s)
        if (std::binary_search(e.begin(), e.end(), v))
          return;
      Edge u = e;
      u.insert(u.end(), s.begin(), s.end());
      std::sort(u.begin(), u.end());
      out.insert(u);
    });
  return out;
}

inline auto edge_set(const Hypergraph & h) -> std::set<Edge>
{
  return {h.edges().begin(), h.edges().end()};
}

/// K_n as a 2-uniform hypergraph.
inline auto complete_graph(std::size_t n) -> Hypergraph
{
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      edges.push_back({i, j});
  return Hypergraph(n, std::move(edges));
}

/// Unit distance graph of P under the Euclidean norm.
inline auto unit_graph(const PointSet & ps, double tol = default_tolerance) -> Hypergraph
{
  auto pairs = unit_distance_pairs(ps, Norm::l2(), tol);
  return Hypergraph::from_pairs(ps.size(), pairs, ps);
}

} // namespace hypercol::testing
