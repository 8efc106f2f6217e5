#include <hypercol/errors.hpp>
#include <hypercol/svg.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypercol::svg {

namespace {
  constexpr double canvas = 600.0;
  constexpr double margin = 30.0;

  auto num(double x) -> std::string
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
  }

  /// Maps model coordinates into the canvas, flipping y.
  struct Viewport {
    double min_x, min_y, scale;

    auto x(double v) const -> double { return margin + (v - min_x) * scale; }
    auto y(double v) const -> double { return canvas - margin - (v - min_y) * scale; }
  };

  auto fit(double min_x, double max_x, double min_y, double max_y) -> Viewport
  {
    double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    return {min_x, min_y, (canvas - 2 * margin) / span};
  }

  auto header(std::ostringstream & out) -> void
  {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\"" << canvas
        << "\" viewBox=\"0 0 " << canvas << ' ' << canvas << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  }

  using P2 = std::pair<double, double>;

  auto cross(const P2 & o, const P2 & a, const P2 & b) -> double
  {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  }

  /// Andrew's monotone chain; collinear input degenerates to its endpoints.
  auto convex_hull(std::vector<P2> pts) -> std::vector<P2>
  {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
      return pts;
    std::vector<P2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto & p : pts) {
      while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
        --k;
      hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
      while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
        --k;
      hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
  }
} // namespace

auto palette_color(std::size_t i, std::size_t count) -> std::string
{
  // evenly spaced hues, alternating lightness so neighbours stay distinct
  double hue = 360.0 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(count, 1));
  double light = (i % 2 == 0) ? 0.55 : 0.40;
  double sat = 0.65;
  auto f = [&](double n) {
    double k = std::fmod(n + hue / 30.0, 12.0);
    double a = sat * std::min(light, 1.0 - light);
    return light - a * std::max(-1.0, std::min({k - 3.0, 9.0 - k, 1.0}));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(f(0) * 255)),
      static_cast<int>(std::lround(f(8) * 255)), static_cast<int>(std::lround(f(4) * 255)));
  return buf;
}

auto render_hypergraph(const Hypergraph & h) -> std::string
{
  if (! h.embedding())
    throw InputError("rendering needs an embedded hypergraph");
  if (h.dimension() != 2)
    throw InputError("rendering needs a 2-dimensional embedding");
  require_well_formed(h);
  const auto & pts = *h.embedding();

  double min_x = pts.front()[0], max_x = min_x, min_y = pts.front()[1], max_y = min_y;
  for (const auto & p : pts) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  auto view = fit(min_x, max_x, min_y, max_y);

  std::ostringstream out;
  header(out);
  std::size_t hyper = 0;
  for (const auto & e : h.edges()) {
    if (e.size() < 3)
      continue;
    std::vector<P2> corners;
    for (auto v : e)
      corners.emplace_back(view.x(pts[v][0]), view.y(pts[v][1]));
    auto hull = convex_hull(corners);
    out << "<polygon class=\"hyperedge\" points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i)
      out << (i ? " " : "") << num(hull[i].first) << ',' << num(hull[i].second);
    out << "\" fill=\"" << palette_color(hyper++ % 12, 12)
        << "\" fill-opacity=\"0.15\" stroke=\"#555555\" stroke-opacity=\"0.4\" stroke-width=\"1\"/>\n";
  }
  for (const auto & e : h.edges()) {
    if (e.size() != 2)
      continue;
    const auto & a = pts[e[0]];
    const auto & b = pts[e[1]];
    out << "<line class=\"edge\" x1=\"" << num(view.x(a[0])) << "\" y1=\"" << num(view.y(a[1])) << "\" x2=\""
        << num(view.x(b[0])) << "\" y2=\"" << num(view.y(b[1])) << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t v = 0; v < pts.size(); ++v)
    out << "<circle class=\"vertex\" cx=\"" << num(view.x(pts[v][0])) << "\" cy=\"" << num(view.y(pts[v][1]))
        << "\" r=\"4\" fill=\"#1f3b73\"><title>" << v << "</title></circle>\n";
  out << "</svg>\n";
  return out.str();
}

auto render_tiling(const PeriodicColoring & pc) -> std::string
{
  if (pc.d != 2)
    throw InputError("tiling rendering needs d = 2");
  if (pc.m < 1 || ! (pc.eps > 0.0))
    throw InputError("tiling parameters must be positive");

  double period = pc.period();
  // leave room below the period for the scale bar
  auto view = fit(0.0, std::max(period, 1.0), -0.3 * std::max(period, 1.0), std::max(period, 1.0));
  auto count = pc.color_count();

  std::ostringstream out;
  header(out);
  for (int j = 0; j < pc.m; ++j)
    for (int i = 0; i < pc.m; ++i) {
      Point corner{(i + 0.5) * pc.eps, (j + 0.5) * pc.eps};
      auto color = color_index(pc, corner);
      double x0 = view.x(i * pc.eps), y0 = view.y((j + 1) * pc.eps);
      out << "<rect class=\"cell\" x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\""
          << num(pc.eps * view.scale) << "\" height=\"" << num(pc.eps * view.scale) << "\" fill=\""
          << palette_color(color, count) << "\" stroke=\"#ffffff\" stroke-width=\"0.5\"><title>" << i << ','
          << j << "</title></rect>\n";
    }
  double bar_y = view.y(-0.15 * std::max(period, 1.0));
  out << "<line class=\"scale-bar\" x1=\"" << num(view.x(0.0)) << "\" y1=\"" << num(bar_y) << "\" x2=\""
      << num(view.x(1.0)) << "\" y2=\"" << num(bar_y) << "\" stroke=\"#000000\" stroke-width=\"3\"/>\n";
  out << "<text x=\"" << num(view.x(0.5)) << "\" y=\"" << num(bar_y - 8)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">1</text>\n";
  out << "<text x=\"" << num(margin) << "\" y=\"" << num(margin - 10)
      << "\" font-family=\"sans-serif\" font-size=\"14\">" << pc.norm.name() << ", eps=" << num(pc.eps)
      << ", m=" << pc.m << ", " << count << " colors</text>\n";
  out << "</svg>\n";
  return out.str();
}

} // namespace hypercol::svg
