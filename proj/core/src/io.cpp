#include <hypercol/errors.hpp>
#include <hypercol/io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hypercol::io {

using nlohmann::json;

namespace {
  auto parse(const std::string & text) -> json
  {
    try {
      return json::parse(text);
    }
    catch (const json::exception & e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
  }

  auto dump(const json & j) -> std::string
  {
    return j.dump(2) + "\n";
  }

  auto point_json(const Point & p) -> json
  {
    return json(std::vector<double>(p.coords().begin(), p.coords().end()));
  }

  auto points_json(const PointSet & points) -> json
  {
    auto arr = json::array();
    for (const auto & p : points)
      arr.push_back(point_json(p));
    return arr;
  }

  auto read_points(const json & arr, const char * what) -> PointSet
  {
    if (! arr.is_array())
      throw InputError(std::string(what) + " must be an array of coordinate arrays");
    PointSet points;
    for (const auto & row : arr) {
      if (! row.is_array())
        throw InputError(std::string(what) + " must be an array of coordinate arrays");
      std::vector<double> c;
      for (const auto & x : row) {
        if (! x.is_number())
          throw InputError(std::string(what) + " has a non-numeric coordinate");
        c.push_back(x.get<double>());
      }
      points.emplace_back(std::move(c));
    }
    return points;
  }

  /// Runs a field accessor, turning library type errors into InputError.
  template <typename F>
  auto guarded(const char * what, F && f)
  {
    try {
      return f();
    }
    catch (const json::exception & e) {
      throw InputError(std::string(what) + ": " + e.what());
    }
  }

  auto check_dimension(const PointSet & points, const json & d) -> void
  {
    auto dim = require_uniform_dimension(points);
    if (! points.empty() && d.is_number_integer() && static_cast<std::size_t>(d.get<long long>()) != dim)
      throw InputError("declared dimension " + d.dump() + " does not match coordinates");
  }
} // namespace

auto pointset_to_json(const PointSet & points) -> std::string
{
  json j;
  j["d"] = points.empty() ? 0 : points.front().dim();
  j["points"] = points_json(points);
  return dump(j);
}

auto pointset_from_json(const std::string & text) -> PointSet
{
  auto j = parse(text);
  if (! j.is_object() || ! j.contains("points"))
    throw InputError("point set needs a \"points\" array");
  auto points = read_points(j["points"], "points");
  check_dimension(points, j.value("d", json()));
  return points;
}

auto hypergraph_to_json(const Hypergraph & h) -> std::string
{
  json j;
  j["n"] = h.vertex_count();
  if (h.embedding()) {
    j["d"] = h.dimension();
    j["vertices"] = points_json(*h.embedding());
  }
  else {
    j["d"] = nullptr;
    j["vertices"] = nullptr;
  }
  j["edges"] = h.edges();
  return dump(j);
}

auto hypergraph_from_json(const std::string & text) -> Hypergraph
{
  auto j = parse(text);
  if (! j.is_object() || ! j.contains("edges"))
    throw InputError("hypergraph needs an \"edges\" array");
  auto edges = guarded("edges", [&] { return j["edges"].get<std::vector<std::vector<long long>>>(); });

  std::optional<PointSet> embedding;
  if (j.contains("vertices") && ! j["vertices"].is_null()) {
    embedding = read_points(j["vertices"], "vertices");
    check_dimension(*embedding, j.value("d", json()));
  }

  std::vector<Edge> converted;
  long long max_index = -1;
  for (const auto & e : edges) {
    Edge edge;
    for (auto v : e) {
      if (v < 0 || v > static_cast<long long>(std::numeric_limits<Vertex>::max()))
        throw InputError("edge index " + std::to_string(v) + " is not a valid vertex index");
      edge.push_back(static_cast<Vertex>(v));
      max_index = std::max(max_index, v);
    }
    converted.push_back(std::move(edge));
  }

  std::size_t n = 0;
  if (j.contains("n") && ! j["n"].is_null())
    n = guarded("n", [&] { return j["n"].get<std::size_t>(); });
  else if (embedding)
    n = embedding->size();
  else
    n = static_cast<std::size_t>(max_index + 1);

  return Hypergraph(n, std::move(converted), std::move(embedding));
}

auto coloring_to_json(const Coloring & phi) -> std::string
{
  json j;
  j["m"] = phi.palette();
  j["colors"] = phi.colors();
  return dump(j);
}

auto coloring_from_json(const std::string & text) -> Coloring
{
  auto j = parse(text);
  if (! j.is_object() || ! j.contains("colors"))
    throw InputError("coloring needs a \"colors\" array");
  auto colors = guarded("colors", [&] { return j["colors"].get<std::vector<int>>(); });
  int m = 0;
  if (j.contains("m"))
    m = guarded("m", [&] { return j["m"].get<int>(); });
  else
    for (int c : colors)
      m = std::max(m, c);
  return Coloring(std::move(colors), std::max(m, 1));
}

auto gonset_to_json(const GonSet & gons) -> std::string
{
  json j;
  j["d"] = gons.dimension();
  j["m"] = gons.arity();
  auto arr = json::array();
  for (const auto & gon : gons.gons())
    arr.push_back(points_json(gon));
  j["gons"] = arr;
  return dump(j);
}

auto gonset_from_json(const std::string & text) -> GonSet
{
  auto j = parse(text);
  if (! j.is_object() || ! j.contains("gons") || ! j["gons"].is_array())
    throw InputError("gon set needs a \"gons\" array");
  std::vector<PointSet> gons;
  for (const auto & g : j["gons"])
    gons.push_back(read_points(g, "gon"));
  std::size_t d = 0, m = 0;
  if (j.contains("d"))
    d = guarded("d", [&] { return j["d"].get<std::size_t>(); });
  else if (! gons.empty() && ! gons.front().empty())
    d = gons.front().front().dim();
  if (j.contains("m"))
    m = guarded("m", [&] { return j["m"].get<std::size_t>(); });
  else if (! gons.empty())
    m = gons.front().size();
  return GonSet(d, m, std::move(gons));
}

auto write_dimacs(std::ostream & out, const Hypergraph & h) -> void
{
  out << "c hypergraph export, vertices are 1-based\n";
  out << "p hypergraph " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto & e : h.edges()) {
    out << 'e';
    for (auto v : e)
      out << ' ' << (v + 1);
    out << '\n';
  }
}

auto read_text(const std::filesystem::path & path) -> std::string
{
  std::ifstream in(path, std::ios::binary);
  if (! in)
    throw InputError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

auto write_text(const std::filesystem::path & path, const std::string & text) -> void
{
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (! out)
    throw InputError("cannot write " + path.string());
  out << text;
}

auto read_hypergraph(const std::filesystem::path & path) -> Hypergraph
{
  return hypergraph_from_json(read_text(path));
}

auto read_pointset(const std::filesystem::path & path) -> PointSet
{
  return pointset_from_json(read_text(path));
}

auto read_coloring(const std::filesystem::path & path) -> Coloring
{
  return coloring_from_json(read_text(path));
}

auto read_gonset(const std::filesystem::path & path) -> GonSet
{
  return gonset_from_json(read_text(path));
}

} // namespace hypercol::io
