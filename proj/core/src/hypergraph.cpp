#include <hypercol/errors.hpp>
#include <hypercol/hypergraph.hpp>

#include <algorithm>
#include <set>

namespace hypercol {

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges, std::optional<PointSet> embedding) :
    _n(n),
    _embedding(std::move(embedding))
{
  _edges.reserve(edges.size());
  std::set<Edge> seen;
  for (auto & e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (! seen.insert(e).second) {
      ++_merged_duplicates;
      continue;
    }
    _edges.push_back(std::move(e));
  }
}

auto Hypergraph::from_pairs(std::size_t n, std::span<const IndexPair> pairs, std::optional<PointSet> embedding)
    -> Hypergraph
{
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs)
    edges.push_back(Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)});
  return Hypergraph(n, std::move(edges), std::move(embedding));
}

auto Hypergraph::dimension() const -> std::size_t
{
  if (! _embedding || _embedding->empty())
    return 0;
  return _embedding->front().dim();
}

auto Hypergraph::max_edge_size() const -> std::size_t
{
  std::size_t best = 0;
  for (const auto & e : _edges)
    best = std::max(best, e.size());
  return best;
}

auto Hypergraph::operator==(const Hypergraph & other) const -> bool
{
  return _n == other._n && _edges == other._edges && _embedding == other._embedding;
}

Coloring::Coloring(std::vector<int> colors, int m) : _colors(std::move(colors)), _m(m)
{
  if (m < 1)
    throw InputError("a coloring needs at least one available color");
  for (std::size_t v = 0; v < _colors.size(); ++v)
    if (_colors[v] < 1 || _colors[v] > m)
      throw InputError("vertex " + std::to_string(v) + " has color " + std::to_string(_colors[v]) +
          " outside 1.." + std::to_string(m));
}

auto Coloring::used_colors() const -> int
{
  std::vector<bool> used(static_cast<std::size_t>(_m) + 1, false);
  int count = 0;
  for (int c : _colors)
    if (! used[c]) {
      used[c] = true;
      ++count;
    }
  return count;
}

auto ValidationReport::has(IssueKind kind) const -> bool
{
  return std::any_of(issues.begin(), issues.end(), [&](const auto & i) { return i.kind == kind; });
}

auto validate(const Hypergraph & h) -> ValidationReport
{
  ValidationReport report;
  auto n = h.vertex_count();
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const auto & e = h.edges()[i];
    if (e.size() < 2)
      report.issues.push_back({IssueKind::EdgeTooSmall, "edge " + std::to_string(i) + ": edge size < 2"});
    for (auto v : e)
      if (v >= n) {
        report.issues.push_back({IssueKind::IndexOutOfRange,
            "edge " + std::to_string(i) + ": index out of range (" + std::to_string(v) + " >= " + std::to_string(n) + ")"});
        break;
      }
  }
  if (h.merged_duplicates() > 0)
    report.issues.push_back({IssueKind::DuplicateEdge,
        std::to_string(h.merged_duplicates()) + " duplicate edge(s) merged"});
  if (const auto & emb = h.embedding()) {
    if (emb->size() != n)
      report.issues.push_back({IssueKind::EmbeddingLength,
          "embedding has " + std::to_string(emb->size()) + " points for " + std::to_string(n) + " vertices"});
    if (! emb->empty()) {
      auto d = emb->front().dim();
      bool uniform = d > 0 && std::all_of(emb->begin(), emb->end(), [&](const Point & p) { return p.dim() == d; });
      if (! uniform)
        report.issues.push_back({IssueKind::EmbeddingDimension, "embedding dimension is not uniform"});
    }
  }
  return report;
}

auto require_well_formed(const Hypergraph & h) -> void
{
  for (const auto & issue : validate(h).issues)
    if (issue.kind != IssueKind::DuplicateEdge)
      throw InputError("malformed hypergraph: " + issue.message);
}

auto is_uniform(const Hypergraph & h, std::size_t m) -> bool
{
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge & e) { return e.size() == m; });
}

auto uniformity(const Hypergraph & h) -> std::optional<std::size_t>
{
  if (h.edges().empty())
    return std::nullopt;
  auto m = h.edges().front().size();
  if (! is_uniform(h, m))
    return std::nullopt;
  return m;
}

auto induced(const Hypergraph & h, std::span<const Vertex> subset) -> InducedSubhypergraph
{
  std::vector<Vertex> original(subset.begin(), subset.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  if (original.size() < 2)
    throw InputError("induced subhypergraph needs at least 2 vertices");
  if (original.back() >= h.vertex_count())
    throw InputError("vertex " + std::to_string(original.back()) + " out of range");

  constexpr auto absent = static_cast<Vertex>(-1);
  std::vector<Vertex> renumber(h.vertex_count(), absent);
  for (std::size_t i = 0; i < original.size(); ++i)
    renumber[original[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const auto & e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    bool inside = true;
    for (auto v : e) {
      if (v >= h.vertex_count() || renumber[v] == absent) {
        inside = false;
        break;
      }
      mapped.push_back(renumber[v]);
    }
    if (inside)
      edges.push_back(std::move(mapped));
  }

  std::optional<PointSet> embedding;
  if (h.embedding()) {
    embedding.emplace();
    for (auto v : original)
      embedding->push_back((*h.embedding())[v]);
  }
  return {Hypergraph(original.size(), std::move(edges), std::move(embedding)), std::move(original)};
}

auto TranslatedCopies::global_edges(std::size_t copy) const -> std::vector<Edge>
{
  auto base = first_vertex(copy);
  auto edges = copies.at(copy).edges();
  for (auto & e : edges)
    for (auto & v : e)
      v += base;
  return edges;
}

auto TranslatedCopies::combined() const -> Hypergraph
{
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    auto part = global_edges(i);
    edges.insert(edges.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return Hypergraph(copy_size * copies.size(), std::move(edges), vertex_table);
}

auto disjoint_translates(const Hypergraph & h, std::size_t k, const OffsetRule & rule) -> TranslatedCopies
{
  if (k < 1)
    throw InputError("need at least one translate");
  require_well_formed(h);

  TranslatedCopies result;
  result.copy_size = h.vertex_count();

  if (! h.embedding()) {
    result.copies.assign(k, h);
    return result;
  }

  const auto & points = *h.embedding();
  auto d = require_uniform_dimension(points);
  if (d == 0)
    d = 1;

  if (rule.offsets.empty()) {
    auto step = diameter(points, rule.norm) + 1.0;
    for (std::size_t i = 0; i < k; ++i)
      result.shifts.push_back(Point::unit(d, 0) * (step * static_cast<double>(i)));
  }
  else {
    if (rule.offsets.size() < k)
      throw InputError("offset rule supplies " + std::to_string(rule.offsets.size()) + " shifts for " +
          std::to_string(k) + " copies");
    result.shifts.assign(rule.offsets.begin(), rule.offsets.begin() + static_cast<std::ptrdiff_t>(k));
  }

  result.vertex_table.emplace();
  for (std::size_t i = 0; i < k; ++i) {
    auto moved = translate(points, result.shifts[i]);
    result.vertex_table->insert(result.vertex_table->end(), moved.begin(), moved.end());
    result.copies.emplace_back(h.vertex_count(), h.edges(), std::move(moved));
  }

  if (! rule.offsets.empty()) {
    auto linf = Norm::linf();
    const auto & table = *result.vertex_table;
    auto n = h.vertex_count();
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = a + 1; b < table.size(); ++b)
        if (a / n != b / n && distance(table[a], table[b], linf) <= rule.tol)
          throw ConstructionError("translates " + std::to_string(a / n) + " and " + std::to_string(b / n) +
              " overlap under the given offsets");
  }
  return result;
}

} // namespace hypercol
