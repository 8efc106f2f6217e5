#pragma once

#include <hypercol/geometry.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypercol {

using Vertex = std::uint32_t;

/// A sorted sequence of distinct vertex indices.
using Edge = std::vector<Vertex>;

/// A finite hypergraph on vertices 0..n-1 with an optional embedding in R^d.
///
/// Edges are normalised on construction: each edge is sorted, repeated
/// indices inside an edge collapse, and repeated edges are merged (their
/// number is kept and reported by validate()). Construction never throws on
/// malformed edges so that validate() can report them; algorithms that need a
/// well-formed input call require_well_formed().
class Hypergraph {
public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::vector<Edge> edges, std::optional<PointSet> embedding = std::nullopt);

  static auto from_pairs(std::size_t n, std::span<const IndexPair> pairs,
      std::optional<PointSet> embedding = std::nullopt) -> Hypergraph;

  auto vertex_count() const -> std::size_t { return _n; }
  auto edge_count() const -> std::size_t { return _edges.size(); }
  auto edges() const -> const std::vector<Edge> & { return _edges; }
  auto embedding() const -> const std::optional<PointSet> & { return _embedding; }
  auto has_embedding() const -> bool { return _embedding.has_value(); }
  /// Dimension of the embedding, or 0 when there is none.
  auto dimension() const -> std::size_t;
  auto merged_duplicates() const -> std::size_t { return _merged_duplicates; }
  auto max_edge_size() const -> std::size_t;

  auto operator==(const Hypergraph & other) const -> bool;

private:
  std::size_t _n = 0;
  std::vector<Edge> _edges;
  std::optional<PointSet> _embedding;
  std::size_t _merged_duplicates = 0;
};

/// A total map from vertices to colors 1..m.
class Coloring {
public:
  Coloring() = default;
  /// Throws InputError when a color lies outside 1..m.
  Coloring(std::vector<int> colors, int m);

  auto size() const -> std::size_t { return _colors.size(); }
  auto palette() const -> int { return _m; }
  auto colors() const -> const std::vector<int> & { return _colors; }
  auto operator[](std::size_t v) const -> int { return _colors[v]; }
  /// Number of distinct colors actually used.
  auto used_colors() const -> int;

  auto operator==(const Coloring & other) const -> bool = default;

private:
  std::vector<int> _colors;
  int _m = 0;
};

enum class IssueKind { EdgeTooSmall, IndexOutOfRange, DuplicateEdge, EmbeddingLength, EmbeddingDimension };

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  auto ok() const -> bool { return issues.empty(); }
  auto has(IssueKind kind) const -> bool;
};

auto validate(const Hypergraph & h) -> ValidationReport;

/// Throws InputError on any issue except merged duplicates, which are harmless.
auto require_well_formed(const Hypergraph & h) -> void;

auto is_uniform(const Hypergraph & h, std::size_t m) -> bool;

/// The arity of a nonempty uniform hypergraph, or nullopt.
auto uniformity(const Hypergraph & h) -> std::optional<std::size_t>;

struct InducedSubhypergraph {
  Hypergraph graph;
  /// new index -> original index
  std::vector<Vertex> original;
};

/// H restricted to U: vertex i of the result is the i-th smallest element of U,
/// and the edges are exactly those edges of H lying inside U.
auto induced(const Hypergraph & h, std::span<const Vertex> subset) -> InducedSubhypergraph;

/// How the translates of an embedded hypergraph are placed.
struct OffsetRule {
  /// When empty, copy i is shifted by i * (D + 1) along the first axis, where
  /// D is the embedding's diameter under `norm`. Otherwise copy i is shifted
  /// by offsets[i].
  std::vector<Point> offsets;
  Norm norm = Norm::l2();
  double tol = default_tolerance;
};

struct TranslatedCopies {
  std::size_t copy_size = 0;
  /// Each copy in its own local indices, carrying its translated embedding.
  /// In the combined vertex table copy i occupies indices i*n .. (i+1)*n - 1.
  std::vector<Hypergraph> copies;
  std::vector<Point> shifts;
  /// Combined embedding of all copies in copy order, when H is embedded.
  std::optional<PointSet> vertex_table;

  auto first_vertex(std::size_t copy) const -> Vertex { return static_cast<Vertex>(copy * copy_size); }
  /// Edges of one copy expressed in combined indices.
  auto global_edges(std::size_t copy) const -> std::vector<Edge>;
  /// Vertex-disjoint union of all copies.
  auto combined() const -> Hypergraph;
};

/// k vertex-disjoint copies of H. Throws ConstructionError if the offset rule
/// makes two embedded copies share a point.
auto disjoint_translates(const Hypergraph & h, std::size_t k, const OffsetRule & rule = {}) -> TranslatedCopies;

} // namespace hypercol
