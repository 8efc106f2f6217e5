#pragma once

#include <hypercol/errors.hpp>
#include <hypercol/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hypercol {

struct ProperCheck {
  bool proper = true;
  /// A monochromatic edge when the coloring is improper.
  std::optional<Edge> witness;

  explicit operator bool() const { return proper; }
};

/// Throws InputError when phi does not color every vertex of h.
auto is_proper(const Hypergraph & h, const Coloring & phi) -> ProperCheck;

inline constexpr std::uint64_t default_node_budget = 1'000'000'000;
/// The solver handles at most this many colors.
inline constexpr int max_colors = 64;

struct SolverOptions {
  std::uint64_t node_budget = default_node_budget;
  unsigned threads = 1;
  /// Restrict each vertex to colors 1 .. (1 + highest color used so far).
  bool symmetry_breaking = true;
  /// Memory for remembering residual subproblems already proven infeasible;
  /// 0 disables the cache.
  std::size_t failure_cache_bytes = std::size_t{256} << 20;
};

struct SolverStats {
  std::uint64_t nodes = 0;
  double wall_seconds = 0.0;
};

class BudgetExhausted : public ResourceError {
public:
  explicit BudgetExhausted(std::uint64_t budget);
};

/// Exact decision: a proper coloring using colors from 1..k, or nullopt when
/// none exists. With one thread the witness is deterministic.
/// Throws BudgetExhausted when the node budget runs out.
auto is_k_colorable(const Hypergraph & h, int k, const SolverOptions & options = {}, SolverStats * stats = nullptr)
    -> std::optional<Coloring>;

struct ChromaticResult {
  int chi = 0;
  /// Proper, palette chi.
  Coloring witness;
  SolverStats stats;
};

/// Iterative deepening downwards from a greedy upper bound.
auto chromatic_number(const Hypergraph & h, const SolverOptions & options = {}) -> ChromaticResult;

/// Vertices by decreasing number of incident edges, ties by index.
auto degree_order(const Hypergraph & h) -> std::vector<Vertex>;

/// Each vertex in turn gets the least color that leaves no fully colored
/// edge monochromatic. `order` must be a permutation of the vertices.
auto greedy_coloring(const Hypergraph & h, std::span<const Vertex> order) -> Coloring;

auto greedy_upper_bound(const Hypergraph & h, std::span<const Vertex> order) -> int;

} // namespace hypercol
