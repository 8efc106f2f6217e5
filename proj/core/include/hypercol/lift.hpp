#pragma once

#include <hypercol/chroma.hpp>
#include <hypercol/hypergraph.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace hypercol {

/// Raising the uniformity of a finite hypergraph by one without changing its
/// chromatic number.
///
/// With k = chi(H), the lifted hypergraph H' lives on k disjoint copies
/// F_1..F_k of V(H). Its edges are every set e + {v} where e is an edge of
/// copy i and v is any vertex of a later copy j > i. Coloring each copy like
/// H properly colors H'. Conversely, with k - 1 colors every copy has a
/// monochromatic edge, each one using a color that no later copy may use, so
/// the last copy runs out of colors.

struct CopyVertex {
  /// 1-based copy index.
  std::size_t copy;
  Vertex vertex;

  auto operator==(const CopyVertex &) const -> bool = default;
};

struct LiftOptions {
  /// Check a supplied k against the solver's chromatic number.
  bool verify = false;
  std::size_t edge_cap = 1'000'000;
  SolverOptions solver;
};

struct LiftResult {
  Hypergraph source;
  Hypergraph lifted;
  int k = 0;
  /// lifted vertex index -> (copy, original vertex)
  std::vector<CopyVertex> copy_map;
};

/// Edge count of the lift: |E| * n * k(k-1)/2.
auto lifted_edge_count(std::size_t edges, std::size_t n, int k) -> std::size_t;

/// Throws InputError unless h is nonempty and uniform, ConsistencyError when
/// options.verify is set and k != chi(h), ResourceError above the edge cap.
auto lift(const Hypergraph & h, std::optional<int> k = std::nullopt, const LiftOptions & options = {}) -> LiftResult;

struct LiftStage {
  std::size_t uniformity = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  int k = 0;
  /// Solver value for this stage, when computed.
  std::optional<int> chi;
  Hypergraph graph;
};

struct LiftChain {
  /// stages.front() is the input; each later stage lifts the previous one.
  std::vector<LiftStage> stages;
};

class ChainBudgetExceeded : public ResourceError {
public:
  ChainBudgetExceeded(const std::string & what, LiftChain partial);
  auto partial() const -> const LiftChain & { return _partial; }

private:
  LiftChain _partial;
};

struct ChainOptions {
  /// Recompute chi at every stage with the exact solver.
  bool verify_each = false;
  LiftOptions lift;
};

/// Lifts an m0-uniform h repeatedly until it is target_m-uniform. The number
/// of copies at every stage is chi(h), which each lift preserves.
/// Throws ChainBudgetExceeded (carrying the stages built so far) when a stage
/// would exceed the edge cap.
auto iterated_lift(const Hypergraph & h, std::size_t target_m, const ChainOptions & options = {}) -> LiftChain;

/// Colors copy i of every lifted vertex like the original vertex.
/// Throws InputError when phi is not proper for the source hypergraph.
auto extend_coloring(const Coloring & phi, const LiftResult & result) -> Coloring;

} // namespace hypercol
