#include <hypercol/lift.hpp>

#include <algorithm>

namespace hypercol {

auto lifted_edge_count(std::size_t edges, std::size_t n, int k) -> std::size_t
{
  auto kk = static_cast<std::size_t>(k);
  return edges * n * (kk * (kk - 1) / 2);
}

auto lift(const Hypergraph & h, std::optional<int> k, const LiftOptions & options) -> LiftResult
{
  require_well_formed(h);
  if (h.edges().empty())
    throw InputError("cannot lift a hypergraph without edges");
  if (! uniformity(h))
    throw InputError("lift needs a uniform hypergraph");

  int copies = 0;
  if (! k) {
    copies = chromatic_number(h, options.solver).chi;
  }
  else {
    if (*k < 1)
      throw InputError("number of copies must be positive");
    copies = *k;
    if (options.verify) {
      auto chi = chromatic_number(h, options.solver).chi;
      if (chi != copies)
        throw ConsistencyError("supplied k = " + std::to_string(copies) + " but chi(H) = " + std::to_string(chi));
    }
  }

  auto n = h.vertex_count();
  auto expected = lifted_edge_count(h.edge_count(), n, copies);
  if (expected > options.edge_cap)
    throw ResourceError("lift would create " + std::to_string(expected) + " edges, above the cap of " +
        std::to_string(options.edge_cap));

  auto translates = disjoint_translates(h, static_cast<std::size_t>(copies));
  auto total = n * static_cast<std::size_t>(copies);

  std::vector<Edge> edges;
  edges.reserve(expected);
  for (std::size_t i = 0; i < static_cast<std::size_t>(copies); ++i) {
    auto base_edges = translates.global_edges(i);
    for (const auto & e : base_edges) {
      for (auto v = static_cast<Vertex>((i + 1) * n); v < total; ++v) {
        Edge lifted = e;
        lifted.push_back(v);
        edges.push_back(std::move(lifted));
      }
    }
  }

  LiftResult result;
  result.source = h;
  result.k = copies;
  result.lifted = Hypergraph(total, std::move(edges), translates.vertex_table);
  result.copy_map.reserve(total);
  for (std::size_t i = 0; i < static_cast<std::size_t>(copies); ++i)
    for (std::size_t v = 0; v < n; ++v)
      result.copy_map.push_back({i + 1, static_cast<Vertex>(v)});
  return result;
}

ChainBudgetExceeded::ChainBudgetExceeded(const std::string & what, LiftChain partial) :
    ResourceError(what),
    _partial(std::move(partial))
{
}

auto iterated_lift(const Hypergraph & h, std::size_t target_m, const ChainOptions & options) -> LiftChain
{
  require_well_formed(h);
  auto m0 = uniformity(h);
  if (! m0)
    throw InputError("iterated lift needs a nonempty uniform hypergraph");
  if (target_m < *m0)
    throw InputError("target uniformity " + std::to_string(target_m) + " is below the input's " + std::to_string(*m0));

  auto chi = chromatic_number(h, options.lift.solver).chi;
  LiftChain chain;
  chain.stages.push_back({*m0, h.vertex_count(), h.edge_count(), chi, chi, h});

  for (auto m = *m0; m < target_m; ++m) {
    const auto & last = chain.stages.back();
    auto expected = lifted_edge_count(last.edges, last.vertices, chi);
    if (expected > options.lift.edge_cap)
      throw ChainBudgetExceeded("stage " + std::to_string(chain.stages.size()) + " would create " +
              std::to_string(expected) + " edges, above the cap of " + std::to_string(options.lift.edge_cap),
          std::move(chain));

    auto next = lift(last.graph, chi, options.lift);
    LiftStage stage{m + 1, next.lifted.vertex_count(), next.lifted.edge_count(), chi, std::nullopt,
        std::move(next.lifted)};
    if (options.verify_each)
      stage.chi = chromatic_number(stage.graph, options.lift.solver).chi;
    chain.stages.push_back(std::move(stage));
  }
  return chain;
}

auto extend_coloring(const Coloring & phi, const LiftResult & result) -> Coloring
{
  auto check = is_proper(result.source, phi);
  if (! check)
    throw InputError("coloring is not proper for the source hypergraph");
  std::vector<int> colors;
  colors.reserve(result.copy_map.size());
  for (const auto & cv : result.copy_map)
    colors.push_back(phi[cv.vertex]);
  return Coloring(std::move(colors), phi.palette());
}

} // namespace hypercol
