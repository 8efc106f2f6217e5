#pragma once

#include <hypercol/hypergraph.hpp>
#include <hypercol/tiling.hpp>

#include <string>

namespace hypercol::svg {

/// Planar drawing: one <circle class="vertex"> per vertex, one
/// <line class="edge"> per 2-edge and a translucent convex-hull
/// <polygon class="hyperedge"> per larger edge. Needs a 2-d embedding.
auto render_hypergraph(const Hypergraph & h) -> std::string;

/// One period of a planar tiling, one <rect class="cell"> per little cube,
/// with a scale bar of length 1.
auto render_tiling(const PeriodicColoring & pc) -> std::string;

/// Distinct fill for color index i out of count, as "#rrggbb".
auto palette_color(std::size_t i, std::size_t count) -> std::string;

} // namespace hypercol::svg
