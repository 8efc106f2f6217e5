#pragma once

#include <hypercol/geomfam.hpp>
#include <hypercol/geometry.hpp>
#include <hypercol/hypergraph.hpp>

#include <filesystem>
#include <ostream>
#include <string>

namespace hypercol::io {

// JSON file formats. All readers throw InputError on malformed documents.
//
//   point set   {"d": int, "points": [[real, ...], ...]}
//   hypergraph  {"n": int, "d": int|null, "vertices": [[real, ...], ...]|null, "edges": [[int, ...], ...]}
//               ("n" may be omitted; it then defaults to the number of
//               vertices, or to 1 + the largest index used by an edge)
//   coloring    {"m": int, "colors": [int, ...]}        colors are 1-based
//   gon set     {"d": int, "m": int, "gons": [[[real, ...], ...], ...]}

auto pointset_to_json(const PointSet & points) -> std::string;
auto pointset_from_json(const std::string & text) -> PointSet;

auto hypergraph_to_json(const Hypergraph & h) -> std::string;
auto hypergraph_from_json(const std::string & text) -> Hypergraph;

auto coloring_to_json(const Coloring & phi) -> std::string;
auto coloring_from_json(const std::string & text) -> Coloring;

auto gonset_to_json(const GonSet & gons) -> std::string;
auto gonset_from_json(const std::string & text) -> GonSet;

/// Plain-text hypergraph export for external solvers; drops coordinates.
///   c <comment>
///   p hypergraph <vertices> <edges>
///   e <v1> <v2> ...        (1-based)
auto write_dimacs(std::ostream & out, const Hypergraph & h) -> void;

auto read_text(const std::filesystem::path & path) -> std::string;
/// Writes atomically enough for our purposes: truncate and write.
auto write_text(const std::filesystem::path & path, const std::string & text) -> void;

auto read_hypergraph(const std::filesystem::path & path) -> Hypergraph;
auto read_pointset(const std::filesystem::path & path) -> PointSet;
auto read_coloring(const std::filesystem::path & path) -> Coloring;
auto read_gonset(const std::filesystem::path & path) -> GonSet;

} // namespace hypercol::io
