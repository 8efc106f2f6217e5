#pragma once

#include <hypercol/chroma.hpp>
#include <hypercol/errors.hpp>
#include <hypercol/geomfam.hpp>
#include <hypercol/geometry.hpp>
#include <hypercol/hypergraph.hpp>
#include <hypercol/io.hpp>
#include <hypercol/lift.hpp>
#include <hypercol/manifest.hpp>
#include <hypercol/pointsets.hpp>
#include <hypercol/svg.hpp>
#include <hypercol/tiling.hpp>
