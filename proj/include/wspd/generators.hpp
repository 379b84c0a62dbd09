#pragma once

#include <cstddef>
#include <cstdint>

#include "wspd/point_set.hpp"

// Seeded random instances. The same seed always gives the same output.
namespace wspd::gen {

/// n points uniform in [0, side]^2.
PointSet uniform_square(std::size_t n, double side, std::uint64_t seed);

/// n points uniform in [0, side]^dim.
PointSet uniform_cube(std::size_t n, std::size_t dim, double side, std::uint64_t seed);

/// Points at arc-length spacing `step` along a snake of horizontal rows of
/// width `row_width`, three units apart. For step <= 1 the unit-distance
/// graph is a path plus a few chords at the bends.
PointSet serpentine_chain(std::size_t n, double step, double row_width = 18.0);

/// Gaussian blobs around `clusters` centers uniform in [0, side]^2.
PointSet clustered(std::size_t n, std::size_t clusters, double side, double spread, std::uint64_t seed);

/// Each new point lands within distance `reach` (<= 1) of an earlier one, so
/// the unit-distance graph is connected.
PointSet connected_udg(std::size_t n, double reach, std::uint64_t seed);

/// Same in R^dim.
PointSet connected_udg_cube(std::size_t n, std::size_t dim, double reach, std::uint64_t seed);

/// Vertices uniform in the unit square; almost surely self-intersecting.
PointSet random_polygon_curve(std::size_t n, std::uint64_t seed);

/// Random walk with unit-ish steps and heading changes drawn from
/// N(0, turn_sigma). Large sigma gives many detours.
PointSet random_walk_curve(std::size_t n, double turn_sigma, std::uint64_t seed);

}  // namespace wspd::gen
