#pragma once

#include <cstddef>
#include <vector>

#include "wspd/metric.hpp"
#include "wspd/pair_decomposition.hpp"

namespace wspd {

/// Radius of packing level i: 2^i.
double level_radius(int level);

/// Levels i for which some point pair has distance in the closed band
/// [4 r_i / eps, 8 r_i / eps], ascending. Exact O(n^2) scan. A distance on
/// the shared boundary of two levels activates both. Throws ParameterError
/// unless 0 < eps < 1.
std::vector<int> active_levels(const FiniteMetric& m, double eps);

/// Same test for a single distance.
std::vector<int> levels_for_distance(double d, double eps);

/// Per-level artifacts of the packing construction.
struct Level {
  int index = 0;
  double radius = 0.0;  // r_i; the packing radius is r_i / 2
  Packing packing;
  std::vector<WspdPair> pairs;
};

struct LevelSet {
  double eps = 0.0;
  std::vector<Level> levels;  // ascending by index
};

/// For every active level i: an (r_i/2)-packing, its Voronoi cells, and one
/// pair {cell(x), cell(y)} per pick pair x < y with d(x, y) in the closed
/// band [2 r_i / eps, 16 r_i / eps]. Representatives are the picks.
LevelSet build_level_set(const FiniteMetric& m, double eps);

/// Union of the level pairs in ascending level order: a 1/eps-WSPD of any
/// finite metric whose size is within a constant factor of the smallest
/// possible at a constant-factor stronger separation. It is a cover: one
/// point pair may be covered by pairs from several levels.
PairDecomposition instance_optimal_wspd(const FiniteMetric& m, double eps);

PairDecomposition flatten(const LevelSet& levels);

}  // namespace wspd
