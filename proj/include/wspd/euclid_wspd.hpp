#pragma once

#include <cstddef>
#include <span>

#include "wspd/pair_decomposition.hpp"
#include "wspd/point_set.hpp"
#include "wspd/quadtree.hpp"

namespace wspd {

/// Euclidean 1/eps-WSPD from a compressed quadtree.
///
/// Separation is certified with the nodes' enclosing-ball diameters, so the
/// true set diameters can only be smaller than what the test assumed. Every
/// unordered pair of distinct points is covered exactly once; exact
/// duplicates share a leaf and are never separated. Pair sides are sorted;
/// representatives are the smallest index on each side. Throws
/// ParameterError unless 0 < eps <= 1.
PairDecomposition ck_wspd(const CompressedQuadtree& tree, double eps);

/// Convenience: builds the tree over all of `ps` first. A point set with
/// fewer than two distinct points yields an empty decomposition.
PairDecomposition ck_wspd(const PointSet& ps, double eps);

/// Bichromatic WSPD between disjoint index sets L and R of one point set:
/// each pair has a ⊆ L and b ⊆ R, and every cross pair in L x R is covered.
/// Built by filtering a WSPD of L ∪ R. An empty side gives an empty result.
PairDecomposition bichromatic_wspd(const PointSet& ps, std::span<const std::size_t> left,
                                   std::span<const std::size_t> right, double eps);

}  // namespace wspd
