#pragma once

#include <cstddef>
#include <memory>

#include "wspd/metric.hpp"
#include "wspd/pair_decomposition.hpp"
#include "wspd/point_set.hpp"

namespace wspd {

/// Constants of the unit-distance-graph construction for a given eps and n.
struct UdgWspdConfig {
  double eps = 0.5;
  double short_separation = 0.0;  // 64 / eps
  int first_level = 2;
  int last_level = 2;  // 2 + ceil(log2 n)

  UdgWspdConfig(double eps, std::size_t n);

  /// r_i = 3 * 2^i.
  static double radius(int level);
  double band_lo(int level) const { return 2.0 * radius(level) / eps; }
  double band_hi(int level) const { return 16.0 * radius(level) / eps; }
};

struct UdgWspdStats {
  std::size_t short_pairs = 0;
  std::size_t short_discarded = 0;
  std::size_t level_pairs = 0;
  std::size_t levels_built = 0;
  std::size_t levels_skipped = 0;
};

/// Short-distance regime: the Euclidean (64/eps)-WSPD with every pair whose
/// side has Euclidean diameter > 1 thrown away. Each kept side is a clique of
/// the graph. Throws DisconnectedGraphError when the graph is disconnected.
PairDecomposition udg_wspd_short(const PointSet& ps, double eps, UdgWspdStats* stats = nullptr);

/// Full 1/eps-WSPD of the shortest-path metric of the weighted unit-distance
/// graph of planar points: short regime plus packing levels
/// i = 2..2+ceil(log2 n) with radii 3*2^i. Throws ParameterError unless
/// 0 < eps < 1 and dim == 2.
PairDecomposition udg_wspd(const PointSet& ps, double eps, UdgWspdStats* stats = nullptr);

/// The same construction for dim > 2.
PairDecomposition udg_wspd_highdim(const PointSet& ps, double eps, UdgWspdStats* stats = nullptr);

/// Dimension-agnostic core shared by the two entry points; reuses a prebuilt
/// graph metric (and its Dijkstra cache).
PairDecomposition udg_wspd_with_metric(const GraphMetric& metric, double eps, UdgWspdStats* stats = nullptr);

}  // namespace wspd
