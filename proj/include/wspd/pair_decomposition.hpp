#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "wspd/metric.hpp"

namespace wspd {

enum class PairOrigin {
  kQuadtree,  // compressed-quadtree construction
  kLevel,     // packing level of the instance-optimal construction
  kUdgShort,  // short-distance regime of the unit-distance-graph construction
  kUdgLevel,  // resolution level of the unit-distance-graph construction
};

/// One pair {A, B} with sorted, disjoint index sets and a representative
/// from each side.
struct WspdPair {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  std::size_t rep_a = 0;
  std::size_t rep_b = 0;
  PairOrigin origin = PairOrigin::kQuadtree;
  int level = 0;  // meaningful for kLevel and kUdgLevel
};

/// A list of pairs claimed to be 1/eps-separated and to cover every point
/// pair. `eps` is the separation parameter the pairs were built for.
struct PairDecomposition {
  std::vector<WspdPair> pairs;
  double eps = 1.0;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }
};

// Pair dump: one pair per line,
//   A:<i,j,...> B:<k,...> repA:<i> repB:<k> dist:<d> [level:<l>] [regime:<short|level-l>]
// `dist` is the metric distance between the representatives.
void write_pairs(std::ostream& out, const PairDecomposition& w, const FiniteMetric& m);
void save_pairs(const std::string& path, const PairDecomposition& w, const FiniteMetric& m);
std::string format_pair(const WspdPair& p, const FiniteMetric& m);

/// Parses a pair dump. Throws ParseError with the line number on malformed
/// input; `eps` of the result is left at its default.
PairDecomposition read_pairs(std::istream& in);
PairDecomposition load_pairs(const std::string& path);

}  // namespace wspd
