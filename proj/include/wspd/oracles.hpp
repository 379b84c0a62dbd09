#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wspd/curve.hpp"
#include "wspd/metric.hpp"
#include "wspd/pair_decomposition.hpp"

// Exact brute-force references. They share no code with the constructions
// they check beyond the metric evaluators and plain containers.
namespace wspd::oracle {

struct ValidationReport {
  bool coverage_ok = true;
  std::vector<std::pair<std::size_t, std::size_t>> uncovered_pairs;
  bool separation_ok = true;
  bool disjoint_ok = true;
  std::vector<std::size_t> overlapping_pairs;  // pair ids whose sides intersect
  std::size_t worst_pair = 0;
  double worst_ratio = 0.0;  // max over pairs of max(diam A, diam B) / d(A, B)
  std::size_t pair_count = 0;
  double max_pair_diameter = 0.0;  // over sides
  double min_pair_diameter = 0.0;
  std::size_t duplicate_point_pairs = 0;  // zero-distance pairs, exempt from coverage
  std::size_t cover_multiplicity_max = 0;

  bool ok() const noexcept { return coverage_ok && separation_ok && disjoint_ok; }
  std::string to_text() const;
  std::string to_key_values() const;
};

inline constexpr std::size_t kDefaultValidationCap = 500;

/// Exhaustive check of coverage over all unordered pairs and of
/// max(diam A, diam B) <= eps d(A, B) (with 1e-9 relative slack) for every
/// pair, using exact set diameters and set distances. Throws InputError when
/// n exceeds `cap`.
ValidationReport validate_wspd(const FiniteMetric& m, const PairDecomposition& w, double eps,
                               std::size_t cap = kDefaultValidationCap);

struct Extremum {
  double value = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// Maximum over i < j of image(i, j) / domain(i, j). +inf when two domain
/// points coincide.
Extremum exact_dilation(const FiniteMetric& domain, const FiniteMetric& image);

/// Lip(f) * Lip(f^-1) by two exact dilation scans.
double exact_distortion(const FiniteMetric& domain, const FiniteMetric& image);

/// Maximum over vertex pairs of arc length / Euclidean distance. +inf when two
/// vertices coincide.
Extremum exact_max_detour(const PolyCurve& curve);

struct SimplicityReport {
  bool simple = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // offending edges
};

/// O(m^2) segment-pair test on a planar curve: adjacent edges may only share
/// their common vertex, non-adjacent edges may not meet at all.
SimplicityReport is_simple(const PolyCurve& curve);

/// Floyd-Warshall all-pairs shortest paths, row-major. Throws
/// DisconnectedGraphError for disconnected graphs, InputError above `cap`.
std::vector<double> all_pairs_graph_distance(const UnitDistanceGraph& g, std::size_t cap = 400);

/// Smallest (edge of A, parameter) at which A meets B, by checking every
/// segment pair. Independent of the oracle classes used by distill.
std::optional<std::pair<CurvePoint, CurvePoint>> naive_first_intersection(const PolyCurve& a, const PolyCurve& b);

/// Distance from p to the nearest edge of `curve` (planar).
double distance_to_curve(Point2 p, const PolyCurve& curve);

}  // namespace wspd::oracle
