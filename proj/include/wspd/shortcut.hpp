#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wspd/curve.hpp"

namespace wspd {

// Dilation (detour ratio) of vertices i < j: arc length between them over
// their Euclidean distance. An alpha-detour has dilation > alpha.

struct DetourEstimate {
  double value = 0.0;  // (1 - eps) D <= value <= D
  bool infinite = false;
  std::size_t witness_i = 0;
  std::size_t witness_j = 0;
};

/// Approximate maximum detour of a curve, as the dilation of the map from
/// vertices to their arc-length coordinates. Repeated vertex positions give
/// an infinite detour, reported with the colliding indices.
DetourEstimate max_detour_estimate(const PolyCurve& curve, double eps);

struct Shortcut {
  std::size_t j = 0;  // last index of the left half supporting a shortcut
  std::size_t k = 0;  // partner in the right half
  double dilation = 0.0;
};

/// Split after vertex floor(n/2) - 1: L = [0, n/2), R = [n/2, n). Returns the
/// largest j in L with some k in R whose dilation is >= (1 - eps) alpha, and
/// the largest such k. Nothing is returned only when no pair (s, t) in
/// L x R is an alpha-detour.
std::optional<Shortcut> bi_shortcut(const PolyCurve& curve, double alpha, double eps);

/// Same, with an explicit split: L = [0, split), R = [split, n).
std::optional<Shortcut> bi_shortcut(const PolyCurve& curve, std::size_t split, double alpha, double eps);

struct ShortcutRecord {
  std::size_t j = 0;  // original vertex indices
  std::size_t k = 0;
  double dilation = 0.0;  // measured on the curve as it was when applied
  bool from_sweep = false;
};

struct ShortcutResult {
  PolyCurve curve;
  std::vector<std::size_t> kept;  // original indices of the output vertices
  std::vector<ShortcutRecord> log;
  std::size_t sweep_shortcuts = 0;
};

/// Repeated approximate alpha-shortcutting by divide-and-conquer. Each half is
/// processed recursively, then one crossing shortcut from bi_shortcut is
/// applied. A final exact sweep shortcuts any remaining alpha-detour (largest
/// dilation first), so the output has none. Throws InputError on repeated
/// vertex positions and ParameterError unless alpha > 1 and 0 < eps < 1.
ShortcutResult shortcut_detours(const PolyCurve& curve, double alpha, double eps);

}  // namespace wspd
