#pragma once

#include <span>
#include <string>
#include <vector>

#include "wspd/pair_decomposition.hpp"
#include "wspd/point_set.hpp"

namespace wspd {

/// Minimal SVG canvas in data coordinates (first two coordinates of each
/// point). The view box is fitted to everything drawn when the file is written.
class SvgCanvas {
 public:
  explicit SvgCanvas(double width_px = 800.0) : width_px_(width_px) {}

  void points(const PointSet& ps, const std::string& color, double radius_px = 2.0);
  void polyline(const PointSet& ps, const std::string& color, double stroke_px = 1.0);
  void segment(std::span<const double> a, std::span<const double> b, const std::string& color,
               double stroke_px = 0.5);
  /// One chord per pair between its representatives.
  void pair_chords(const PointSet& ps, const PairDecomposition& w, const std::string& color);

  std::string str() const;
  void save(const std::string& path) const;

 private:
  struct Item {
    enum Kind { kCircle, kPath } kind;
    std::vector<double> xy;
    std::string color;
    double size;
  };
  void grow(double x, double y);

  double width_px_;
  double lo_x_ = 0, lo_y_ = 0, hi_x_ = 0, hi_y_ = 0;
  bool any_ = false;
  std::vector<Item> items_;
};

}  // namespace wspd
