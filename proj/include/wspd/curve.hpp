#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wspd/point_set.hpp"

namespace wspd {

/// Polygonal curve with a prefix arc-length table. Consecutive duplicate
/// vertices are rejected, so every edge has positive length.
class PolyCurve {
 public:
  explicit PolyCurve(PointSet vertices);

  const PointSet& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return size() - 1; }
  std::size_t dim() const noexcept { return vertices_.dim(); }
  std::span<const double> vertex(std::size_t i) const { return vertices_[i]; }

  /// Arc length from vertex 0 to vertex i.
  double prefix(std::size_t i) const { return prefix_[i]; }
  const std::vector<double>& prefix_lengths() const noexcept { return prefix_; }
  /// Arc length of the subcurve between vertices i and j.
  double length_between(std::size_t i, std::size_t j) const {
    return i <= j ? prefix_[j] - prefix_[i] : prefix_[i] - prefix_[j];
  }
  double length() const { return prefix_.back(); }

 private:
  PointSet vertices_;
  std::vector<double> prefix_;
};

PolyCurve load_curve(const std::string& path);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// A point on a curve: edge index e and parameter t along it.
struct CurvePoint {
  std::size_t edge = 0;
  double t = 0.0;
  Point2 coords;
};

/// Parameters (along a, along b) of the intersection of segments a0a1 and
/// b0b1 closest to a0, or nothing. Touching counts; for collinear overlaps the
/// overlap point nearest a0 is reported. Parameters are clamped to [0, 1].
struct SegmentHit {
  double t_a = 0.0;
  double t_b = 0.0;
};
std::optional<SegmentHit> first_segment_hit(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// Answers "where does segment a0a1 first meet curve B" for a fixed B.
class FirstIntersectionOracle {
 public:
  virtual ~FirstIntersectionOracle() = default;
  virtual void build(std::span<const Point2> curve) = 0;
  /// Smallest t along a0a1 at which it meets B; ties go to the lowest B
  /// position.
  virtual std::optional<std::pair<double, CurvePoint>> query(Point2 a0, Point2 a1) const = 0;
};

/// Scans every edge of B.
class NaiveIntersectionOracle final : public FirstIntersectionOracle {
 public:
  void build(std::span<const Point2> curve) override;
  std::optional<std::pair<double, CurvePoint>> query(Point2 a0, Point2 a1) const override;

 private:
  std::vector<Point2> curve_;
};

/// Buckets B's edges into a uniform grid and tests only edges sharing a cell
/// with the query's bounding box.
class GridIntersectionOracle final : public FirstIntersectionOracle {
 public:
  void build(std::span<const Point2> curve) override;
  std::optional<std::pair<double, CurvePoint>> query(Point2 a0, Point2 a1) const override;

 private:
  std::vector<Point2> curve_;
  double x0_ = 0.0, y0_ = 0.0, cell_ = 1.0;
  std::size_t nx_ = 1, ny_ = 1;
  std::vector<std::vector<std::size_t>> cells_;
  mutable std::vector<std::size_t> stamp_;
  mutable std::size_t epoch_ = 0;
};

enum class IntersectionOracleKind { kNaive, kGrid };
std::unique_ptr<FirstIntersectionOracle> make_intersection_oracle(IntersectionOracleKind kind);

struct CurveIntersection {
  CurvePoint on_a;
  CurvePoint on_b;
};

/// First point along A (by edge, then parameter) that lies on B. Requires
/// planar curves with A's last vertex equal to B's first vertex, so a hit
/// always exists; throws InputError otherwise.
CurveIntersection first_intersection(const PolyCurve& a, const PolyCurve& b,
                                     IntersectionOracleKind kind = IntersectionOracleKind::kNaive);

/// Simple subcurve of a planar curve with the same endpoints, by
/// divide-and-conquer: untangle both halves, then stitch A up to its first
/// meeting point p with B onto B from p on. Throws ParameterError for
/// non-planar input and DegenerateInputError for configurations the
/// tolerance rules cannot resolve.
PolyCurve distill(const PolyCurve& curve, IntersectionOracleKind kind = IntersectionOracleKind::kNaive);

std::vector<Point2> to_points2(const PolyCurve& curve);
PolyCurve from_points2(std::span<const Point2> pts);

}  // namespace wspd
