#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "wspd/point_set.hpp"

namespace wspd {

/// Distance evaluator over points indexed 0..size()-1.
class FiniteMetric {
 public:
  virtual ~FiniteMetric() = default;
  virtual std::size_t size() const = 0;
  virtual double operator()(std::size_t i, std::size_t j) const = 0;
};

class EuclideanMetric final : public FiniteMetric {
 public:
  explicit EuclideanMetric(PointSet points);

  std::size_t size() const override { return points_.size(); }
  double operator()(std::size_t i, std::size_t j) const override {
    return distance(points_[i], points_[j]);
  }
  const PointSet& points() const noexcept { return points_; }

 private:
  PointSet points_;
};

// Throws InputError on an empty point set.
EuclideanMetric euclidean_metric(const PointSet& ps);

/// Dense symmetric distance matrix. Used for hand-built metrics in tests and
/// as the output format of the all-pairs oracle.
class MatrixMetric final : public FiniteMetric {
 public:
  MatrixMetric(std::size_t n, std::vector<double> entries);

  std::size_t size() const override { return n_; }
  double operator()(std::size_t i, std::size_t j) const override { return d_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

struct Edge {
  std::size_t to;
  double weight;
};

/// Weighted unit-distance graph: x ~ y iff |x - y| <= 1, weight |x - y|.
class UnitDistanceGraph {
 public:
  explicit UnitDistanceGraph(PointSet points);

  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::span<const Edge> neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool connected() const noexcept { return connected_; }

 private:
  PointSet points_;
  std::vector<std::vector<Edge>> adjacency_;
  std::size_t edge_count_ = 0;
  bool connected_ = false;
};

UnitDistanceGraph build_unit_distance_graph(const PointSet& ps);

/// Single-source shortest paths from `source`; unreachable vertices get +inf.
std::vector<double> dijkstra(const UnitDistanceGraph& g, std::size_t source);

/// Shortest-path metric of a connected unit-distance graph. Rows are computed
/// on first use (Dijkstra from the smaller index, so d(i, j) == d(j, i)
/// bit for bit) and cached; safe to query
/// from several threads.
class GraphMetric final : public FiniteMetric {
 public:
  explicit GraphMetric(std::shared_ptr<const UnitDistanceGraph> graph);

  std::size_t size() const override { return graph_->size(); }
  double operator()(std::size_t i, std::size_t j) const override;

  /// Full distance row of `source`.
  std::span<const double> row(std::size_t source) const;

  /// Cheap upper bound on the graph diameter: twice the eccentricity of
  /// vertex 0.
  double diameter_upper_bound() const;

  const UnitDistanceGraph& graph() const noexcept { return *graph_; }
  std::size_t cached_rows() const;

 private:
  bool has_row(std::size_t source) const;

  std::shared_ptr<const UnitDistanceGraph> graph_;
  std::unique_ptr<std::once_flag[]> once_;
  std::unique_ptr<std::vector<double>[]> rows_;
  std::unique_ptr<std::atomic<bool>[]> ready_;
};

// Throws DisconnectedGraphError when `g` is not connected.
GraphMetric graph_metric(std::shared_ptr<const UnitDistanceGraph> g);
GraphMetric graph_metric(const UnitDistanceGraph& g);

/// An r-packing: picks pairwise >= r apart, every point < r from its owner.
struct Packing {
  double radius = 0.0;
  std::vector<std::size_t> picks;
  /// owner[p] is the position in `picks` of the pick nearest to point p.
  std::vector<std::size_t> owner;

  std::size_t owner_point(std::size_t p) const { return picks[owner[p]]; }
  /// Voronoi cells, one per pick, each sorted ascending.
  std::vector<std::vector<std::size_t>> cells() const;
};

/// Greedy packing scanning points in index order; a point is picked iff its
/// distance to every current pick is >= r.
Packing greedy_packing(const FiniteMetric& m, double r);

/// Nearest pick for every point; ties go to the lowest position in `picks`.
std::vector<std::size_t> voronoi_assign(const FiniteMetric& m, std::span<const std::size_t> picks);

}  // namespace wspd
