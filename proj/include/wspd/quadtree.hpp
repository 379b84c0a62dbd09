#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wspd/point_set.hpp"

namespace wspd {

/// Compressed quadtree (2^d-ary) over a subset of a PointSet.
///
/// Every node owns a contiguous range of `order()`, so a node's point set is
/// `points(node)`. Chains of single-child cells are contracted: each internal
/// node has at least two nonempty children. Exact duplicates end up together
/// in one leaf, which then carries more than one index.
class CompressedQuadtree {
 public:
  static constexpr std::size_t kMaxDim = 8;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::vector<double> center;  // cell center; for leaves, the point itself
    double side = 0.0;           // cell side; 0 for leaves
    double diameter = 0.0;       // diameter of the cell's enclosing ball; 0 for leaves
    std::size_t rep = 0;         // smallest point index in the node
    std::vector<std::size_t> children;

    bool leaf() const noexcept { return children.empty(); }
    std::size_t count() const noexcept { return end - begin; }
  };

  /// Tree over every point of `ps`.
  explicit CompressedQuadtree(const PointSet& ps);
  /// Tree over `subset` (distinct indices into `ps`).
  CompressedQuadtree(const PointSet& ps, std::span<const std::size_t> subset);

  const PointSet& point_set() const noexcept { return *ps_; }
  std::size_t root() const noexcept { return 0; }
  const Node& node(std::size_t id) const { return nodes_[id]; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::span<const std::size_t> points(std::size_t id) const {
    return std::span<const std::size_t>(order_).subspan(nodes_[id].begin, nodes_[id].count());
  }
  std::span<const std::size_t> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::size_t depth() const;
  /// True when some leaf holds exact duplicates.
  bool has_duplicates() const noexcept { return has_duplicates_; }

 private:
  void build(std::span<const std::size_t> subset);
  std::size_t make_node(std::size_t begin, std::size_t end, std::vector<double> center, double side);

  const PointSet* ps_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> order_;
  bool has_duplicates_ = false;
};

// Throws ParameterError for dim outside 1..8 and InputError when the subset
// has fewer than two distinct points.
CompressedQuadtree build_compressed_quadtree(const PointSet& ps);

}  // namespace wspd
