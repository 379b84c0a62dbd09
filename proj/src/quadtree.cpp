#include "wspd/quadtree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "wspd/error.hpp"

namespace wspd {

namespace {

constexpr double kRootInflation = 1e-6;

std::size_t orthant(std::span<const double> p, const std::vector<double>& center) {
  std::size_t code = 0;
  for (std::size_t k = 0; k < center.size(); ++k) {
    if (p[k] >= center[k]) {
      code |= std::size_t{1} << k;
    }
  }
  return code;
}

}  // namespace

CompressedQuadtree::CompressedQuadtree(const PointSet& ps) : ps_(&ps) {
  std::vector<std::size_t> all(ps.size());
  std::iota(all.begin(), all.end(), 0);
  build(all);
}

CompressedQuadtree::CompressedQuadtree(const PointSet& ps, std::span<const std::size_t> subset) : ps_(&ps) {
  build(subset);
}

CompressedQuadtree build_compressed_quadtree(const PointSet& ps) { return CompressedQuadtree(ps); }

void CompressedQuadtree::build(std::span<const std::size_t> subset) {
  const std::size_t d = ps_->dim();
  if (d < 1 || d > kMaxDim) {
    throw ParameterError("quadtree dimension must be in 1..8, got " + std::to_string(d));
  }
  if (subset.empty()) {
    throw InputError("quadtree over an empty point set");
  }
  for (std::size_t i : subset) {
    if (i >= ps_->size()) {
      throw InputError("quadtree subset index out of range");
    }
  }
  order_.assign(subset.begin(), subset.end());

  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (std::size_t i : order_) {
    auto p = (*ps_)[i];
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  double extent = 0.0;
  std::vector<double> center(d);
  for (std::size_t k = 0; k < d; ++k) {
    extent = std::max(extent, hi[k] - lo[k]);
    center[k] = 0.5 * (lo[k] + hi[k]);
  }
  if (extent == 0.0) {
    throw InputError("all points are identical; no pair decomposition exists");
  }
  make_node(0, order_.size(), std::move(center), extent * (1.0 + kRootInflation));
}

std::size_t CompressedQuadtree::make_node(std::size_t begin, std::size_t end, std::vector<double> center,
                                          double side) {
  const std::size_t d = ps_->dim();
  const std::size_t id = nodes_.size();
  nodes_.emplace_back();
  nodes_[id].begin = begin;
  nodes_[id].end = end;
  nodes_[id].rep = *std::min_element(order_.begin() + begin, order_.begin() + end);

  const auto first = (*ps_)[order_[begin]];
  bool identical = true;
  for (std::size_t a = begin + 1; a < end && identical; ++a) {
    identical = squared_distance(first, (*ps_)[order_[a]]) == 0.0;
  }
  if (identical) {
    nodes_[id].center.assign(first.begin(), first.end());
    has_duplicates_ = has_duplicates_ || end - begin > 1;
    // Keep duplicate leaves in index order for deterministic output.
    std::sort(order_.begin() + begin, order_.begin() + end);
    return id;
  }

  // Compression: shrink the cell while every point falls in one orthant.
  std::vector<std::size_t> codes(end - begin);
  for (;;) {
    for (std::size_t a = begin; a < end; ++a) {
      codes[a - begin] = orthant((*ps_)[order_[a]], center);
    }
    if (std::adjacent_find(codes.begin(), codes.end(), std::not_equal_to<>()) != codes.end()) {
      break;
    }
    const std::size_t code = codes.front();
    bool moved = false;
    for (std::size_t k = 0; k < d; ++k) {
      const double next = center[k] + (((code >> k) & 1U) ? side / 4.0 : -side / 4.0);
      moved = moved || next != center[k];
      center[k] = next;
    }
    side /= 2.0;
    if (!moved) {
      throw DegenerateInputError("points closer than double precision can separate");
    }
  }

  // Stable partition of the range by orthant code.
  std::vector<std::size_t> perm(end - begin);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return codes[a] < codes[b]; });
  std::vector<std::size_t> sorted(end - begin);
  std::vector<std::size_t> sorted_codes(end - begin);
  for (std::size_t a = 0; a < perm.size(); ++a) {
    sorted[a] = order_[begin + perm[a]];
    sorted_codes[a] = codes[perm[a]];
  }
  std::copy(sorted.begin(), sorted.end(), order_.begin() + begin);

  nodes_[id].center = center;
  nodes_[id].side = side;
  nodes_[id].diameter = side * std::sqrt(static_cast<double>(d));

  std::vector<std::size_t> children;
  std::size_t a = 0;
  while (a < sorted_codes.size()) {
    std::size_t b = a;
    while (b < sorted_codes.size() && sorted_codes[b] == sorted_codes[a]) {
      ++b;
    }
    std::vector<double> child_center = center;
    for (std::size_t k = 0; k < d; ++k) {
      child_center[k] += ((sorted_codes[a] >> k) & 1U) ? side / 4.0 : -side / 4.0;
    }
    children.push_back(make_node(begin + a, begin + b, std::move(child_center), side / 2.0));
    a = b;
  }
  nodes_[id].children = std::move(children);
  return id;
}

std::size_t CompressedQuadtree::depth() const {
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root(), 0}};
  std::size_t best = 0;
  while (!stack.empty()) {
    auto [id, dep] = stack.back();
    stack.pop_back();
    best = std::max(best, dep);
    for (std::size_t c : nodes_[id].children) {
      stack.push_back({c, dep + 1});
    }
  }
  return best;
}

}  // namespace wspd
