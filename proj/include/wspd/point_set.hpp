#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace wspd {

/// A finite set of points in R^d, stored row-major. Point indices 0..n-1
/// are the identity of a point everywhere downstream.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim);
  PointSet(std::size_t dim, std::vector<double> coords);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return size() == 0; }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

  void push_back(std::span<const double> p);

  const std::vector<double>& coords() const noexcept { return coords_; }

  /// Subset in the given index order.
  PointSet select(std::span<const std::size_t> indices) const;

  /// Every coordinate multiplied by `factor`.
  PointSet scaled(double factor) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

// Point files: one point per line, whitespace-separated decimals. An optional
// first line `# dim=<d>` fixes the dimension; otherwise the first data line
// decides it. Blank lines and other `#` lines are ignored.
PointSet read_points(std::istream& in);
PointSet load_points(const std::string& path);
void write_points(std::ostream& out, const PointSet& ps);
void save_points(const std::string& path, const PointSet& ps);

}  // namespace wspd
