#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "wspd/metric.hpp"
#include "wspd/point_set.hpp"

namespace wspd {

/// A map between two finite point sets given by index: f(domain[i]) = image[i].
class FiniteMap {
 public:
  // Throws InputError when the sizes differ or the sets are empty.
  FiniteMap(PointSet domain, PointSet image);

  const PointSet& domain() const noexcept { return domain_; }
  const PointSet& image() const noexcept { return image_; }
  std::size_t size() const noexcept { return domain_.size(); }
  bool injective() const noexcept { return injective_; }

  FiniteMap inverse() const { return FiniteMap(image_, domain_); }

 private:
  PointSet domain_;
  PointSet image_;
  bool injective_ = true;
};

struct InjectivityCheck {
  bool injective = true;
  /// First colliding index pair (i < j) when not injective.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Exact coordinate collision test on the image, with -0 treated as +0.
InjectivityCheck check_injective(const FiniteMap& map);
/// Same test on a bare point set.
InjectivityCheck find_duplicate(const PointSet& ps);

struct LipschitzEstimate {
  double lower = 0.0;  // (1 - eps) Lip(f) <= lower <= Lip(f)
  double upper = 0.0;  // Lip(f) <= upper <= (1 + eps) Lip(f)
  std::size_t witness_i = 0;  // pair achieving `lower`
  std::size_t witness_j = 0;
  std::size_t pairs_scanned = 0;
};

/// Dilation of the map i -> i from the Euclidean domain to an arbitrary image
/// metric, approximated through an (8/eps)-WSPD of the domain. Throws
/// InputError naming the indices when two domain points coincide, and
/// ParameterError unless 0 < eps < 1.
LipschitzEstimate approx_lipschitz(const PointSet& domain, const FiniteMetric& image, double eps);
LipschitzEstimate approx_lipschitz(const FiniteMap& map, double eps);

struct DistortionEstimate {
  /// distortion(f) <= value <= (1 + eps) distortion(f); +inf when f is not
  /// injective.
  double value = 0.0;
  bool infinite = false;
  std::optional<std::pair<std::size_t, std::size_t>> collision;
  LipschitzEstimate forward;
  LipschitzEstimate inverse;
};

/// Upper approximation of Lip(f) * Lip(f^-1); each factor gets eps/3.
DistortionEstimate approx_distortion(const FiniteMap& map, double eps);

}  // namespace wspd
