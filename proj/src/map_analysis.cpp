#include "wspd/map_analysis.hpp"

#include <cstring>
#include <limits>
#include <string>
#include <unordered_map>

#include "wspd/error.hpp"
#include "wspd/euclid_wspd.hpp"

namespace wspd {

namespace {

std::string canonical_key(std::span<const double> p) {
  std::string key(p.size() * sizeof(double), '\0');
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double v = p[k] == 0.0 ? 0.0 : p[k];  // -0 -> +0
    std::memcpy(key.data() + k * sizeof(double), &v, sizeof(double));
  }
  return key;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("eps must lie in (0, 1), got " + std::to_string(eps));
  }
}

}  // namespace

FiniteMap::FiniteMap(PointSet domain, PointSet image) : domain_(std::move(domain)), image_(std::move(image)) {
  if (domain_.size() != image_.size()) {
    throw InputError("map domain has " + std::to_string(domain_.size()) + " points but image has " +
                     std::to_string(image_.size()));
  }
  if (domain_.empty()) {
    throw InputError("map over an empty point set");
  }
  injective_ = find_duplicate(image_).injective;
}

InjectivityCheck find_duplicate(const PointSet& ps) {
  InjectivityCheck out;
  std::unordered_map<std::string, std::size_t> seen;
  seen.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto [it, inserted] = seen.emplace(canonical_key(ps[i]), i);
    if (!inserted) {
      out.injective = false;
      out.witness = std::make_pair(it->second, i);
      return out;
    }
  }
  return out;
}

InjectivityCheck check_injective(const FiniteMap& map) { return find_duplicate(map.image()); }

LipschitzEstimate approx_lipschitz(const PointSet& domain, const FiniteMetric& image, double eps) {
  check_eps(eps);
  if (image.size() != domain.size()) {
    throw InputError("image metric size does not match the domain");
  }
  if (domain.size() < 2) {
    throw InputError("dilation needs at least two points");
  }
  if (const auto dup = find_duplicate(domain); !dup.injective) {
    throw InputError("domain points " + std::to_string(dup.witness->first) + " and " +
                     std::to_string(dup.witness->second) + " coincide; dilation is undefined");
  }

  const PairDecomposition w = ck_wspd(domain, eps / 8.0);
  LipschitzEstimate out;
  out.pairs_scanned = w.size();
  double best = -1.0;
  for (const auto& p : w.pairs) {
    const double ratio = image(p.rep_a, p.rep_b) / distance(domain[p.rep_a], domain[p.rep_b]);
    if (ratio > best) {
      best = ratio;
      out.witness_i = std::min(p.rep_a, p.rep_b);
      out.witness_j = std::max(p.rep_a, p.rep_b);
    }
  }
  out.lower = best;
  // Within one (8/eps)-separated pair, rep ratios are within a factor
  // (1 - eps/4)/(1 + eps/4) of every member pair's ratio.
  out.upper = best * (1.0 + eps / 4.0) / (1.0 - eps / 4.0);
  return out;
}

LipschitzEstimate approx_lipschitz(const FiniteMap& map, double eps) {
  return approx_lipschitz(map.domain(), EuclideanMetric(map.image()), eps);
}

DistortionEstimate approx_distortion(const FiniteMap& map, double eps) {
  check_eps(eps);
  DistortionEstimate out;
  auto image_dup = find_duplicate(map.image());
  auto domain_dup = find_duplicate(map.domain());
  if (!image_dup.injective || !domain_dup.injective) {
    out.infinite = true;
    out.value = std::numeric_limits<double>::infinity();
    out.collision = image_dup.injective ? domain_dup.witness : image_dup.witness;
    return out;
  }
  out.forward = approx_lipschitz(map.domain(), EuclideanMetric(map.image()), eps / 3.0);
  out.inverse = approx_lipschitz(map.image(), EuclideanMetric(map.domain()), eps / 3.0);
  out.value = out.forward.upper * out.inverse.upper;
  return out;
}

}  // namespace wspd
