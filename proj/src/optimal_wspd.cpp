#include "wspd/optimal_wspd.hpp"

#include <cmath>
#include <set>

#include "wspd/error.hpp"

namespace wspd {

namespace {

constexpr double kBandTol = 1e-9;

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("eps must lie in (0, 1), got " + std::to_string(eps));
  }
}

// d in [lo_mult * r / eps, hi_mult * r / eps], closed, with relative slack.
bool in_band(double d, double r, double lo_mult, double hi_mult, double eps) {
  return d >= lo_mult * r / eps * (1.0 - kBandTol) && d <= hi_mult * r / eps * (1.0 + kBandTol);
}

}  // namespace

double level_radius(int level) { return std::ldexp(1.0, level); }

std::vector<int> levels_for_distance(double d, double eps) {
  check_eps(eps);
  std::vector<int> out;
  if (!(d > 0.0) || !std::isfinite(d)) {
    return out;
  }
  // 4 * 2^i / eps <= d <= 8 * 2^i / eps  <=>  d*eps/8 <= 2^i <= d*eps/4.
  const int lo = static_cast<int>(std::floor(std::log2(d * eps / 8.0))) - 1;
  const int hi = static_cast<int>(std::ceil(std::log2(d * eps / 4.0))) + 1;
  for (int i = lo; i <= hi; ++i) {
    if (in_band(d, level_radius(i), 4.0, 8.0, eps)) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> active_levels(const FiniteMetric& m, double eps) {
  check_eps(eps);
  std::set<int> levels;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (int l : levels_for_distance(m(i, j), eps)) {
        levels.insert(l);
      }
    }
  }
  return {levels.begin(), levels.end()};
}

LevelSet build_level_set(const FiniteMetric& m, double eps) {
  check_eps(eps);
  if (m.size() < 2) {
    throw InputError("instance-optimal WSPD needs at least two points");
  }
  LevelSet out;
  out.eps = eps;
  for (int i : active_levels(m, eps)) {
    Level level;
    level.index = i;
    level.radius = level_radius(i);
    level.packing = greedy_packing(m, level.radius / 2.0);
    const auto cells = level.packing.cells();
    const auto& picks = level.packing.picks;
    for (std::size_t x = 0; x < picks.size(); ++x) {
      for (std::size_t y = x + 1; y < picks.size(); ++y) {
        if (!in_band(m(picks[x], picks[y]), level.radius, 2.0, 16.0, eps)) {
          continue;
        }
        WspdPair p;
        p.a = cells[x];
        p.b = cells[y];
        p.rep_a = picks[x];
        p.rep_b = picks[y];
        p.origin = PairOrigin::kLevel;
        p.level = i;
        level.pairs.push_back(std::move(p));
      }
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

PairDecomposition flatten(const LevelSet& levels) {
  PairDecomposition out;
  out.eps = levels.eps;
  for (const auto& l : levels.levels) {
    out.pairs.insert(out.pairs.end(), l.pairs.begin(), l.pairs.end());
  }
  return out;
}

PairDecomposition instance_optimal_wspd(const FiniteMetric& m, double eps) {
  return flatten(build_level_set(m, eps));
}

}  // namespace wspd
