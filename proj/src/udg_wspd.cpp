#include "wspd/udg_wspd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "wspd/error.hpp"
#include "wspd/euclid_wspd.hpp"

namespace wspd {

namespace {

constexpr double kBandTol = 1e-9;

// Euclidean diameter of `s` is <= 1. Bounding-box diagonal first; exact
// pairwise scan with early exit only when the box is inconclusive.
bool diameter_at_most_one(const PointSet& ps, const std::vector<std::size_t>& s) {
  if (s.size() < 2) {
    return true;
  }
  const std::size_t d = ps.dim();
  std::vector<double> lo(ps[s[0]].begin(), ps[s[0]].end());
  std::vector<double> hi = lo;
  for (std::size_t i : s) {
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], ps[i][k]);
      hi[k] = std::max(hi[k], ps[i][k]);
    }
  }
  if (squared_distance(lo, hi) <= 1.0) {
    return true;
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (squared_distance(ps[s[a]], ps[s[b]]) > 1.0) {
        return false;
      }
    }
  }
  return true;
}

PairDecomposition short_regime(const PointSet& ps, double eps, UdgWspdStats* stats) {
  const UdgWspdConfig cfg(eps, ps.size());
  PairDecomposition w = ck_wspd(ps, 1.0 / cfg.short_separation);
  PairDecomposition out;
  out.eps = eps;
  std::size_t discarded = 0;
  for (auto& p : w.pairs) {
    if (diameter_at_most_one(ps, p.a) && diameter_at_most_one(ps, p.b)) {
      p.origin = PairOrigin::kUdgShort;
      out.pairs.push_back(std::move(p));
    } else {
      ++discarded;
    }
  }
  if (stats) {
    stats->short_pairs = out.pairs.size();
    stats->short_discarded = discarded;
  }
  return out;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("eps must lie in (0, 1), got " + std::to_string(eps));
  }
}

}  // namespace

UdgWspdConfig::UdgWspdConfig(double eps_in, std::size_t n) : eps(eps_in) {
  check_eps(eps);
  if (n == 0) {
    throw InputError("unit-distance-graph WSPD of an empty point set");
  }
  short_separation = 64.0 / eps;
  // ceil(log2 n) for integers.
  const int ceil_log2 = n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
  last_level = 2 + ceil_log2;
  // For eps > 2/3 the short regime stops at 32/eps while level 2 only starts
  // covering at 24/eps + 12; level 1 closes that gap.
  first_level = eps > 2.0 / 3.0 ? 1 : 2;
}

double UdgWspdConfig::radius(int level) { return 3.0 * std::ldexp(1.0, level); }

PairDecomposition udg_wspd_short(const PointSet& ps, double eps, UdgWspdStats* stats) {
  check_eps(eps);
  if (!build_unit_distance_graph(ps).connected()) {
    throw DisconnectedGraphError("unit-distance graph is disconnected");
  }
  return short_regime(ps, eps, stats);
}

PairDecomposition udg_wspd_with_metric(const GraphMetric& metric, double eps, UdgWspdStats* stats) {
  const PointSet& ps = metric.graph().points();
  const UdgWspdConfig cfg(eps, ps.size());
  UdgWspdStats local;
  PairDecomposition out = short_regime(ps, eps, &local);

  const double diam_bound = metric.diameter_upper_bound();
  for (int i = cfg.first_level; i <= cfg.last_level; ++i) {
    const double r = UdgWspdConfig::radius(i);
    // No pick pair can reach the band once its lower end exceeds the diameter.
    if (cfg.band_lo(i) * (1.0 - kBandTol) > diam_bound) {
      ++local.levels_skipped;
      continue;
    }
    ++local.levels_built;
    const Packing packing = greedy_packing(metric, r / 2.0);
    const auto cells = packing.cells();
    const auto& picks = packing.picks;
    for (std::size_t x = 0; x < picks.size(); ++x) {
      for (std::size_t y = x + 1; y < picks.size(); ++y) {
        const double d = metric(picks[x], picks[y]);
        if (d < cfg.band_lo(i) * (1.0 - kBandTol) || d > cfg.band_hi(i) * (1.0 + kBandTol)) {
          continue;
        }
        WspdPair p;
        p.a = cells[x];
        p.b = cells[y];
        p.rep_a = picks[x];
        p.rep_b = picks[y];
        p.origin = PairOrigin::kUdgLevel;
        p.level = i;
        out.pairs.push_back(std::move(p));
        ++local.level_pairs;
      }
    }
  }
  if (stats) {
    *stats = local;
  }
  return out;
}

PairDecomposition udg_wspd(const PointSet& ps, double eps, UdgWspdStats* stats) {
  check_eps(eps);
  if (ps.dim() != 2) {
    throw ParameterError("udg_wspd expects planar points; use udg_wspd_highdim for dim > 2");
  }
  return udg_wspd_with_metric(graph_metric(build_unit_distance_graph(ps)), eps, stats);
}

PairDecomposition udg_wspd_highdim(const PointSet& ps, double eps, UdgWspdStats* stats) {
  check_eps(eps);
  if (ps.dim() <= 2) {
    throw ParameterError("udg_wspd_highdim expects dim > 2");
  }
  return udg_wspd_with_metric(graph_metric(build_unit_distance_graph(ps)), eps, stats);
}

}  // namespace wspd
