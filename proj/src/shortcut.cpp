#include "wspd/shortcut.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "wspd/error.hpp"
#include "wspd/euclid_wspd.hpp"
#include "wspd/map_analysis.hpp"

namespace wspd {

namespace {

void check_params(double alpha, double eps) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw ParameterError("alpha must be > 1, got " + std::to_string(alpha));
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("eps must lie in (0, 1), got " + std::to_string(eps));
  }
}

// Curve state as a vertex list with its own prefix lengths.
struct CurveState {
  PointSet points;
  std::vector<double> prefix;

  double dilation(std::size_t s, std::size_t t) const {
    return (prefix[t] - prefix[s]) / distance(points[s], points[t]);
  }
};

CurveState make_state(const PointSet& all, std::span<const std::size_t> idx) {
  CurveState st{all.select(idx), std::vector<double>(idx.size(), 0.0)};
  for (std::size_t i = 1; i < idx.size(); ++i) {
    st.prefix[i] = st.prefix[i - 1] + distance(st.points[i - 1], st.points[i]);
  }
  return st;
}

std::optional<Shortcut> bi_shortcut_state(const CurveState& st, std::size_t split, double alpha, double eps) {
  const std::size_t n = st.points.size();
  if (split == 0 || split >= n) {
    return std::nullopt;
  }
  std::vector<std::size_t> left(split), right(n - split);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), split);
  const double threshold = (1.0 - eps) * alpha;

  // With an (8/eps)-separated pair {B, C} and t = max C, arc(s, t) bounds
  // arc(s, t') from above and |p_s p_t| <= (1 + eps/8) |p_s p_t'| for every
  // t' in C, so testing (s, max C) detects every alpha-detour out of s.
  const PairDecomposition w = bichromatic_wspd(st.points, left, right, eps / 8.0);
  std::optional<std::size_t> best_j;
  for (const WspdPair& p : w.pairs) {
    const std::size_t t = p.b.back();
    for (auto it = p.a.rbegin(); it != p.a.rend(); ++it) {
      if (best_j && *it <= *best_j) break;
      if (st.dilation(*it, t) >= threshold) {
        best_j = *it;
        break;
      }
    }
  }
  if (!best_j) {
    return std::nullopt;
  }
  for (std::size_t k = n; k-- > split;) {
    const double dil = st.dilation(*best_j, k);
    if (dil >= threshold) {
      return Shortcut{*best_j, k, dil};
    }
  }
  throw Error("bi_shortcut: detected shortcut vanished on exact rescan");
}

class ShortcutRunner {
 public:
  ShortcutRunner(const PolyCurve& curve, double alpha, double eps) : curve_(curve), alpha_(alpha), eps_(eps) {}

  std::vector<std::size_t> run(std::size_t lo, std::size_t hi) {
    if (hi - lo <= 2) {
      std::vector<std::size_t> all(hi - lo);
      std::iota(all.begin(), all.end(), lo);
      return all;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<std::size_t> kept = run(lo, mid);
    const std::size_t split = kept.size();
    const std::vector<std::size_t> right = run(mid, hi);
    kept.insert(kept.end(), right.begin(), right.end());

    const CurveState st = make_state(curve_.vertices(), kept);
    if (auto sc = bi_shortcut_state(st, split, alpha_, eps_)) {
      log.push_back({kept[sc->j], kept[sc->k], sc->dilation, false});
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(sc->j) + 1,
                 kept.begin() + static_cast<std::ptrdiff_t>(sc->k));
    }
    return kept;
  }

  // Exact pass: shortcut the largest remaining alpha-detour until none is left.
  std::size_t sweep(std::vector<std::size_t>& kept) {
    std::size_t applied = 0;
    for (;;) {
      const CurveState st = make_state(curve_.vertices(), kept);
      double best = alpha_;
      std::size_t bj = 0, bk = 0;
      for (std::size_t s = 0; s < kept.size(); ++s) {
        for (std::size_t t = s + 2; t < kept.size(); ++t) {
          const double dil = st.dilation(s, t);
          if (dil > best) {
            best = dil;
            bj = s;
            bk = t;
          }
        }
      }
      if (bk == 0) {
        return applied;
      }
      log.push_back({kept[bj], kept[bk], best, true});
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(bj) + 1, kept.begin() + static_cast<std::ptrdiff_t>(bk));
      ++applied;
    }
  }

  std::vector<ShortcutRecord> log;

 private:
  const PolyCurve& curve_;
  double alpha_;
  double eps_;
};

}  // namespace

DetourEstimate max_detour_estimate(const PolyCurve& curve, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ParameterError("eps must lie in (0, 1), got " + std::to_string(eps));
  }
  if (curve.size() < 2) {
    throw InputError("detour needs at least two vertices");
  }
  DetourEstimate out;
  if (const auto dup = find_duplicate(curve.vertices()); !dup.injective) {
    out.infinite = true;
    out.value = std::numeric_limits<double>::infinity();
    out.witness_i = dup.witness->first;
    out.witness_j = dup.witness->second;
    return out;
  }
  const PointSet arc(1, curve.prefix_lengths());
  const LipschitzEstimate est = approx_lipschitz(curve.vertices(), EuclideanMetric(arc), eps);
  out.value = est.lower;
  out.witness_i = est.witness_i;
  out.witness_j = est.witness_j;
  return out;
}

std::optional<Shortcut> bi_shortcut(const PolyCurve& curve, std::size_t split, double alpha, double eps) {
  check_params(alpha, eps);
  if (curve.size() < 2) {
    throw InputError("bi_shortcut needs at least two vertices");
  }
  if (split == 0 || split >= curve.size()) {
    throw ParameterError("split must leave both halves nonempty");
  }
  const CurveState st{curve.vertices(), curve.prefix_lengths()};
  return bi_shortcut_state(st, split, alpha, eps);
}

std::optional<Shortcut> bi_shortcut(const PolyCurve& curve, double alpha, double eps) {
  if (curve.size() < 2) {
    throw InputError("bi_shortcut needs at least two vertices");
  }
  return bi_shortcut(curve, curve.size() / 2, alpha, eps);
}

ShortcutResult shortcut_detours(const PolyCurve& curve, double alpha, double eps) {
  check_params(alpha, eps);
  if (curve.size() < 2) {
    throw InputError("shortcutting needs at least two vertices");
  }
  if (const auto dup = find_duplicate(curve.vertices()); !dup.injective) {
    throw InputError("vertices " + std::to_string(dup.witness->first) + " and " +
                     std::to_string(dup.witness->second) + " coincide; their dilation is infinite");
  }
  ShortcutRunner runner(curve, alpha, eps);
  std::vector<std::size_t> kept = runner.run(0, curve.size());
  const std::size_t swept = runner.sweep(kept);
  PolyCurve out(curve.vertices().select(kept));
  return ShortcutResult{std::move(out), std::move(kept), std::move(runner.log), swept};
}

}  // namespace wspd
