#include "wspd/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "wspd/error.hpp"

namespace wspd::oracle {

namespace {

constexpr double kRel = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

double set_diameter(const FiniteMetric& m, const std::vector<std::size_t>& s) {
  double d = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      d = std::max(d, m(s[a], s[b]));
    }
  }
  return d;
}

}  // namespace

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out.precision(10);
  out << "WSPD validation: " << (ok() ? "OK" : "FAILED") << '\n';
  out << "  pairs:              " << pair_count << '\n';
  out << "  coverage:           " << (coverage_ok ? "complete" : "INCOMPLETE") << " (" << uncovered_pairs.size()
      << " uncovered)\n";
  const std::size_t shown = std::min<std::size_t>(uncovered_pairs.size(), 20);
  for (std::size_t k = 0; k < shown; ++k) {
    out << "    missing {" << uncovered_pairs[k].first << ", " << uncovered_pairs[k].second << "}\n";
  }
  if (shown < uncovered_pairs.size()) {
    out << "    ... " << uncovered_pairs.size() - shown << " more\n";
  }
  out << "  disjoint sides:     " << (disjoint_ok ? "yes" : "NO") << '\n';
  out << "  separation:         " << (separation_ok ? "ok" : "VIOLATED") << " (worst pair " << worst_pair
      << ", ratio " << worst_ratio << ")\n";
  out << "  side diameters:     [" << min_pair_diameter << ", " << max_pair_diameter << "]\n";
  out << "  max multiplicity:   " << cover_multiplicity_max << '\n';
  if (duplicate_point_pairs) {
    out << "  duplicate points:   " << duplicate_point_pairs << " zero-distance pairs exempt from coverage\n";
  }
  return out.str();
}

std::string ValidationReport::to_key_values() const {
  std::ostringstream out;
  out.precision(17);
  out << "valid=" << (ok() ? 1 : 0) << '\n'
      << "coverage_ok=" << (coverage_ok ? 1 : 0) << '\n'
      << "uncovered=" << uncovered_pairs.size() << '\n'
      << "separation_ok=" << (separation_ok ? 1 : 0) << '\n'
      << "disjoint_ok=" << (disjoint_ok ? 1 : 0) << '\n'
      << "worst_pair=" << worst_pair << '\n'
      << "worst_ratio=" << worst_ratio << '\n'
      << "pairs=" << pair_count << '\n'
      << "max_side_diameter=" << max_pair_diameter << '\n'
      << "min_side_diameter=" << min_pair_diameter << '\n'
      << "max_multiplicity=" << cover_multiplicity_max << '\n'
      << "duplicate_point_pairs=" << duplicate_point_pairs << '\n';
  return out.str();
}

ValidationReport validate_wspd(const FiniteMetric& m, const PairDecomposition& w, double eps, std::size_t cap) {
  const std::size_t n = m.size();
  if (n > cap) {
    throw InputError("validation cap exceeded: " + std::to_string(n) + " points > " + std::to_string(cap));
  }
  ValidationReport rep;
  rep.pair_count = w.pairs.size();
  rep.min_pair_diameter = w.pairs.empty() ? 0.0 : kInf;

  std::vector<std::uint32_t> cover(n * n, 0);
  std::map<std::vector<std::size_t>, double> diam_cache;
  auto diameter = [&](const std::vector<std::size_t>& s) {
    auto it = diam_cache.find(s);
    if (it == diam_cache.end()) {
      it = diam_cache.emplace(s, set_diameter(m, s)).first;
    }
    return it->second;
  };

  std::vector<char> in_a(n, 0);
  for (std::size_t id = 0; id < w.pairs.size(); ++id) {
    const WspdPair& p = w.pairs[id];
    for (std::size_t x : p.a) {
      if (x >= n) throw InputError("pair " + std::to_string(id) + " references point " + std::to_string(x));
      in_a[x] = 1;
    }
    bool overlap = false;
    for (std::size_t y : p.b) {
      if (y >= n) throw InputError("pair " + std::to_string(id) + " references point " + std::to_string(y));
      overlap = overlap || in_a[y];
    }
    for (std::size_t x : p.a) in_a[x] = 0;
    if (overlap || p.a.empty() || p.b.empty()) {
      rep.disjoint_ok = false;
      rep.overlapping_pairs.push_back(id);
    }

    double gap = kInf;
    for (std::size_t x : p.a) {
      for (std::size_t y : p.b) {
        gap = std::min(gap, m(x, y));
        if (x != y) {
          ++cover[std::min(x, y) * n + std::max(x, y)];
        }
      }
    }
    const double da = diameter(p.a);
    const double db = diameter(p.b);
    const double big = std::max(da, db);
    rep.max_pair_diameter = std::max(rep.max_pair_diameter, big);
    rep.min_pair_diameter = std::min(rep.min_pair_diameter, std::min(da, db));
    const double ratio = big == 0.0 ? 0.0 : (gap == 0.0 ? kInf : big / gap);
    if (ratio > rep.worst_ratio || id == 0) {
      rep.worst_ratio = ratio;
      rep.worst_pair = id;
    }
    if (big > eps * gap * (1.0 + kRel)) {
      rep.separation_ok = false;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint32_t c = cover[i * n + j];
      rep.cover_multiplicity_max = std::max<std::size_t>(rep.cover_multiplicity_max, c);
      if (c == 0) {
        if (m(i, j) == 0.0) {
          ++rep.duplicate_point_pairs;
        } else {
          rep.uncovered_pairs.emplace_back(i, j);
        }
      }
    }
  }
  rep.coverage_ok = rep.uncovered_pairs.empty();
  return rep;
}

Extremum exact_dilation(const FiniteMetric& domain, const FiniteMetric& image) {
  Extremum best{-1.0, 0, 0};
  const std::size_t n = domain.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double den = domain(i, j);
      const double ratio = den == 0.0 ? kInf : image(i, j) / den;
      if (ratio > best.value) {
        best = {ratio, i, j};
      }
    }
  }
  return best;
}

double exact_distortion(const FiniteMetric& domain, const FiniteMetric& image) {
  return exact_dilation(domain, image).value * exact_dilation(image, domain).value;
}

Extremum exact_max_detour(const PolyCurve& curve) {
  Extremum best{-1.0, 0, 0};
  const auto& pre = curve.prefix_lengths();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    for (std::size_t j = i + 1; j < curve.size(); ++j) {
      const double d = distance(curve.vertex(i), curve.vertex(j));
      const double ratio = d == 0.0 ? kInf : (pre[j] - pre[i]) / d;
      if (ratio > best.value) {
        best = {ratio, i, j};
      }
    }
  }
  return best;
}

namespace {

double orient(Point2 a, Point2 b, Point2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

int sign_tol(double v, double scale) {
  const double tol = 1e-12 * scale;
  return v > tol ? 1 : (v < -tol ? -1 : 0);
}

bool within_box(Point2 a, Point2 b, Point2 p, double slack) {
  return p.x >= std::min(a.x, b.x) - slack && p.x <= std::max(a.x, b.x) + slack &&
         p.y >= std::min(a.y, b.y) - slack && p.y <= std::max(a.y, b.y) + slack;
}

double seg_len2(Point2 a, Point2 b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

bool segments_meet(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
  const double scale = std::max({seg_len2(p1, p2), seg_len2(p3, p4), seg_len2(p1, p3), seg_len2(p1, p4)});
  const double slack = 1e-9 * std::sqrt(scale);
  const int d1 = sign_tol(orient(p3, p4, p1), scale);
  const int d2 = sign_tol(orient(p3, p4, p2), scale);
  const int d3 = sign_tol(orient(p1, p2, p3), scale);
  const int d4 = sign_tol(orient(p1, p2, p4), scale);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && within_box(p3, p4, p1, slack)) return true;
  if (d2 == 0 && within_box(p3, p4, p2, slack)) return true;
  if (d3 == 0 && within_box(p1, p2, p3, slack)) return true;
  if (d4 == 0 && within_box(p1, p2, p4, slack)) return true;
  return false;
}

Point2 at(const PolyCurve& c, std::size_t i) { return {c.vertex(i)[0], c.vertex(i)[1]}; }

}  // namespace

SimplicityReport is_simple(const PolyCurve& curve) {
  if (curve.dim() != 2) {
    throw ParameterError("is_simple expects a planar curve");
  }
  SimplicityReport rep;
  const std::size_t m = curve.edge_count();
  for (std::size_t e = 0; e + 1 < m; ++e) {
    const Point2 a = at(curve, e), b = at(curve, e + 1), c = at(curve, e + 2);
    const double scale = std::max(seg_len2(a, b), seg_len2(b, c));
    const double dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
    if (sign_tol(orient(a, b, c), scale) == 0 && dot < 0.0) {
      rep.simple = false;
      rep.witness = std::make_pair(e, e + 1);
      return rep;
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    const Point2 a = at(curve, e), b = at(curve, e + 1);
    for (std::size_t f = e + 2; f < m; ++f) {
      const Point2 c = at(curve, f), d = at(curve, f + 1);
      if (std::max(c.x, d.x) < std::min(a.x, b.x) - 1e-9 || std::min(c.x, d.x) > std::max(a.x, b.x) + 1e-9 ||
          std::max(c.y, d.y) < std::min(a.y, b.y) - 1e-9 || std::min(c.y, d.y) > std::max(a.y, b.y) + 1e-9) {
        continue;
      }
      if (segments_meet(a, b, c, d)) {
        rep.simple = false;
        rep.witness = std::make_pair(e, f);
        return rep;
      }
    }
  }
  return rep;
}

std::vector<double> all_pairs_graph_distance(const UnitDistanceGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap) {
    throw InputError("all-pairs oracle cap exceeded: " + std::to_string(n) + " > " + std::to_string(cap));
  }
  std::vector<double> d(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    d[i * n + i] = 0.0;
    for (const Edge& e : g.neighbors(i)) {
      d[i * n + e.to] = std::min(d[i * n + e.to], e.weight);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = d[i * n + k];
      if (dik == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double via = dik + d[k * n + j];
        if (via < d[i * n + j]) d[i * n + j] = via;
      }
    }
  }
  if (std::find(d.begin(), d.end(), kInf) != d.end()) {
    throw DisconnectedGraphError("all-pairs oracle: graph is disconnected");
  }
  return d;
}

std::optional<std::pair<CurvePoint, CurvePoint>> naive_first_intersection(const PolyCurve& a, const PolyCurve& b) {
  // For each A edge, intersect with every B edge by solving the 2x2 system
  // directly (or projecting, when parallel) and keep the smallest parameter.
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    const Point2 p = at(a, e), q = at(a, e + 1);
    std::optional<std::pair<CurvePoint, CurvePoint>> best;
    for (std::size_t f = 0; f < b.edge_count(); ++f) {
      const Point2 r = at(b, f), s = at(b, f + 1);
      if (!segments_meet(p, q, r, s)) continue;
      const double a11 = q.x - p.x, a12 = -(s.x - r.x), a21 = q.y - p.y, a22 = -(s.y - r.y);
      const double b1 = r.x - p.x, b2 = r.y - p.y;
      const double det = a11 * a22 - a12 * a21;
      const double la = std::sqrt(seg_len2(p, q)), lb = std::sqrt(seg_len2(r, s));
      double t = 0.0, u = 0.0;
      if (std::abs(det) > 1e-12 * la * lb) {
        t = std::clamp((b1 * a22 - a12 * b2) / det, 0.0, 1.0);
        u = std::clamp((a11 * b2 - b1 * a21) / det, 0.0, 1.0);
      } else {
        // Collinear overlap: the earliest point of A's edge inside B's edge.
        const double l2 = la * la;
        auto param = [&](Point2 x) { return ((x.x - p.x) * a11 + (x.y - p.y) * a21) / l2; };
        t = std::clamp(std::min(param(r), param(s)), 0.0, 1.0);
        const Point2 hit{p.x + t * a11, p.y + t * a21};
        u = std::clamp(((hit.x - r.x) * (s.x - r.x) + (hit.y - r.y) * (s.y - r.y)) / (lb * lb), 0.0, 1.0);
      }
      if (!best || t < best->first.t) {
        best = std::make_pair(CurvePoint{e, t, {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}},
                              CurvePoint{f, u, {r.x + u * (s.x - r.x), r.y + u * (s.y - r.y)}});
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

double distance_to_curve(Point2 p, const PolyCurve& curve) {
  double best = kInf;
  for (std::size_t e = 0; e < curve.edge_count(); ++e) {
    const Point2 a = at(curve, e), b = at(curve, e + 1);
    const double l2 = seg_len2(a, b);
    const double t = std::clamp(((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / l2, 0.0, 1.0);
    const Point2 c{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    best = std::min(best, std::sqrt(seg_len2(p, c)));
  }
  if (curve.edge_count() == 0) {
    best = std::sqrt(seg_len2(p, at(curve, 0)));
  }
  return best;
}

}  // namespace wspd::oracle
