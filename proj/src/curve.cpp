#include "wspd/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wspd/error.hpp"

namespace wspd {

namespace {

// Parameter slack for touching tests and snapping.
constexpr double kParamTol = 1e-9;
// Sine of the angle below which two segments count as parallel.
constexpr double kParallelTol = 1e-12;
// Relative distance from a line below which a parallel segment is collinear.
constexpr double kCollinearTol = 1e-9;

Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
Point2 lerp(Point2 a, Point2 b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double clamp01(double t) { return std::clamp(t, 0.0, 1.0); }

bool better(double t, std::size_t edge, double best_t, std::size_t best_edge) {
  return t < best_t || (t == best_t && edge < best_edge);
}

}  // namespace

PolyCurve::PolyCurve(PointSet vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw InputError("curve has no vertices");
  }
  prefix_.resize(vertices_.size(), 0.0);
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const double len = distance(vertices_[i - 1], vertices_[i]);
    if (len == 0.0) {
      throw InputError("curve vertices " + std::to_string(i - 1) + " and " + std::to_string(i) +
                       " coincide (zero-length edge)");
    }
    prefix_[i] = prefix_[i - 1] + len;
  }
}

PolyCurve load_curve(const std::string& path) { return PolyCurve(load_points(path)); }

std::vector<Point2> to_points2(const PolyCurve& curve) {
  if (curve.dim() != 2) {
    throw ParameterError("expected a planar curve, got dimension " + std::to_string(curve.dim()));
  }
  std::vector<Point2> out(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out[i] = {curve.vertex(i)[0], curve.vertex(i)[1]};
  }
  return out;
}

PolyCurve from_points2(std::span<const Point2> pts) {
  PointSet ps(2);
  for (const Point2& p : pts) {
    const double c[2] = {p.x, p.y};
    ps.push_back(c);
  }
  return PolyCurve(std::move(ps));
}

std::optional<SegmentHit> first_segment_hit(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  const Point2 r = a1 - a0;
  const Point2 s = b1 - b0;
  const Point2 q = b0 - a0;
  const double rr = dot(r, r);
  const double ss = dot(s, s);
  const double denom = cross(r, s);
  if (std::abs(denom) > kParallelTol * std::sqrt(rr * ss)) {
    const double t = cross(q, s) / denom;
    const double u = cross(q, r) / denom;
    if (t < -kParamTol || t > 1.0 + kParamTol || u < -kParamTol || u > 1.0 + kParamTol) {
      return std::nullopt;
    }
    return SegmentHit{clamp01(t), clamp01(u)};
  }
  // Parallel: only collinear overlaps meet.
  const double scale = std::max({std::sqrt(rr), std::sqrt(ss), std::sqrt(dot(q, q))});
  if (std::abs(cross(q, r)) > kCollinearTol * std::sqrt(rr) * scale) {
    return std::nullopt;
  }
  const double t0 = dot(q, r) / rr;
  const double t1 = dot(b1 - a0, r) / rr;
  const double lo = std::max(0.0, std::min(t0, t1));
  const double hi = std::min(1.0, std::max(t0, t1));
  if (lo > hi + kParamTol) {
    return std::nullopt;
  }
  const double t = std::min(lo, 1.0);
  const double u = dot(lerp(a0, a1, t) - b0, s) / ss;
  return SegmentHit{t, clamp01(u)};
}

void NaiveIntersectionOracle::build(std::span<const Point2> curve) { curve_.assign(curve.begin(), curve.end()); }

std::optional<std::pair<double, CurvePoint>> NaiveIntersectionOracle::query(Point2 a0, Point2 a1) const {
  std::optional<std::pair<double, CurvePoint>> best;
  for (std::size_t e = 0; e + 1 < curve_.size(); ++e) {
    const auto hit = first_segment_hit(a0, a1, curve_[e], curve_[e + 1]);
    if (hit && (!best || better(hit->t_a, e, best->first, best->second.edge))) {
      best = {hit->t_a, CurvePoint{e, hit->t_b, lerp(curve_[e], curve_[e + 1], hit->t_b)}};
    }
  }
  return best;
}

void GridIntersectionOracle::build(std::span<const Point2> curve) {
  curve_.assign(curve.begin(), curve.end());
  cells_.clear();
  stamp_.assign(curve_.size(), 0);
  epoch_ = 0;
  double x1 = -std::numeric_limits<double>::infinity(), y1 = x1;
  x0_ = std::numeric_limits<double>::infinity();
  y0_ = x0_;
  for (const Point2& p : curve_) {
    x0_ = std::min(x0_, p.x);
    y0_ = std::min(y0_, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  const double extent = std::max({x1 - x0_, y1 - y0_, std::numeric_limits<double>::min()});
  const auto per_axis = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(curve_.size()))));
  nx_ = ny_ = std::max<std::size_t>(1, per_axis);
  cell_ = extent / static_cast<double>(nx_) * (1.0 + 1e-9);
  cells_.resize(nx_ * ny_);
  auto cell_of = [&](double v, double origin, std::size_t n) {
    const double c = std::floor((v - origin) / cell_);
    return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(n - 1)));
  };
  for (std::size_t e = 0; e + 1 < curve_.size(); ++e) {
    const Point2 p = curve_[e], q = curve_[e + 1];
    const std::size_t cx0 = cell_of(std::min(p.x, q.x), x0_, nx_), cx1 = cell_of(std::max(p.x, q.x), x0_, nx_);
    const std::size_t cy0 = cell_of(std::min(p.y, q.y), y0_, ny_), cy1 = cell_of(std::max(p.y, q.y), y0_, ny_);
    for (std::size_t cx = cx0; cx <= cx1; ++cx) {
      for (std::size_t cy = cy0; cy <= cy1; ++cy) {
        cells_[cy * nx_ + cx].push_back(e);
      }
    }
  }
}

std::optional<std::pair<double, CurvePoint>> GridIntersectionOracle::query(Point2 a0, Point2 a1) const {
  std::optional<std::pair<double, CurvePoint>> best;
  if (curve_.size() < 2) {
    return best;
  }
  // Grow the query box by the touching tolerance so edges ending exactly on
  // a cell boundary are still found.
  const double pad = cell_ * 1e-6;
  const double lx = std::min(a0.x, a1.x) - pad, hx = std::max(a0.x, a1.x) + pad;
  const double ly = std::min(a0.y, a1.y) - pad, hy = std::max(a0.y, a1.y) + pad;
  if (hx < x0_ || hy < y0_ || lx > x0_ + cell_ * static_cast<double>(nx_) ||
      ly > y0_ + cell_ * static_cast<double>(ny_)) {
    return best;
  }
  auto clamp_cell = [&](double v, double origin, std::size_t n) {
    const double c = std::floor((v - origin) / cell_);
    return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(n - 1)));
  };
  const std::size_t cx0 = clamp_cell(lx, x0_, nx_), cx1 = clamp_cell(hx, x0_, nx_);
  const std::size_t cy0 = clamp_cell(ly, y0_, ny_), cy1 = clamp_cell(hy, y0_, ny_);
  ++epoch_;
  for (std::size_t cx = cx0; cx <= cx1; ++cx) {
    for (std::size_t cy = cy0; cy <= cy1; ++cy) {
      for (std::size_t e : cells_[cy * nx_ + cx]) {
        if (stamp_[e] == epoch_) continue;
        stamp_[e] = epoch_;
        const auto hit = first_segment_hit(a0, a1, curve_[e], curve_[e + 1]);
        if (hit && (!best || better(hit->t_a, e, best->first, best->second.edge))) {
          best = {hit->t_a, CurvePoint{e, hit->t_b, lerp(curve_[e], curve_[e + 1], hit->t_b)}};
        }
      }
    }
  }
  return best;
}

std::unique_ptr<FirstIntersectionOracle> make_intersection_oracle(IntersectionOracleKind kind) {
  switch (kind) {
    case IntersectionOracleKind::kGrid:
      return std::make_unique<GridIntersectionOracle>();
    case IntersectionOracleKind::kNaive:
      break;
  }
  return std::make_unique<NaiveIntersectionOracle>();
}

namespace {

std::optional<CurveIntersection> first_hit_along(std::span<const Point2> a, const FirstIntersectionOracle& oracle) {
  for (std::size_t e = 0; e + 1 < a.size(); ++e) {
    if (auto hit = oracle.query(a[e], a[e + 1])) {
      return CurveIntersection{CurvePoint{e, hit->first, lerp(a[e], a[e + 1], hit->first)}, hit->second};
    }
  }
  return std::nullopt;
}

bool backtracks(Point2 a, Point2 b, Point2 c) {
  const Point2 r = b - a, s = c - b;
  return std::abs(cross(r, s)) <= kParallelTol * std::sqrt(dot(r, r) * dot(s, s)) && dot(r, s) < 0.0;
}

class Distiller {
 public:
  explicit Distiller(IntersectionOracleKind kind) : oracle_(make_intersection_oracle(kind)) {}

  std::vector<Point2> run(std::span<const Point2> pi) {
    const std::size_t m = pi.size() - 1;
    if (m <= 1 || (m == 2 && !backtracks(pi[0], pi[1], pi[2]))) {
      return {pi.begin(), pi.end()};
    }
    const std::size_t k = (m + 1) / 2;  // ceil(m / 2)
    const std::vector<Point2> sa = run(pi.subspan(0, k + 1));
    const std::vector<Point2> sb = run(pi.subspan(k));
    return merge(sa, sb);
  }

 private:
  std::vector<Point2> merge(const std::vector<Point2>& sa, const std::vector<Point2>& sb) {
    oracle_->build(sb);
    const auto hit = first_hit_along(sa, *oracle_);
    if (!hit) {
      throw DegenerateInputError("no intersection found between halves sharing an endpoint (" +
                                 std::to_string(sa.size() - 1) + " and " + std::to_string(sb.size() - 1) +
                                 " edges)");
    }
    const std::size_t ea = hit->on_a.edge;
    const std::size_t eb = hit->on_b.edge;
    const double ta = hit->on_a.t;
    const double tb = hit->on_b.t;

    // Snap p to an existing vertex when it sits within tolerance of one.
    Point2 p = hit->on_a.coords;
    if (ta <= kParamTol) {
      p = sa[ea];
    } else if (ta >= 1.0 - kParamTol) {
      p = sa[ea + 1];
    } else if (tb <= kParamTol) {
      p = sb[eb];
    } else if (tb >= 1.0 - kParamTol) {
      p = sb[eb + 1];
    }

    std::vector<Point2> out(sa.begin(), sa.begin() + static_cast<std::ptrdiff_t>(ea) + 1);
    auto append = [&](Point2 v) {
      if (!(v == out.back())) out.push_back(v);
    };
    append(p);
    for (std::size_t j = eb + 1; j < sb.size(); ++j) {
      append(sb[j]);
    }
    return out;
  }

  std::unique_ptr<FirstIntersectionOracle> oracle_;
};

}  // namespace

CurveIntersection first_intersection(const PolyCurve& a, const PolyCurve& b, IntersectionOracleKind kind) {
  const auto pa = to_points2(a);
  const auto pb = to_points2(b);
  if (!(pa.back() == pb.front())) {
    throw InputError("first_intersection: last vertex of A must equal the first vertex of B");
  }
  auto oracle = make_intersection_oracle(kind);
  oracle->build(pb);
  auto hit = first_hit_along(pa, *oracle);
  if (!hit) {
    throw DegenerateInputError("first_intersection: shared endpoint was not detected");
  }
  return *hit;
}

PolyCurve distill(const PolyCurve& curve, IntersectionOracleKind kind) {
  const auto pts = to_points2(curve);
  Distiller d(kind);
  return from_points2(d.run(pts));
}

}  // namespace wspd
