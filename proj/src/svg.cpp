#include "wspd/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wspd/error.hpp"

namespace wspd {

namespace {

double y_of(std::span<const double> p) { return p.size() > 1 ? p[1] : 0.0; }

}  // namespace

void SvgCanvas::grow(double x, double y) {
  if (!any_) {
    lo_x_ = hi_x_ = x;
    lo_y_ = hi_y_ = y;
    any_ = true;
    return;
  }
  lo_x_ = std::min(lo_x_, x);
  hi_x_ = std::max(hi_x_, x);
  lo_y_ = std::min(lo_y_, y);
  hi_y_ = std::max(hi_y_, y);
}

void SvgCanvas::points(const PointSet& ps, const std::string& color, double radius_px) {
  Item it{Item::kCircle, {}, color, radius_px};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    it.xy.push_back(ps[i][0]);
    it.xy.push_back(y_of(ps[i]));
    grow(ps[i][0], y_of(ps[i]));
  }
  items_.push_back(std::move(it));
}

void SvgCanvas::polyline(const PointSet& ps, const std::string& color, double stroke_px) {
  Item it{Item::kPath, {}, color, stroke_px};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    it.xy.push_back(ps[i][0]);
    it.xy.push_back(y_of(ps[i]));
    grow(ps[i][0], y_of(ps[i]));
  }
  items_.push_back(std::move(it));
}

void SvgCanvas::segment(std::span<const double> a, std::span<const double> b, const std::string& color,
                        double stroke_px) {
  items_.push_back({Item::kPath, {a[0], y_of(a), b[0], y_of(b)}, color, stroke_px});
  grow(a[0], y_of(a));
  grow(b[0], y_of(b));
}

void SvgCanvas::pair_chords(const PointSet& ps, const PairDecomposition& w, const std::string& color) {
  for (const WspdPair& p : w.pairs) {
    segment(ps[p.rep_a], ps[p.rep_b], color, 0.4);
  }
}

std::string SvgCanvas::str() const {
  const double span_x = std::max(hi_x_ - lo_x_, 1e-12);
  const double span_y = std::max(hi_y_ - lo_y_, 1e-12);
  const double extent = std::max(span_x, span_y);
  const double scale = (width_px_ - 20.0) / extent;
  const double height_px = span_y * scale + 20.0;
  auto px = [&](double x) { return 10.0 + (x - lo_x_) * scale; };
  auto py = [&](double y) { return 10.0 + (hi_y_ - y) * scale; };  // y up

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px_ << "\" height=\"" << height_px
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Item& it : items_) {
    if (it.kind == Item::kCircle) {
      for (std::size_t k = 0; k + 1 < it.xy.size(); k += 2) {
        out << "<circle cx=\"" << px(it.xy[k]) << "\" cy=\"" << py(it.xy[k + 1]) << "\" r=\"" << it.size
            << "\" fill=\"" << it.color << "\"/>\n";
      }
    } else {
      out << "<polyline fill=\"none\" stroke=\"" << it.color << "\" stroke-width=\"" << it.size << "\" points=\"";
      for (std::size_t k = 0; k + 1 < it.xy.size(); k += 2) {
        out << (k ? " " : "") << px(it.xy[k]) << ',' << py(it.xy[k + 1]);
      }
      out << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

void SvgCanvas::save(const std::string& path) const {
  std::ofstream f(path);
  if (!f) {
    throw InputError("cannot write " + path);
  }
  f << str();
}

}  // namespace wspd
