#include "wspd/point_set.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wspd/error.hpp"

namespace wspd {

namespace {

void check_finite(std::span<const double> p) {
  for (double c : p) {
    if (!std::isfinite(c)) {
      throw InputError("point coordinate is not finite");
    }
  }
}

}  // namespace

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) {
    throw ParameterError("point dimension must be positive");
  }
}

PointSet::PointSet(std::size_t dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim == 0) {
    throw ParameterError("point dimension must be positive");
  }
  if (coords_.size() % dim != 0) {
    throw InputError("coordinate count is not a multiple of the dimension");
  }
  check_finite(coords_);
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw InputError("cannot infer dimension of an empty row list");
  }
  PointSet ps(rows.front().size());
  for (const auto& r : rows) {
    ps.push_back(r);
  }
  return ps;
}

void PointSet::push_back(std::span<const double> p) {
  if (p.size() != dim_) {
    throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                     std::to_string(dim_));
  }
  check_finite(p);
  coords_.insert(coords_.end(), p.begin(), p.end());
}

PointSet PointSet::select(std::span<const std::size_t> indices) const {
  PointSet out(dim_);
  out.coords_.reserve(indices.size() * dim_);
  for (std::size_t i : indices) {
    auto p = (*this)[i];
    out.coords_.insert(out.coords_.end(), p.begin(), p.end());
  }
  return out;
}

PointSet PointSet::scaled(double factor) const {
  PointSet out = *this;
  for (double& c : out.coords_) {
    c *= factor;
  }
  return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

PointSet read_points(std::istream& in) {
  std::size_t dim = 0;
  std::vector<double> coords;
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    if (line[first] == '#') {
      const auto pos = line.find("dim=");
      if (pos != std::string::npos && dim == 0 && coords.empty()) {
        try {
          const long d = std::stol(line.substr(pos + 4));
          if (d <= 0) {
            throw ParseError("dimension must be positive", lineno);
          }
          dim = static_cast<std::size_t>(d);
        } catch (const std::logic_error&) {
          throw ParseError("malformed dim header", lineno);
        }
      }
      continue;
    }
    row.clear();
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::logic_error&) {
        throw ParseError("not a number: '" + tok + "'", lineno);
      }
      if (used != tok.size()) {
        throw ParseError("not a number: '" + tok + "'", lineno);
      }
      if (!std::isfinite(v)) {
        throw ParseError("coordinate is not finite", lineno);
      }
      row.push_back(v);
    }
    if (dim == 0) {
      dim = row.size();
    }
    if (row.size() != dim) {
      throw ParseError("expected " + std::to_string(dim) + " coordinates, found " + std::to_string(row.size()),
                       lineno);
    }
    coords.insert(coords.end(), row.begin(), row.end());
  }
  if (dim == 0) {
    throw ParseError("no points found", lineno);
  }
  return PointSet(dim, std::move(coords));
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& ps) {
  out << "# dim=" << ps.dim() << '\n';
  const auto old = out.precision(17);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto p = ps[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ' ';
      out << p[k];
    }
    out << '\n';
  }
  out.precision(old);
}

void save_points(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write " + path);
  }
  write_points(out, ps);
}

}  // namespace wspd
