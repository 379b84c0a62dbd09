#include "wspd/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "wspd/error.hpp"

namespace wspd::gen {

PointSet uniform_square(std::size_t n, double side, std::uint64_t seed) { return uniform_cube(n, 2, side, seed); }

PointSet uniform_cube(std::size_t n, std::size_t dim, double side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<double> c(n * dim);
  for (double& x : c) x = u(rng);
  return PointSet(dim, std::move(c));
}

PointSet serpentine_chain(std::size_t n, double step, double row_width) {
  if (!(step > 0.0) || !(row_width > 0.0)) {
    throw ParameterError("serpentine_chain: step and row width must be positive");
  }
  constexpr double kRise = 3.0;
  const double period = 2.0 * (row_width + kRise);
  PointSet ps(2);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = static_cast<double>(k) * step;
    const double turns = std::floor(s / period);
    double r = s - turns * period;
    double x = 0.0;
    double y = turns * 2.0 * kRise;
    if (r < row_width) {
      x = r;
    } else if ((r -= row_width) < kRise) {
      x = row_width;
      y += r;
    } else if ((r -= kRise) < row_width) {
      x = row_width - r;
      y += kRise;
    } else {
      r -= row_width;
      y += kRise + r;
    }
    const double p[2] = {x, y};
    ps.push_back(p);
  }
  return ps;
}

PointSet clustered(std::size_t n, std::size_t clusters, double side, double spread, std::uint64_t seed) {
  if (clusters == 0) {
    throw ParameterError("clustered: need at least one cluster");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, side);
  std::normal_distribution<double> g(0.0, spread);
  std::vector<double> centers(2 * clusters);
  for (double& c : centers) c = u(rng);
  std::uniform_int_distribution<std::size_t> pick(0, clusters - 1);
  PointSet ps(2);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t c = pick(rng);
    const double p[2] = {centers[2 * c] + g(rng), centers[2 * c + 1] + g(rng)};
    ps.push_back(p);
  }
  return ps;
}

PointSet connected_udg(std::size_t n, double reach, std::uint64_t seed) { return connected_udg_cube(n, 2, reach, seed); }

PointSet connected_udg_cube(std::size_t n, std::size_t dim, double reach, std::uint64_t seed) {
  if (!(reach > 0.0 && reach <= 1.0)) {
    throw ParameterError("connected_udg: reach must lie in (0, 1]");
  }
  if (dim == 0) {
    throw ParameterError("connected_udg: dimension must be positive");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PointSet ps(dim);
  std::vector<double> p(dim, 0.0);
  if (n > 0) ps.push_back(p);
  for (std::size_t k = 1; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> parent(0, k - 1);
    const auto base = ps[parent(rng)];
    // Uniform direction, radius with density proportional to r^(dim-1).
    double norm = 0.0;
    for (double& x : p) {
      x = g(rng);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    const double r = reach * std::pow(u(rng), 1.0 / static_cast<double>(dim));
    for (std::size_t a = 0; a < dim; ++a) {
      p[a] = base[a] + (norm > 0.0 ? r * p[a] / norm : 0.0);
    }
    ps.push_back(p);
  }
  return ps;
}

PointSet random_polygon_curve(std::size_t n, std::uint64_t seed) { return uniform_square(n, 1.0, seed); }

PointSet random_walk_curve(std::size_t n, double turn_sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> turn(0.0, turn_sigma);
  std::uniform_real_distribution<double> len(0.5, 1.5);
  PointSet ps(2);
  double x = 0.0, y = 0.0;
  double heading = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  for (std::size_t k = 0; k < n; ++k) {
    const double p[2] = {x, y};
    ps.push_back(p);
    heading += turn(rng);
    const double l = len(rng);
    x += l * std::cos(heading);
    y += l * std::sin(heading);
  }
  return ps;
}

}  // namespace wspd::gen
