#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "wspd/error.hpp"
#include "wspd/generators.hpp"
#include "wspd/map_analysis.hpp"
#include "wspd/oracles.hpp"

using namespace wspd;

namespace {

PointSet perturb(const PointSet& ps, double amp) {
  PointSet out(2);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double x = ps[i][0], y = ps[i][1];
    const double p[2] = {x + amp * std::sin(3 * y), y + amp * std::cos(2 * x + y)};
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("identity map") {
  const PointSet ps = gen::uniform_square(100, 1.0, 1);
  for (double eps : {0.05, 0.25}) {
    const auto est = approx_lipschitz(FiniteMap(ps, ps), eps);
    CHECK(est.lower <= 1.0 + 1e-12);
    CHECK(est.lower >= 1.0 - eps);
    const auto dist = approx_distortion(FiniteMap(ps, ps), eps);
    CHECK(dist.value >= 1.0 - 1e-12);
    CHECK(dist.value <= 1.0 + eps);
  }
}

TEST_CASE("uniform scaling by two") {
  const PointSet ps = gen::uniform_square(100, 1.0, 2);
  const FiniteMap f(ps, ps.scaled(2.0));
  const auto est = approx_lipschitz(f, 0.1);
  CHECK(est.lower <= 2.0 * (1 + 1e-12));
  CHECK(est.lower >= 2.0 * 0.9);
  CHECK(est.upper >= 2.0 * (1 - 1e-12));
  CHECK(est.upper <= 2.0 * 1.1);
  const auto d = approx_distortion(f, 0.1);
  CHECK(d.value >= 1.0 - 1e-12);
  CHECK(d.value <= 1.1);
}

TEST_CASE("sandwich against the exact dilation") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const PointSet ps = gen::uniform_square(300, 1.0, seed);
    const PointSet im = perturb(ps, 0.05 * double(seed));
    const double exact = oracle::exact_dilation(EuclideanMetric(ps), EuclideanMetric(im)).value;
    for (double eps : {0.05, 0.1, 0.25}) {
      const auto est = approx_lipschitz(ps, EuclideanMetric(im), eps);
      CHECK(est.lower <= exact);
      CHECK(est.lower >= (1 - eps) * exact);
      CHECK(est.upper >= exact);
      CHECK(est.upper <= (1 + eps) * exact);
      const double witnessed = distance(im[est.witness_i], im[est.witness_j]) / distance(ps[est.witness_i], ps[est.witness_j]);
      CHECK(witnessed == doctest::Approx(est.lower).epsilon(1e-12));
    }
  }
}

TEST_CASE("distortion sandwich and scale invariance") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const PointSet ps = gen::uniform_square(200, 1.0, seed + 10);
    const PointSet im = perturb(ps, 0.03);
    const double exact = oracle::exact_distortion(EuclideanMetric(ps), EuclideanMetric(im));
    const auto est = approx_distortion(FiniteMap(ps, im), 0.1);
    CHECK_FALSE(est.infinite);
    CHECK(est.value >= exact * (1 - 1e-12));
    CHECK(est.value <= 1.1 * exact);
    CHECK(est.value >= 1.0);
    // Powers of two scale exactly, so the estimate does not move.
    CHECK(approx_distortion(FiniteMap(ps, im.scaled(8.0)), 0.1).value == doctest::Approx(est.value).epsilon(1e-12));
  }
}

TEST_CASE("non-injective maps have infinite distortion") {
  const PointSet dom = PointSet::from_rows({{0, 0}, {1, 0}, {2, 0}});
  const PointSet im = PointSet::from_rows({{0, 0}, {5, 5}, {0, 0}});
  const FiniteMap f(dom, im);
  CHECK_FALSE(f.injective());
  const auto d = approx_distortion(f, 0.1);
  CHECK(d.infinite);
  CHECK(std::isinf(d.value));
  REQUIRE(d.collision);
  CHECK(*d.collision == std::make_pair<std::size_t, std::size_t>(0, 2));
}

TEST_CASE("injectivity witness") {
  const auto ok = check_injective(FiniteMap(PointSet::from_rows({{0, 0}, {1, 1}}), PointSet::from_rows({{0, 0}, {1, 1}})));
  CHECK(ok.injective);
  const auto bad = check_injective(FiniteMap(PointSet::from_rows({{0, 0}, {1, 1}}), PointSet::from_rows({{0, 0}, {0, 0}})));
  CHECK_FALSE(bad.injective);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == std::make_pair<std::size_t, std::size_t>(0, 1));
  // Signed zero is the same point.
  CHECK_FALSE(find_duplicate(PointSet::from_rows({{0.0, 1.0}, {-0.0, 1.0}})).injective);
}

TEST_CASE("duplicate detection agrees with a quadratic scan") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(0, 199);
  PointSet ps(2);
  for (int k = 0; k < 10000; ++k) {
    const double p[2] = {double(coord(rng)), double(coord(rng))};
    ps.push_back(p);
  }
  bool any = false;
  std::set<std::pair<double, double>> seen;
  for (std::size_t i = 0; i < ps.size() && !any; ++i) any = !seen.insert({ps[i][0], ps[i][1]}).second;
  const auto got = find_duplicate(ps);
  CHECK(got.injective == !any);
  if (got.witness) {
    CHECK(squared_distance(ps[got.witness->first], ps[got.witness->second]) == 0.0);
  }
  CHECK(find_duplicate(gen::uniform_square(10000, 1.0, 4)).injective);
}

TEST_CASE("errors") {
  const PointSet two = PointSet::from_rows({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(FiniteMap(two, PointSet::from_rows({{0, 0}})), InputError);
  CHECK_THROWS_AS(approx_lipschitz(FiniteMap(two, two), 0.0), ParameterError);
  CHECK_THROWS_AS(approx_lipschitz(FiniteMap(two, two), 1.0), ParameterError);
  const PointSet dup = PointSet::from_rows({{0, 0}, {0, 0}});
  try {
    approx_lipschitz(FiniteMap(dup, two), 0.1);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("0 and 1") != std::string::npos);
  }
}
