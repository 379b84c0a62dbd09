#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "wspd/error.hpp"
#include "wspd/generators.hpp"
#include "wspd/oracles.hpp"
#include "wspd/shortcut.hpp"

using namespace wspd;

namespace {

PolyCurve curve(std::initializer_list<std::vector<double>> rows) { return PolyCurve(PointSet::from_rows(rows)); }

PolyCurve line(std::size_t n) {
  PointSet ps(2);
  for (std::size_t k = 0; k < n; ++k) {
    const double p[2] = {double(k), 0.0};
    ps.push_back(p);
  }
  return PolyCurve(ps);
}

double dil(const PolyCurve& c, std::size_t s, std::size_t t) {
  return c.length_between(s, t) / distance(c.vertex(s), c.vertex(t));
}

}  // namespace

TEST_CASE("detour of a straight line is one") {
  const auto est = max_detour_estimate(line(20), 0.1);
  CHECK(est.value <= 1.0 + 1e-12);
  CHECK(est.value >= 0.9);
  CHECK(oracle::exact_max_detour(line(20)).value == doctest::Approx(1.0));
}

TEST_CASE("hairpin detour is 21") {
  const PolyCurve u = curve({{0, 0}, {1, 0}, {1, 0.1}, {0, 0.1}});
  const auto exact = oracle::exact_max_detour(u);
  CHECK(exact.value == doctest::Approx(21.0));
  CHECK(exact.i == 0);
  CHECK(exact.j == 3);
  const auto est = max_detour_estimate(u, 0.1);
  CHECK(est.value >= 0.9 * 21.0);
  CHECK(est.value <= 21.0 * (1 + 1e-12));
}

TEST_CASE("detour sandwich on random curves") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PolyCurve c(gen::random_walk_curve(300, 0.9, seed));
    const double exact = oracle::exact_max_detour(c).value;
    const auto est = max_detour_estimate(c, 0.1);
    CHECK(est.value <= exact * (1 + 1e-12));
    CHECK(est.value >= 0.9 * exact);
  }
}

TEST_CASE("repeated vertices give an infinite detour") {
  const auto est = max_detour_estimate(curve({{0, 0}, {1, 0}, {0, 0}}), 0.1);
  CHECK(est.infinite);
  CHECK(est.witness_i == 0);
  CHECK(est.witness_j == 2);
}

TEST_CASE("hairpin bi_shortcut") {
  const PolyCurve u = curve({{0, 0}, {1, 0}, {1, 0.1}, {0, 0.1}});
  const auto sc = bi_shortcut(u, 3.0, 0.1);
  REQUIRE(sc);
  CHECK(sc->j == 0);
  CHECK(sc->k == 3);
  CHECK(sc->dilation == doctest::Approx(21.0));
}

TEST_CASE("colinear curves have nothing to shortcut") {
  CHECK_FALSE(bi_shortcut(line(16), 2.0, 0.1));
  const auto res = shortcut_detours(line(16), 2.0, 0.1);
  CHECK(res.log.empty());
  CHECK(res.curve.vertices().coords() == line(16).vertices().coords());
}

TEST_CASE("hairpin shortcut result") {
  const auto res = shortcut_detours(curve({{0, 0}, {1, 0}, {1, 0.1}, {0, 0.1}}), 3.0, 0.1);
  REQUIRE(res.curve.size() == 2);
  CHECK(res.curve.vertex(0)[0] == 0.0);
  CHECK(res.curve.vertex(1)[1] == 0.1);
  CHECK(res.kept == std::vector<std::size_t>{0, 3});
}

TEST_CASE("bi_shortcut conditions against the cross-split oracle") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const PolyCurve c(gen::random_walk_curve(200, 0.7, seed));
    const std::size_t n = c.size(), split = n / 2;
    for (double alpha : {1.5, 2.0, 4.0, 20.0}) {
      const double eps = 0.1;
      const auto sc = bi_shortcut(c, alpha, eps);
      bool any_detour = false;
      for (std::size_t s = 0; s < split; ++s)
        for (std::size_t t = split; t < n; ++t) any_detour = any_detour || dil(c, s, t) > alpha;
      if (!sc) {
        CHECK_FALSE(any_detour);
        continue;
      }
      CHECK(sc->j < split);
      CHECK(sc->k >= split);
      CHECK(dil(c, sc->j, sc->k) >= (1 - eps) * alpha);
      // No alpha-detour starts right of j.
      for (std::size_t s = sc->j + 1; s < split; ++s)
        for (std::size_t t = split; t < n; ++t) CHECK(dil(c, s, t) <= alpha);
      // k is the last partner of j above the threshold.
      for (std::size_t t = sc->k + 1; t < n; ++t) CHECK(dil(c, sc->j, t) < (1 - eps) * alpha);
    }
  }
}

TEST_CASE("shortcut_detours contract on random curves") {
  std::size_t swept = 0, runs = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PolyCurve c(gen::random_walk_curve(150 + 10 * seed, 0.8, seed));
    for (double alpha : {1.5, 2.0, 4.0}) {
      const auto res = shortcut_detours(c, alpha, 0.1);
      ++runs;
      swept += res.sweep_shortcuts > 0;
      CHECK(oracle::exact_max_detour(res.curve).value < alpha + 1e-9);
      CHECK(res.kept.front() == 0);
      CHECK(res.kept.back() == c.size() - 1);
      for (std::size_t k = 1; k < res.kept.size(); ++k) CHECK(res.kept[k - 1] < res.kept[k]);
      // Replay the log on the evolving vertex list.
      std::vector<std::size_t> cur(c.size());
      for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = k;
      for (const auto& rec : res.log) {
        auto pj = std::find(cur.begin(), cur.end(), rec.j);
        auto pk = std::find(cur.begin(), cur.end(), rec.k);
        REQUIRE(pj != cur.end());
        REQUIRE(pk != cur.end());
        REQUIRE(pj < pk);
        double arc = 0.0;
        for (auto it = pj; it != pk; ++it) arc += distance(c.vertex(*it), c.vertex(*(it + 1)));
        const double d = arc / distance(c.vertex(rec.j), c.vertex(rec.k));
        CHECK(d == doctest::Approx(rec.dilation).epsilon(1e-9));
        CHECK(d >= 0.9 * alpha * (1 - 1e-12));
        cur.erase(pj + 1, pk);
      }
      CHECK(cur == res.kept);
    }
  }
  MESSAGE("verification sweep fired in " << swept << " of " << runs << " runs");
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(shortcut_detours(line(5), 1.0, 0.1), ParameterError);
  CHECK_THROWS_AS(shortcut_detours(line(5), 2.0, 0.0), ParameterError);
  CHECK_THROWS_AS(shortcut_detours(curve({{0, 0}, {1, 0}, {0, 0}}), 2.0, 0.1), InputError);
  CHECK_THROWS_AS(bi_shortcut(line(5), 0, 2.0, 0.1), ParameterError);
}
