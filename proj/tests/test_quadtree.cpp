#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wspd/error.hpp"
#include "wspd/generators.hpp"
#include "wspd/quadtree.hpp"

using namespace wspd;

namespace {

// Every node's points lie inside its cell; children partition their parent.
void check_structure(const CompressedQuadtree& t) {
  const PointSet& ps = t.point_set();
  for (std::size_t id = 0; id < t.node_count(); ++id) {
    const auto& nd = t.node(id);
    const auto pts = t.points(id);
    REQUIRE(pts.size() == nd.count());
    CHECK(nd.rep == *std::min_element(pts.begin(), pts.end()));
    if (nd.leaf()) {
      for (std::size_t p : pts) CHECK(squared_distance(ps[p], ps[pts[0]]) == 0.0);
      CHECK(nd.diameter == 0.0);
      continue;
    }
    CHECK(nd.children.size() >= 2);
    for (std::size_t p : pts) {
      for (std::size_t a = 0; a < ps.dim(); ++a) {
        CHECK(std::abs(ps[p][a] - nd.center[a]) <= nd.side / 2 * (1 + 1e-12));
      }
    }
    std::size_t sum = 0;
    for (std::size_t c : nd.children) {
      sum += t.node(c).count();
      CHECK(t.node(c).begin >= nd.begin);
      CHECK(t.node(c).end <= nd.end);
    }
    CHECK(sum == nd.count());
    CHECK(nd.diameter == doctest::Approx(nd.side * std::sqrt(double(ps.dim()))));
  }
}

}  // namespace

TEST_CASE("four corners give a root with four leaves") {
  const PointSet ps = PointSet::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const CompressedQuadtree t(ps);
  const auto& root = t.node(t.root());
  REQUIRE(root.children.size() == 4);
  for (std::size_t c : root.children) CHECK(t.node(c).leaf());
  CHECK(t.node_count() == 5);
  check_structure(t);
}

TEST_CASE("structure on random inputs in several dimensions") {
  for (std::size_t dim = 1; dim <= 5; ++dim) {
    const PointSet ps = gen::uniform_cube(300, dim, 1.0, dim);
    const CompressedQuadtree t(ps);
    check_structure(t);
    std::vector<std::size_t> ord(t.order().begin(), t.order().end());
    std::sort(ord.begin(), ord.end());
    std::vector<std::size_t> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    CHECK(ord == all);
  }
}

TEST_CASE("compressed chains keep the node count linear") {
  // Exponentially clustered points would need a long uncompressed chain.
  PointSet ps(2);
  for (int k = 0; k < 40; ++k) {
    const double p[2] = {std::ldexp(1.0, -k), 0.0};
    ps.push_back(p);
  }
  const CompressedQuadtree t(ps);
  CHECK(t.node_count() <= 2 * ps.size());
  check_structure(t);
}

TEST_CASE("duplicates share a leaf") {
  const PointSet ps = PointSet::from_rows({{0, 0}, {1, 1}, {0, 0}, {2, 0}});
  const CompressedQuadtree t(ps);
  CHECK(t.has_duplicates());
  check_structure(t);
}

TEST_CASE("subset trees only index the subset") {
  const PointSet ps = gen::uniform_square(50, 1.0, 9);
  const std::vector<std::size_t> sub = {3, 7, 11, 40};
  const CompressedQuadtree t(ps, sub);
  CHECK(t.size() == 4);
  std::vector<std::size_t> ord(t.order().begin(), t.order().end());
  std::sort(ord.begin(), ord.end());
  CHECK(ord == sub);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(CompressedQuadtree(gen::uniform_cube(5, 9, 1.0, 1)), ParameterError);
  CHECK_THROWS_AS(CompressedQuadtree(PointSet::from_rows({{1, 1}, {1, 1}})), InputError);
  const PointSet ps = gen::uniform_square(5, 1.0, 1);
  const std::vector<std::size_t> bad = {0, 9};
  CHECK_THROWS_AS(CompressedQuadtree(ps, bad), InputError);
}
