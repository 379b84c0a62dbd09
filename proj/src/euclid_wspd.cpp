#include "wspd/euclid_wspd.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "wspd/error.hpp"

namespace wspd {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ParameterError("eps must lie in (0, 1], got " + std::to_string(eps));
  }
}

bool separated(const CompressedQuadtree::Node& u, const CompressedQuadtree::Node& v, double eps) {
  const double gap = distance(u.center, v.center) - 0.5 * u.diameter - 0.5 * v.diameter;
  return std::max(u.diameter, v.diameter) <= eps * gap;
}

std::vector<std::size_t> sorted_copy(std::span<const std::size_t> s) {
  std::vector<std::size_t> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_distinct_upto2(const PointSet& ps) {
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (squared_distance(ps[0], ps[i]) != 0.0) {
      return 2;
    }
  }
  return ps.empty() ? 0 : 1;
}

}  // namespace

PairDecomposition ck_wspd(const CompressedQuadtree& tree, double eps) {
  check_eps(eps);
  PairDecomposition out;
  out.eps = eps;

  std::vector<std::pair<std::size_t, std::size_t>> work;
  std::vector<std::size_t> internal{tree.root()};
  // Children pairs of every internal node seed the recursion; processing
  // them depth-first keeps the output order a pure function of the tree.
  while (!internal.empty()) {
    const std::size_t id = internal.back();
    internal.pop_back();
    const auto& node = tree.node(id);
    for (std::size_t c = node.children.size(); c-- > 0;) {
      if (!tree.node(node.children[c]).leaf()) {
        internal.push_back(node.children[c]);
      }
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      for (std::size_t j = i + 1; j < node.children.size(); ++j) {
        work.push_back({node.children[i], node.children[j]});
      }
    }
    while (!work.empty()) {
      const auto [u, v] = work.back();
      work.pop_back();
      const auto& nu = tree.node(u);
      const auto& nv = tree.node(v);
      if (separated(nu, nv, eps)) {
        WspdPair p;
        p.a = sorted_copy(tree.points(u));
        p.b = sorted_copy(tree.points(v));
        p.rep_a = nu.rep;
        p.rep_b = nv.rep;
        p.origin = PairOrigin::kQuadtree;
        out.pairs.push_back(std::move(p));
        continue;
      }
      // Split the side with the larger enclosing ball. Two leaves are always
      // separated, so the larger side here is internal.
      const bool split_u = nu.diameter >= nv.diameter && !nu.leaf();
      const auto& split = split_u ? nu : nv;
      for (std::size_t c = split.children.size(); c-- > 0;) {
        work.push_back(split_u ? std::make_pair(split.children[c], v) : std::make_pair(u, split.children[c]));
      }
    }
  }
  return out;
}

PairDecomposition ck_wspd(const PointSet& ps, double eps) {
  check_eps(eps);
  if (count_distinct_upto2(ps) < 2) {
    PairDecomposition empty;
    empty.eps = eps;
    return empty;
  }
  return ck_wspd(CompressedQuadtree(ps), eps);
}

PairDecomposition bichromatic_wspd(const PointSet& ps, std::span<const std::size_t> left,
                                   std::span<const std::size_t> right, double eps) {
  check_eps(eps);
  PairDecomposition out;
  out.eps = eps;
  if (left.empty() || right.empty()) {
    return out;
  }
  enum : char { kNone = 0, kLeft = 1, kRight = 2 };
  std::vector<char> side(ps.size(), kNone);
  std::vector<std::size_t> both;
  both.reserve(left.size() + right.size());
  for (std::size_t i : left) {
    if (i >= ps.size()) throw InputError("bichromatic index out of range");
    side[i] = kLeft;
    both.push_back(i);
  }
  for (std::size_t i : right) {
    if (i >= ps.size()) throw InputError("bichromatic index out of range");
    if (side[i] != kNone) {
      throw InputError("bichromatic sides overlap at index " + std::to_string(i));
    }
    side[i] = kRight;
    both.push_back(i);
  }

  bool distinct = false;
  for (std::size_t k = 1; k < both.size() && !distinct; ++k) {
    distinct = squared_distance(ps[both[0]], ps[both[k]]) != 0.0;
  }
  if (!distinct) {
    return out;
  }

  const PairDecomposition joint = ck_wspd(CompressedQuadtree(ps, both), eps);
  auto split = [&](const std::vector<std::size_t>& s, char want) {
    std::vector<std::size_t> r;
    for (std::size_t i : s) {
      if (side[i] == want) r.push_back(i);
    }
    return r;
  };
  auto emit = [&](std::vector<std::size_t> a, std::vector<std::size_t> b) {
    if (a.empty() || b.empty()) {
      return;
    }
    WspdPair p;
    p.rep_a = a.front();
    p.rep_b = b.front();
    p.a = std::move(a);
    p.b = std::move(b);
    out.pairs.push_back(std::move(p));
  };
  for (const WspdPair& p : joint.pairs) {
    emit(split(p.a, kLeft), split(p.b, kRight));
    emit(split(p.b, kLeft), split(p.a, kRight));
  }
  return out;
}

}  // namespace wspd
