#include "wspd/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "wspd/error.hpp"

namespace wspd {

EuclideanMetric::EuclideanMetric(PointSet points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw InputError("euclidean metric over an empty point set");
  }
}

EuclideanMetric euclidean_metric(const PointSet& ps) { return EuclideanMetric(ps); }

MatrixMetric::MatrixMetric(std::size_t n, std::vector<double> entries) : n_(n), d_(std::move(entries)) {
  if (d_.size() != n * n) {
    throw InputError("distance matrix must have n*n entries");
  }
}

UnitDistanceGraph::UnitDistanceGraph(PointSet points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n > 0 && points_.dim() < 2) {
    throw ParameterError("unit-distance graphs need dimension >= 2");
  }
  adjacency_.resize(n);

  // Sweep over points sorted by first coordinate; only a window of width 1
  // can hold neighbors.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points_[a][0] < points_[b][0]; });
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t u = order[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t v = order[b];
      if (points_[v][0] - points_[u][0] > 1.0) {
        break;
      }
      const double sq = squared_distance(points_[u], points_[v]);
      if (sq <= 1.0) {
        const double w = std::sqrt(sq);
        adjacency_[u].push_back({v, w});
        adjacency_[v].push_back({u, w});
        ++edge_count_;
      }
    }
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const Edge& x, const Edge& y) { return x.to < y.to; });
  }

  if (n == 0) {
    connected_ = true;
    return;
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (const Edge& e : adjacency_[u]) {
      if (!seen[e.to]) {
        seen[e.to] = 1;
        ++reached;
        stack.push_back(e.to);
      }
    }
  }
  connected_ = reached == n;
}

UnitDistanceGraph build_unit_distance_graph(const PointSet& ps) { return UnitDistanceGraph(ps); }

std::vector<double> dijkstra(const UnitDistanceGraph& g, std::size_t source) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.size(), inf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) {
      continue;
    }
    for (const Edge& e : g.neighbors(u)) {
      const double nd = d + e.weight;
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        heap.push({nd, e.to});
      }
    }
  }
  return dist;
}

GraphMetric::GraphMetric(std::shared_ptr<const UnitDistanceGraph> graph) : graph_(std::move(graph)) {
  if (!graph_ || graph_->size() == 0) {
    throw InputError("graph metric over an empty graph");
  }
  if (!graph_->connected()) {
    throw DisconnectedGraphError("unit-distance graph is disconnected; graph distances would be infinite");
  }
  const std::size_t n = graph_->size();
  once_ = std::make_unique<std::once_flag[]>(n);
  rows_ = std::make_unique<std::vector<double>[]>(n);
  ready_ = std::make_unique<std::atomic<bool>[]>(n);
  for (std::size_t i = 0; i < n; ++i) {
    ready_[i].store(false, std::memory_order_relaxed);
  }
}

bool GraphMetric::has_row(std::size_t source) const { return ready_[source].load(std::memory_order_acquire); }

std::span<const double> GraphMetric::row(std::size_t source) const {
  std::call_once(once_[source], [&] {
    rows_[source] = dijkstra(*graph_, source);
    ready_[source].store(true, std::memory_order_release);
  });
  return rows_[source];
}

double GraphMetric::operator()(std::size_t i, std::size_t j) const {
  if (i == j) {
    return 0.0;
  }
  // Always read the row of the smaller index. Dijkstra sums edge weights in
  // path order from its source, so rows i and j can disagree in the last bit.
  return i < j ? row(i)[j] : row(j)[i];
}

double GraphMetric::diameter_upper_bound() const {
  const auto r = row(0);
  return 2.0 * *std::max_element(r.begin(), r.end());
}

std::size_t GraphMetric::cached_rows() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    c += has_row(i) ? 1 : 0;
  }
  return c;
}

GraphMetric graph_metric(std::shared_ptr<const UnitDistanceGraph> g) { return GraphMetric(std::move(g)); }

GraphMetric graph_metric(const UnitDistanceGraph& g) {
  return GraphMetric(std::make_shared<const UnitDistanceGraph>(g));
}

std::vector<std::vector<std::size_t>> Packing::cells() const {
  std::vector<std::vector<std::size_t>> out(picks.size());
  for (std::size_t p = 0; p < owner.size(); ++p) {
    out[owner[p]].push_back(p);
  }
  return out;
}

std::vector<std::size_t> voronoi_assign(const FiniteMetric& m, std::span<const std::size_t> picks) {
  if (picks.empty()) {
    throw InputError("voronoi assignment needs at least one pick");
  }
  const std::size_t n = m.size();
  std::vector<std::size_t> owner(n, 0);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  // Pick-major loop keeps graph metrics on one cached row at a time; strict
  // improvement keeps the lowest position on ties.
  for (std::size_t k = 0; k < picks.size(); ++k) {
    for (std::size_t p = 0; p < n; ++p) {
      const double d = m(p, picks[k]);
      if (d < best[p]) {
        best[p] = d;
        owner[p] = k;
      }
    }
  }
  return owner;
}

Packing greedy_packing(const FiniteMetric& m, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw ParameterError("packing radius must be positive and finite");
  }
  const std::size_t n = m.size();
  if (n == 0) {
    throw InputError("packing of an empty point set");
  }
  Packing out;
  out.radius = r;
  // nearest[p] tracks the distance from p to the current pick set, so each
  // new pick costs one pass over the points.
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  for (std::size_t p = 0; p < n; ++p) {
    if (nearest[p] >= r) {
      out.picks.push_back(p);
      for (std::size_t q = p; q < n; ++q) {
        nearest[q] = std::min(nearest[q], m(q, p));
      }
    }
  }
  out.owner = voronoi_assign(m, out.picks);
  return out;
}

}  // namespace wspd
