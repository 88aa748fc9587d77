#include "cherrylab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace cherrylab {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n) {
      throw std::invalid_argument("edge {" + std::to_string(a) + ", " + std::to_string(b) +
                                  "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + ", " +
                                std::to_string(dup->v) + "}");
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u - 1].push_back(e.v);
    g.adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

namespace {

std::uint64_t choose2(std::uint64_t d) { return d < 2 ? 0 : d * (d - 1) / 2; }

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(g.order()));
  }
}

using u128 = unsigned __int128;

}  // namespace

std::uint64_t count_cherries(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 1; v <= g.order(); ++v) total += choose2(g.degree(v));
  return total;
}

std::uint64_t leaf_cherry_count(const Graph& g, Vertex u) {
  require_vertex(g, u);
  std::uint64_t total = 0;
  for (Vertex w : g.neighbors(u)) total += g.degree(w) - 1;
  return total;
}

CherryStats cherry_stats(const Graph& g) {
  CherryStats stats;
  stats.per_vertex_middle.resize(g.order());
  stats.per_vertex_leaf.resize(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) {
    stats.per_vertex_middle[v - 1] = choose2(g.degree(v));
    stats.per_vertex_leaf[v - 1] = leaf_cherry_count(g, v);
    stats.total += stats.per_vertex_middle[v - 1];
  }
  return stats;
}

DegreeOrder degree_order(const Graph& g, std::size_t ell) {
  const std::size_t n = g.order();
  if (ell > n) {
    throw std::invalid_argument("ell = " + std::to_string(ell) + " exceeds the vertex count " +
                                std::to_string(n));
  }
  DegreeOrder out;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), Vertex{1});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  out.large.assign(out.order.begin(), out.order.begin() + static_cast<std::ptrdiff_t>(ell));
  out.small.assign(out.order.begin() + static_cast<std::ptrdiff_t>(ell), out.order.end());
  for (Vertex v : out.small) out.max_small_degree = std::max(out.max_small_degree, g.degree(v));
  out.rank.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.rank[out.order[i] - 1] = i;
  if (ell > 0) {
    const u128 d = out.max_small_degree;
    const u128 lhs = d * (d == 0 ? 0 : d - 1) * ell;
    out.small_degree_bound_holds = lhs <= u128{2} * count_cherries(g);
  }
  return out;
}

EdgeBoundReport extremal_edge_check(const Graph& g) {
  const std::uint64_t n = g.order();
  const std::uint64_t r = count_cherries(g);
  EdgeBoundReport report;
  report.actual = g.size();
  report.bound = std::max(static_cast<double>(n), std::sqrt(static_cast<double>(r) * n));
  const u128 e = report.actual;
  report.holds = e <= n || e * e <= u128{r} * n;
  return report;
}

EdgeBoundReport extremal_edge_check(const Graph& g, std::span<const Vertex> subset) {
  std::vector<bool> in_subset(g.order() + 1, false);
  for (Vertex v : subset) {
    require_vertex(g, v);
    if (in_subset[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " repeated in subset");
    in_subset[v] = true;
  }
  const std::uint64_t t = subset.size();
  const std::uint64_t r = count_cherries(g);
  EdgeBoundReport report;
  for (const Edge& e : g.edges()) {
    if (in_subset[e.u] || in_subset[e.v]) ++report.actual;
  }
  report.bound = std::max(4.0 * static_cast<double>(t), 2.0 * std::sqrt(static_cast<double>(r) * t));
  const u128 e = report.actual;
  report.holds = e <= 4 * u128{t} || e * e <= 4 * u128{r} * t;
  return report;
}

bool max_degree_cherry_bound_holds(const Graph& g) {
  const u128 d = g.max_degree();
  return d * (d == 0 ? 0 : d - 1) <= u128{2} * count_cherries(g);
}

std::optional<std::size_t> diameter(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  for (Vertex s = 1; s <= n; ++s) {
    std::fill(dist.begin(), dist.end(), unseen);
    std::queue<Vertex> frontier;
    dist[s - 1] = 0;
    frontier.push(s);
    std::size_t reached = 1;
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w - 1] != unseen) continue;
        dist[w - 1] = dist[v - 1] + 1;
        best = std::max(best, dist[w - 1]);
        ++reached;
        frontier.push(w);
      }
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

}  // namespace cherrylab
