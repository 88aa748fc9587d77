#pragma once

// Brute-force references used to check the library. They share no code with
// it beyond the Graph/Coloring containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "cherrylab/coloring.hpp"
#include "cherrylab/graph.hpp"

namespace oracle {

using cherrylab::Color;
using cherrylab::Coloring;
using cherrylab::Graph;
using cherrylab::Vertex;

// Paths a - b - c with a < c.
inline std::uint64_t cherries(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::uint64_t count = 0;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex c = a + 1; c <= n; ++c)
      for (Vertex b = 1; b <= n; ++b)
        if (b != a && b != c && g.adjacent(a, b) && g.adjacent(b, c)) ++count;
  return count;
}

// Cherries with u as a leaf.
inline std::uint64_t leaf_cherries(const Graph& g, Vertex u) {
  const auto n = static_cast<Vertex>(g.order());
  std::uint64_t count = 0;
  for (Vertex b = 1; b <= n; ++b) {
    if (b == u || !g.adjacent(u, b)) continue;
    for (Vertex c = 1; c <= n; ++c)
      if (c != u && c != b && g.adjacent(b, c)) ++count;
  }
  return count;
}

inline std::uint64_t local_multiplicity(const Coloring& c) {
  const auto n = static_cast<Vertex>(c.order());
  std::uint64_t best = 0;
  for (Vertex v = 1; v <= n; ++v) {
    std::map<Color, std::uint64_t> count;
    for (Vertex w = 1; w <= n; ++w)
      if (w != v) best = std::max(best, ++count[c(v, w)]);
  }
  return best;
}

inline std::uint64_t global_multiplicity(const Coloring& c) {
  const auto n = static_cast<Vertex>(c.order());
  std::map<Color, std::uint64_t> count;
  std::uint64_t best = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) best = std::max(best, ++count[c(u, v)]);
  return best;
}

// Unordered monochromatic triples {a, center, b}, counted once per center.
inline std::uint64_t mono_triples(const Coloring& c) {
  const auto n = static_cast<Vertex>(c.order());
  std::uint64_t count = 0;
  for (Vertex m = 1; m <= n; ++m)
    for (Vertex a = 1; a <= n; ++a)
      for (Vertex b = a + 1; b <= n; ++b)
        if (a != m && b != m && c(a, m) == c(m, b)) ++count;
  return count;
}

inline std::uint64_t mono_disjoint_pairs(const Coloring& c) {
  const auto n = static_cast<Vertex>(c.order());
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto [a, b] = e[i];
      auto [x, y] = e[j];
      if (a == x || a == y || b == x || b == y) continue;
      if (c(a, b) == c(x, y)) ++count;
    }
  return count;
}

// Whether the image of g under map is proper / rainbow, straight from the
// definitions.
inline bool is_proper(const Coloring& c, const Graph& g, const std::vector<Vertex>& map) {
  for (Vertex m = 1; m <= g.order(); ++m) {
    auto nb = g.neighbors(m);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (c(map[nb[i] - 1], map[m - 1]) == c(map[m - 1], map[nb[j] - 1])) return false;
  }
  return true;
}

inline bool is_rainbow(const Coloring& c, const Graph& g, const std::vector<Vertex>& map) {
  std::vector<Color> seen;
  for (const auto& e : g.edges()) seen.push_back(c(map[e.u - 1], map[e.v - 1]));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// Enumerates every injection (host subsets of size |g| times all orders).
inline std::optional<std::vector<Vertex>> any_copy(const Coloring& c, const Graph& g, bool rainbow) {
  const std::size_t np = g.order(), nh = c.order();
  if (np > nh) return std::nullopt;
  std::vector<char> choose(nh, 0);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(np), 1);
  do {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < nh; ++i)
      if (choose[i]) sub.push_back(static_cast<Vertex>(i + 1));
    do {
      if (rainbow ? is_rainbow(c, g, sub) : is_proper(c, g, sub)) return sub;
    } while (std::next_permutation(sub.begin(), sub.end()));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return std::nullopt;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& gen) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(gen)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Coloring random_coloring(std::size_t n, Color palette, std::mt19937_64& gen) {
  std::uniform_int_distribution<Color> pick(0, palette - 1);
  Coloring c(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) c.set(u, v, pick(gen));
  return c;
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(1, static_cast<Vertex>(n));
  return Graph::from_edges(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return Graph::from_edges(leaves + 1, e);
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Coloring rainbow_host(std::size_t n) {
  Color next = 0;
  return Coloring::from_function(n, [&](Vertex, Vertex) { return next++; });
}

}  // namespace oracle
