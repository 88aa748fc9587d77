#include "cherrylab/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cherrylab/galois_field.hpp"
#include "cherrylab/random.hpp"

namespace cherrylab {

Color part_pair_color(std::uint32_t i, std::uint32_t j) {
  if (i > j) std::swap(i, j);
  return static_cast<Color>(j * (j + 1) / 2 + i);
}

namespace {

// Colors pairs by the part-index pair of their endpoints; part_of is 0-based.
Coloring color_by_parts(std::size_t n, const std::vector<std::uint32_t>& part_of) {
  return Coloring::from_function(n, [&](Vertex u, Vertex v) {
    return part_pair_color(part_of[u - 1], part_of[v - 1]);
  });
}

std::uint64_t exact_root(std::uint64_t m, int degree) {
  auto root = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(m), 1.0 / degree)));
  for (std::uint64_t cand = root > 0 ? root - 1 : 0; cand <= root + 1; ++cand) {
    std::uint64_t power = 1;
    for (int i = 0; i < degree; ++i) power *= cand;
    if (power == m) return cand;
  }
  return 0;
}

}  // namespace

Coloring partition_coloring(std::size_t total_n) {
  if (total_n < 3 || total_n % 3 != 0) {
    throw std::invalid_argument("partition_coloring needs a positive multiple of 3, got " +
                                std::to_string(total_n));
  }
  std::vector<std::uint32_t> part_of(total_n);
  for (std::size_t v = 0; v < total_n; ++v) part_of[v] = static_cast<std::uint32_t>(v / 3);
  return color_by_parts(total_n, part_of);
}

Diam2Coloring diam2_coloring(std::size_t n, std::size_t ell) {
  if (ell < 3) throw std::invalid_argument("diam2_coloring needs ell >= 3");
  if (n < ell) throw std::invalid_argument("diam2_coloring needs n >= ell");
  Diam2Coloring out;
  out.parts = (ell + 2) / 3;
  out.part_sizes.resize(out.parts);
  std::vector<std::uint32_t> part_of;
  part_of.reserve(n);
  for (std::size_t p = 0; p < out.parts; ++p) {
    out.part_sizes[p] = n / out.parts + (p < n % out.parts ? 1 : 0);
    part_of.insert(part_of.end(), out.part_sizes[p], static_cast<std::uint32_t>(p));
  }
  out.coloring = color_by_parts(n, part_of);
  out.local_bound = (3 * n + ell - 1) / ell;
  out.k_local = max_local_multiplicity(out.coloring);
  if (out.k_local > out.local_bound) {
    throw std::logic_error("diam2_coloring: measured local multiplicity " + std::to_string(out.k_local) +
                           " exceeds ceil(3n/ell) = " + std::to_string(out.local_bound));
  }
  return out;
}

Coloring lex_block_coloring(std::size_t n, std::size_t ell) {
  if (ell < 1 || n < 4 * ell) throw std::invalid_argument("lex_block_coloring needs n >= 4 ell >= 4");
  const Vertex block = static_cast<Vertex>(4 * ell);
  Color fresh = static_cast<Color>(n);
  Coloring c = Coloring::from_function(n, [&](Vertex u, Vertex v) -> Color {
    if (v <= block) return u;  // u < v, both in X
    if (u <= block) return v;  // v outside X
    return ++fresh;
  });
  if (max_global_multiplicity(c) > block) throw std::logic_error("lex_block_coloring exceeded 4 ell");
  return c;
}

Graph build_tree(TreeKind kind, std::uint64_t m) {
  std::uint64_t children;
  std::uint64_t leaves_per_child;
  if (kind == TreeKind::radius_two_cube) {
    std::uint64_t a = exact_root(m, 3);
    if (a == 0) throw std::invalid_argument("T_m needs m to be a positive perfect cube, got " + std::to_string(m));
    children = a * a;
    leaves_per_child = a;
  } else {
    std::uint64_t s = exact_root(m, 2);
    if (s == 0) throw std::invalid_argument("T'_m needs m to be a positive perfect square, got " + std::to_string(m));
    children = s;
    leaves_per_child = s - 1;
  }
  const std::uint64_t n = 1 + children + children * leaves_per_child;
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  Vertex next_leaf = static_cast<Vertex>(children + 2);
  for (std::uint64_t i = 0; i < children; ++i) {
    Vertex child = static_cast<Vertex>(i + 2);
    edges.emplace_back(1, child);
    for (std::uint64_t j = 0; j < leaves_per_child; ++j) edges.emplace_back(child, next_leaf++);
  }
  return Graph::from_edges(n, edges);
}

std::vector<std::array<std::uint32_t, 3>> projective_points(std::uint32_t q) {
  std::vector<std::array<std::uint32_t, 3>> points;
  points.reserve(q * q + q + 1);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) points.push_back({1, a, b});
  for (std::uint32_t b = 0; b < q; ++b) points.push_back({0, 1, b});
  points.push_back({0, 0, 1});
  return points;
}

Graph polarity_graph(std::uint32_t q) {
  FieldTable field(q);
  auto points = projective_points(q);
  auto dot = [&](const auto& x, const auto& y) {
    std::uint32_t s = 0;
    for (int i = 0; i < 3; ++i) s = field.add(s, field.mul(x[i], y[i]));
    return s;
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (dot(points[i], points[j]) == 0) edges.emplace_back(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
  Graph g = Graph::from_edges(points.size(), edges);

  std::size_t absolute = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    const std::size_t d = g.degree(v);
    if (d != q && d != q + 1) throw std::logic_error("polarity graph vertex with degree " + std::to_string(d));
    if (d == q) ++absolute;
  }
  if (g.order() != std::size_t{q} * q + q + 1 || g.max_degree() != q + 1 || absolute != q + 1 ||
      diameter(g) != std::optional<std::size_t>{2}) {
    throw std::logic_error("polarity graph of order " + std::to_string(q) + " failed verification");
  }
  return g;
}

bool neighborhoods_have_independence_at_most_two(const Graph& g) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
      }
  }
  return true;
}

Graph rook_union(std::size_t m, std::size_t copies) {
  if (m < 2 || copies < 1) throw std::invalid_argument("rook_union needs m >= 2 and copies >= 1");
  auto build = [m](std::size_t count) {
    const std::size_t cells = m * m;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t c = 0; c < count; ++c) {
      auto id = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>(c * cells + i * m + j + 1); };
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t j2 = j + 1; j2 < m; ++j2) edges.emplace_back(id(i, j), id(i, j2));
          for (std::size_t i2 = i + 1; i2 < m; ++i2) edges.emplace_back(id(i, j), id(i2, j));
        }
    }
    return Graph::from_edges(count * cells, edges);
  };
  // All copies are identical, so one copy carries the verification.
  Graph single = build(1);
  for (Vertex v = 1; v <= single.order(); ++v) {
    if (single.degree(v) != 2 * m - 2) throw std::logic_error("rook graph is not (2m-2)-regular");
  }
  if (diameter(single) != std::optional<std::size_t>{2} || !neighborhoods_have_independence_at_most_two(single)) {
    throw std::logic_error("rook graph failed verification");
  }
  return copies == 1 ? single : build(copies);
}

Graph random_tree(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree needs n >= 1");
  if (n >= 3 && max_degree < 2) throw std::invalid_argument("a tree on 3 or more vertices needs max degree >= 2");
  if (n == 2 && max_degree < 1) throw std::invalid_argument("a tree on 2 vertices needs max degree >= 1");
  Rng rng(seed);
  std::vector<Vertex> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<Vertex>(i + 1);
  rng.shuffle(std::span<Vertex>(label));
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::size_t> open{0};  // attachable (degree below the cap) among placed
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t slot = static_cast<std::size_t>(rng.below(open.size()));
    const std::size_t parent = open[slot];
    edges.emplace_back(label[parent], label[v]);
    if (++degree[parent] == max_degree) {
      open[slot] = open.back();
      open.pop_back();
    }
    degree[v] = 1;
    if (max_degree > 1) open.push_back(v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace cherrylab
