#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cherrylab/coloring.hpp"
#include "cherrylab/graph.hpp"

namespace cherrylab {

// Encodes the unordered part-index pair {i, j} (0-based, i <= j) as a color id;
// {i, i} is the within-part color of part i.
Color part_pair_color(std::uint32_t i, std::uint32_t j);

// Consecutive triples {1,2,3}, {4,5,6}, ...; edge xy gets the color of the
// pair of parts containing x and y. Locally 3-bounded and globally 9-bounded.
// total_n must be a positive multiple of 3.
Coloring partition_coloring(std::size_t total_n);

struct Diam2Coloring {
  Coloring coloring;
  std::size_t parts = 0;
  std::vector<std::size_t> part_sizes;
  std::uint64_t local_bound = 0;  // ceil(3n / ell)
  std::uint64_t k_local = 0;      // measured
};

// ceil(ell / 3) consecutive parts of near-equal size, colored by part pair.
// Requires ell >= 3 and n >= ell.
Diam2Coloring diam2_coloring(std::size_t n, std::size_t ell);

// Lexicographic on X = {1..4 ell}, color y on edges from X to y outside X, and
// fresh ids n+1, n+2, ... (pair-rank order) outside X. Requires n >= 4 ell >= 4.
Coloring lex_block_coloring(std::size_t n, std::size_t ell);

enum class TreeKind { radius_two_cube, radius_two_square };

// radius_two_cube (T_m): m a perfect cube a^3; a center with a^2 children, each
// child with a leaf-children. radius_two_square (T'_m): m a perfect square s^2;
// a center with s children, each with s - 1 leaf-children. Vertex 1 is the
// center, then the children, then the leaves grouped by parent.
Graph build_tree(TreeKind kind, std::uint64_t m);

// Orthogonal polarity graph of PG(2, q) on canonical point representatives
// (first nonzero coordinate 1). Order, degrees and diameter are checked before
// return. q must be one of FieldTable::supported_orders().
Graph polarity_graph(std::uint32_t q);

// Projective points of PG(2, q) in the vertex order used by polarity_graph.
std::vector<std::array<std::uint32_t, 3>> projective_points(std::uint32_t q);

// `copies` disjoint rook graphs on m x m grids. Copy c, cell (i, j) (0-based)
// is vertex c m^2 + i m + j + 1.
Graph rook_union(std::size_t m, std::size_t copies);

// Uniformly attached random tree on n vertices with maximum degree at most
// max_degree (>= 2 when n >= 3), labels shuffled. Deterministic given the seed.
Graph random_tree(std::size_t n, std::size_t max_degree, std::uint64_t seed);

// Whether every neighborhood of g is free of independent triples.
bool neighborhoods_have_independence_at_most_two(const Graph& g);

}  // namespace cherrylab
