#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cherrylab/coloring.hpp"
#include "cherrylab/graph.hpp"

namespace cherrylab {

// found: a witness is attached. none: the search space was exhausted.
// inconclusive: the node budget ran out first; never read as "none".
enum class SearchStatus { found, none, inconclusive };

std::string_view to_string(SearchStatus status);

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;  // partial maps extended
};

// Exhaustive backtracking over injections V(g) -> V(host). Pattern vertices are
// placed most-constrained first (most placed neighbors, then degree, then id);
// a partial map is pruned as soon as it carries a monochromatic cherry
// (proper) or a repeated color (rainbow).
SearchResult brute_force_embed(const Graph& g, const Coloring& c, CopyMode mode,
                               std::uint64_t node_budget = kDefaultNodeBudget);

// Looks for a rainbow copy of h with more than t of its image vertices in X.
// status none certifies that no such copy exists.
SearchResult rainbow_block_check(const Coloring& c, const Graph& h, std::span<const Vertex> X, std::size_t t,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

struct TreeWitness {
  Graph tree;           // on host vertices, labels unchanged
  Vertex center = 0;
  Embedding embedding;  // identity, mode proper
};

struct Radius2Result {
  SearchStatus status = SearchStatus::none;
  std::optional<TreeWitness> witness;
  std::uint64_t nodes = 0;
};

// Searches for a properly colored spanning tree of K_n of radius at most two.
// For each center x the children form a set with pairwise distinct colors to x;
// every other vertex z must then hang off a child y with c(y, z) != c(x, y) and
// the edges from one child to its own children pairwise distinct in color. The
// second stage is a bipartite matching of the remaining vertices onto
// (child, color) slots, so only child sets are enumerated.
Radius2Result radius2_spanning_tree_search(const Coloring& c, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace cherrylab
