#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cherrylab/types.hpp"

namespace cherrylab {

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on loops, duplicate edges or ids outside 1..n.
  // Endpoint order inside a pair does not matter.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v - 1); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v - 1).size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 1 && v <= order(); }

  // Sorted lexicographically, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

struct CherryStats {
  std::uint64_t total = 0;
  // Indexed by vertex - 1.
  std::vector<std::uint64_t> per_vertex_middle;
  std::vector<std::uint64_t> per_vertex_leaf;
};

// Number of paths on three vertices: sum over v of C(deg v, 2).
std::uint64_t count_cherries(const Graph& g);

// Number of cherries having u as one of the two leaves.
std::uint64_t leaf_cherry_count(const Graph& g, Vertex u);

CherryStats cherry_stats(const Graph& g);

struct DegreeOrder {
  std::vector<Vertex> order;  // degree descending, ties by ascending id
  std::vector<Vertex> large;  // first ell vertices of `order`
  std::vector<Vertex> small;  // the rest, in `order` order
  std::size_t max_small_degree = 0;
  // Whether Delta_S (Delta_S - 1) <= 2r / ell, evaluated exactly. Reported,
  // never assumed; vacuously true for ell = 0.
  bool small_degree_bound_holds = true;
  // rank[v - 1] is the position of v in `order`.
  std::vector<std::size_t> rank;
};

// Throws std::invalid_argument when ell > n.
DegreeOrder degree_order(const Graph& g, std::size_t ell);

struct EdgeBoundReport {
  double bound = 0.0;          // for display only
  std::uint64_t actual = 0;    // e(G) or e(T, G)
  bool holds = true;           // decided in integer arithmetic
};

// Edges versus max{n, sqrt(r n)}.
EdgeBoundReport extremal_edge_check(const Graph& g);

// Edges with at least one endpoint in `subset` versus max{4|T|, 2 sqrt(r |T|)}.
// Throws std::invalid_argument for repeated or out-of-range members.
EdgeBoundReport extremal_edge_check(const Graph& g, std::span<const Vertex> subset);

// Whether the max-degree vertex lies in at most r cherries: Delta (Delta - 1) <= 2r.
bool max_degree_cherry_bound_holds(const Graph& g);

// Eccentricity maximum over all vertices; std::nullopt when disconnected.
std::optional<std::size_t> diameter(const Graph& g);

}  // namespace cherrylab
