#include <gtest/gtest.h>

#include <cmath>

#include "cherrylab/constructions.hpp"
#include "cherrylab/graph.hpp"
#include "oracles.hpp"

using namespace cherrylab;

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  std::vector<std::pair<Vertex, Vertex>> dup{{1, 2}, {2, 1}};
  std::vector<std::pair<Vertex, Vertex>> range{{1, 4}};
  EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, dup), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, range), std::invalid_argument);
}

TEST(Graph, AdjacencySortedAndConsistent) {
  std::vector<std::pair<Vertex, Vertex>> e{{3, 1}, {2, 1}, {3, 2}};
  Graph g = Graph::from_edges(3, e);
  ASSERT_EQ(g.size(), 3u);
  auto nb = g.neighbors(1);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_EQ(g.edges().front(), (Edge{1, 2}));
}

TEST(Cherries, SmallExamples) {
  EXPECT_EQ(count_cherries(oracle::complete(3)), 3u);
  EXPECT_EQ(count_cherries(oracle::star(4)), 6u);
  const Graph t8 = build_tree(TreeKind::radius_two_cube, 8);
  EXPECT_EQ(t8.order(), 13u);
  EXPECT_EQ(count_cherries(t8), oracle::cherries(t8));
  EXPECT_EQ(count_cherries(t8), 18u);
}

TEST(Cherries, MatchesPathEnumeration) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * (trial % 7) / 7.0, gen);
    ASSERT_EQ(count_cherries(g), oracle::cherries(g));
    const auto stats = cherry_stats(g);
    std::uint64_t sum = 0;
    for (Vertex v = 1; v <= n; ++v) {
      ASSERT_EQ(leaf_cherry_count(g, v), oracle::leaf_cherries(g, v));
      ASSERT_EQ(stats.per_vertex_leaf[v - 1], oracle::leaf_cherries(g, v));
      sum += stats.per_vertex_middle[v - 1];
    }
    ASSERT_EQ(sum, stats.total);
  }
}

TEST(Cherries, LeafCountExamples) {
  EXPECT_EQ(leaf_cherry_count(oracle::path(3), 1), 1u);
  EXPECT_EQ(leaf_cherry_count(oracle::star(4), 2), 3u);
  for (Vertex v = 1; v <= 3; ++v) EXPECT_EQ(leaf_cherry_count(oracle::complete(3), v), 2u);
  EXPECT_THROW(leaf_cherry_count(oracle::path(3), 4), std::out_of_range);
}

TEST(DegreeOrder, Examples) {
  auto o = degree_order(oracle::star(4), 1);
  EXPECT_EQ(o.large, std::vector<Vertex>{1});
  EXPECT_EQ(o.max_small_degree, 1u);

  o = degree_order(oracle::complete(3), 0);
  EXPECT_TRUE(o.large.empty());
  EXPECT_EQ(o.max_small_degree, 2u);

  o = degree_order(build_tree(TreeKind::radius_two_cube, 8), 3);
  EXPECT_EQ(o.large, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(o.max_small_degree, 3u);
  EXPECT_THROW(degree_order(oracle::path(3), 4), std::invalid_argument);
}

TEST(DegreeOrder, SortedStableAndDeterministic) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(20, 0.2, gen);
    const auto a = degree_order(g, 4);
    const auto b = degree_order(g, 4);
    ASSERT_EQ(a.order, b.order);
    for (std::size_t i = 1; i < a.order.size(); ++i) {
      const auto du = g.degree(a.order[i - 1]), dv = g.degree(a.order[i]);
      ASSERT_TRUE(du > dv || (du == dv && a.order[i - 1] < a.order[i]));
    }
    for (std::size_t i = 0; i < a.order.size(); ++i) ASSERT_EQ(a.rank[a.order[i] - 1], i);
  }
}

TEST(ExtremalBounds, Examples) {
  auto all = extremal_edge_check(oracle::complete(3));
  EXPECT_EQ(all.actual, 3u);
  EXPECT_DOUBLE_EQ(all.bound, 3.0);
  EXPECT_TRUE(all.holds);
  std::vector<Vertex> center{1};
  auto t = extremal_edge_check(oracle::star(4), center);
  EXPECT_EQ(t.actual, 4u);
  EXPECT_NEAR(t.bound, std::max(4.0, 2.0 * std::sqrt(6.0)), 1e-12);
  EXPECT_TRUE(t.holds);
  std::vector<Vertex> bad{1, 1};
  EXPECT_THROW(extremal_edge_check(oracle::star(4), bad), std::invalid_argument);
}

TEST(ExtremalBounds, PropertySuite) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + gen() % 30;
    const Graph g = oracle::random_graph(n, (gen() % 100) / 100.0, gen);
    ASSERT_TRUE(extremal_edge_check(g).holds);
    ASSERT_TRUE(max_degree_cherry_bound_holds(g));
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{1});
    std::shuffle(all.begin(), all.end(), gen);
    all.resize(1 + gen() % n);
    ASSERT_TRUE(extremal_edge_check(g, all).holds);
    const auto r = count_cherries(g);
    for (Vertex u = 1; u <= n; ++u) {
      const double leaf = static_cast<double>(leaf_cherry_count(g, u));
      ASSERT_LE(leaf * leaf, 2.0 * r * g.degree(u) + 1e-9);
    }
  }
}

TEST(Diameter, Basic) {
  EXPECT_EQ(diameter(oracle::path(5)), 4u);
  EXPECT_EQ(diameter(oracle::complete(4)), 1u);
  std::vector<std::pair<Vertex, Vertex>> e{{1, 2}};
  EXPECT_FALSE(diameter(Graph::from_edges(3, e)).has_value());
}
