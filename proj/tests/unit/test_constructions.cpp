#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cherrylab/constructions.hpp"
#include "cherrylab/galois_field.hpp"
#include "oracles.hpp"

using namespace cherrylab;

TEST(PartitionColoring, Boundedness) {
  for (std::size_t n : {6u, 9u, 12u, 30u}) {
    const Coloring c = partition_coloring(n);
    EXPECT_EQ(oracle::local_multiplicity(c), 3u);
    EXPECT_EQ(oracle::global_multiplicity(c), 9u);
  }
  const Coloring one = partition_coloring(3);
  EXPECT_EQ(one.distinct_colors(), 1u);
  EXPECT_THROW(partition_coloring(10), std::invalid_argument);
  EXPECT_THROW(partition_coloring(0), std::invalid_argument);
}

TEST(PartitionColoring, ClassSizesAtTwelve) {
  const auto report = boundedness_report(partition_coloring(12));
  std::size_t within = 0, cross = 0;
  for (auto [color, count] : report.per_color_totals) {
    if (count == 3) ++within;
    else if (count == 9) ++cross;
    else ADD_FAILURE() << "unexpected class size " << count;
  }
  EXPECT_EQ(within, 4u);
  EXPECT_EQ(cross, 6u);
}

TEST(Diam2Coloring, Examples) {
  const auto a = diam2_coloring(9, 9);
  EXPECT_EQ(a.parts, 3u);
  EXPECT_EQ(a.coloring, partition_coloring(9));

  const auto b = diam2_coloring(21, 7);
  EXPECT_EQ(b.parts, 3u);
  EXPECT_EQ(b.part_sizes, (std::vector<std::size_t>{7, 7, 7}));
  EXPECT_LE(oracle::local_multiplicity(b.coloring), 9u);

  const auto c = diam2_coloring(12, 6);
  EXPECT_EQ(c.parts, 2u);
  EXPECT_EQ(oracle::local_multiplicity(c.coloring), 6u);
  EXPECT_THROW(diam2_coloring(5, 2), std::invalid_argument);
  EXPECT_THROW(diam2_coloring(5, 6), std::invalid_argument);
}

TEST(Diam2Coloring, NearEqualPartsWithinBound) {
  for (std::size_t ell = 3; ell <= 20; ++ell)
    for (std::size_t n = ell; n <= 40; n += 3) {
      const auto d = diam2_coloring(n, ell);
      ASSERT_EQ(d.parts, (ell + 2) / 3);
      const auto [lo, hi] = std::minmax_element(d.part_sizes.begin(), d.part_sizes.end());
      ASSERT_LE(*hi - *lo, 1u);
      ASSERT_LE(oracle::local_multiplicity(d.coloring), (3 * n + ell - 1) / ell);
    }
}

TEST(LexBlock, StructureAndBound) {
  const Coloring c = lex_block_coloring(12, 2);  // X = {1..8}
  EXPECT_EQ(c(1, 5), c(1, 8));   // lexicographic inside X: min endpoint
  EXPECT_NE(c(1, 5), c(2, 5));
  EXPECT_EQ(c(3, 10), c(5, 10)); // cross edges colored by the outside endpoint
  EXPECT_NE(c(9, 10), c(11, 12));
  EXPECT_LE(oracle::global_multiplicity(c), 8u);
  EXPECT_THROW(lex_block_coloring(7, 2), std::invalid_argument);
}

TEST(Trees, CherryFormula) {
  for (std::uint64_t a = 1; a <= 6; ++a) {
    const std::uint64_t m = a * a * a;
    const Graph t = build_tree(TreeKind::radius_two_cube, m);
    ASSERT_EQ(t.order(), 1 + a * a + m);
    // m^{4/3} + (m - m^{2/3}) / 2, checked against path enumeration
    ASSERT_EQ(count_cherries(t), oracle::cherries(t));
    ASSERT_EQ(diameter(t).value_or(99), a == 1 ? 2u : 4u);
  }
  EXPECT_THROW(build_tree(TreeKind::radius_two_cube, 9), std::invalid_argument);
  const Graph sq = build_tree(TreeKind::radius_two_square, 16);
  EXPECT_EQ(sq.order(), 17u);
  EXPECT_EQ(sq.degree(1), 4u);
  EXPECT_THROW(build_tree(TreeKind::radius_two_square, 15), std::invalid_argument);
}

TEST(GaloisField, Axioms) {
  for (std::uint32_t q : FieldTable::supported_orders()) {
    FieldTable f(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      ASSERT_EQ(f.add(a, 0), a);
      ASSERT_EQ(f.mul(a, 1), a);
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c)
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    // the multiplicative group has no zero divisors
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b) ASSERT_NE(f.mul(a, b), 0u);
  }
  EXPECT_THROW(FieldTable(6), std::invalid_argument);
  EXPECT_THROW(FieldTable(5).inv(0), std::domain_error);
}

TEST(PolarityGraph, Properties) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Graph g = polarity_graph(q);
    ASSERT_EQ(g.order(), q * q + q + 1);
    ASSERT_EQ(g.max_degree(), q + 1);
    ASSERT_EQ(diameter(g), 2u);
    std::size_t absolute = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
      ASSERT_TRUE(g.degree(v) == q || g.degree(v) == q + 1);
      if (g.degree(v) == q) ++absolute;
    }
    ASSERT_EQ(absolute, q + 1);
    // independent oracle: recompute adjacency from the points with plain modular arithmetic
    if (q == 2 || q == 3 || q == 5 || q == 7) {
      const auto pts = projective_points(q);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          const auto& x = pts[i];
          const auto& y = pts[j];
          const bool orth = (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0;
          ASSERT_EQ(g.adjacent(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)), orth);
        }
    }
  }
}

TEST(RookUnion, Properties) {
  const Graph h3 = rook_union(3, 1);
  ASSERT_EQ(h3.order(), 9u);
  for (Vertex v = 1; v <= 9; ++v) EXPECT_EQ(h3.degree(v), 4u);
  EXPECT_EQ(diameter(h3), 2u);
  EXPECT_TRUE(neighborhoods_have_independence_at_most_two(h3));
  const Graph two = rook_union(4, 2);
  EXPECT_EQ(two.order(), 32u);
  EXPECT_FALSE(diameter(two).has_value());
  EXPECT_TRUE(two.adjacent(17, 18));
  EXPECT_FALSE(two.adjacent(1, 17));
  EXPECT_FALSE(neighborhoods_have_independence_at_most_two(oracle::star(3)));
}

TEST(RandomTree, DegreeCapAndConnectivity) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed * 3;
    const Graph t = random_tree(n, 3, seed);
    ASSERT_EQ(t.size(), n - 1);
    ASSERT_LE(t.max_degree(), 3u);
    ASSERT_TRUE(diameter(t).has_value());
    ASSERT_EQ(t, random_tree(n, 3, seed));
  }
  EXPECT_EQ(random_tree(1, 0, 0).order(), 1u);
  EXPECT_THROW(random_tree(5, 1, 0), std::invalid_argument);
}
