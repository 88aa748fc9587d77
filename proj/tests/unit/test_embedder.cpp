#include <gtest/gtest.h>

#include "cherrylab/constructions.hpp"
#include "cherrylab/embedder.hpp"
#include "cherrylab/search.hpp"
#include "oracles.hpp"

using namespace cherrylab;

namespace {

// Spanning radius-two tree on 9 vertices: center 1, children 2..5, leaf 5+i under child 1+i.
Graph spider9() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex c = 2; c <= 5; ++c) {
    e.emplace_back(1, c);
    e.emplace_back(c, c + 4);
  }
  return Graph::from_edges(9, e);
}

// Exact co-degree cap comparison written with doubles widened by a safety
// margin; only used where values are far from the boundary.
bool codegree_ok(const Coloring& c, const std::vector<Vertex>& P, std::uint64_t k, std::uint64_t r) {
  const double cap = 5.0 * static_cast<double>(k) * std::pow(static_cast<double>(r), 0.25);
  const auto n = static_cast<Vertex>(c.order());
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      std::uint64_t codeg = 0;
      for (Vertex v = 1; v <= n; ++v)
        if (v != P[i] && v != P[j] && c(P[i], v) == c(v, P[j])) ++codeg;
      if (static_cast<double>(codeg) > cap + 1e-9) return false;
    }
  return true;
}

}  // namespace

TEST(CliqueTarget, ExactCeiling) {
  EXPECT_EQ(clique_target_size(0), 0u);
  EXPECT_EQ(clique_target_size(1), 2u);
  EXPECT_EQ(clique_target_size(16), 4u);
  EXPECT_EQ(clique_target_size(17), 5u);
  for (std::uint64_t r = 1; r < 5000; ++r) {
    const auto t = clique_target_size(r);
    ASSERT_GE(t * t * t * t, 16 * r);
    ASSERT_LT((t - 1) * (t - 1) * (t - 1) * (t - 1), 16 * r);
  }
}

TEST(FindClique, RainbowHostAcceptsQuickly) {
  const Coloring c = oracle::rainbow_host(600);
  EmbedConfig config;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    config.seed = seed;
    const auto res = find_clique_P(c, 1, 1, Boundedness::global, config);
    EXPECT_EQ(res.P.size(), 2u);
    EXPECT_EQ(res.P.size() + res.Q.size(), 600u);
    EXPECT_LE(res.attempts, 10u);
    EXPECT_TRUE(check_clique_invariants(c, res.P, 1, 1, Boundedness::global).all());
  }
}

TEST(FindClique, Preconditions) {
  EmbedConfig config;
  EXPECT_THROW(find_clique_P(partition_coloring(9), 16, 3, Boundedness::local, config), ThresholdViolation);
  EXPECT_THROW(find_clique_P(partition_coloring(9), 16, 2, Boundedness::local, config), std::invalid_argument);
  EXPECT_THROW(find_clique_P(partition_coloring(9), 16, 0, Boundedness::local, config), std::invalid_argument);
  const auto empty = find_clique_P(partition_coloring(9), 0, 3, Boundedness::local, config);
  EXPECT_TRUE(empty.P.empty());
  EXPECT_EQ(empty.Q.size(), 9u);
}

TEST(FindClique, ExhaustionReportsAttempts) {
  // Monochromatic host: every sampled triple is monochromatic, so at most two
  // vertices can survive and a target of 4 is unreachable.
  const Coloring mono(300, 0);
  EmbedConfig config;
  config.clique_retry_cap = 7;
  try {
    find_clique_P(mono, 16, 299, Boundedness::local, config, false);
    FAIL() << "expected CliqueFailure";
  } catch (const CliqueFailure& e) {
    EXPECT_EQ(e.attempts(), 7u);
    EXPECT_LE(e.best_size(), 2u);
  }
}

TEST(FindClique, LocalHostsSatisfyInvariants) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Coloring c = random_bounded_coloring(1500, 2, Boundedness::local, seed);
    EmbedConfig config;
    config.seed = seed;
    const auto res = find_clique_P(c, 16, 2, Boundedness::local, config, false);
    ASSERT_EQ(res.P.size(), 4u);
    ASSERT_TRUE(std::is_sorted(res.P.begin(), res.P.end()));
    ASSERT_TRUE(check_clique_invariants(c, res.P, 16, 2, Boundedness::local).all());
    ASSERT_TRUE(codegree_ok(c, res.P, 2, 16));
    ASSERT_TRUE(oracle::is_proper(c, oracle::complete(4), res.P));
  }
}

TEST(FindClique, GlobalHostsGiveRainbowSets) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Coloring c = random_bounded_coloring(800, 3, Boundedness::global, seed);
    EmbedConfig config;
    config.seed = seed;
    const auto res = find_clique_P(c, 5, 3, Boundedness::global, config, false);
    ASSERT_TRUE(oracle::is_rainbow(c, oracle::complete(res.P.size()), res.P));
    ASSERT_TRUE(codegree_ok(c, res.P, 3, 5));
  }
}

TEST(CliqueInvariants, DetectsViolations) {
  const Coloring mono(10, 0);
  std::vector<Vertex> P{1, 2, 3};
  const auto inv = check_clique_invariants(mono, P, 1, 1, Boundedness::local);
  EXPECT_FALSE(inv.coloring_ok);
  EXPECT_FALSE(inv.codegree_ok);
  EXPECT_TRUE(inv.size_ok);
  std::vector<Vertex> one{1};
  EXPECT_FALSE(check_clique_invariants(mono, one, 1, 1, Boundedness::local).size_ok);
}

TEST(RandomBijection, SwapsKeepBijection) {
  Rng rng(4);
  std::vector<Vertex> S{4, 7, 9, 10, 12};
  std::vector<Vertex> Q{1, 2, 3, 5, 6};
  RandomBijection f(S, Q, rng);
  EXPECT_TRUE(f.is_bijection());
  for (int i = 0; i < 200; ++i) {
    f.swap_images(S[rng.below(5)], S[rng.below(5)]);
    ASSERT_TRUE(f.is_bijection());
  }
  EXPECT_FALSE(f.in_domain(5));
  EXPECT_THROW(f.image(5), std::out_of_range);
  EXPECT_THROW(RandomBijection(S, std::vector<Vertex>{1}, rng), std::invalid_argument);
}

TEST(ResampleEvent, TouchesEverySmallCoordinate) {
  Rng rng(1);
  std::vector<Vertex> S{1, 2, 3, 4, 5};
  RandomBijection f(S, S, rng);
  BadEvent ev;
  ev.shape = BadEvent::Shape::cherry;
  ev.pattern = {2, 3, 5, 0};
  ev.cls = EventClass::B1;
  for (int i = 0; i < 50; ++i) {
    const auto touched = resample_event(f, ev, rng);
    for (Vertex u : {2u, 3u, 5u}) ASSERT_NE(std::find(touched.begin(), touched.end(), u), touched.end());
    ASSERT_TRUE(f.is_bijection());
  }
  std::vector<Vertex> one{7};
  std::vector<Vertex> img{3};
  RandomBijection g(one, img, rng);
  ev.pattern = {1, 7, 2, 0};
  resample_event(g, ev, rng);
  EXPECT_EQ(g.image(7), 3u);
}

TEST(Embed, HamiltonPathIntoRainbowHost) {
  EmbedConfig config;
  const auto out = embed(oracle::path(8), oracle::rainbow_host(8), config);
  ASSERT_TRUE(out.embedding.has_value());
  EXPECT_EQ(out.report.resamples, 0u);
}

TEST(Embed, RainbowHostNeedsNoResamples) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(5 + trial % 20, 0.3, gen);
    const Coloring c = oracle::rainbow_host(g.order() + trial % 3);
    for (CopyMode mode : {CopyMode::proper, CopyMode::rainbow}) {
      EmbedConfig config;
      config.mode = mode;
      config.seed = static_cast<std::uint64_t>(trial);
      const auto out = embed(g, c, config);
      ASSERT_TRUE(out.report.success);
      ASSERT_EQ(out.report.resamples, 0u);
    }
  }
}

TEST(Embed, RadiusTwoTreeIntoPartitionColoringFails) {
  const Graph t = spider9();
  const Coloring c = partition_coloring(9);
  EmbedConfig config;
  config.max_resamples = 2000;
  config.max_restarts = 3;
  const auto out = embed(t, c, config);
  EXPECT_FALSE(out.embedding.has_value());
  EXPECT_EQ(out.report.restarts, 3u);
  EXPECT_GT(out.report.final_violations, 0u);
  EXPECT_FALSE(out.report.within_threshold);
  EXPECT_EQ(brute_force_embed(t, c, CopyMode::proper).status, SearchStatus::none);
}

TEST(Embed, UniqueBadTripleResolvesQuickly) {
  Coloring c = oracle::rainbow_host(12);
  c.set(2, 3, c(1, 2));
  ASSERT_EQ(oracle::mono_triples(c), 1u);
  const Graph p = oracle::path(12);
  std::uint64_t worst = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    EmbedConfig config;
    config.seed = seed;
    config.max_restarts = 1;
    const auto out = embed(p, c, config);
    ASSERT_TRUE(out.report.success) << seed;
    worst = std::max(worst, out.report.resamples);
  }
  EXPECT_LE(worst, 100u);
}

TEST(Embed, DebugChecksAgreeWithIncrementalTracking) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_tree(18 + seed % 10, 3, seed);
    for (CopyMode mode : {CopyMode::proper, CopyMode::rainbow}) {
      const Coloring c = random_bounded_coloring(g.order(), 2, boundedness_for(mode), seed + 100);
      EmbedConfig config;
      config.mode = mode;
      config.seed = seed;
      config.max_resamples = 5000;
      const auto fast = embed(g, c, config);
      config.debug_checks = true;
      const auto checked = embed(g, c, config);  // throws on any divergence
      ASSERT_EQ(fast.embedding, checked.embedding);
      ASSERT_EQ(fast.report.resamples, checked.report.resamples);
      if (checked.embedding) ASSERT_TRUE(check_copy(c, g, *checked.embedding).ok);
    }
  }
}

TEST(Embed, ThreadCountDoesNotChangeResults) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_tree(60, 3, seed);
    const Coloring c = random_bounded_coloring(60, 2, Boundedness::local, seed);
    EmbedConfig config;
    config.seed = seed;
    const auto one = embed(g, c, config);
    config.threads = 4;
    const auto four = embed(g, c, config);
    ASSERT_EQ(one.embedding, four.embedding);
    ASSERT_EQ(one.report.resamples, four.report.resamples);
  }
}

TEST(Embed, FirstEventPickAndNonSpanning) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_tree(12, 3, seed);
    const Coloring c = random_bounded_coloring(30, 2, Boundedness::local, seed);
    EmbedConfig config;
    config.seed = seed;
    config.event_pick = EventPick::first;
    const auto out = embed(g, c, config);
    ASSERT_TRUE(out.embedding.has_value());
    EXPECT_FALSE(out.report.spanning);
    std::vector<Vertex> img = out.embedding->map;
    std::sort(img.begin(), img.end());
    ASSERT_EQ(std::adjacent_find(img.begin(), img.end()), img.end());
    ASSERT_TRUE(oracle::is_proper(c, g, out.embedding->map));
  }
  EXPECT_THROW(embed(oracle::path(5), oracle::rainbow_host(4), EmbedConfig{}), std::invalid_argument);
}

TEST(Embed, AgreesWithExhaustiveSearchAtDeskScale) {
  std::mt19937_64 gen(31);
  int none_cases = 0, found_cases = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t nh = 4 + trial % 6;
    const std::size_t np = nh - gen() % 2;
    const Graph g = oracle::random_graph(np, 0.35 + 0.1 * (trial % 4), gen);
    const Coloring c = oracle::random_coloring(nh, 2 + gen() % 3, gen);
    const CopyMode mode = trial % 2 ? CopyMode::rainbow : CopyMode::proper;
    const auto brute = brute_force_embed(g, c, mode);
    ASSERT_NE(brute.status, SearchStatus::inconclusive);
    const bool exists = oracle::any_copy(c, g, mode == CopyMode::rainbow).has_value();
    ASSERT_EQ(brute.status == SearchStatus::found, exists);
    EmbedConfig config;
    config.mode = mode;
    config.seed = static_cast<std::uint64_t>(trial);
    config.max_resamples = 3000;
    config.max_restarts = 4;
    const auto out = embed(g, c, config);
    if (!exists) {
      ASSERT_FALSE(out.report.success);
      ++none_cases;
    }
    if (out.report.success) {
      ASSERT_TRUE(exists);
      ++found_cases;
    }
  }
  EXPECT_GT(none_cases, 0);
  EXPECT_GT(found_cases, 0);
}
