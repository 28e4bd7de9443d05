#include <gtest/gtest.h>

#include <random>

#include "cdt/cliques.hpp"
#include "cdt/graph6.hpp"
#include "cdt/local.hpp"
#include "cdt/turan.hpp"
#include "oracles.hpp"

using namespace cdt;

namespace {

Graph k7_minus_two(const std::vector<Edge>& missing) {
  std::vector<Edge> edges;
  for (const Edge& e : complete_graph(7).edges()) {
    if (std::find(missing.begin(), missing.end(), e) == missing.end()) edges.push_back(e);
  }
  return Graph(7, edges);
}

}  // namespace

TEST(CliqueCount, Examples) {
  EXPECT_EQ(clique_count(complete_graph(5), 3), 10u);
  EXPECT_EQ(clique_count(turan_graph(8, 4), 3), 32u);
  EXPECT_EQ(clique_count(turan_graph(7, 3), 3), 12u);
  EXPECT_EQ(clique_count(complete_graph(5), 0), 1u);
  EXPECT_EQ(clique_count(complete_graph(5), 1), 5u);
  EXPECT_EQ(clique_count(complete_graph(5), 6), 0u);
  EXPECT_EQ(clique_count(disjoint_union(complete_graph(3), complete_graph(3)), 3), 2u);
}

TEST(CliqueCount, MatchesSubsetScan) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 14, 0.2 + 0.6 * (trial % 7) / 6.0, rng);
    const std::vector<std::uint64_t> expected = oracle::clique_counts(g);
    const std::vector<Count> all = clique_counts(g);
    ASSERT_EQ(all.size(), expected.size());
    for (int t = 0; t <= g.n(); ++t) {
      ASSERT_EQ(clique_count(g, t), expected[t]) << graph6_encode(g) << " t=" << t;
      ASSERT_EQ(all[t], expected[t]) << graph6_encode(g) << " t=" << t;
    }
    ASSERT_EQ(clique_number(g), oracle::clique_number(g)) << graph6_encode(g);
  }
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(bt_graph(2)), 3);
  EXPECT_EQ(clique_number(bt_graph(3)), 3);
  EXPECT_EQ(clique_number(turan_graph(8, 4)), 4);
  EXPECT_EQ(clique_number(cycle_graph(5)), 2);
  EXPECT_EQ(clique_number(Graph(0)), 0);
  EXPECT_EQ(clique_number(empty_graph(4)), 1);
}

TEST(Weights, Examples) {
  const Graph k4 = complete_graph(4);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(vertex_weight(k4, v, 3), 3u);
  for (const Edge& e : k4.edges()) EXPECT_EQ(edge_weight(k4, e.first, e.second, 3), 2u);
  EXPECT_THROW(edge_weight(path_graph(3), 0, 2, 3), GraphError);
}

TEST(Weights, HandshakeOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 12, 0.5, rng);
    for (int t = 1; t <= 5; ++t) {
      Count total = 0;
      for (int v = 0; v < g.n(); ++v) total += vertex_weight(g, v, t);
      ASSERT_EQ(total, static_cast<Count>(t) * clique_count(g, t));
      if (t >= 2) {
        Count edge_total = 0;
        for (const Edge& e : g.edges()) edge_total += edge_weight(g, e.first, e.second, t);
        ASSERT_EQ(edge_total, static_cast<Count>(t * (t - 1) / 2) * clique_count(g, t));
      }
    }
  }
}

TEST(Density, Examples) {
  EXPECT_EQ(density(bt_graph(2), 3), Rational(15, 8));
  EXPECT_EQ(density(g_star(), 3), Rational(16, 7));
  EXPECT_EQ(density(Graph(1), 3), Rational(0));
  EXPECT_THROW(density(Graph(0), 3), GraphError);
}

TEST(PerfectVertex, Examples) {
  const Graph t73 = turan_graph(7, 3);  // parts {0,1,2}, {3,4}, {5,6}
  EXPECT_TRUE(is_perfect_vertex(t73, 3, 5, 3));
  EXPECT_FALSE(is_perfect_vertex(t73, 0, 5, 3));
  for (int v = 0; v < 8; ++v) EXPECT_FALSE(is_perfect_vertex(turan_graph(8, 4), v, 6, 5));
  EXPECT_THROW(is_perfect_vertex(complete_graph(4), 0, 3, 3), std::invalid_argument);
}

TEST(PerfectVertex, AttainsCeilingForEveryT) {
  const Graph g = turan_graph(7, 3);
  for (int t = 2; t <= 4; ++t) {
    EXPECT_EQ(vertex_weight(g, 3, t), clique_count(turan_graph(5, 2), t - 1)) << t;
  }
}

TEST(Border, WholeGraph) {
  const Graph g = turan_graph(7, 3);
  const BorderProfile p = border_profile(g, g.vertices(), 5);
  EXPECT_EQ(p.border_set, (VertexSet{0, 1, 2}));
  for (const BorderVertex& b : p.border) EXPECT_EQ(b.cross_degree, 0);
  EXPECT_EQ(p.max_cross, 0);
  EXPECT_EQ(p.border_clique_number, 1);
}

TEST(Detach, Examples) {
  BorderProfile profile;
  profile.border_clique_number = 2;
  profile.max_cross = 1;
  EXPECT_TRUE(detach_sufficient(profile, 4, false));
  EXPECT_FALSE(detach_sufficient(profile, 3, false));
  EXPECT_TRUE(detach_sufficient(profile, 3, true));

  // Triangles {0,1,2} and {2,3,4} share vertex 2.
  const Graph bowtie = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const VertexSet h{0, 1, 2};
  EXPECT_FALSE(is_detachable(bowtie, h, 3));
  EXPECT_NE(clique_count(bowtie, 3), clique_count(induced(bowtie, h), 3) +
                                          clique_count(induced(bowtie, bowtie.vertices() - h), 3));

  const Graph two = disjoint_union(complete_graph(3), cycle_graph(5));
  for (int t = 1; t <= 4; ++t) {
    EXPECT_TRUE(is_detachable(two, VertexSet{0, 1, 2}, t));
    const BorderProfile p = border_profile(two, VertexSet{0, 1, 2}, 4);
    EXPECT_EQ(p.max_cross, 0);
  }
}

TEST(Detach, ExactTestMatchesCountSplit) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 6, 0.5, rng);
    const VertexSet h(rng() & g.vertices().bits());
    for (int t = 1; t <= 4; ++t) {
      const bool split = clique_count(g, t) ==
                         clique_count(induced(g, h), t) + clique_count(induced(g, g.vertices() - h), t);
      ASSERT_EQ(is_detachable(g, h, t), split) << graph6_encode(g) << " h=" << h.bits() << " t=" << t;
    }
  }
}

TEST(Averaging, Examples) {
  EXPECT_EQ(kk1_bound(6, 3, 5, 3), Rational(15, 8));
  EXPECT_EQ(kk1_bound(7, 1, 5, 3), Rational(41, 18));
  for (int k = 0; k < 10; ++k) EXPECT_EQ(kk1_bound(k, 0, 5, 3), averaging_bound(k, 3));
  EXPECT_EQ(averaging_bound(6, 3), Rational(2));
  EXPECT_THROW(averaging_bound(1, 0), std::invalid_argument);
}

TEST(VertexCovers, Examples) {
  EXPECT_EQ(vertex_cover_count(complete_graph(3), 2), 3u);
  EXPECT_EQ(vertex_cover_count(disjoint_union(complete_graph(2), complete_graph(2)), 2), 4u);
  EXPECT_EQ(vertex_cover_count(disjoint_union(path_graph(4), Graph(1)), 2), 3u);
  EXPECT_EQ(vertex_cover_count(empty_graph(3), 0), 1u);
  EXPECT_EQ(vertex_cover_count(complete_graph(3), 4), 0u);
}

TEST(VertexCovers, MatchesSubsetScan) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 9, 0.35, rng);
    std::vector<Count> expected(static_cast<std::size_t>(g.n()) + 1, 0);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
      bool covers = true;
      for (const Edge& e : g.edges()) covers = covers && (((s >> e.first) | (s >> e.second)) & 1U);
      if (covers) ++expected[static_cast<std::size_t>(__builtin_popcountll(s))];
    }
    for (int k = 0; k <= g.n(); ++k) ASSERT_EQ(vertex_cover_count(g, k), expected[k]) << graph6_encode(g);
  }
}

TEST(Configurations, Examples) {
  const Graph one = k7_minus_two({{0, 1}, {2, 3}});
  const auto found = find_configurations(one, 6);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].vertices, one.vertices());
  EXPECT_FALSE(found[0].incident);

  const auto incident = find_configurations(k7_minus_two({{0, 1}, {1, 2}}), 6);
  ASSERT_EQ(incident.size(), 1u);
  EXPECT_TRUE(incident[0].incident);

  for (int r = 3; r <= 7; ++r) EXPECT_TRUE(find_configurations(turan_graph(r + 1, r), r).empty());

  const auto two = find_configurations(disjoint_union(one, one), 6);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE((two[0].vertices & two[1].vertices).empty());
}

TEST(Configurations, MatchesSubsetScan) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(6 + trial % 4, 0.8, rng);
    const int r = 3 + trial % 3;
    std::size_t expected = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
      if (__builtin_popcountll(s) != r + 1) continue;
      if (induced(g, VertexSet(s)).edge_count() == (r + 1) * r / 2 - 2) ++expected;
    }
    ASSERT_EQ(find_configurations(g, r).size(), expected) << graph6_encode(g) << " r=" << r;
  }
}

TEST(Border, ClosedNeighborhoodOfPerfectVertex) {
  const Graph g = turan_graph(7, 5);  // parts {0,1}, {2,3}, {4}, {5}, {6}
  ASSERT_TRUE(is_perfect_vertex(g, 6, 6, 5));
  const BorderProfile p = border_profile(g, neighborhood(g, 6, true), 6);
  EXPECT_EQ(p.border_set, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(p.border_clique_number, 2);
  EXPECT_LE(p.max_cross, 1);
  for (int t = 4; t <= 5; ++t) EXPECT_TRUE(detach_sufficient(p, t, false));
}

TEST(PerfectVertex, TuranEightFourInSixFive) {
  const Graph g = turan_graph(8, 4);
  for (int v = 0; v < 8; ++v) {
    EXPECT_EQ(vertex_weight(g, v, 3), 12u);
    EXPECT_FALSE(is_perfect_vertex(g, v, 6, 5));
  }
}
