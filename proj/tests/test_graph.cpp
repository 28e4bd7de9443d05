#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "cdt/canonical.hpp"
#include "cdt/graph.hpp"
#include "cdt/graph6.hpp"
#include "cdt/turan.hpp"
#include "oracles.hpp"

using namespace cdt;

namespace {

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{Graph(0),         Graph(1),          complete_graph(3), complete_graph(4),
                         cycle_graph(5),   path_graph(4),     turan_graph(7, 3), turan_graph(8, 4),
                         bt_graph(2),      bt_graph(3),       g_star(),          complete_multipartite({1, 2, 3}),
                         cycle_graph(9),   empty_graph(6)};
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 12; ++n) out.push_back(oracle::random_graph(n, 0.45, rng));
  return out;
}

}  // namespace

TEST(GraphCore, BuildsFromEdges) {
  const Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3.edge_count(), 3);
  EXPECT_EQ(max_degree(k3), 2);
  EXPECT_EQ(build_graph(1, {}).edge_count(), 0);
  const Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);
  EXPECT_EQ(build_graph(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count(), 1);
}

TEST(GraphCore, RejectsBadInput) {
  EXPECT_THROW(build_graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(build_graph(3, {{-1, 2}}), GraphError);
  EXPECT_THROW(Graph(65), GraphError);
  EXPECT_THROW(disjoint_union(Graph(40), Graph(30)), GraphError);
  EXPECT_THROW(join(Graph(40), Graph(30)), GraphError);
  EXPECT_THROW(complete_graph(3).neighbors(3), GraphError);
}

TEST(GraphCore, SixtyFourVertices) {
  const Graph k64 = complete_graph(64);
  EXPECT_TRUE(k64.is_well_formed());
  EXPECT_EQ(k64.edge_count(), 64 * 63 / 2);
  EXPECT_EQ(k64.edges().size(), 64u * 63 / 2);
  EXPECT_EQ(max_degree(k64), 63);
}

TEST(GraphCore, EveryConstructorIsWellFormed) {
  for (const Graph& g : sample_graphs()) {
    EXPECT_TRUE(g.is_well_formed());
    EXPECT_TRUE(complement(g).is_well_formed());
  }
}

TEST(GraphCore, Complement) {
  EXPECT_EQ(complement(complete_graph(3)), empty_graph(3));
  for (const Graph& g : sample_graphs()) EXPECT_EQ(complement(complement(g)), g);
  // turan_graph(5,2) lays out parts 3,2.
  EXPECT_EQ(complement(turan_graph(5, 2)), disjoint_union(complete_graph(3), complete_graph(2)));
  EXPECT_TRUE(is_isomorphic(complement(turan_graph(5, 2)), disjoint_union(complete_graph(2), complete_graph(3))));
}

TEST(GraphCore, Induced) {
  EXPECT_EQ(induced(complete_graph(4), VertexSet{0, 2, 3}), complete_graph(3));
  for (const Graph& g : sample_graphs()) EXPECT_EQ(induced(g, g.vertices()), g);
  // turan_graph(7,3) lays out parts 3,2,2.
  EXPECT_EQ(induced(turan_graph(7, 3), VertexSet{0, 1, 2}), empty_graph(3));
  EXPECT_THROW(induced(complete_graph(3), VertexSet{0, 5}), GraphError);
}

TEST(GraphCore, UnionAndJoinCounts) {
  const std::vector<Graph> gs = sample_graphs();
  for (std::size_t i = 0; i + 1 < gs.size(); i += 3) {
    const Graph& g = gs[i];
    const Graph& h = gs[i + 1];
    const Graph u = disjoint_union(g, h);
    const Graph j = join(g, h);
    EXPECT_EQ(u.n(), g.n() + h.n());
    EXPECT_EQ(j.n(), g.n() + h.n());
    EXPECT_EQ(u.edge_count(), g.edge_count() + h.edge_count());
    EXPECT_EQ(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
  }
  const Graph bt2 = join(cycle_graph(5), empty_graph(3));
  EXPECT_EQ(bt2.n(), 8);
  EXPECT_EQ(bt2.edge_count(), 20);
  EXPECT_TRUE(is_isomorphic(bt2, bt_graph(2)));
  const Graph g = cycle_graph(6);
  const Graph apex = join(Graph(1), g);
  EXPECT_EQ(apex.degree(0), 6);
  EXPECT_EQ(induced(apex, apex.vertices() - VertexSet{0}), g);
}

TEST(GraphCore, Neighborhoods) {
  const Graph k23 = complete_multipartite({2, 3});
  EXPECT_EQ(neighborhood(k23, 0, false), (VertexSet{2, 3, 4}));
  EXPECT_EQ(neighborhood(complete_graph(4), 1, true), VertexSet::first(4));
  EXPECT_EQ(neighborhood(g_star(), 6, false), (VertexSet{0, 1, 2, 3}));
  EXPECT_THROW(neighborhood(k23, 5, false), GraphError);
}

TEST(GraphCore, MaxDegree) {
  EXPECT_EQ(max_degree(turan_graph(7, 3)), 5);
  EXPECT_EQ(max_degree(empty_graph(5)), 0);
  EXPECT_EQ(max_degree(Graph(0)), 0);
  for (int k = 2; k <= 5; ++k) EXPECT_EQ(max_degree(bt_graph(k)), 2 * k + 1);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(complete_graph(3)), "Bw");
  EXPECT_EQ(graph6_encode(complete_graph(4)), "C~");
  EXPECT_EQ(graph6_encode(Graph(1)), "@");
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
  // P_4 0-1-2-3: column bits 1,0,1,0,0,1 -> 0b101001 = 41 -> 'h'
  EXPECT_EQ(graph6_encode(path_graph(4)), "Ch");
}

TEST(Graph6, LongHeader) {
  const Graph g = cycle_graph(63);
  const std::string text = graph6_encode(g);
  EXPECT_EQ(text.substr(0, 4), std::string("~??~"));
  EXPECT_EQ(graph6_decode(text), g);
  EXPECT_EQ(graph6_decode(graph6_encode(complete_graph(64))), complete_graph(64));
}

TEST(Graph6, RoundTrip) {
  for (const Graph& g : sample_graphs()) EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
  for (int n = 0; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << oracle::all_pairs(n).size();
    for (std::uint64_t m = 0; m < total; ++m) {
      const Graph g = oracle::from_mask(n, m);
      EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
    }
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(6 + trial % 5, 0.5, rng);
    EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
  }
}

TEST(Graph6, HeaderAndNewlineAccepted) {
  EXPECT_EQ(graph6_decode(">>graph6<<Bw"), complete_graph(3));
  EXPECT_EQ(graph6_decode("Bw\n"), complete_graph(3));
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(graph6_decode(""), Graph6Error);
  EXPECT_THROW(graph6_decode("C"), Graph6Error);
  EXPECT_THROW(graph6_decode("Bww"), Graph6Error);
  EXPECT_THROW(graph6_decode("B\x7f"), Graph6Error);
  EXPECT_THROW(graph6_decode("B "), Graph6Error);
  EXPECT_THROW(graph6_decode("~?@A"), Graph6Error);
  EXPECT_THROW(graph6_decode("~"), Graph6Error);
}

TEST(Canonical, ElevenFourVertexClasses) {
  std::set<std::string> forms;
  for (std::uint64_t m = 0; m < 64; ++m) forms.insert(canonical_form(oracle::from_mask(4, m)));
  EXPECT_EQ(forms.size(), 11u);
  EXPECT_EQ(oracle::catalog(4).size(), 11u);
}

TEST(Canonical, MatchesBruteForceClassesUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << oracle::all_pairs(n).size();
    std::map<std::string, std::uint64_t> by_form;
    std::set<std::uint64_t> classes;
    for (std::uint64_t m = 0; m < total; ++m) {
      const Graph g = oracle::from_mask(n, m);
      const std::uint64_t cls = oracle::min_relabeling(g);
      classes.insert(cls);
      const auto [it, inserted] = by_form.emplace(canonical_form(g), cls);
      ASSERT_EQ(it->second, cls) << "canonical form shared by non-isomorphic graphs at n=" << n;
    }
    EXPECT_EQ(by_form.size(), classes.size()) << "n=" << n;
  }
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(2024);
  for (const Graph& g : sample_graphs()) {
    const std::string form = canonical_form(g);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph h = permuted(g, oracle::random_permutation(g.n(), rng));
      ASSERT_EQ(canonical_form(h), form) << graph6_encode(g);
    }
  }
}

TEST(Canonical, DistinguishesSmallGraphs) {
  EXPECT_NE(canonical_form(complete_graph(3)), canonical_form(path_graph(3)));
  EXPECT_EQ(canonical_form(cycle_graph(4)), canonical_form(build_graph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})));
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
  EXPECT_FALSE(is_isomorphic(complete_graph(3), complete_graph(4)));
  EXPECT_TRUE(is_isomorphic(turan_graph(6, 3), complete_multipartite({2, 2, 2})));
}

TEST(Canonical, LabelingIsAnIsomorphism) {
  for (const Graph& g : sample_graphs()) {
    const CanonicalLabeling lab = canonical_labeling(g);
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) perm[v] = lab.position[v];
    EXPECT_EQ(permuted(g, perm), lab.graph());
    for (int i = 0; i < g.n(); ++i) EXPECT_EQ(lab.position[lab.order[i]], i);
  }
}

TEST(Canonical, OrbitsMatchBruteForce) {
  std::vector<Graph> graphs;
  for (const Graph& g : sample_graphs()) {
    if (g.n() <= 7) graphs.push_back(g);
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) graphs.push_back(oracle::random_graph(3 + trial % 5, 0.5, rng));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << 10); ++m) graphs.push_back(oracle::from_mask(5, m));
  for (const Graph& g : graphs) {
    const CanonicalLabeling lab = canonical_labeling(g);
    const std::vector<int> expected = oracle::orbits(g);
    bool nontrivial = false;
    for (int v = 0; v < g.n(); ++v) {
      EXPECT_EQ(lab.orbit[v], expected[v]) << graph6_encode(g) << " v=" << v;
      nontrivial = nontrivial || expected[v] != v;
    }
    EXPECT_EQ(lab.trivial_group(), !nontrivial) << graph6_encode(g);
  }
}

TEST(Canonical, TrivialGroupDetectedForAsymmetricGraphs) {
  // The smallest asymmetric graphs have 6 vertices.
  int asymmetric = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << 15); ++m) {
    const Graph g = oracle::from_mask(6, m);
    if (!canonical_labeling(g).trivial_group()) continue;
    ++asymmetric;
    const std::vector<int> orbit = oracle::orbits(g);
    for (int v = 0; v < 6; ++v) ASSERT_EQ(orbit[v], v) << graph6_encode(g);
  }
  EXPECT_GT(asymmetric, 0);
}
