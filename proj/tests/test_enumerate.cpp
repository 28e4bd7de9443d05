#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>

#include "cdt/enumerate.hpp"
#include "cdt/graph6.hpp"
#include "oracles.hpp"

using namespace cdt;

namespace {

// Isomorphism classes of n-vertex graphs, as oracle representatives.
const std::vector<Graph>& catalog_graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Graph> graphs;
    for (std::uint64_t m : oracle::catalog(n)) graphs.push_back(oracle::from_mask(n, m));
    it = cache.emplace(n, std::move(graphs)).first;
  }
  return it->second;
}

Count filtered_count(int n, int delta, int omega) {
  Count c = 0;
  for (const Graph& g : catalog_graphs(n)) {
    if (max_degree(g) <= delta && oracle::clique_number(g) <= omega) ++c;
  }
  return c;
}

std::vector<std::uint64_t> visited_classes(int n, int delta, int omega) {
  std::vector<std::uint64_t> out;
  enumerate_class(n, delta, omega, [&](const Graph& g) { out.push_back(oracle::min_relabeling(g)); });
  return out;
}

}  // namespace

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_class(4, 3, 4, [](const Graph&) {}), 11u);
  EXPECT_EQ(enumerate_class(3, 0, 3, [](const Graph& g) { EXPECT_EQ(g.edge_count(), 0); }), 1u);
  EXPECT_EQ(enumerate_class(5, 2, 3, [](const Graph&) {}), filtered_count(5, 2, 3));
  EXPECT_EQ(catalog_graphs(5).size(), 34u);
}

TEST(Enumerate, KnownTotals) {
  const std::vector<Count> expected{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<Count> counts = count_class(ClassSpec{0, 8, 8, 8});
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(counts[n], expected[n]) << n;
}

TEST(Enumerate, OneRepresentativePerClassUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (int delta = 0; delta < n; ++delta) {
      for (int omega = 1; omega <= n; ++omega) {
        const std::vector<std::uint64_t> seen = visited_classes(n, delta, omega);
        const std::set<std::uint64_t> distinct(seen.begin(), seen.end());
        ASSERT_EQ(distinct.size(), seen.size()) << n << ' ' << delta << ' ' << omega;
        ASSERT_EQ(seen.size(), filtered_count(n, delta, omega)) << n << ' ' << delta << ' ' << omega;
        for (std::uint64_t m : seen) {
          const Graph g = oracle::from_mask(n, m);
          ASSERT_LE(max_degree(g), delta);
          ASSERT_LE(oracle::clique_number(g), omega);
        }
      }
    }
  }
}

TEST(Enumerate, BurnsideCountsAtSeven) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(oracle::burnside_count(n, [](const Graph&) { return true; }), catalog_graphs(n).size());
  }
  EXPECT_EQ(oracle::burnside_count(7, [](const Graph&) { return true; }), 1044u);
  for (const auto& [delta, omega] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 3}, {5, 4}, {6, 5}, {3, 2}}) {
    const std::uint64_t expected = oracle::burnside_count(7, [d = delta, w = omega](const Graph& g) {
      return max_degree(g) <= d && !oracle::has_clique_of_size(g, w + 1);
    });
    EXPECT_EQ(enumerate_class(7, delta, omega, [](const Graph&) {}), expected) << delta << ' ' << omega;
  }
}

TEST(Enumerate, PruningMatchesFilteringUnconstrained) {
  // Canonical forms of the constrained run equal those of the unconstrained
  // run filtered afterwards.
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::tuple<std::string, int, int>> all;
    enumerate_class(n, n, n, [&](const Graph& g) {
      all.emplace_back(canonical_form(g), max_degree(g), clique_number(g));
    });
    for (int delta = 0; delta <= std::min(6, n - 1); ++delta) {
      for (int omega = 1; omega <= std::min(6, n); ++omega) {
        std::set<std::string> expected;
        for (const auto& [form, d, w] : all) {
          if (d <= delta && w <= omega) expected.insert(form);
        }
        std::set<std::string> got;
        enumerate_class(n, delta, omega, [&](const Graph& g) { got.insert(canonical_form(g)); });
        ASSERT_EQ(got, expected) << n << ' ' << delta << ' ' << omega;
      }
    }
  }
}

TEST(Enumerate, ThreadCountDoesNotChangeResults) {
  struct Forms {
    std::vector<std::string> forms;
    void operator()(const Graph& g) { forms.push_back(canonical_form(g)); }
    void merge(Forms&& o) { forms.insert(forms.end(), o.forms.begin(), o.forms.end()); }
  };
  const ClassSpec spec{1, 9, 5, 4};
  std::vector<std::string> reference;
  for (int threads : {1, 2, 8}) {
    EnumerationOptions opt;
    opt.threads = threads;
    const Forms f = reduce_class<Forms>(spec, opt, [] { return Forms{}; });
    if (threads == 1) {
      reference = f.forms;
      EXPECT_EQ(std::set<std::string>(reference.begin(), reference.end()).size(), reference.size());
    } else {
      EXPECT_EQ(f.forms, reference) << threads;
    }
  }
}

TEST(Enumerate, PruneSkipsDescendantsOnly) {
  EnumerationOptions opt;
  opt.prune = [](const Graph& g) { return g.n() == 3 && g.edge_count() == 0; };
  const std::vector<Count> pruned = count_class(ClassSpec{1, 5, 4, 5}, opt);
  const std::vector<Count> full = count_class(ClassSpec{1, 5, 4, 5});
  EXPECT_EQ(pruned[3], full[3]);
  EXPECT_LT(pruned[4], full[4]);
  EXPECT_LT(pruned[5], full[5]);
}

TEST(Enumerate, Caps) {
  EXPECT_THROW(enumerate_class(12, 3, 3, [](const Graph&) {}), CapExceeded);
  EXPECT_THROW(enumerate_class(5, 3, 3, [](const Graph&) {}, kHardSearchCap + 1), CapExceeded);
  EXPECT_NO_THROW(enumerate_class(3, 2, 2, [](const Graph&) {}, 12));
  EXPECT_THROW(count_class(ClassSpec{5, 4, 3, 3}), std::invalid_argument);
}
