#ifndef CDT_TESTS_ORACLES_HPP
#define CDT_TESTS_ORACLES_HPP

// Slow, obviously-correct reference implementations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cdt/graph.hpp"

namespace oracle {

using cdt::Graph;

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

/// Labeled graph whose edge set is given by `mask` over all_pairs(n).
inline Graph from_mask(int n, std::uint64_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<cdt::Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1U) edges.push_back(pairs[i]);
  }
  return Graph(n, edges);
}

inline std::uint64_t to_mask(const Graph& g) {
  const auto pairs = all_pairs(g.n());
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (g.has_edge(pairs[i].first, pairs[i].second)) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

/// Smallest edge mask over all relabelings.
inline std::uint64_t min_relabeling(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, to_mask(cdt::permuted(g, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative edge mask per isomorphism class of n-vertex graphs.
inline std::set<std::uint64_t> catalog(int n) {
  std::set<std::uint64_t> forms;
  const std::uint64_t total = std::uint64_t{1} << all_pairs(n).size();
  for (std::uint64_t m = 0; m < total; ++m) forms.insert(min_relabeling(from_mask(n, m)));
  return forms;
}

inline bool is_clique(const Graph& g, std::uint64_t set) {
  for (int u = 0; u < g.n(); ++u) {
    if (!((set >> u) & 1U)) continue;
    for (int v = u + 1; v < g.n(); ++v) {
      if (((set >> v) & 1U) && !g.has_edge(u, v)) return false;
    }
  }
  return true;
}

inline std::vector<std::uint64_t> clique_counts(const Graph& g) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
    if (is_clique(g, s)) ++counts[static_cast<std::size_t>(__builtin_popcountll(s))];
  }
  return counts;
}

inline bool has_clique_of_size(const Graph& g, int k) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
    if (__builtin_popcountll(s) == k && is_clique(g, s)) return true;
  }
  return false;
}

inline int clique_number(const Graph& g) {
  const auto counts = oracle::clique_counts(g);
  int best = 0;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (counts[t] > 0) best = static_cast<int>(t);
  }
  return best;
}

/// orbit[v] = min over automorphisms s of s(v).
inline std::vector<int> orbits(const Graph& g) {
  std::vector<int> orbit(static_cast<std::size_t>(g.n()));
  std::iota(orbit.begin(), orbit.end(), 0);
  std::vector<int> perm(orbit);
  do {
    if (cdt::permuted(g, perm) == g) {
      for (int v = 0; v < g.n(); ++v) orbit[v] = std::min(orbit[v], perm[v]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbit;
}

/// Number of isomorphism classes of n-vertex graphs satisfying an
/// isomorphism-invariant predicate, by Burnside's lemma over cycle types.
template <class Pred>
std::uint64_t burnside_count(int n, Pred&& pred) {
  const auto pairs = all_pairs(n);
  std::vector<std::uint64_t> factorial(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * static_cast<std::uint64_t>(i);
  std::uint64_t weighted = 0;
  std::vector<int> parts;
  auto visit_type = [&] {
    std::vector<int> perm;
    std::uint64_t centralizer = 1;
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    int start = 0;
    for (int len : parts) {
      for (int i = 0; i < len; ++i) perm.push_back(start + (i + 1) % len);
      start += len;
      centralizer *= static_cast<std::uint64_t>(len);
      centralizer *= static_cast<std::uint64_t>(++mult[len]);
    }
    // Edge orbits of the permutation, as masks over `pairs`.
    std::vector<std::uint64_t> orbit_masks;
    std::uint64_t assigned = 0;
    auto index_of = [&](int u, int v) {
      if (u > v) std::swap(u, v);
      return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) - pairs.begin());
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((assigned >> i) & 1U) continue;
      std::uint64_t mask = 0;
      auto [u, v] = pairs[i];
      for (std::size_t j = i; !((mask >> j) & 1U); j = index_of(u, v)) {
        mask |= std::uint64_t{1} << j;
        u = perm[u];
        v = perm[v];
      }
      assigned |= mask;
      orbit_masks.push_back(mask);
    }
    std::uint64_t fixed = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << orbit_masks.size()); ++s) {
      std::uint64_t mask = 0;
      for (std::size_t k = 0; k < orbit_masks.size(); ++k) {
        if ((s >> k) & 1U) mask |= orbit_masks[k];
      }
      if (pred(from_mask(n, mask))) ++fixed;
    }
    weighted += fixed * (factorial[n] / centralizer);
  };
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      visit_type();
      return;
    }
    for (int len = std::min(left, max_part); len >= 1; --len) {
      parts.push_back(len);
      self(self, left - len, len);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return weighted / factorial[n];
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<cdt::Edge> edges;
  for (const auto& e : all_pairs(n)) {
    if (edge(rng)) edges.push_back(e);
  }
  return Graph(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle

#endif  // CDT_TESTS_ORACLES_HPP
