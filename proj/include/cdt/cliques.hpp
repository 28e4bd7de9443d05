#ifndef CDT_CLIQUES_HPP
#define CDT_CLIQUES_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "cdt/graph.hpp"
#include "cdt/rational.hpp"

namespace cdt {

using Count = std::uint64_t;

namespace detail {

// Cliques are built in increasing vertex order; `cand` holds the common
// neighbors of the current clique that come after its last vertex.
inline void count_all_cliques(const Graph& g, std::uint64_t cand, int depth, std::vector<Count>& counts) {
  for (std::uint64_t rest = cand; rest != 0;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    ++counts[depth + 1];
    const std::uint64_t next = rest & g.row(v);
    if (next != 0) count_all_cliques(g, next, depth + 1, counts);
  }
}

inline Count count_cliques_of_size(const Graph& g, std::uint64_t cand, int need) {
  if (need == 0) return 1;
  if (need == 1) return static_cast<Count>(std::popcount(cand));
  if (need == 2) {
    Count total = 0;
    for (std::uint64_t rest = cand; rest != 0;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      total += static_cast<Count>(std::popcount(rest & g.row(v)));
    }
    return total;
  }
  Count total = 0;
  for (std::uint64_t rest = cand; rest != 0 && std::popcount(rest) >= need;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    const std::uint64_t next = rest & g.row(v);
    if (std::popcount(next) >= need - 1) total += count_cliques_of_size(g, next, need - 1);
  }
  return total;
}

inline bool find_clique(const Graph& g, std::uint64_t cand, int need) {
  if (need <= 0) return true;
  if (std::popcount(cand) < need) return false;
  if (need == 1) return true;
  for (std::uint64_t rest = cand; rest != 0 && std::popcount(rest) >= need;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (find_clique(g, rest & g.row(v), need - 1)) return true;
  }
  return false;
}

inline void grow_max_clique(const Graph& g, std::uint64_t cand, int size, int& best) {
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  for (std::uint64_t rest = cand; rest != 0;) {
    if (size + std::popcount(rest) <= best) return;
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    grow_max_clique(g, rest & g.row(v), size + 1, best);
  }
}

}  // namespace detail

/// counts[t] = k_t(G) for t = 0..n, with k_0 = 1.
inline std::vector<Count> clique_counts(const Graph& g) {
  std::vector<Count> counts(static_cast<std::size_t>(g.n()) + 1, 0);
  counts[0] = 1;
  detail::count_all_cliques(g, g.vertices().bits(), 0, counts);
  return counts;
}

/// k_t(G[within]): number of t-vertex cliques inside the vertex set.
inline Count clique_count_in(const Graph& g, VertexSet within, int t) {
  if (t < 0) return 0;
  return detail::count_cliques_of_size(g, within.bits(), t);
}

/// k_t(G); k_0 = 1, k_1 = n, and zero for t > n.
inline Count clique_count(const Graph& g, int t) { return clique_count_in(g, g.vertices(), t); }

/// Whether G[within] contains a clique on k vertices.
inline bool has_clique(const Graph& g, VertexSet within, int k) {
  return detail::find_clique(g, within.bits(), k);
}

inline int clique_number_in(const Graph& g, VertexSet within) {
  int best = 0;
  detail::grow_max_clique(g, within.bits(), 0, best);
  return best;
}

/// omega(G); 0 for the graph with no vertices.
inline int clique_number(const Graph& g) { return clique_number_in(g, g.vertices()); }

/// t-weight k_t(v): number of t-cliques containing v.
inline Count vertex_weight(const Graph& g, int v, int t) {
  const VertexSet nbrs = g.neighbors(v);
  if (t <= 0) return 0;
  return clique_count_in(g, nbrs, t - 1);
}

/// t-weight k_t(uv) of an edge: number of t-cliques containing both ends.
inline Count edge_weight(const Graph& g, int u, int v, int t) {
  if (!g.has_edge(u, v)) {
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  if (t < 2) return 0;
  return clique_count_in(g, g.neighbors(u) & g.neighbors(v), t - 2);
}

/// rho_t(G) = k_t(G) / n.
inline Rational density(const Graph& g, int t) {
  if (g.n() == 0) throw GraphError("density of the graph with no vertices");
  return Rational(Integer(clique_count(g, t)), Integer(g.n()));
}

}  // namespace cdt

#endif  // CDT_CLIQUES_HPP
