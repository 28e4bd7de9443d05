#ifndef CDT_LOCAL_HPP
#define CDT_LOCAL_HPP

// Local structure used to bound clique densities: perfect vertices, border
// vertices and detachable subgraphs, averaging bounds, vertex covers, and
// near-complete "configurations".

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cdt/canonical.hpp"
#include "cdt/cliques.hpp"
#include "cdt/turan.hpp"

namespace cdt {

/// v is perfect when its open neighborhood induces T(Delta, omega-1).
/// Requires G in G(Delta, omega); a vertex of degree below Delta is never perfect.
inline bool is_perfect_vertex(const Graph& g, int v, int delta, int omega) {
  if (omega < 2) throw std::invalid_argument("perfect vertices need omega >= 2");
  if (max_degree(g) > delta || clique_number(g) > omega) {
    throw std::invalid_argument("graph is not in G(Delta, omega)");
  }
  const VertexSet nbrs = g.neighbors(v);
  if (nbrs.size() < delta) return false;
  return is_isomorphic(induced(g, nbrs), turan_graph(delta, omega - 1));
}

struct BorderVertex {
  int vertex = 0;
  /// Edges from the vertex to the outside of H.
  int cross_degree = 0;
};

struct BorderProfile {
  VertexSet subgraph;
  VertexSet border_set;
  std::vector<BorderVertex> border;
  /// Clique number of the graph induced by the border vertices.
  int border_clique_number = 0;
  /// Largest cross degree over border vertices (0 without border).
  int max_cross = 0;
};

/// Border vertices of H: members whose degree inside H is below Delta.
inline BorderProfile border_profile(const Graph& g, VertexSet h, int delta) {
  if (!h.subset_of(g.vertices())) throw GraphError("subgraph vertex set is not a subset of V(G)");
  BorderProfile p;
  p.subgraph = h;
  for (int v : h) {
    const VertexSet nbrs = g.neighbors(v);
    if ((nbrs & h).size() >= delta) continue;
    const int cross = (nbrs - h).size();
    p.border.push_back({v, cross});
    p.border_set.insert(v);
    p.max_cross = std::max(p.max_cross, cross);
  }
  p.border_clique_number = clique_number_in(g, p.border_set);
  return p;
}

/// Exact test: no t-clique uses an edge between H and the rest of G, so
/// k_t(G) = k_t(H) + k_t(G - H).
inline bool is_detachable(const Graph& g, VertexSet h, int t) {
  if (!h.subset_of(g.vertices())) throw GraphError("subgraph vertex set is not a subset of V(G)");
  const VertexSet outside = g.vertices() - h;
  for (int u : h) {
    for (int v : g.neighbors(u) & outside) {
      if (edge_weight(g, u, v, t) != 0) return false;
    }
  }
  return true;
}

/// Sufficient condition for detachability: t > i + j, or t > i + j - 1 when the
/// caller has established that every i-clique of the border holds a vertex
/// with fewer than j cross edges.
inline bool detach_sufficient(const BorderProfile& profile, int t, bool strong) {
  const int reach = profile.border_clique_number + profile.max_cross - (strong ? 1 : 0);
  return t > reach;
}

/// Whether every maximum clique of the border contains a vertex with cross
/// degree below the maximum; the hypothesis of the strong criterion.
inline bool strong_condition_holds(const Graph& g, const BorderProfile& profile) {
  const int i = profile.border_clique_number;
  if (i == 0) return false;
  std::array<int, kMaxVertices> cross{};
  for (const BorderVertex& b : profile.border) cross[b.vertex] = b.cross_degree;
  std::uint64_t low = 0;
  for (const BorderVertex& b : profile.border) {
    if (b.cross_degree < profile.max_cross) low |= std::uint64_t{1} << b.vertex;
  }
  // A maximum clique avoiding every low-cross vertex is a counterexample.
  return !has_clique(g, profile.border_set - VertexSet(low), i);
}

/// m / t: density ceiling when every vertex has t-weight at most m.
inline Rational averaging_bound(const Integer& m, long t) {
  if (t < 1) throw std::invalid_argument("averaging_bound needs t >= 1");
  return Rational(m, Integer(t));
}

/// (k - l/(l + Delta)) / t: the averaging ceiling sharpened when every vertex of
/// maximum weight k has at least l neighbors of weight at most k-1.
inline Rational kk1_bound(const Integer& k, long ell, long delta, long t) {
  if (t < 1 || ell < 0 || delta < 1) throw std::invalid_argument("kk1_bound needs t >= 1, l >= 0, Delta >= 1");
  return (Rational(k) - Rational(Integer(ell), Integer(ell + delta))) / Integer(t);
}

namespace detail {
inline Count count_covers(const Graph& g, int next, int left, std::uint64_t chosen) {
  if (left == 0) {
    for (int v = 0; v < g.n(); ++v) {
      if (!((chosen >> v) & 1U) && (g.row(v) & ~chosen) != 0) return 0;
    }
    return 1;
  }
  Count total = 0;
  for (int v = next; v <= g.n() - left; ++v) {
    total += count_covers(g, v + 1, left - 1, chosen | (std::uint64_t{1} << v));
  }
  return total;
}
}  // namespace detail

/// Number of s-element vertex sets meeting every edge.
inline Count vertex_cover_count(const Graph& g, int s) {
  if (s < 0 || s > g.n()) return 0;
  return detail::count_covers(g, 0, s, 0);
}

struct ConfigurationFinding {
  VertexSet vertices;
  std::array<Edge, 2> missing_edges{};
  /// Whether the two missing edges share a vertex.
  bool incident = false;
};

/// Every (r+1)-vertex set inducing K_{r+1} minus exactly two edges.
inline std::vector<ConfigurationFinding> find_configurations(const Graph& g, int r) {
  std::vector<ConfigurationFinding> found;
  const int size = r + 1;
  if (size < 2 || size > g.n()) return found;

  std::array<int, kMaxVertices> chosen{};
  auto missing_to = [&](int v, int upto) {
    int count = 0;
    for (int i = 0; i < upto; ++i) count += !g.has_edge(chosen[i], v);
    return count;
  };
  auto rec = [&](auto&& self, int next, int depth, int missing) -> void {
    if (depth == size) {
      if (missing != 2) return;
      ConfigurationFinding f;
      int k = 0;
      for (int a = 0; a < size; ++a) {
        f.vertices.insert(chosen[a]);
        for (int b = a + 1; b < size; ++b) {
          if (!g.has_edge(chosen[a], chosen[b])) f.missing_edges[k++] = {chosen[a], chosen[b]};
        }
      }
      const auto [a, b] = f.missing_edges[0];
      const auto [c, d] = f.missing_edges[1];
      f.incident = a == c || a == d || b == c || b == d;
      found.push_back(f);
      return;
    }
    for (int v = next; v <= g.n() - (size - depth); ++v) {
      const int m = missing + missing_to(v, depth);
      if (m > 2) continue;
      chosen[depth] = v;
      self(self, v + 1, depth + 1, m);
    }
  };
  rec(rec, 0, 0, 0);
  return found;
}

}  // namespace cdt

#endif  // CDT_LOCAL_HPP
