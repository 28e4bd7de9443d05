#ifndef CDT_TURAN_HPP
#define CDT_TURAN_HPP

// Turán graphs, their closed-form clique counts, and the density bounds
// built from them, plus the non-Turán constructions BT(k) and G*.

#include <stdexcept>
#include <string>
#include <vector>

#include "cdt/cliques.hpp"
#include "cdt/graph.hpp"
#include "cdt/rational.hpp"

namespace cdt {

/// n = q*r + c with 0 <= c < r: c parts of size q+1 and r-c of size q.
struct TuranShape {
  long n = 0;
  long r = 1;
  long q = 0;
  long c = 0;
};

inline TuranShape turan_shape(long n, long r) {
  if (r < 1) throw std::invalid_argument("Turán graph needs at least one part");
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return TuranShape{n, r, n / r, n % r};
}

inline Graph turan_graph(int n, int r) {
  const TuranShape s = turan_shape(n, r);
  if (n > kMaxVertices) throw GraphError("vertex capacity exceeded");
  std::vector<int> parts;
  for (long i = 0; i < r; ++i) {
    const long size = i < s.c ? s.q + 1 : s.q;
    if (size > 0) parts.push_back(static_cast<int>(size));
  }
  return complete_multipartite(parts);
}

/// k_t(T(n,r)) = sum_k C(c,k) C(r-c,t-k) (q+1)^k q^(t-k), without building the graph.
inline Integer turan_clique_count(long n, long r, long t) {
  const TuranShape s = turan_shape(n, r);
  if (t < 0) return 0;
  Integer total = 0;
  for (long k = 0; k <= s.c && k <= t; ++k) {
    total += binomial(s.c, k) * binomial(s.r - s.c, t - k) * power(Integer(s.q + 1), k) *
             power(Integer(s.q), t - k);
  }
  return total;
}

inline Rational turan_density(long n, long r, long t) {
  if (n < 1) throw std::invalid_argument("density needs at least one vertex");
  return Rational(turan_clique_count(n, r, t), Integer(n));
}

/// Delta = a(omega-1) + b with 0 <= b < omega-1.
struct Decomposition {
  long delta = 0;
  long omega = 2;
  long a = 0;
  long b = 0;
};

inline Decomposition decompose(long delta, long omega) {
  if (omega < 2) throw std::invalid_argument("decomposition needs omega >= 2");
  if (delta < 0) throw std::invalid_argument("decomposition needs delta >= 0");
  return Decomposition{delta, omega, delta / (omega - 1), delta % (omega - 1)};
}

/// L(Delta, omega) = T(Delta + a, omega). An omega above Delta+1 places no
/// constraint and is lowered to Delta+1 first.
inline Graph lower_bound_graph(int delta, int omega) {
  if (delta < 1) throw std::invalid_argument("lower bound graph needs delta >= 1");
  if (omega < 2) throw std::invalid_argument("lower bound graph needs omega >= 2");
  omega = std::min(omega, delta + 1);
  const Decomposition d = decompose(delta, omega);
  const long n = d.delta + d.a;
  if (n > kMaxVertices) throw GraphError("lower bound graph exceeds vertex capacity");
  Graph g = turan_graph(static_cast<int>(n), omega);
  if (max_degree(g) != delta || clique_number(g) != std::min<long>(omega, n)) {
    throw std::logic_error("lower bound graph violates its degree or clique constraint");
  }
  return g;
}

/// rho_t(T(Delta + a, omega)).
inline Rational lower_bound(long t, long delta, long omega) {
  if (t < 2 || omega < 2 || delta < 1) throw std::invalid_argument("lower_bound needs t, omega >= 2, delta >= 1");
  const Decomposition d = decompose(delta, omega);
  return turan_density(d.delta + d.a, omega, t);
}

/// k_{t-1}(T(Delta, omega-1)) / t: the per-vertex ceiling averaged over a t-clique.
inline Rational upper_bound(long t, long delta, long omega) {
  if (t < 2 || omega < 2 || delta < 1) throw std::invalid_argument("upper_bound needs t, omega >= 2, delta >= 1");
  return Rational(turan_clique_count(delta, omega - 1, t - 1), Integer(t));
}

/// (1/t) C(omega-1, t-1) (Delta/(omega-1))^(t-1).
inline Rational asymptotic_leading(long t, long delta, long omega) {
  if (t < 2 || omega < 2) throw std::invalid_argument("asymptotic_leading needs t, omega >= 2");
  const Integer num = binomial(omega - 1, t - 1) * power(Integer(delta), t - 1);
  const Integer den = Integer(t) * power(Integer(omega - 1), t - 1);
  return Rational(num, den);
}

/// True iff rho_t(T(n, omega)) is non-decreasing over 1 <= n <= n_max.
inline bool rho_monotone_check(long omega, long t, long n_max) {
  if (omega < 1) throw std::invalid_argument("rho_monotone_check needs omega >= 1");
  if (t < 1) throw std::invalid_argument("rho_monotone_check needs t >= 1");
  Rational previous = turan_density(1, omega, t);
  for (long n = 2; n <= n_max; ++n) {
    Rational current = turan_density(n, omega, t);
    if (current < previous) return false;
    previous = std::move(current);
  }
  return true;
}

/// BT(k): K_{k,k} with edge {0,k} replaced by the path 0-(2k)-k, joined with
/// an independent set on k+1 vertices (indices 2k+1 .. 3k+1).
inline Graph bt_graph(int k) {
  if (k < 2) throw std::invalid_argument("BT(k) needs k >= 2");
  if (3 * k + 2 > kMaxVertices) throw GraphError("BT(k) exceeds vertex capacity");
  std::vector<Edge> edges;
  for (int x = 0; x < k; ++x) {
    for (int y = k; y < 2 * k; ++y) {
      if (x == 0 && y == k) continue;
      edges.emplace_back(x, y);
    }
  }
  edges.emplace_back(2 * k, 0);
  edges.emplace_back(2 * k, k);
  return join(Graph(2 * k + 1, edges), empty_graph(k + 1));
}

/// (k+1)(k^2+1) / (3k+2)
inline Rational bt_density(long k) {
  if (k < 2) throw std::invalid_argument("BT(k) needs k >= 2");
  return Rational(Integer((k + 1) * (k * k + 1)), Integer(3 * k + 2));
}

/// G*: K_6 minus the matching {01, 23}, plus vertex 6 joined to 0, 1, 2, 3.
inline Graph g_star() {
  std::vector<Edge> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if ((u == 0 && v == 1) || (u == 2 && v == 3)) continue;
      edges.emplace_back(u, v);
    }
  }
  for (int u = 0; u < 4; ++u) edges.emplace_back(u, 6);
  return Graph(7, edges);
}

}  // namespace cdt

#endif  // CDT_TURAN_HPP
