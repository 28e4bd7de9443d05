#ifndef CDT_VERIFY_HPP
#define CDT_VERIFY_HPP

// Exhaustive and closed-form checks. Each returns a CheckResult naming the
// first counterexample found, if any.

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "cdt/canonical.hpp"
#include "cdt/cliques.hpp"
#include "cdt/enumerate.hpp"
#include "cdt/graph6.hpp"
#include "cdt/local.hpp"
#include "cdt/search.hpp"
#include "cdt/turan.hpp"

namespace cdt {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  /// Instances examined (graphs, parameter tuples, ...).
  Count checked = 0;
  std::optional<std::string> counterexample;
  std::string detail;
};

namespace detail {

inline void fail(CheckResult& r, const Graph& g, std::string detail) {
  if (!r.passed) return;
  r.passed = false;
  r.counterexample = graph6_encode(g);
  r.detail = std::move(detail);
}

inline void fail(CheckResult& r, std::string detail) {
  if (!r.passed) return;
  r.passed = false;
  r.detail = std::move(detail);
}

// Runs `check(graph, result)` on every graph of the class; merges keep the
// first failure in tree order.
template <class Check>
CheckResult sweep(std::string name, const ClassSpec& cls, Check check, int threads = 1) {
  struct Acc {
    CheckResult result;
    const Check* check;
    void operator()(const Graph& g) {
      ++result.checked;
      (*check)(g, result);
    }
    void merge(Acc&& o) {
      result.checked += o.result.checked;
      if (result.passed && !o.result.passed) {
        result.passed = false;
        result.counterexample = std::move(o.result.counterexample);
        result.detail = std::move(o.result.detail);
      }
    }
  };
  EnumerationOptions opt;
  opt.threads = threads;
  opt.cap = kHardSearchCap;
  Acc acc = reduce_class<Acc>(cls, opt, [&] { return Acc{CheckResult{name}, &check}; });
  return acc.result;
}

inline std::string tuple_text(std::initializer_list<std::pair<const char*, long>> items) {
  std::string s;
  for (const auto& [key, value] : items) {
    if (!s.empty()) s += ' ';
    s += std::string(key) + '=' + std::to_string(value);
  }
  return s;
}

}  // namespace detail

/// turan_clique_count(n, r, t) against clique_count(turan_graph(n, r), t).
inline CheckResult check_turan_formula(int n_max = 11) {
  CheckResult r{"turan-formula"};
  for (int n = 1; n <= n_max; ++n) {
    for (int parts = 1; parts <= n; ++parts) {
      const Graph g = turan_graph(n, parts);
      const std::vector<Count> counts = clique_counts(g);
      for (int t = 0; t <= n; ++t) {
        ++r.checked;
        if (turan_clique_count(n, parts, t) != Integer(counts[t])) {
          detail::fail(r, g, detail::tuple_text({{"n", n}, {"r", parts}, {"t", t}}));
        }
      }
    }
  }
  return r;
}

/// lower_bound = upper_bound whenever (omega-1) | Delta and 2 <= t <= omega.
inline CheckResult check_divisibility(int delta_max = 30, int omega_max = 10) {
  CheckResult r{"divisibility"};
  for (int delta = 1; delta <= delta_max; ++delta) {
    for (int omega = 2; omega <= omega_max; ++omega) {
      if (delta % (omega - 1) != 0) continue;
      for (int t = 2; t <= omega; ++t) {
        ++r.checked;
        if (lower_bound(t, delta, omega) != upper_bound(t, delta, omega)) {
          detail::fail(r, detail::tuple_text({{"t", t}, {"delta", delta}, {"omega", omega}}));
        }
      }
    }
  }
  return r;
}

/// lower_bound <= upper_bound for 2 <= t <= omega <= Delta + 1 <= delta_max + 1.
inline CheckResult check_sandwich(int delta_max = 20) {
  CheckResult r{"sandwich"};
  for (int delta = 1; delta <= delta_max; ++delta) {
    for (int omega = 2; omega <= delta + 1; ++omega) {
      for (int t = 2; t <= omega; ++t) {
        ++r.checked;
        if (lower_bound(t, delta, omega) > upper_bound(t, delta, omega)) {
          detail::fail(r, detail::tuple_text({{"t", t}, {"delta", delta}, {"omega", omega}}));
        }
      }
    }
  }
  return r;
}

/// upper/lower at (t, omega) = (3, 3) against a ceiling, exactly.
inline CheckResult check_ratio(int delta, const Rational& ceiling) {
  CheckResult r{"ratio-delta-" + std::to_string(delta)};
  r.checked = 1;
  const Rational ratio = upper_bound(3, delta, 3) / lower_bound(3, delta, 3);
  r.detail = "upper/lower = " + to_string(ratio) + " ~ " + decimal_hint(ratio);
  if (ratio > ceiling) r.passed = false;
  return r;
}

/// L(Delta, omega) has maximum degree Delta and density lower_bound, for Delta + a <= n_max.
inline CheckResult check_lower_graph(int n_max = 20) {
  CheckResult r{"lower-bound-graph"};
  for (int delta = 1; delta < n_max; ++delta) {
    for (int omega = 2; omega <= delta + 1; ++omega) {
      const Decomposition d = decompose(delta, omega);
      if (d.delta + d.a > n_max) continue;
      const Graph g = lower_bound_graph(delta, omega);
      if (max_degree(g) != delta) detail::fail(r, g, detail::tuple_text({{"delta", delta}, {"omega", omega}}));
      for (int t = 2; t <= omega; ++t) {
        ++r.checked;
        if (density(g, t) != lower_bound(t, delta, omega)) {
          detail::fail(r, g, detail::tuple_text({{"t", t}, {"delta", delta}, {"omega", omega}}));
        }
      }
    }
  }
  return r;
}

/// C(omega, t)/omega = C(omega-1, t-1)/t.
inline CheckResult check_binomial_identity(int omega_max = 30) {
  CheckResult r{"binomial-identity"};
  for (int omega = 1; omega <= omega_max; ++omega) {
    for (int t = 1; t <= omega; ++t) {
      ++r.checked;
      if (Rational(binomial(omega, t), Integer(omega)) != Rational(binomial(omega - 1, t - 1), Integer(t))) {
        detail::fail(r, detail::tuple_text({{"t", t}, {"omega", omega}}));
      }
    }
  }
  return r;
}

/// rho_t(T(n, omega)) non-decreasing in n for n <= n_max, omega <= omega_max, t <= omega.
inline CheckResult check_monotone(int n_max = 200, int omega_max = 12) {
  CheckResult r{"rho-monotone"};
  for (int omega = 1; omega <= omega_max; ++omega) {
    for (int t = 1; t <= omega; ++t) {
      ++r.checked;
      if (!rho_monotone_check(omega, t, n_max)) detail::fail(r, detail::tuple_text({{"t", t}, {"omega", omega}}));
    }
  }
  return r;
}

/// sum_v k_t(v) = t k_t(G) for all graphs with n <= n_max and 1 <= t <= n.
inline CheckResult check_handshake(int n_max = 9, int threads = 1) {
  return detail::sweep("handshake", ClassSpec{1, n_max, n_max, n_max}, [](const Graph& g, CheckResult& r) {
    const std::vector<Count> total = clique_counts(g);
    std::vector<Count> sums(total.size(), 0);
    for (int v = 0; v < g.n(); ++v) {
      const std::vector<Count> local = clique_counts(induced(g, g.neighbors(v)));
      for (std::size_t s = 0; s < local.size(); ++s) sums[s + 1] += local[s];
    }
    for (int t = 1; t <= g.n(); ++t) {
      if (sums[t] != static_cast<Count>(t) * total[t]) {
        detail::fail(r, g, "t=" + std::to_string(t));
        return;
      }
    }
  }, threads);
}

/// k_t(G) equals the number of independent t-sets of the complement, by subset scan.
inline CheckResult check_clique_duality(int n_max = 8, int threads = 1) {
  return detail::sweep("clique-duality", ClassSpec{1, n_max, n_max, n_max}, [](const Graph& g, CheckResult& r) {
    const Graph c = complement(g);
    std::vector<Count> independent(static_cast<std::size_t>(g.n()) + 1, 0);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
      bool ok = true;
      for (std::uint64_t rest = s; rest != 0 && ok; rest &= rest - 1) {
        ok = (c.row(std::countr_zero(rest)) & s) == 0;
      }
      if (ok) ++independent[std::popcount(s)];
    }
    for (int t = 0; t <= g.n(); ++t) {
      if (clique_count(g, t) != independent[t]) {
        detail::fail(r, g, "t=" + std::to_string(t));
        return;
      }
    }
  }, threads);
}

/// In G(Delta, omega): k_t(v) <= k_{t-1}(T(Delta, omega-1)) for every t >= 2;
/// a perfect vertex attains it for every t; attaining it at some t >= 3 with
/// a nonzero ceiling makes v perfect.
inline CheckResult check_perfect_vertex(int delta, int omega, int n_max, int threads = 1) {
  const Graph target = turan_graph(delta, omega - 1);
  const CanonicalLabeling target_lab = canonical_labeling(target);
  std::vector<Count> ceiling(static_cast<std::size_t>(omega) + 2, 0);
  for (int t = 2; t <= omega + 1; ++t) ceiling[t] = clique_count(target, t - 1);
  auto check = [=](const Graph& g, CheckResult& r) {
    for (int v = 0; v < g.n(); ++v) {
      const VertexSet nbrs = g.neighbors(v);
      const std::vector<Count> local = clique_counts(induced(g, nbrs));
      auto weight = [&](int t) { return t - 1 < static_cast<int>(local.size()) ? local[t - 1] : Count{0}; };
      const bool perfect = nbrs.size() == delta &&
                           std::equal(target_lab.rows.begin(), target_lab.rows.begin() + delta,
                                      canonical_labeling(induced(g, nbrs)).rows.begin());
      for (int t = 2; t <= omega + 1; ++t) {
        const Count k = weight(t);
        const std::string where = "v=" + std::to_string(v) + " t=" + std::to_string(t);
        if (k > ceiling[t]) return detail::fail(r, g, "ceiling exceeded at " + where);
        if (perfect && k != ceiling[t]) return detail::fail(r, g, "perfect vertex below ceiling at " + where);
        if (t >= 3 && ceiling[t] > 0 && k == ceiling[t] && !perfect) {
          return detail::fail(r, g, "ceiling attained by a non-perfect vertex at " + where);
        }
      }
    }
  };
  CheckResult r = detail::sweep("perfect-vertex", ClassSpec{1, n_max, delta, omega}, check, threads);
  r.name += "(" + std::to_string(delta) + "," + std::to_string(omega) + ")";
  return r;
}

/// detach_sufficient implies is_detachable for every H of every graph with
/// n <= n_max, every t <= n, with Delta = Delta(G); the strong form is
/// applied whenever strong_condition_holds.
inline CheckResult check_detach(int n_max = 8, int threads = 1) {
  return detail::sweep("detach-sufficiency", ClassSpec{1, n_max, n_max, n_max}, [](const Graph& g, CheckResult& r) {
    const int delta = max_degree(g);
    const std::uint64_t full = g.vertices().bits();
    for (std::uint64_t h = 0;; h = (h - full) & full) {
      const BorderProfile profile = border_profile(g, VertexSet(h), delta);
      const bool strong = strong_condition_holds(g, profile);
      for (int t = 1; t <= g.n(); ++t) {
        const bool plain = detach_sufficient(profile, t, false);
        const bool sharp = strong && detach_sufficient(profile, t, true);
        if ((plain || sharp) && !is_detachable(g, VertexSet(h), t)) {
          return detail::fail(r, g,
                              std::string(plain ? "plain" : "strong") + " criterion unsound for H=" +
                                  std::to_string(h) + " t=" + std::to_string(t));
        }
      }
      if (h == full) break;
    }
  }, threads);
}

/// Two distinct configurations of a graph in G(r, r) are vertex-disjoint.
inline CheckResult check_configurations_disjoint(int r, int n_max, int threads = 1) {
  CheckResult res = detail::sweep("configuration-disjoint", ClassSpec{1, n_max, r, r}, [r](const Graph& g, CheckResult& out) {
    const std::vector<ConfigurationFinding> found = find_configurations(g, r);
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = i + 1; j < found.size(); ++j) {
        if (!(found[i].vertices & found[j].vertices).empty()) {
          return detail::fail(out, g, "overlapping configurations");
        }
      }
    }
  }, threads);
  res.name += "(r=" + std::to_string(r) + ")";
  return res;
}

/// In G(5, 4) every vertex with k_3(v) = 7 has a neighbor x with k_3(x) <= 5.
inline CheckResult check_seven_neighbors(int n_max = 9, int threads = 1) {
  return detail::sweep("seven-neighbors", ClassSpec{1, n_max, 5, 4}, [](const Graph& g, CheckResult& r) {
    std::array<Count, kMaxVertices> k3{};
    for (int v = 0; v < g.n(); ++v) k3[v] = vertex_weight(g, v, 3);
    for (int v = 0; v < g.n(); ++v) {
      if (k3[v] != 7) continue;
      bool found = false;
      for (int x : g.neighbors(v)) found = found || k3[x] <= 5;
      if (!found) return detail::fail(r, g, "v=" + std::to_string(v));
    }
  }, threads);
}

struct ConfigurationProbe {
  int r = 0;
  int n_max = 0;
  Count graphs = 0;
  Count configurations = 0;
  Count incident = 0;
  Count non_incident = 0;
  /// Largest sum of k_3 over a configuration, per kind of missing-edge pair.
  Count max_sum_incident = 0;
  Count max_sum_non_incident = 0;
  Count bound = 0;
  std::optional<std::string> violation;
};

/// Sum of k_3 (in G) over each configuration of G in G(r, r), against
/// (r+1)(C(r,2) - 3). Reports without asserting.
inline ConfigurationProbe probe_configuration_weights(int r, int n_max, int threads = 1) {
  struct Acc {
    ConfigurationProbe p;
    void operator()(const Graph& g) {
      ++p.graphs;
      for (const ConfigurationFinding& f : find_configurations(g, p.r)) {
        Count sum = 0;
        for (int v : f.vertices) sum += vertex_weight(g, v, 3);
        ++p.configurations;
        Count& best = f.incident ? p.max_sum_incident : p.max_sum_non_incident;
        ++(f.incident ? p.incident : p.non_incident);
        best = std::max(best, sum);
        if (sum > p.bound && !p.violation) p.violation = graph6_encode(g);
      }
    }
    void merge(Acc&& o) {
      p.graphs += o.p.graphs;
      p.configurations += o.p.configurations;
      p.incident += o.p.incident;
      p.non_incident += o.p.non_incident;
      p.max_sum_incident = std::max(p.max_sum_incident, o.p.max_sum_incident);
      p.max_sum_non_incident = std::max(p.max_sum_non_incident, o.p.max_sum_non_incident);
      if (!p.violation) p.violation = std::move(o.p.violation);
    }
  };
  ConfigurationProbe init;
  init.r = r;
  init.n_max = n_max;
  init.bound = static_cast<Count>((r + 1) * (r * (r - 1) / 2 - 3));
  EnumerationOptions opt;
  opt.threads = threads;
  opt.cap = kHardSearchCap;
  return reduce_class<Acc>(ClassSpec{1, n_max, r, r}, opt, [&] { return Acc{init}; }).p;
}

/// Zykov's theorem with uniqueness for 1 <= n <= n_max, 1 <= omega <= omega_max, 2 <= t <= t_max.
inline CheckResult check_zykov(int n_max = 8, int omega_max = 4, int t_max = 4) {
  CheckResult r{"zykov"};
  for (int n = 1; n <= n_max; ++n) {
    for (int omega = 1; omega <= omega_max; ++omega) {
      for (int t = 2; t <= t_max; ++t) {
        ++r.checked;
        const ZykovResult z = verify_zykov(n, omega, t, kHardSearchCap);
        if (!z.holds) {
          detail::fail(r, turan_graph(n, omega),
                       detail::tuple_text({{"n", n}, {"omega", omega}, {"t", t},
                                           {"max", static_cast<long>(z.max_kt)},
                                           {"maximizers", static_cast<long>(z.maximizers)}}));
        }
      }
    }
  }
  return r;
}

/// Superadditivity of k_t(n, Delta, omega) for n <= n_max over
/// 1 <= Delta <= delta_max, 2 <= omega <= min(Delta+1, omega_max), 2 <= t <= omega.
inline CheckResult check_superadditivity(int n_max = 8, int delta_max = 5, int omega_max = 5, int threads = 1) {
  CheckResult r{"superadditivity"};
  for (int delta = 1; delta <= delta_max; ++delta) {
    for (int omega = 2; omega <= std::min(delta + 1, omega_max); ++omega) {
      for (int t = 2; t <= omega; ++t) {
        ++r.checked;
        const SuperadditivityResult s = verify_superadditivity(delta, omega, t, n_max, threads, kHardSearchCap);
        if (!s.holds) {
          detail::fail(r, detail::tuple_text({{"delta", delta}, {"omega", omega}, {"t", t},
                                              {"x", s.violation->first}, {"y", s.violation->second}}));
        }
      }
    }
  }
  return r;
}

/// Every graph of G(Delta, omega) on at most Delta + a vertices has
/// rho_t <= lower_bound(t, Delta, omega), and L(Delta, omega) attains it.
inline CheckResult check_basecase(int delta, int omega, int threads = 1) {
  CheckResult r{"basecase(" + std::to_string(delta) + "," + std::to_string(omega) + ")"};
  const Decomposition d = decompose(delta, omega);
  for (int t = 2; t <= omega; ++t) {
    const SearchReport s = best_up_to(static_cast<int>(d.delta + d.a), delta, omega, t, threads, kHardSearchCap);
    ++r.checked;
    if (s.best != lower_bound(t, delta, omega)) {
      detail::fail(r, detail::tuple_text({{"t", t}}) + " best " + to_string(s.best) + " vs lower " +
                          to_string(lower_bound(t, delta, omega)));
    }
  }
  return r;
}

inline CheckResult check_neighborhoods(int r_min = 3, int r_max = 6) {
  CheckResult r{"neighborhoods"};
  for (const Classification& c : verify_neighborhood_lemmas(r_min, r_max)) {
    ++r.checked;
    if (!c.passed) {
      std::string found;
      for (const std::string& f : c.found) found += (found.empty() ? "" : ",") + f;
      detail::fail(r, c.lemma + " r=" + std::to_string(c.r) + " found {" + found + "}");
    }
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"formulas", "lemmas", "zykov", "monotone", "superadd", "neighborhoods"};
  return names;
}

/// Runs a named suite ("all" runs every suite in order).
inline std::vector<CheckResult> run_suite(const std::string& name, int threads = 1) {
  std::vector<CheckResult> out;
  if (name == "all") {
    for (const std::string& s : suite_names()) {
      std::vector<CheckResult> part = run_suite(s, threads);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else if (name == "formulas") {
    out.push_back(check_turan_formula(11));
    out.push_back(check_divisibility(30, 10));
    out.push_back(check_sandwich(20));
    out.push_back(check_ratio(101, Rational(101, 100)));
    out.push_back(check_ratio(1001, Rational(1001, 1000)));
    out.push_back(check_lower_graph(20));
    out.push_back(check_binomial_identity(30));
  } else if (name == "lemmas") {
    out.push_back(check_handshake(9, threads));
    out.push_back(check_clique_duality(8, threads));
    for (int delta = 1; delta <= 6; ++delta) {
      for (int omega = 2; omega <= std::min(6, delta + 1); ++omega) {
        out.push_back(check_perfect_vertex(delta, omega, 9, threads));
      }
    }
    out.push_back(check_detach(8, threads));
    out.push_back(check_configurations_disjoint(6, 9, threads));
    out.push_back(check_configurations_disjoint(7, 9, threads));
    out.push_back(check_seven_neighbors(9, threads));
    for (const auto& [delta, omega] : std::vector<std::pair<int, int>>{
             {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, 3}, {3, 4}, {4, 4}, {5, 4}, {6, 4}, {4, 5}, {5, 5}, {6, 5}}) {
      out.push_back(check_basecase(delta, omega, threads));
    }
  } else if (name == "zykov") {
    out.push_back(check_zykov(8, 4, 4));
  } else if (name == "monotone") {
    out.push_back(check_monotone(200, 12));
  } else if (name == "superadd") {
    out.push_back(check_superadditivity(8, 5, 5, threads));
  } else if (name == "neighborhoods") {
    out.push_back(check_neighborhoods(3, 6));
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace cdt

#endif  // CDT_VERIFY_HPP
