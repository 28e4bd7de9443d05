#ifndef CDT_SEARCH_HPP
#define CDT_SEARCH_HPP

// Exhaustive maxima of k_t over G(Delta, omega), and brute-force checks of
// statements about those maxima.

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cdt/canonical.hpp"
#include "cdt/cliques.hpp"
#include "cdt/enumerate.hpp"
#include "cdt/local.hpp"
#include "cdt/registry.hpp"
#include "cdt/turan.hpp"

namespace cdt {

inline constexpr std::size_t kDefaultWitnessLimit = 64;

struct SearchSpec {
  int n_min = 1;
  int n_max = 1;
  int delta = 0;
  int omega = 1;
  int t = 2;
  int threads = 1;
  int cap = kDefaultSearchCap;
  /// Skip subtrees that provably cannot reach density `prune_target` at n_max.
  std::optional<Rational> prune_target;
  std::size_t witness_limit = kDefaultWitnessLimit;
};

struct LevelResult {
  int n = 0;
  Count graphs = 0;
  Count max_kt = 0;
  Rational max_density;
  /// Canonical graph6 of maximizers, byte-order sorted, at most witness_limit
  /// of them (the smallest); empty when the maximum is 0.
  std::vector<std::string> witnesses;
  Count witness_count = 0;
};

struct SearchReport {
  SearchSpec spec;
  std::vector<LevelResult> levels;
  Count graphs_enumerated = 0;
  double wall_seconds = 0.0;
  Rational best;
  int best_n = 0;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::optional<Rational> exact;
  /// Smallest n whose maximum reaches the lower bound / the exact value.
  std::optional<int> meets_lower_at;
  std::optional<int> meets_exact_at;
  /// With a prune target only levels whose maximum reaches it are exact.
  bool pruned = false;
};

namespace detail {

struct Level {
  Count graphs = 0;
  Count max_kt = 0;
  bool seen = false;
  std::vector<std::string> witnesses;
  Count witness_count = 0;
};

inline void keep_smallest(std::vector<std::string>& sorted, std::size_t limit) {
  if (sorted.size() > limit) sorted.resize(limit);
}

class DensityTracker {
 public:
  DensityTracker(int n_max, int t, std::size_t limit)
      : t_(t), limit_(limit), levels_(static_cast<std::size_t>(n_max) + 1) {}

  void operator()(const Graph& g) {
    Level& level = levels_[static_cast<std::size_t>(g.n())];
    ++level.graphs;
    const Count k = clique_count(g, t_);
    if (!level.seen || k > level.max_kt) {
      level.seen = true;
      level.max_kt = k;
      level.witnesses.clear();
      level.witness_count = 0;
    }
    if (k != level.max_kt) return;
    ++level.witness_count;
    if (k == 0 || limit_ == 0) return;
    std::string form = canonical_form(g);
    if (level.witnesses.size() == limit_ && form >= level.witnesses.back()) return;
    level.witnesses.insert(std::upper_bound(level.witnesses.begin(), level.witnesses.end(), form), std::move(form));
    keep_smallest(level.witnesses, limit_);
  }

  void merge(DensityTracker&& other) {
    for (std::size_t n = 0; n < levels_.size(); ++n) {
      Level& mine = levels_[n];
      Level& theirs = other.levels_[n];
      const Count graphs = mine.graphs + theirs.graphs;
      if (!theirs.seen) {
        mine.graphs = graphs;
        continue;
      }
      if (!mine.seen || theirs.max_kt > mine.max_kt) {
        mine = std::move(theirs);
      } else if (theirs.max_kt == mine.max_kt) {
        mine.witness_count += theirs.witness_count;
        std::vector<std::string> merged;
        std::merge(mine.witnesses.begin(), mine.witnesses.end(), theirs.witnesses.begin(), theirs.witnesses.end(),
                   std::back_inserter(merged));
        keep_smallest(merged, limit_);
        mine.witnesses = std::move(merged);
      }
      mine.graphs = graphs;
    }
  }

  const std::vector<Level>& levels() const { return levels_; }

 private:
  int t_;
  std::size_t limit_;
  std::vector<Level> levels_;
};

// k_t(D) <= k_t(P) + (n_max - |P|) * k_{t-1}(T(Delta, omega-1)) for every
// descendant D of P on n_max vertices.
inline std::function<bool(const Graph&)> target_pruner(const SearchSpec& spec) {
  if (!spec.prune_target || spec.omega < 2 || spec.delta < 1) return {};
  const Integer ceiling = turan_clique_count(spec.delta, spec.omega - 1, spec.t - 1);
  const Rational needed = *spec.prune_target * Integer(spec.n_max);
  const int t = spec.t;
  const int n_max = spec.n_max;
  return [=](const Graph& p) {
    const Integer reachable = Integer(clique_count(p, t)) + ceiling * (n_max - p.n());
    return Rational(reachable) < needed;
  };
}

inline void check_search_spec(const SearchSpec& spec) {
  if (spec.t < 2) throw std::invalid_argument("searches need t >= 2");
  if (spec.n_min < 1) throw std::invalid_argument("searches need n >= 1");
}

}  // namespace detail

/// Per-n maxima of k_t and rho_t over G(Delta, omega) for n_min <= n <= n_max.
inline SearchReport best_up_to(const SearchSpec& spec) {
  detail::check_search_spec(spec);
  const auto start = std::chrono::steady_clock::now();

  EnumerationOptions opt;
  opt.threads = spec.threads;
  opt.cap = spec.cap;
  opt.prune = detail::target_pruner(spec);
  const ClassSpec cls{spec.n_min, spec.n_max, spec.delta, spec.omega};
  const detail::DensityTracker tracker = reduce_class<detail::DensityTracker>(
      cls, opt, [&] { return detail::DensityTracker(spec.n_max, spec.t, spec.witness_limit); });

  SearchReport report;
  report.spec = spec;
  report.pruned = static_cast<bool>(opt.prune);
  const bool bounded = spec.omega >= 2 && spec.delta >= 1;
  if (bounded) {
    const long omega = std::min(spec.omega, spec.delta + 1);
    report.lower = lower_bound(spec.t, spec.delta, omega);
    report.upper = upper_bound(spec.t, spec.delta, omega);
    if (auto exact = exact_value(spec.t, spec.delta, omega)) report.exact = exact->value;
  }
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    const detail::Level& level = tracker.levels()[static_cast<std::size_t>(n)];
    LevelResult r;
    r.n = n;
    r.graphs = level.graphs;
    r.max_kt = level.max_kt;
    r.max_density = Rational(Integer(level.max_kt), Integer(n));
    r.witnesses = level.witnesses;
    r.witness_count = level.witness_count;
    report.graphs_enumerated += level.graphs;
    if (level.graphs > 0 && (report.best_n == 0 || r.max_density > report.best)) {
      report.best = r.max_density;
      report.best_n = n;
    }
    if (level.graphs > 0 && report.lower && !report.meets_lower_at && r.max_density >= *report.lower) {
      report.meets_lower_at = n;
    }
    if (level.graphs > 0 && report.exact && !report.meets_exact_at && r.max_density >= *report.exact) {
      report.meets_exact_at = n;
    }
    report.levels.push_back(std::move(r));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline SearchReport best_up_to(int n_max, int delta, int omega, int t, int threads = 1, int cap = kDefaultSearchCap) {
  SearchSpec spec;
  spec.n_max = n_max;
  spec.delta = delta;
  spec.omega = omega;
  spec.t = t;
  spec.threads = threads;
  spec.cap = cap;
  return best_up_to(spec);
}

/// Exact maximum of rho_t over n-vertex graphs of G(Delta, omega), with all
/// maximizers up to isomorphism (subject to the witness limit).
inline LevelResult max_density(int n, int delta, int omega, int t, int threads = 1, int cap = kDefaultSearchCap) {
  SearchSpec spec;
  spec.n_min = n;
  spec.n_max = n;
  spec.delta = delta;
  spec.omega = omega;
  spec.t = t;
  spec.threads = threads;
  spec.cap = cap;
  return best_up_to(spec).levels.front();
}

struct ZykovResult {
  bool holds = false;
  Count max_kt = 0;
  Count turan_kt = 0;
  Count maximizers = 0;
  bool maximizer_is_turan = false;
};

/// Every n-vertex graph with clique number <= omega has k_t <= k_t(T(n, omega)),
/// with T(n, omega) the only maximizer whenever it contains a K_t.
inline ZykovResult verify_zykov(int n, int omega, int t, int cap = kDefaultSearchCap) {
  if (n < 1 || omega < 1) throw std::invalid_argument("verify_zykov needs n, omega >= 1");
  const LevelResult level = max_density(n, std::max(n - 1, 0), omega, t, 1, cap);
  ZykovResult r;
  r.max_kt = level.max_kt;
  r.turan_kt = clique_count(turan_graph(n, omega), t);
  r.maximizers = level.witness_count;
  const std::string turan = canonical_form(turan_graph(n, omega));
  r.maximizer_is_turan = level.witnesses.size() == 1 && level.witnesses.front() == turan;
  if (r.turan_kt == 0) {
    r.holds = r.max_kt == 0;
  } else {
    r.holds = r.max_kt == r.turan_kt && r.maximizers == 1 && r.maximizer_is_turan;
  }
  return r;
}

struct SuperadditivityResult {
  bool holds = true;
  /// maxima[n] = k_t(n, Delta, omega) for 0 <= n <= n_max.
  std::vector<Count> maxima;
  std::optional<std::pair<int, int>> violation;
};

/// k_t(x+y, Delta, omega) >= k_t(x, Delta, omega) + k_t(y, Delta, omega) for x + y <= n_max.
inline SuperadditivityResult verify_superadditivity(int delta, int omega, int t, int n_max, int threads = 1,
                                                    int cap = kDefaultSearchCap) {
  SearchSpec spec;
  spec.n_max = n_max;
  spec.delta = delta;
  spec.omega = omega;
  spec.t = t;
  spec.threads = threads;
  spec.cap = cap;
  spec.witness_limit = 0;
  const SearchReport report = best_up_to(spec);
  SuperadditivityResult r;
  r.maxima.assign(static_cast<std::size_t>(n_max) + 1, 0);
  for (const LevelResult& level : report.levels) r.maxima[static_cast<std::size_t>(level.n)] = level.max_kt;
  for (int x = 1; x <= n_max && r.holds; ++x) {
    for (int y = x; x + y <= n_max; ++y) {
      if (r.maxima[x + y] < r.maxima[x] + r.maxima[y]) {
        r.holds = false;
        r.violation = std::make_pair(x, y);
        break;
      }
    }
  }
  return r;
}

struct ProbeReport {
  std::string name;
  SearchReport search;
  /// Density the probe compares against, when one is known.
  std::optional<Rational> target;
  /// Some enumerated graph has density above the target.
  bool beaten = false;
  /// Graphs attaining the target, as (n, canonical graph6).
  std::vector<std::pair<int, std::string>> attained;
  /// bt3 only, when n = 11 was searched: whether BT(3) is the one best graph there.
  std::optional<bool> bt3_unique_at_11;
};

inline ProbeReport make_probe_report(std::string name, SearchReport search, std::optional<Rational> target) {
  ProbeReport p;
  p.name = std::move(name);
  p.target = std::move(target);
  p.search = std::move(search);
  if (p.target) {
    for (const LevelResult& level : p.search.levels) {
      if (level.graphs == 0) continue;
      if (level.max_density > *p.target) p.beaten = true;
      if (level.max_density == *p.target) {
        for (const std::string& w : level.witnesses) p.attained.emplace_back(level.n, w);
      }
    }
  }
  return p;
}

/// Searches G(7,3) up to n_cap for t = 3 against rho_3(BT(3)) = 40/11.
inline ProbeReport probe_bt3(int n_cap, int threads = 1, int cap = kDefaultSearchCap) {
  SearchSpec spec;
  spec.n_max = n_cap;
  spec.delta = 7;
  spec.omega = 3;
  spec.t = 3;
  spec.threads = threads;
  spec.cap = cap;
  ProbeReport p = make_probe_report("bt3", best_up_to(spec), bt_density(3));
  if (n_cap >= 11) {
    const LevelResult& at11 = p.search.levels[static_cast<std::size_t>(11 - spec.n_min)];
    p.bt3_unique_at_11 = at11.max_density == bt_density(3) && at11.witness_count == 1 &&
                         at11.witnesses.front() == canonical_form(bt_graph(3));
  }
  return p;
}

/// Best graphs per n in G(Delta, omega), compared with the proven value when
/// there is one and otherwise with the lower bound.
inline ProbeReport probe_attainment(int t, int delta, int omega, int n_cap, int threads = 1,
                                    int cap = kDefaultSearchCap) {
  SearchSpec spec;
  spec.n_max = n_cap;
  spec.delta = delta;
  spec.omega = omega;
  spec.t = t;
  spec.threads = threads;
  spec.cap = cap;
  SearchReport search = best_up_to(spec);
  std::optional<Rational> target = search.exact ? search.exact : search.lower;
  return make_probe_report("attainment(" + std::to_string(t) + "," + std::to_string(delta) + "," +
                               std::to_string(omega) + ")",
                           std::move(search), std::move(target));
}

struct Classification {
  std::string lemma;
  int r = 0;
  /// Canonical graph6 of every graph meeting the hypotheses, sorted.
  std::vector<std::string> found;
  /// Canonical graph6 of the graphs the lemma names, sorted.
  std::vector<std::string> expected;
  /// nhd and comp require found == expected; nhd2 and comp2 require found
  /// to be a subset of expected.
  bool passed = false;
};

namespace detail {

inline Graph padded(const Graph& core, int n) { return disjoint_union(core, empty_graph(n - core.n())); }

// K_n minus the edges of `removed`, whose vertices are 0 .. removed.n()-1.
inline Graph complete_minus(int n, const Graph& core) {
  const Graph removed = padded(core, n);
  Graph g = complete_graph(n);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!removed.has_edge(e.first, e.second)) edges.push_back(e);
  }
  return Graph(n, edges);
}

inline std::vector<std::string> canonical_sorted(const std::vector<Graph>& graphs) {
  std::set<std::string> forms;
  for (const Graph& g : graphs) forms.insert(canonical_form(g));
  return {forms.begin(), forms.end()};
}

template <class Pred>
std::vector<std::string> collect_matching(const ClassSpec& cls, Pred&& pred) {
  struct Collector {
    std::vector<std::string> forms;
    const Pred* pred;
    void operator()(const Graph& g) {
      if ((*pred)(g)) forms.push_back(canonical_form(g));
    }
    void merge(Collector&& o) { forms.insert(forms.end(), o.forms.begin(), o.forms.end()); }
  };
  EnumerationOptions opt;
  opt.cap = kHardSearchCap;
  Collector c = reduce_class<Collector>(cls, opt, [&] { return Collector{{}, &pred}; });
  std::sort(c.forms.begin(), c.forms.end());
  return c.forms;
}

inline bool subset_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// 4r - 16 + 36/(r+2) <= x < 4r - 8
inline bool in_window(Count x, int r) {
  const Rational lo = Rational(4 * r - 16) + Rational(36, r + 2);
  return Rational(Integer(x)) >= lo && static_cast<long>(x) < 4L * r - 8;
}

}  // namespace detail

/// Graphs on at most r+2 vertices with clique number <= r and exactly three
/// r-cliques are K_{r+2} - K_3 and K_{r+2} - P_4.
inline Classification classify_nhd(int r) {
  if (r < 3) throw std::invalid_argument("nhd needs r >= 3");
  Classification c{"nhd", r, {}, {}, false};
  c.found = detail::collect_matching(ClassSpec{1, r + 2, r + 1, r},
                                     [r](const Graph& g) { return clique_count(g, r) == 3; });
  c.expected = detail::canonical_sorted(
      {detail::complete_minus(r + 2, complete_graph(3)), detail::complete_minus(r + 2, path_graph(4))});
  c.passed = c.found == c.expected;
  return c;
}

/// Graphs on at most r+1 vertices with clique number <= r-1 and k_{r-2} in
/// the window are among K_{r+1} - K_3 and K_{r+1} - P_4.
inline Classification classify_nhd2(int r) {
  if (r < 5) throw std::invalid_argument("nhd2 needs r >= 5");
  Classification c{"nhd2", r, {}, {}, false};
  c.found = detail::collect_matching(ClassSpec{1, r + 1, r, r - 1}, [r](const Graph& g) {
    return detail::in_window(clique_count(g, r - 2), r);
  });
  c.expected = detail::canonical_sorted(
      {detail::complete_minus(r + 1, complete_graph(3)), detail::complete_minus(r + 1, path_graph(4))});
  c.passed = detail::subset_of(c.found, c.expected);
  return c;
}

/// Graphs on at most `vertex_limit` vertices with no vertex cover of size <= 1
/// and exactly three of size 2 are K_3 or P_4 plus isolated vertices.
inline Classification classify_comp(int r, int vertex_limit) {
  Classification c{"comp", r, {}, {}, false};
  c.found = detail::collect_matching(ClassSpec{1, vertex_limit, vertex_limit, vertex_limit}, [](const Graph& g) {
    return vertex_cover_count(g, 0) == 0 && vertex_cover_count(g, 1) == 0 && vertex_cover_count(g, 2) == 3;
  });
  std::vector<Graph> expected;
  for (int m = 3; m <= vertex_limit; ++m) expected.push_back(detail::padded(complete_graph(3), m));
  for (int m = 4; m <= vertex_limit; ++m) expected.push_back(detail::padded(path_graph(4), m));
  c.expected = detail::canonical_sorted(expected);
  c.passed = c.found == c.expected;
  return c;
}

/// Graphs on r+1 vertices with no vertex cover of size 1 and c_3 in the
/// window are among K_3 and P_4 plus isolated vertices.
inline Classification classify_comp2(int r) {
  if (r < 5) throw std::invalid_argument("comp2 needs r >= 5");
  Classification c{"comp2", r, {}, {}, false};
  c.found = detail::collect_matching(ClassSpec{r + 1, r + 1, r, r + 1}, [r](const Graph& g) {
    return vertex_cover_count(g, 1) == 0 && detail::in_window(vertex_cover_count(g, 3), r);
  });
  c.expected =
      detail::canonical_sorted({detail::padded(complete_graph(3), r + 1), detail::padded(path_graph(4), r + 1)});
  c.passed = detail::subset_of(c.found, c.expected);
  return c;
}

/// nhd for r >= 3, nhd2 and comp2 for r >= 5, and comp on r+3 vertices, for
/// each r in [r_min, r_max].
inline std::vector<Classification> verify_neighborhood_lemmas(int r_min, int r_max) {
  if (r_min < 3 || r_max > 6) throw std::invalid_argument("neighborhood lemmas are checked for 3 <= r <= 6");
  std::vector<Classification> out;
  for (int r = r_min; r <= r_max; ++r) {
    out.push_back(classify_nhd(r));
    out.push_back(classify_comp(r, r + 3));
    if (r >= 5) {
      out.push_back(classify_nhd2(r));
      out.push_back(classify_comp2(r));
    }
  }
  return out;
}

}  // namespace cdt

#endif  // CDT_SEARCH_HPP
