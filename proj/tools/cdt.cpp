// cdt: bounds, constructions, analysis, search and verification for clique
// densities in G(Delta, omega).
//
// Exit codes: 0 ok, 1 internal error, 2 invalid flags or parameters,
// 3 malformed graph6, 4 search cap exceeded, 5 a check failed.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cdt/analysis.hpp"
#include "cdt/canonical.hpp"
#include "cdt/graph6.hpp"
#include "cdt/registry.hpp"
#include "cdt/report.hpp"
#include "cdt/search.hpp"
#include "cdt/turan.hpp"
#include "cdt/verify.hpp"

namespace {

enum Exit : int { kOk = 0, kInvalid = 2, kMalformed = 3, kCap = 4, kCheckFailed = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void print_json(const cdt::Json& doc) { std::cout << doc.dump(2) << '\n'; }

// ---- bounds ----

struct BoundsArgs {
  int t = 3;
  int delta = 0;
  int omega = 0;
  bool json = false;
  bool table = false;
  int delta_min = 3, delta_max = 10, omega_min = 3, omega_max = 10;
};

void print_bounds_text(const cdt::BoundReport& r) {
  std::cout << "f_" << r.t << "(" << r.delta << "," << r.omega << ")\n";
  std::cout << "  lower  " << cdt::to_string(r.lower) << "  (~" << cdt::decimal_hint(r.lower) << ")\n";
  std::cout << "  upper  " << cdt::to_string(r.upper) << "  (~" << cdt::decimal_hint(r.upper) << ")\n";
  if (r.exact) {
    std::cout << "  exact  " << cdt::to_string(*r.exact) << "  (" << cdt::to_string(r.provenance) << ", witness "
              << *r.witness << ")\n";
  } else {
    std::cout << "  exact  none\n";
  }
  if (!r.note.empty()) std::cout << "  note   " << r.note << '\n';
}

int cmd_bounds(const BoundsArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  if (a.table) {
    if (a.t < 2 || a.delta_min < 1 || a.omega_min < 2) throw UsageError("table needs t >= 2, delta >= 1, omega >= 2");
    std::vector<cdt::BoundReport> rows;
    for (int omega = a.omega_min; omega <= a.omega_max; ++omega) {
      for (int delta = a.delta_min; delta <= a.delta_max; ++delta) {
        if (omega <= delta + 1) rows.push_back(cdt::bounds_report(a.t, delta, omega));
      }
    }
    if (a.json) {
      cdt::Json out = cdt::Json::array();
      for (const auto& r : rows) out.push_back(cdt::to_json(r));
      print_json(cdt::document("bounds",
                               cdt::Json{{"t", a.t},
                                         {"table", true},
                                         {"delta_range", {a.delta_min, a.delta_max}},
                                         {"omega_range", {a.omega_min, a.omega_max}}},
                               cdt::Json{{"rows", std::move(out)}}, {}, seconds_since(start)));
    } else {
      std::cout << cdt::csv_header() << '\n';
      for (const auto& r : rows) std::cout << cdt::csv_row(r) << '\n';
    }
    return kOk;
  }
  if (a.delta == 0 || a.omega == 0) throw UsageError("bounds needs -d and -w (or --table)");
  if (a.t < 2 || a.delta < 1 || a.omega < 2) throw UsageError("bounds needs t >= 2, delta >= 1, omega >= 2");
  const cdt::BoundReport r = cdt::bounds_report(a.t, a.delta, a.omega);
  if (a.json) {
    std::vector<std::string> witnesses;
    if (r.witness) witnesses.push_back(*r.witness);
    print_json(cdt::document("bounds", cdt::Json{{"t", a.t}, {"delta", a.delta}, {"omega", a.omega}, {"table", false}},
                             cdt::to_json(r), witnesses, seconds_since(start)));
  } else {
    print_bounds_text(r);
  }
  return kOk;
}

// ---- construct ----

int cmd_construct(const std::string& kind, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw UsageError("construct " + kind + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  cdt::Graph g;
  if (kind == "turan") {
    need(2);
    if (params[1] < 1 || params[0] < 0) throw UsageError("turan needs n >= 0 and r >= 1");
    g = cdt::turan_graph(params[0], params[1]);
  } else if (kind == "lbg") {
    need(2);
    g = cdt::lower_bound_graph(params[0], params[1]);
  } else if (kind == "bt") {
    need(1);
    g = cdt::bt_graph(params[0]);
  } else if (kind == "gstar") {
    need(0);
    g = cdt::g_star();
  } else {
    throw UsageError("unknown construction '" + kind + "'");
  }
  std::cout << cdt::canonical_form(g) << '\n';
  return kOk;
}

// ---- analyze ----

struct AnalyzeArgs {
  int t = 3;
  std::optional<int> delta;
  std::optional<int> omega;
  bool json = false;
};

void print_analysis_text(const cdt::GraphAnalysis& a) {
  std::cout << a.graph6 << '\n';
  std::cout << "  n " << a.n << "  edges " << a.edges << "  max_degree " << a.max_degree << "  clique_number "
            << a.clique_number << '\n';
  std::cout << "  k_" << a.t << " " << a.kt;
  if (a.density) std::cout << "  rho_" << a.t << " " << cdt::to_string(*a.density);
  std::cout << '\n';
  std::cout << "  weights";
  for (const auto& v : a.vertices) std::cout << ' ' << v.weight;
  std::cout << '\n';
  if (a.cls) {
    std::cout << "  class G(" << a.cls->delta << "," << a.cls->omega << ") ";
    if (!a.cls->member) {
      std::cout << "not a member\n";
    } else {
      std::cout << "perfect vertices:";
      if (a.cls->perfect.empty()) std::cout << " none";
      for (int v : a.cls->perfect) std::cout << ' ' << v;
      std::cout << '\n';
    }
  }
}

int cmd_analyze(const AnalyzeArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  if (a.delta.has_value() != a.omega.has_value()) throw UsageError("analyze needs both -d and -w, or neither");
  if (a.t < 0) throw UsageError("analyze needs t >= 0");
  std::optional<std::pair<int, int>> cls;
  if (a.delta) {
    if (*a.delta < 0 || *a.omega < 2) throw UsageError("analyze needs delta >= 0 and omega >= 2");
    cls = std::make_pair(*a.delta, *a.omega);
  }
  cdt::Json graphs = cdt::Json::array();
  std::string line;
  for (long number = 1; std::getline(std::cin, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      std::cerr << "warning: line " << number << ": empty line skipped\n";
      continue;
    }
    cdt::Graph g;
    try {
      g = cdt::graph6_decode(line);
    } catch (const cdt::Graph6Error& e) {
      std::cerr << "error: line " << number << ": malformed graph6 '" << line << "': " << e.what() << '\n';
      return kMalformed;
    }
    const cdt::GraphAnalysis result = cdt::analyze_graph(g, a.t, cls);
    if (a.json) {
      graphs.push_back(cdt::to_json(result));
    } else {
      print_analysis_text(result);
    }
  }
  if (a.json) {
    cdt::Json inputs{{"t", a.t}, {"delta", a.delta ? cdt::Json(*a.delta) : cdt::Json(nullptr)},
                     {"omega", a.omega ? cdt::Json(*a.omega) : cdt::Json(nullptr)}};
    print_json(cdt::document("analyze", std::move(inputs), cdt::Json{{"graphs", std::move(graphs)}}, {},
                             seconds_since(start)));
  }
  return kOk;
}

// ---- search ----

struct SearchArgs {
  std::string n;
  int delta = 0;
  int omega = 0;
  int t = 3;
  int threads = 1;
  bool json = false;
  std::optional<int> override_cap;
  std::size_t witness_limit = cdt::kDefaultWitnessLimit;
  std::optional<std::string> prune_target;
};

std::pair<int, int> parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("invalid vertex count '" + text + "'");
    }
    if (s.size() > 3) throw cdt::CapExceeded("n = " + s + " exceeds the hard limit");
    return std::stoi(s);
  };
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int lo = parse_int(text.substr(0, dash));
  const int hi = parse_int(text.substr(dash + 1));
  if (lo > hi) throw UsageError("empty vertex-count range '" + text + "'");
  return {lo, hi};
}

/// --override-cap beats CDT_MAX_N, which beats the default.
int effective_cap(const std::optional<int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CDT_MAX_N")) {
    const std::string text(env);
    if (text.empty() || text.size() > 3 || text.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("CDT_MAX_N must be a non-negative integer, got '" + text + "'");
    }
    return std::stoi(text);
  }
  return cdt::kDefaultSearchCap;
}

void print_search_text(const cdt::SearchReport& r) {
  const auto& s = r.spec;
  std::cout << "G(" << s.delta << "," << s.omega << "), t = " << s.t << ", n = " << s.n_min << ".." << s.n_max
            << ", threads " << s.threads << '\n';
  for (const auto& l : r.levels) {
    std::cout << "  n=" << l.n << "  graphs " << l.graphs << "  max k_" << s.t << " " << l.max_kt << "  max rho "
              << cdt::to_string(l.max_density) << "  witnesses " << l.witness_count;
    if (!l.witnesses.empty()) {
      std::cout << " [";
      for (std::size_t i = 0; i < l.witnesses.size(); ++i) std::cout << (i ? " " : "") << l.witnesses[i];
      if (l.witnesses.size() < l.witness_count) std::cout << " ...";
      std::cout << "]";
    }
    std::cout << '\n';
  }
  std::cout << "  best " << cdt::to_string(r.best) << " at n=" << r.best_n << '\n';
  if (r.lower) std::cout << "  lower " << cdt::to_string(*r.lower) << "  upper " << cdt::to_string(*r.upper) << '\n';
  if (r.exact) std::cout << "  exact " << cdt::to_string(*r.exact) << '\n';
  if (r.meets_lower_at) std::cout << "  meets lower bound at n=" << *r.meets_lower_at << '\n';
  if (r.meets_exact_at) std::cout << "  meets exact value at n=" << *r.meets_exact_at << '\n';
  if (r.pruned) std::cout << "  pruned: only levels reaching the target are exact\n";
  std::cout << "  graphs enumerated " << r.graphs_enumerated << "  wall " << r.wall_seconds << " s\n";
}

int cmd_search(const SearchArgs& a) {
  cdt::SearchSpec spec;
  std::tie(spec.n_min, spec.n_max) = parse_range(a.n);
  spec.delta = a.delta;
  spec.omega = a.omega;
  spec.t = a.t;
  spec.threads = a.threads;
  spec.cap = effective_cap(a.override_cap);
  spec.witness_limit = a.witness_limit;
  if (a.prune_target) {
    try {
      spec.prune_target = cdt::parse_rational(*a.prune_target);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (spec.n_min < 1 || spec.t < 2 || spec.delta < 0 || spec.omega < 1 || spec.threads < 1) {
    throw UsageError("search needs n >= 1, t >= 2, delta >= 0, omega >= 1, threads >= 1");
  }
  const cdt::SearchReport r = cdt::best_up_to(spec);
  if (a.json) {
    std::vector<std::string> witnesses;
    for (const auto& l : r.levels) {
      if (l.n == r.best_n) witnesses = l.witnesses;
    }
    print_json(cdt::document("search", cdt::spec_json(spec), cdt::to_json(r), witnesses, r.wall_seconds));
  } else {
    print_search_text(r);
  }
  return kOk;
}

// ---- verify ----

int cmd_verify(const std::string& suite, int threads, bool json) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<cdt::CheckResult> results = cdt::run_suite(suite, threads);
  bool ok = true;
  cdt::Json checks = cdt::Json::array();
  std::vector<std::string> counterexamples;
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (r.counterexample) counterexamples.push_back(*r.counterexample);
    if (json) {
      checks.push_back(cdt::to_json(r));
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  checked=" << r.checked;
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    if (r.counterexample) std::cout << "  counterexample " << *r.counterexample;
    std::cout << '\n';
  }
  if (json) {
    print_json(cdt::document("verify", cdt::Json{{"suite", suite}, {"threads", threads}},
                             cdt::Json{{"passed", ok}, {"checks", std::move(checks)}}, counterexamples,
                             seconds_since(start)));
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? kOk : kCheckFailed;
}

// ---- probe ----

struct ProbeArgs {
  std::string name;
  int n_cap = 10;
  int t = 3, delta = 5, omega = 3;
  int r = 5;
  int threads = 1;
  bool json = false;
  std::optional<int> override_cap;
};

void print_probe_text(const cdt::ProbeReport& p) {
  print_search_text(p.search);
  std::cout << "  probe " << p.name;
  if (p.target) {
    std::cout << ": target " << cdt::to_string(*p.target) << (p.beaten ? ", BEATEN" : ", not beaten");
    std::cout << ", attained by " << p.attained.size() << " graph(s)";
  }
  std::cout << '\n';
  for (const auto& [n, g6] : p.attained) std::cout << "    n=" << n << " " << g6 << '\n';
  if (p.bt3_unique_at_11) {
    std::cout << "  BT(3) unique best at n=11: " << (*p.bt3_unique_at_11 ? "yes" : "no") << '\n';
  }
}

int cmd_probe(const ProbeArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const int cap = effective_cap(a.override_cap);
  if (a.name == "config") {
    if (a.r < 3 || a.n_cap < 1) throw UsageError("config probe needs r >= 3 and n >= 1");
    if (a.n_cap > cap) throw cdt::CapExceeded("n = " + std::to_string(a.n_cap) + " exceeds the search cap");
    const cdt::ConfigurationProbe p = cdt::probe_configuration_weights(a.r, a.n_cap, a.threads);
    if (a.json) {
      std::vector<std::string> w;
      if (p.violation) w.push_back(*p.violation);
      print_json(cdt::document("probe", cdt::Json{{"name", "config"}, {"r", a.r}, {"n_cap", a.n_cap}}, cdt::to_json(p),
                               w, seconds_since(start)));
    } else {
      std::cout << "configuration weights in G(" << p.r << "," << p.r << "), n <= " << p.n_max << '\n'
                << "  graphs " << p.graphs << "  configurations " << p.configurations << " (incident " << p.incident
                << ", non-incident " << p.non_incident << ")\n"
                << "  bound " << p.bound << "  max sum incident " << p.max_sum_incident << "  non-incident "
                << p.max_sum_non_incident << '\n'
                << "  " << (p.violation ? "bound exceeded by " + *p.violation : std::string("bound holds")) << '\n';
    }
    return kOk;
  }
  cdt::ProbeReport p;
  if (a.name == "bt3") {
    p = cdt::probe_bt3(a.n_cap, a.threads, cap);
  } else if (a.name == "attainment") {
    if (a.t < 2 || a.delta < 1 || a.omega < 2) throw UsageError("attainment needs t >= 2, delta >= 1, omega >= 2");
    p = cdt::probe_attainment(a.t, a.delta, a.omega, a.n_cap, a.threads, cap);
  } else {
    throw UsageError("unknown probe '" + a.name + "'");
  }
  if (a.json) {
    std::vector<std::string> w;
    for (const auto& at : p.attained) w.push_back(at.second);
    print_json(cdt::document("probe",
                             cdt::Json{{"name", a.name}, {"n_cap", a.n_cap}, {"t", p.search.spec.t},
                                       {"delta", p.search.spec.delta}, {"omega", p.search.spec.omega}},
                             cdt::to_json(p), w, seconds_since(start)));
  } else {
    print_probe_text(p);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique densities in graphs of bounded degree and clique number"};
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "lower/upper/exact values of f_t(Delta, omega)");
  b->add_option("-t", bounds.t, "clique size")->check(CLI::Range(2, 64));
  b->add_option("-d,--delta", bounds.delta, "maximum degree")->check(CLI::Range(1, 100000));
  b->add_option("-w,--omega", bounds.omega, "clique number bound")->check(CLI::Range(2, 100000));
  b->add_flag("--json", bounds.json, "JSON document");
  b->add_flag("--table", bounds.table, "CSV grid over delta and omega");
  b->add_option("--delta-min", bounds.delta_min)->check(CLI::Range(1, 1000));
  b->add_option("--delta-max", bounds.delta_max)->check(CLI::Range(1, 1000));
  b->add_option("--omega-min", bounds.omega_min)->check(CLI::Range(2, 1000));
  b->add_option("--omega-max", bounds.omega_max)->check(CLI::Range(2, 1000));

  std::string kind;
  std::vector<int> params;
  auto* c = app.add_subcommand("construct", "canonical graph6 of turan N R | lbg D W | bt K | gstar");
  c->add_option("kind", kind, "turan, lbg, bt or gstar")->required();
  c->add_option("params", params, "integer parameters");

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "analyze graph6 lines from stdin");
  an->add_option("-t", analyze.t, "clique size")->check(CLI::Range(0, 64));
  an->add_option("-d,--delta", analyze.delta, "class degree bound (with -w)");
  an->add_option("-w,--omega", analyze.omega, "class clique bound (with -d)");
  an->add_flag("--json", analyze.json, "JSON document");

  SearchArgs search;
  auto* s = app.add_subcommand("search", "exhaustive maxima of rho_t over G(Delta, omega)");
  s->add_option("-n", search.n, "vertex count N or range A-B")->required();
  s->add_option("-d,--delta", search.delta, "maximum degree")->required();
  s->add_option("-w,--omega", search.omega, "clique number bound")->required();
  s->add_option("-t", search.t, "clique size")->required();
  s->add_option("--threads", search.threads, "worker threads")->check(CLI::Range(1, 256));
  s->add_flag("--json", search.json, "JSON document");
  s->add_option("--override-cap", search.override_cap, "raise the vertex cap (at most 16)");
  s->add_option("--witness-limit", search.witness_limit, "witnesses kept per n");
  s->add_option("--prune-target", search.prune_target, "skip branches that cannot reach this density (p/q)");

  std::string suite;
  int verify_threads = 1;
  bool verify_json = false;
  auto* v = app.add_subcommand("verify", "run check suites");
  v->add_option("suite", suite, "formulas, lemmas, zykov, monotone, superadd, neighborhoods or all")
      ->required()
      ->check(CLI::IsMember({"formulas", "lemmas", "zykov", "monotone", "superadd", "neighborhoods", "all"}));
  v->add_option("--threads", verify_threads)->check(CLI::Range(1, 256));
  v->add_flag("--json", verify_json);

  ProbeArgs probe;
  auto* p = app.add_subcommand("probe", "conjecture probes: bt3, attainment, config");
  p->add_option("name", probe.name, "bt3, attainment or config")
      ->required()
      ->check(CLI::IsMember({"bt3", "attainment", "config"}));
  p->add_option("-n,--n-cap", probe.n_cap, "largest vertex count searched");
  p->add_option("-t", probe.t);
  p->add_option("-d,--delta", probe.delta);
  p->add_option("-w,--omega", probe.omega);
  p->add_option("-r", probe.r, "config probe: Delta = omega = r");
  p->add_option("--threads", probe.threads)->check(CLI::Range(1, 256));
  p->add_flag("--json", probe.json);
  p->add_option("--override-cap", probe.override_cap, "raise the vertex cap (at most 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*b) return cmd_bounds(bounds);
    if (*c) return cmd_construct(kind, params);
    if (*an) return cmd_analyze(analyze);
    if (*s) return cmd_search(search);
    if (*v) return cmd_verify(suite, verify_threads, verify_json);
    if (*p) return cmd_probe(probe);
  } catch (const cdt::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise it with --override-cap or CDT_MAX_N, up to "
              << cdt::kHardSearchCap << ")\n";
    return kCap;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kInvalid;
}
