#ifndef CDT_REPORT_HPP
#define CDT_REPORT_HPP

// JSON documents and CSV rows for reports. Rationals are written as exact
// "p/q" strings with a decimal beside them for display only.

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "cdt/analysis.hpp"
#include "cdt/registry.hpp"
#include "cdt/search.hpp"
#include "cdt/verify.hpp"

namespace cdt {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

inline Json rational_json(const Rational& r) { return Json{{"value", to_string(r)}, {"decimal", approximate(r)}}; }

template <class T>
Json optional_json(const std::optional<T>& value) {
  if (!value) return nullptr;
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_json(*value);
  } else {
    return Json(*value);
  }
}

/// Top-level document: command echo, inputs, outputs, witnesses, timing.
inline Json document(const std::string& command, Json inputs, Json outputs, const std::vector<std::string>& witnesses,
                     double wall_seconds) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["outputs"] = std::move(outputs);
  doc["witnesses"] = witnesses;
  doc["timing"] = Json{{"wall_seconds", wall_seconds}};
  return doc;
}

inline Json to_json(const BoundReport& r) {
  return Json{{"t", r.t},
              {"delta", r.delta},
              {"omega", r.omega},
              {"omega_requested", r.omega_requested},
              {"omega_clamped", r.omega_clamped},
              {"lower", rational_json(r.lower)},
              {"upper", rational_json(r.upper)},
              {"exact", optional_json(r.exact)},
              {"witness", optional_json(r.witness)},
              {"provenance", std::string(to_string(r.provenance))},
              {"note", r.note}};
}

inline Json to_json(const LevelResult& l) {
  return Json{{"n", l.n},
              {"graphs_enumerated", l.graphs},
              {"max_kt", l.max_kt},
              {"max_density", rational_json(l.max_density)},
              {"witness_count", l.witness_count},
              {"witnesses", l.witnesses}};
}

inline Json spec_json(const SearchSpec& s) {
  return Json{{"n_min", s.n_min},
              {"n_max", s.n_max},
              {"delta", s.delta},
              {"omega", s.omega},
              {"t", s.t},
              {"threads", s.threads},
              {"cap", s.cap},
              {"prune_target", optional_json(s.prune_target)},
              {"witness_limit", s.witness_limit}};
}

inline Json to_json(const SearchReport& r) {
  Json levels = Json::array();
  for (const LevelResult& l : r.levels) levels.push_back(to_json(l));
  return Json{{"levels", std::move(levels)},
              {"graphs_enumerated", r.graphs_enumerated},
              {"best", rational_json(r.best)},
              {"best_n", r.best_n},
              {"lower", optional_json(r.lower)},
              {"upper", optional_json(r.upper)},
              {"exact", optional_json(r.exact)},
              {"meets_lower_at", optional_json(r.meets_lower_at)},
              {"meets_exact_at", optional_json(r.meets_exact_at)},
              {"pruned", r.pruned}};
}

inline Json to_json(const CheckResult& c) {
  return Json{{"name", c.name},
              {"passed", c.passed},
              {"checked", c.checked},
              {"counterexample", optional_json(c.counterexample)},
              {"detail", c.detail}};
}

inline Json to_json(const ProbeReport& p) {
  Json attained = Json::array();
  for (const auto& [n, g6] : p.attained) attained.push_back(Json{{"n", n}, {"graph6", g6}});
  return Json{{"name", p.name},
              {"target", optional_json(p.target)},
              {"beaten", p.beaten},
              {"attained", std::move(attained)},
              {"bt3_unique_at_11", optional_json(p.bt3_unique_at_11)},
              {"search", to_json(p.search)}};
}

inline Json to_json(const ConfigurationProbe& p) {
  return Json{{"r", p.r},
              {"n_max", p.n_max},
              {"graphs_enumerated", p.graphs},
              {"configurations", p.configurations},
              {"incident", p.incident},
              {"non_incident", p.non_incident},
              {"max_sum_incident", p.max_sum_incident},
              {"max_sum_non_incident", p.max_sum_non_incident},
              {"bound", p.bound},
              {"violation", optional_json(p.violation)}};
}

inline Json to_json(const GraphAnalysis& a) {
  Json vertices = Json::array();
  for (const VertexReport& v : a.vertices) {
    vertices.push_back(Json{{"vertex", v.vertex}, {"degree", v.degree}, {"weight", v.weight}});
  }
  Json out{{"graph6", a.graph6},
           {"n", a.n},
           {"edges", a.edges},
           {"max_degree", a.max_degree},
           {"clique_number", a.clique_number},
           {"t", a.t},
           {"kt", a.kt},
           {"density", optional_json(a.density)},
           {"vertices", std::move(vertices)}};
  if (a.cls) {
    out["class"] = Json{{"delta", a.cls->delta},
                        {"omega", a.cls->omega},
                        {"member", a.cls->member},
                        {"perfect_vertices", a.cls->perfect}};
  } else {
    out["class"] = nullptr;
  }
  return out;
}

inline std::string csv_header() { return "delta,omega,t,lower,upper,exact,provenance"; }

inline std::string csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.delta << ',' << r.omega << ',' << r.t << ',' << to_string(r.lower) << ',' << to_string(r.upper) << ','
      << (r.exact ? to_string(*r.exact) : "") << ',' << (r.exact ? to_string(r.provenance) : "");
  return out.str();
}

}  // namespace cdt

#endif  // CDT_REPORT_HPP
