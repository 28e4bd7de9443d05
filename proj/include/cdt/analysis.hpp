#ifndef CDT_ANALYSIS_HPP
#define CDT_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdt/cliques.hpp"
#include "cdt/graph6.hpp"
#include "cdt/local.hpp"

namespace cdt {

struct VertexReport {
  int vertex = 0;
  int degree = 0;
  /// k_t(v)
  Count weight = 0;
};

struct ClassCheck {
  int delta = 0;
  int omega = 0;
  bool member = false;
  /// Perfect vertices; only computed for members.
  std::vector<int> perfect;
};

struct GraphAnalysis {
  std::string graph6;
  int n = 0;
  Count edges = 0;
  int max_degree = 0;
  int clique_number = 0;
  int t = 2;
  Count kt = 0;
  /// Absent for the graph with no vertices.
  std::optional<Rational> density;
  std::vector<VertexReport> vertices;
  std::optional<ClassCheck> cls;
};

inline GraphAnalysis analyze_graph(const Graph& g, int t, std::optional<std::pair<int, int>> cls = std::nullopt) {
  GraphAnalysis a;
  a.graph6 = graph6_encode(g);
  a.n = g.n();
  a.edges = static_cast<Count>(g.edge_count());
  a.max_degree = max_degree(g);
  a.clique_number = clique_number(g);
  a.t = t;
  a.kt = clique_count(g, t);
  if (g.n() > 0) a.density = density(g, t);
  for (int v = 0; v < g.n(); ++v) a.vertices.push_back({v, g.degree(v), vertex_weight(g, v, t)});
  if (cls) {
    ClassCheck c;
    c.delta = cls->first;
    c.omega = cls->second;
    if (c.omega < 2) throw std::invalid_argument("perfect vertices need omega >= 2");
    c.member = a.max_degree <= c.delta && a.clique_number <= c.omega;
    if (c.member) {
      for (int v = 0; v < g.n(); ++v) {
        if (is_perfect_vertex(g, v, c.delta, c.omega)) c.perfect.push_back(v);
      }
    }
    a.cls = c;
  }
  return a;
}

}  // namespace cdt

#endif  // CDT_ANALYSIS_HPP
