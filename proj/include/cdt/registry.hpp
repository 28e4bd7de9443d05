#ifndef CDT_REGISTRY_HPP
#define CDT_REGISTRY_HPP

// Proven exact values of f_t(Delta, omega) and the combined bound report.
//
// Each row applies only inside the parameter range its theorem covers:
//   divisibility     (omega-1) | Delta, 2 <= t <= omega   -> L(Delta, omega)
//   delta-eq-omega   Delta = omega = r, 3 <= t <= r        -> T(r+1, r)
//   delta-eq-omega+1 Delta = r+1, omega = r: t = r (r >= 4) or t = r-1 (r >= 5)
//                                                         -> T(r+2, r)
//   special triples  (3,5,3) BT(2), (3,5,4) G*, (3,6,5) T(8,4)

#include <optional>
#include <string>
#include <string_view>

#include "cdt/canonical.hpp"
#include "cdt/cliques.hpp"
#include "cdt/turan.hpp"

namespace cdt {

enum class Provenance { divisibility, delta_eq_omega, delta_eq_omega_plus_one, special_triple, none };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::divisibility: return "divisibility";
    case Provenance::delta_eq_omega: return "delta-eq-omega";
    case Provenance::delta_eq_omega_plus_one: return "delta-eq-omega-plus-one";
    case Provenance::special_triple: return "special-triple";
    case Provenance::none: return "none";
  }
  return "none";
}

struct ExactValue {
  Rational value;
  Graph witness;
  Provenance provenance = Provenance::none;
};

/// The proven value of f_t(Delta, omega), or nothing when no theorem covers
/// the triple. omega must already satisfy omega <= Delta + 1.
inline std::optional<ExactValue> exact_value(long t, long delta, long omega) {
  if (t < 2) throw std::invalid_argument("exact_value needs t >= 2");
  if (omega < 2 || delta < 1) return std::nullopt;

  if (t == 3 && delta == 5 && omega == 3) {
    return ExactValue{Rational(15, 8), bt_graph(2), Provenance::special_triple};
  }
  if (t == 3 && delta == 5 && omega == 4) {
    return ExactValue{Rational(16, 7), g_star(), Provenance::special_triple};
  }
  if (t == 3 && delta == 6 && omega == 5) {
    return ExactValue{Rational(4), turan_graph(8, 4), Provenance::special_triple};
  }
  if (delta % (omega - 1) == 0 && t <= omega) {
    const Decomposition d = decompose(delta, omega);
    if (d.delta + d.a > kMaxVertices) return std::nullopt;
    return ExactValue{lower_bound(t, delta, omega),
                      lower_bound_graph(static_cast<int>(delta), static_cast<int>(omega)),
                      Provenance::divisibility};
  }
  if (delta == omega && t >= 3 && t <= omega) {
    const long r = omega;
    if (r + 1 > kMaxVertices) return std::nullopt;
    return ExactValue{turan_density(r + 1, r, t), turan_graph(static_cast<int>(r + 1), static_cast<int>(r)),
                      Provenance::delta_eq_omega};
  }
  if (delta == omega + 1) {
    const long r = omega;
    const bool top = t == r && r >= 4;
    const bool next = t == r - 1 && r >= 5;
    if ((top || next) && r + 2 <= kMaxVertices) {
      return ExactValue{turan_density(r + 2, r, t), turan_graph(static_cast<int>(r + 2), static_cast<int>(r)),
                        Provenance::delta_eq_omega_plus_one};
    }
  }
  return std::nullopt;
}

struct BoundReport {
  long t = 0;
  long delta = 0;
  long omega = 0;
  long omega_requested = 0;
  bool omega_clamped = false;
  Rational lower;
  Rational upper;
  std::optional<Rational> exact;
  /// Canonical graph6 of a graph attaining `exact`.
  std::optional<std::string> witness;
  Provenance provenance = Provenance::none;
  std::string note;
};

inline BoundReport bounds_report(long t, long delta, long omega) {
  if (t < 2 || omega < 2 || delta < 1) {
    throw std::invalid_argument("bounds_report needs t >= 2, omega >= 2, delta >= 1");
  }
  BoundReport r;
  r.t = t;
  r.delta = delta;
  r.omega_requested = omega;
  r.omega = std::min(omega, delta + 1);
  r.omega_clamped = r.omega != omega;
  r.lower = lower_bound(t, delta, r.omega);
  r.upper = upper_bound(t, delta, r.omega);
  if (auto exact = exact_value(t, delta, r.omega)) {
    r.exact = exact->value;
    r.witness = canonical_form(exact->witness);
    r.provenance = exact->provenance;
  }
  if (t > r.omega) {
    r.note = "no K_t fits under the clique bound; every graph in the class has density 0";
  } else if (t == 3 && r.omega == 3 && delta == 7) {
    r.note = "conjectured " + to_string(bt_density(3)) + " attained by BT(3)";
  } else if (!r.exact) {
    r.note = "open: no proven exact value";
  }
  if (r.omega_clamped) {
    if (!r.note.empty()) r.note += "; ";
    r.note += "omega lowered to Delta+1 = " + std::to_string(r.omega);
  }
  return r;
}

}  // namespace cdt

#endif  // CDT_REGISTRY_HPP
