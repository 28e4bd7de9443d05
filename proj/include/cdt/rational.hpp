#ifndef CDT_RATIONAL_HPP
#define CDT_RATIONAL_HPP

// Exact arithmetic for densities and bounds. Backed by Boost.Multiprecision's
// cpp_int / cpp_rational, which always keep values in lowest terms with a
// positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cdt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(num, den);
}

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q", or just "p" when the value is an integer.
inline std::string to_string(const Rational& r) {
  const Integer den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

/// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument otherwise.
inline Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  const bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

/// Non-authoritative decimal rendering for human readers.
inline double approximate(const Rational& r) { return r.convert_to<double>(); }

inline std::string decimal_hint(const Rational& r, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << approximate(r);
  return out.str();
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline Integer power(const Integer& base, long exponent) {
  Integer result = 1;
  for (long i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace cdt

#endif  // CDT_RATIONAL_HPP
