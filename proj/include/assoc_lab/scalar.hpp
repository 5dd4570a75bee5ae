#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>

namespace assoc_lab {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Field operations the series code needs from a coefficient type.
///
/// Exact fields compare with ==; inexact ones expose a magnitude so callers
/// can judge equality against a tolerance.
template <class K>
struct Field;

template <>
struct Field<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode = "rational";

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  static Rational from_ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  static Rational from_int(long p) { return Rational(p); }
  static std::string to_string(const Rational& x) {
    std::string s = x.get_str();
    if (s.find('/') == std::string::npos) s += "/1";
    return s;
  }
};

template <>
struct Field<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* mode = "complex";

  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static Complex from_ratio(long p, long q) {
    return {static_cast<double>(p) / static_cast<double>(q), 0.0};
  }
  static Complex from_int(long p) { return {static_cast<double>(p), 0.0}; }
};

inline Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
inline Complex to_complex(const Complex& x) { return x; }

/// Parses "p/q" or "p" into a reduced rational; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace assoc_lab
