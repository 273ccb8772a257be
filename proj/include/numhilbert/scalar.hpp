#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <gmpxx.h>

namespace nh {

/// Approximate field element. Equality is only ever decided against a caller-supplied tolerance.
using Complex = std::complex<double>;
/// Exact field element (arbitrary precision).
using Rational = mpq_class;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& c) { return c == Complex{}; }
  static double magnitude(const Complex& c) { return std::abs(c); }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static Complex conj(const Complex& c) { return std::conj(c); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
  static double magnitude(const Rational& q) { return std::abs(q.get_d()); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational conj(const Rational& q) { return q; }
};

inline Complex to_complex(const Complex& c) { return c; }
inline Complex to_complex(const Rational& q) { return {q.get_d(), 0.0}; }

/// Round-trippable text: "3", "-1/2"; complex values use 17 significant digits.
std::string format_scalar(const Rational& q);
std::string format_scalar(const Complex& c);

}  // namespace nh
