#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace jetcheck {

using Rational = boost::multiprecision::cpp_rational;

/// Exact scalar coefficient of the form r + s*sqrt2.
///
/// Plain rationals cover almost everything; the sqrt2 part exists because a
/// handful of catalog transformations carry an irreducible factor of sqrt(2).
/// The pair forms a field, so arithmetic stays exact throughout.
struct Coeff {
  Rational r;  // rational part
  Rational s;  // coefficient of sqrt2

  Coeff() : r(0), s(0) {}
  Coeff(long n) : r(n), s(0) {}          // NOLINT: implicit by design
  Coeff(Rational q) : r(std::move(q)), s(0) {}
  Coeff(Rational rr, Rational ss) : r(std::move(rr)), s(std::move(ss)) {}

  static Coeff sqrt2() { return Coeff(Rational(0), Rational(1)); }
  static Coeff of(long num, long den) { return Coeff(Rational(num, den)); }

  bool is_zero() const { return r == 0 && s == 0; }
  bool is_one() const { return r == 1 && s == 0; }
  bool is_rational() const { return s == 0; }

  Coeff operator-() const { return Coeff(-r, -s); }
  Coeff operator+(const Coeff& o) const { return Coeff(r + o.r, s + o.s); }
  Coeff operator-(const Coeff& o) const { return Coeff(r - o.r, s - o.s); }
  Coeff operator*(const Coeff& o) const {
    return Coeff(r * o.r + 2 * s * o.s, r * o.s + s * o.r);
  }
  Coeff inverse() const {
    // (r + s*sqrt2)^-1 = (r - s*sqrt2)/(r^2 - 2 s^2); denominator is zero
    // only for the zero element since sqrt2 is irrational.
    Rational d = r * r - 2 * s * s;
    return Coeff(r / d, -s / d);
  }
  Coeff operator/(const Coeff& o) const { return *this * o.inverse(); }

  Coeff& operator+=(const Coeff& o) {
    r += o.r;
    s += o.s;
    return *this;
  }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  bool operator==(const Coeff& o) const { return r == o.r && s == o.s; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Sign of the real value r + s*sqrt2.
  int sign() const {
    int sr = r.sign(), ss = s.sign();
    if (sr == 0) return ss;
    if (ss == 0) return sr;
    if (sr == ss) return sr;
    // Opposite signs: compare r^2 against 2 s^2.
    Rational rr = r * r, ss2 = 2 * s * s;
    if (rr == ss2) return 0;  // impossible for nonzero entries, kept for safety
    return rr > ss2 ? sr : ss;
  }

  double to_double() const {
    return static_cast<double>(r) + 1.4142135623730950488 * static_cast<double>(s);
  }

  std::string str() const;

  /// Deterministic total order (lexicographic; used for canonical term sort).
  int compare(const Coeff& o) const {
    if (r != o.r) return r < o.r ? -1 : 1;
    if (s != o.s) return s < o.s ? -1 : 1;
    return 0;
  }
};

std::size_t hash_value(const Coeff& c);

}  // namespace jetcheck
