#pragma once

#include <cmath>
#include <string>

#include "exact_algebra.hpp"

namespace webclass {

/** A value that is exact when possible and a double otherwise. */
struct Scalar {
  bool exact = true;
  Rational q{0};
  double f = 0.0;

  Scalar() = default;
  Scalar(const Rational& v) : exact(true), q(v), f(v.get_d()) {}  // NOLINT
  static Scalar real(double v) {
    Scalar s;
    s.exact = false;
    s.f = v;
    return s;
  }
  double d() const { return exact ? q.get_d() : f; }
  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return a.exact && b.exact ? Scalar(a.q + b.q) : real(a.d() + b.d());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return a.exact && b.exact ? Scalar(a.q - b.q) : real(a.d() - b.d());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return a.exact && b.exact ? Scalar(a.q * b.q) : real(a.d() * b.d());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a.exact && b.exact ? Scalar(Rational(a.q / b.q)) : real(a.d() / b.d());
  }
  Scalar operator-() const { return exact ? Scalar(Rational(-q)) : real(-f); }
};

/** Square root, exact when the argument is an exact rational square. */
Scalar sqrt_scalar(const Scalar& v);
Scalar abs_scalar(const Scalar& v);

/** Equality: exact comparison when both are exact, else |a-b| <= tol * max(1,|a|,|b|). */
bool scalar_eq(const Scalar& a, const Scalar& b, double tol = 1e-9);
bool scalar_is_zero(const Scalar& a, double tol = 1e-9);

}  // namespace webclass
