#include "scalar.hpp"

#include <algorithm>
#include <cstdio>

namespace webclass {

std::string Scalar::str() const {
  if (exact) return to_string(q);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", f);
  return buf;
}

Scalar sqrt_scalar(const Scalar& v) {
  if (v.exact) {
    if (auto r = exact_sqrt(v.q)) return Scalar(*r);
    if (sgn(v.q) < 0) throw Error(ErrorCode::Precondition, "square root of negative value " + v.str());
    return Scalar::real(std::sqrt(v.q.get_d()));
  }
  if (v.f < 0) return Scalar::real(0.0);
  return Scalar::real(std::sqrt(v.f));
}

Scalar abs_scalar(const Scalar& v) { return v.exact ? Scalar(Rational(abs(v.q))) : Scalar::real(std::fabs(v.f)); }

bool scalar_eq(const Scalar& a, const Scalar& b, double tol) {
  if (a.exact && b.exact) return a.q == b.q;
  double x = a.d(), y = b.d();
  return std::fabs(x - y) <= tol * std::max({1.0, std::fabs(x), std::fabs(y)});
}

bool scalar_is_zero(const Scalar& a, double tol) { return scalar_eq(a, Scalar(Rational(0)), tol); }

}  // namespace webclass
