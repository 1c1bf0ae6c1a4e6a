#include "killing_space.hpp"

#include <sstream>

namespace webclass {

namespace {

const MultiPoly X = MultiPoly::var("x");
const MultiPoly Y = MultiPoly::var("y");

// 1, x, y, x^2, xy, y^2 as exponents over (x, y)
const std::array<Exps, 6> kQuadMonomials = {Exps{0, 0}, Exps{1, 0}, Exps{0, 1}, Exps{2, 0}, Exps{1, 1}, Exps{0, 2}};

std::array<MultiPoly, 4> killing_equations(const KTComponents& k) {
  return {k.k11.diff("x"), k.k22.diff("y"), k.k11.diff("y") + 2 * k.k12.diff("x"),
          2 * k.k12.diff("y") + k.k22.diff("x")};
}

}  // namespace

SymParams to_sym(const KTParams& b) {
  SymParams s;
  for (size_t i = 0; i < 6; ++i) s[i] = MultiPoly(b[i]);
  return s;
}

SymParams symbolic_params(const std::string& prefix) {
  SymParams s;
  for (size_t i = 0; i < 6; ++i) s[i] = MultiPoly::var(prefix + std::to_string(i + 1));
  return s;
}

const char* web_kind_name(WebKind k) {
  switch (k) {
    case WebKind::Cartesian: return "Cartesian";
    case WebKind::Polar: return "Polar";
    case WebKind::Parabolic: return "Parabolic";
    case WebKind::EllipticHyperbolic: return "EllipticHyperbolic";
  }
  return "?";
}

WebKind parse_web_kind(const std::string& s) {
  if (s == "cartesian" || s == "Cartesian") return WebKind::Cartesian;
  if (s == "polar" || s == "Polar") return WebKind::Polar;
  if (s == "parabolic" || s == "Parabolic") return WebKind::Parabolic;
  if (s == "eh" || s == "EH" || s == "EllipticHyperbolic" || s == "elliptic-hyperbolic")
    return WebKind::EllipticHyperbolic;
  throw Error(ErrorCode::Parse, "unknown web type '" + s + "'");
}

KTComponents kt_components(const SymParams& b) {
  KTComponents k;
  k.k11 = b[0] + 2 * b[3] * Y + b[5] * Y * Y;
  k.k12 = b[2] - b[3] * X - b[4] * Y - b[5] * X * Y;
  k.k22 = b[1] + 2 * b[4] * X + b[5] * X * X;
  return k;
}

KTComponents kt_components(const KTParams& b) { return kt_components(to_sym(b)); }

KTComponents kt_components_compact(const KTParams& b) {
  // K^{ij} = A^{ij} + B^i e^j + B^j e^i + C e^i e^j with e = (y, -x) the rotation generator
  const MultiPoly A[2][2] = {{b[0], b[2]}, {b[2], b[1]}};
  const MultiPoly B[2] = {b[3], Rational(-b[4])};
  const MultiPoly C = b[5];
  const MultiPoly e[2] = {Y, -X};
  MultiPoly K[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) K[i][j] = A[i][j] + B[i] * e[j] + B[j] * e[i] + C * e[i] * e[j];
  return {K[0][0], K[0][1], K[1][1]};
}

RVec component_coefficients(const KTComponents& k) {
  RVec out;
  for (const MultiPoly* p : {&k.k11, &k.k12, &k.k22}) {
    auto parts = p->split({"x", "y"});
    for (const auto& [key, c] : parts) {
      bool known = false;
      for (const auto& m : kQuadMonomials) known = known || m == key;
      if (!known || !c.is_constant())
        throw Error(ErrorCode::Precondition, "component is not a quadratic polynomial in x, y: " + p->str());
    }
    for (const auto& m : kQuadMonomials) {
      auto it = parts.find(m);
      out.push_back(it == parts.end() ? Rational(0) : it->second.constant_term());
    }
  }
  return out;
}

KTParams kt_params_from_components(const KTComponents& k) {
  RVec c = component_coefficients(k);
  // k11 block occupies 0..5, k12 6..11, k22 12..17
  KTParams b;
  b[0] = c[0];
  b[3] = c[2] / 2;
  b[5] = c[5];
  b[2] = c[6];
  b[4] = -c[8];
  b[1] = c[12];
  return b;
}

bool verify_killing(const KTComponents& k) {
  for (const auto& e : killing_equations(k))
    if (!e.is_zero()) return false;
  return true;
}

std::vector<KTComponents> solve_killing_equation() {
  // unknown j: component j / 6 with monomial j % 6; equations split on 1, x, y
  const size_t n = 18;
  const std::array<Exps, 3> linear = {Exps{0, 0}, Exps{1, 0}, Exps{0, 1}};
  RMat m(12, RVec(n, Rational(0)));
  auto unit = [&](size_t j) {
    KTComponents k{MultiPoly({"x", "y"}), MultiPoly({"x", "y"}), MultiPoly({"x", "y"})};
    MultiPoly mono = MultiPoly::monomial({"x", "y"}, kQuadMonomials[j % 6], Rational(1));
    (j / 6 == 0 ? k.k11 : j / 6 == 1 ? k.k12 : k.k22) = mono;
    return k;
  };
  for (size_t j = 0; j < n; ++j) {
    auto eqs = killing_equations(unit(j));
    for (size_t e = 0; e < 4; ++e) {
      auto parts = eqs[e].with_vars({"x", "y"}).split({"x", "y"});
      for (size_t l = 0; l < 3; ++l) {
        auto it = parts.find(linear[l]);
        if (it != parts.end()) m[e * 3 + l][j] = it->second.constant_term();
      }
    }
  }
  std::vector<KTComponents> basis;
  for (const auto& v : nullspace(m, n)) {
    KTComponents k{MultiPoly({"x", "y"}), MultiPoly({"x", "y"}), MultiPoly({"x", "y"})};
    for (size_t j = 0; j < n; ++j) {
      MultiPoly t = MultiPoly::monomial({"x", "y"}, kQuadMonomials[j % 6], v[j]);
      (j / 6 == 0 ? k.k11 : j / 6 == 1 ? k.k12 : k.k22) += t;
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

mpz_class dtt_dimension(long n, long p) {
  if (n < 1 || p < 1) throw Error(ErrorCode::Precondition, "dtt_dimension needs n >= 1 and p >= 1");
  mpz_class a, b;
  mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n + p), static_cast<unsigned long>(p + 1));
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + p - 1), static_cast<unsigned long>(p));
  mpz_class prod = a * b;
  if (prod % n != 0) throw Error(ErrorCode::Internal, "dtt_dimension: non-integral result");
  return prod / n;
}

MultiPoly eigen_discriminant(const KTComponents& k) {
  MultiPoly d = k.k11 - k.k22;
  return d * d + 4 * k.k12 * k.k12;
}

std::vector<SingularPoint> singular_points(const KTParams& b) {
  if (sgn(b[5]) == 0) throw Error(ErrorCode::NoFoci, "beta6 = 0: no singular points (Cartesian or parabolic type)");
  const Rational sigma1 = b[3] * b[3] - b[4] * b[4] + b[5] * (b[1] - b[0]);
  const Rational tau = b[5] * b[2] + b[3] * b[4];
  const Scalar root = sqrt_scalar(Scalar(Rational(sigma1 * sigma1 + 4 * tau * tau)));
  Scalar half(Rational(1, 2));
  Scalar dx = sqrt_scalar((root - Scalar(sigma1)) * half);
  Scalar dy = sqrt_scalar((root + Scalar(sigma1)) * half);
  if (sgn(tau) < 0) dy = -dy;
  const Scalar b6(b[5]);
  const Scalar cx(Rational(-b[4] / b[5]));
  const Scalar cy(Rational(-b[3] / b[5]));
  dx = dx / b6;
  dy = dy / b6;
  SingularPoint s1{cx + dx, cy + dy};
  SingularPoint s2{cx - dx, cy - dy};
  if (scalar_is_zero(dx, 1e-15) && scalar_is_zero(dy, 1e-15)) return {s1};
  return {s1, s2};
}

bool is_metric_multiple(const KTParams& b) {
  return sgn(b[2]) == 0 && sgn(b[3]) == 0 && sgn(b[4]) == 0 && sgn(b[5]) == 0 && b[0] == b[1];
}

KTParams canonical_kt(WebKind web, const Rational& a, const Rational& b, const Rational& c2) {
  switch (web) {
    case WebKind::Cartesian: return {1, 0, 0, 0, 0, 0};
    case WebKind::Parabolic: return {0, 0, 0, 1, 0, 0};
    case WebKind::Polar: return {b * b, a * a, -a * b, -b, -a, 1};
    case WebKind::EllipticHyperbolic:
      if (sgn(c2) <= 0) throw Error(ErrorCode::Precondition, "elliptic-hyperbolic web needs c2 > 0");
      return {c2, 0, 0, 0, 0, 1};
  }
  throw Error(ErrorCode::Internal, "unknown web kind");
}

std::string params_str(const KTParams& b) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < 6; ++i) os << (i ? ", " : "") << to_string(b[i]);
  os << ")";
  return os.str();
}

}  // namespace webclass
