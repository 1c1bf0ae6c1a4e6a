#include <doctest.h>

#include <cmath>
#include <set>

#include "compatibility.hpp"
#include "linalg.hpp"
#include "test_support.hpp"
#include "ttw_analysis.hpp"

using namespace webclass;

namespace {

// first-order dual numbers for the independent evaluation of d(K dV)
struct D {
  double v, d;
};
D operator+(D a, D b) { return {a.v + b.v, a.d + b.d}; }
D operator-(D a, D b) { return {a.v - b.v, a.d - b.d}; }
D operator*(D a, D b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
D operator/(D a, D b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
D operator*(double c, D a) { return {c * a.v, c * a.d}; }
D operator/(double c, D a) { return D{c, 0} / a; }
D dcos(D a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }
D dsin(D a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }

struct Setup {
  std::array<double, 6> b;
  double w2, l1, l2, k;
};

// omega_r, omega_theta at (r, theta) with the tensor pulled from Cartesian components
void omega(const Setup& s, D r, D th, D& wr, D& wt) {
  D c = dcos(th), sn = dsin(th);
  D x = r * c, y = r * sn;
  const auto& b = s.b;
  D k11 = D{b[0], 0} + 2 * b[3] * y + b[5] * (y * y);
  D k12 = D{b[2], 0} - b[3] * x - b[4] * y - b[5] * (x * y);
  D k22 = D{b[1], 0} + 2 * b[4] * x + b[5] * (x * x);
  // polar contravariant components: dr = (c, s), dtheta = (-s/r, c/r)
  D Krr = c * c * k11 + 2 * (c * sn) * k12 + sn * sn * k22;
  D Krt = (c * (D{0, 0} - sn) * k11 + (c * c - sn * sn) * k12 + sn * c * k22) / r;
  D Ktt = (sn * sn * k11 - 2 * (sn * c) * k12 + c * c * k22) / (r * r);
  D kt = s.k * th;
  D C = dcos(kt), S = dsin(kt);
  D f = s.l1 / (C * C) + s.l2 / (S * S);
  D fp = 2 * s.k * (s.l1 * S / (C * C * C) - s.l2 * C / (S * S * S));
  D Vr = D{0, 0} - 2 * s.w2 * r - 2 * f / (r * r * r);
  D Vt = fp / (r * r);
  wr = Krr * Vr + Krt * Vt;
  wt = (r * r) * (Krt * Vr + Ktt * Vt);
}

double curl(const Setup& s, double r, double th) {
  D wr, wt, ignore;
  omega(s, {r, 1}, {th, 0}, ignore, wt);
  double dr_wt = wt.d;
  omega(s, {r, 0}, {th, 1}, wr, ignore);
  return dr_wt - wr.d;
}

TTWParams numeric(const Setup& s) {
  return {Rational(s.w2), Rational(s.l1), Rational(s.l2), Rational(s.k)};
}

std::string constraint_for(const std::optional<Rational>& k) {
  std::set<std::string> c;
  for (const auto& o : ttw_case(k)) c.insert(o.constraint);
  std::string out;
  for (const auto& s : c) out += (out.empty() ? "" : "|") + s;
  return out;
}

}  // namespace

TEST_CASE("polar components of single generators") {
  KTParams c{0, 0, 0, 0, 0, 1};
  auto K = polar_kt_components(c);
  CHECK(K.k11.is_zero());
  CHECK(K.k12.is_zero());
  CHECK(K.k22 == TrigPoly(MultiPoly(1)));
  auto K1 = polar_kt_components(KTParams{1, 0, 0, 0, 0, 0});
  MultiPoly r = MultiPoly::var("r");
  TrigPoly half(MultiPoly(Rational(1, 2)));
  CHECK(K1.k11 == half + TrigPoly::cos({2, 0}, Rational(1, 2)));
  CHECK(K1.k12 == TrigPoly::sin({2, 0}, MultiPoly(Rational(-1, 2)) * r.mul_var_power("r", -2)));
  CHECK(K1.k22 == (half - TrigPoly::cos({2, 0}, Rational(1, 2))) * r.mul_var_power("r", -3));
}

TEST_CASE("polar components equal the Jacobian transform") {
  wt::Rng rng;
  for (int i = 0; i < 20; ++i) {
    KTParams b = rng.beta();
    auto P = polar_kt_components(b);
    auto J = cartesian_to_polar(b);
    CHECK(P.k11 == J.k11);
    CHECK(P.k12 == J.k12);
    CHECK(P.k22 == J.k22);
  }
}

TEST_CASE("printed polar components") {
  auto rec = reconcile_polar_kt();
  CHECK(rec.k11_equal);
  // the printed off-diagonal and angular entries disagree with the symmetric products
  CHECK_FALSE(rec.k12_equal);
  CHECK_FALSE(rec.k22_equal);
}

TEST_CASE("cleared compatibility against a dual-number evaluation") {
  wt::Rng rng;
  for (int i = 0; i < 20; ++i) {
    Setup s;
    KTParams b = rng.beta();
    for (int j = 0; j < 6; ++j) s.b[j] = b[j].get_d();
    s.w2 = rng.nonzero().get_d();
    s.l1 = rng.nonzero().get_d();
    s.l2 = rng.nonzero().get_d();
    s.k = rng.nonzero(3, 4).get_d();
    Rational kq(s.k);
    TTWParams t{Rational(s.w2), Rational(s.l1), Rational(s.l2), kq};
    auto cc = ttw_compat_cleared(polar_kt_components(b), t);
    for (int j = 0; j < 5; ++j) {
      double r = rng.real(0.5, 2), th = rng.real(0.05, 1.5);
      double S = std::sin(s.k * th), C = std::cos(s.k * th);
      if (std::abs(S) < 0.05 || std::abs(C) < 0.05) continue;
      double want = curl(s, r, th) * std::pow(S * C, 4) * std::pow(r, cc.r_power);
      double got = cc.poly.eval(th, s.k, {{"r", r}});
      CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("trivial compatibility") {
  TTWParams sym;
  CHECK(ttw_compat_general(to_sym(KTParams{0, 0, 0, 0, 0, 1}), sym).is_zero());
  wt::Rng rng;
  TTWParams zero{Rational(0), Rational(0), Rational(0), std::nullopt};
  for (int i = 0; i < 5; ++i) CHECK(ttw_compat_general(to_sym(rng.beta()), zero).is_zero());
}

TEST_CASE("only the polar family survives at a non-special k") {
  TTWParams t;
  t.k = Rational(3, 7);
  auto sys = coefficient_system(ttw_compat_general(symbolic_params(), t), {"r", "w2", "l1", "l2"});
  RMat rows;
  for (const auto& p : sys) {
    RVec row(6);
    for (int i = 0; i < 6; ++i) row[i] = p.diff("b" + std::to_string(i + 1)).constant_term();
    rows.push_back(row);
  }
  auto ns = nullspace(rows, 6);
  // the polar generator, plus the metric (b1 = b2), which is compatible with any potential
  REQUIRE(ns.size() == 2);
  auto with = ns;
  with.push_back({0, 0, 0, 0, 0, 1});
  with.push_back({1, 1, 0, 0, 0, 0});
  CHECK(rank(with, 6) == 2);
}

TEST_CASE("necessary condition on the reduced subspace") {
  auto nc = derive_necessary_condition();
  CHECK(nc.verified);
  CHECK(nc.constraint == std::vector<std::string>{"b4 = 0", "b5 = 0"});
  MultiPoly b4 = MultiPoly::var("b4"), b5 = MultiPoly::var("b5");
  CHECK(nc.combination == (b4 * b4 + b5 * b5) * nc.g1);
  CHECK(nc.e1 == b4 * nc.g1 - b5 * nc.g2);
  auto at = nc.e1.subst({{"b4", Rational(1)}, {"b5", Rational(0)}, {"k", Rational(3, 7)}});
  CHECK_FALSE(at.is_zero());
  CHECK_FALSE(nc.corollary.empty());
}

TEST_CASE("rotated Cartesian tensor") {
  SymParams p = cartesian_case_params();
  TTWParams t;
  CHECK(ttw_compat_general(p, t) == cartesian_case_compat(t));
  auto K = cartesian_case_kt(Rational(1), Rational(0));
  auto P = polar_kt_components(KTParams{1, 0, 0, 0, 0, 0});
  CHECK(K.k11 == P.k11);
  CHECK(K.k12 == P.k12);
  CHECK(K.k22 == P.k22);
}

TEST_CASE("Cartesian-case spot values") {
  TTWParams k1;
  k1.k = Rational(1);
  CHECK(cartesian_case_compat(k1, Rational(1), Rational(0)).is_zero());
  TTWParams k2{std::nullopt, Rational(0), std::nullopt, Rational(2)};
  CHECK(cartesian_case_compat(k2, Rational(-1), Rational(0)).is_zero());
  TTWParams half{std::nullopt, Rational(1), Rational(0), Rational(1, 2)};
  CHECK_FALSE(cartesian_case_compat(half).is_zero());
  CHECK_FALSE(cartesian_case_compat(half, Rational(1), Rational(0)).is_zero());
  // equal couplings at k = 1/2 give f = 4 lambda / sin^2 theta, separable in x, y
  TTWParams eq{std::nullopt, Rational(1), Rational(1), Rational(1, 2)};
  CHECK(cartesian_case_compat(eq, Rational(1), Rational(0)).is_zero());
}

TEST_CASE("printed Cartesian-case equation") {
  auto rep = compare_proportional(cartesian_case_compat({}), cartesian_case_printed({}));
  CHECK(rep.proportional);
  CHECK(rep.factor == -1);
}

TEST_CASE("generic-k reduced system") {
  auto sys = reduced_system();
  CHECK(sys.size() == 14);
  auto m = match_reduced_system(sys);
  CHECK(m.all_matched());
  MultiPoly k = MultiPoly::var("k"), l1 = MultiPoly::var("l1"), l2 = MultiPoly::var("l2");
  MultiPoly target = (1 + k) * (2 + k) * (l1 - l2);
  bool found = false;
  for (const auto& e : sys) {
    if (e.phi_symbol != "s2p") continue;
    auto vars = union_vars(e.poly, target);
    MultiPoly a = e.poly.with_vars(vars), b = target.with_vars(vars);
    Rational q = a.leading_coeff() / b.leading_coeff();
    if (a == MultiPoly(q) * b) found = true;
  }
  CHECK(found);
}

TEST_CASE("case outcomes") {
  CHECK(constraint_for(Rational(1)) == "phi_zero");
  CHECK(constraint_for(Rational(-1)) == "phi_zero");
  CHECK(constraint_for(Rational(2)) == "lambda1_zero_with_phi_grid|lambda2_zero_with_phi_grid");
  for (auto k : {Rational(2, 3), Rational(2, 5), Rational(-2, 5)}) CHECK(constraint_for(k) == "all_lambda_zero");
  CHECK(constraint_for(std::nullopt) == "no_solution");
  // lambda1 = lambda2 keeps a Cartesian integral at k = 1/2
  CHECK(constraint_for(Rational(1, 2)) == "lambda1_equal_lambda2_with_phi_grid");
}

TEST_CASE("verdict is symmetric in k") {
  auto ks = verdict_k_values();
  std::set<Rational> s(ks.begin(), ks.end());
  for (const auto& k : ks) {
    CHECK(s.count(Rational(-k)) == 1);
    CHECK(constraint_for(k) == constraint_for(Rational(-k)));
  }
  auto v = multiseparability_verdict();
  CHECK_FALSE(v.empty());
  CHECK_FALSE(v.back().k.has_value());
}

TEST_CASE("k = 1 is the SW system") {
  // -w2 r^2 + l1 / (r cos)^2 + l2 / (r sin)^2 with the canonical Cartesian tensor
  auto p = cartesian_case_params();
  KTParams b;
  for (int i = 0; i < 6; ++i) b[i] = p[i].subst({{"c2p", Rational(1)}, {"s2p", Rational(0)}}).constant_term();
  CHECK(b == canonical_kt(WebKind::Cartesian));
  auto v = sw_potential();
  CHECK(is_compatible(b, v));
  CHECK_NOTHROW(integrate_u(b, v));
}

TEST_CASE("listed value comparison") {
  auto c = compare_k_lists({1, 2, 3}, {2, 3, 4});
  CHECK(c.matched == std::vector<Rational>{2, 3});
  CHECK(c.missing == std::vector<Rational>{4});
  CHECK(c.extra == std::vector<Rational>{1});
  CHECK_FALSE(c.equal());
  CHECK(listed_k_values_N().size() == 10);
  CHECK(listed_k_values_M().size() == 44);
}
