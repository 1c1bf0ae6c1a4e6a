#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace webclass;

namespace {

// K'(q) = L^T K(L q + p) L computed on the component polynomials directly.
KTParams pullback_oracle(const SE2Element& g, const KTParams& b) {
  auto k = kt_components(b);
  MultiPoly x = MultiPoly::var("x"), y = MultiPoly::var("y");
  const Rational &c = g.rot.c, &s = g.rot.s;
  MultiPoly X = MultiPoly(c) * x + MultiPoly(s) * y + MultiPoly(g.p1);
  MultiPoly Y = MultiPoly(Rational(-s)) * x + MultiPoly(c) * y + MultiPoly(g.p2);
  auto at = [&](const MultiPoly& p) {
    return p.subst("x", MultiPoly::var("u")).subst("y", MultiPoly::var("v")).subst("u", X).subst("v", Y);
  };
  MultiPoly a = at(k.k11), m = at(k.k12), d = at(k.k22);
  // L = [[c, s], [-s, c]]
  KTComponents out;
  out.k11 = MultiPoly(c * c) * a - MultiPoly(2 * c * s) * m + MultiPoly(s * s) * d;
  out.k12 = MultiPoly(c * s) * a + MultiPoly(c * c - s * s) * m - MultiPoly(c * s) * d;
  out.k22 = MultiPoly(s * s) * a + MultiPoly(2 * c * s) * m + MultiPoly(c * c) * d;
  return kt_params_from_components(out);
}

}  // namespace

TEST_CASE("parameter laws equal the pullback of components") {
  wt::Rng rng;
  for (int i = 0; i < 60; ++i) {
    KTParams b = rng.beta();
    SE2Element g = rng.se2();
    CHECK(act(g, b) == pullback_oracle(g, b));
    CHECK(act_compact(g, b) == act(g, b));
  }
}

TEST_CASE("action is a group action") {
  wt::Rng rng;
  for (int i = 0; i < 40; ++i) {
    KTParams b = rng.beta();
    SE2Element g1 = rng.se2(), g2 = rng.se2();
    CHECK(act(compose(g2, g1), b) == act(g2, act(g1, b)));
    CHECK(act(SE2Element::identity(), b) == b);
  }
}

TEST_CASE("invariants are constant on orbits") {
  wt::Rng rng;
  for (int i = 0; i < 50; ++i) {
    KTParams b = rng.beta();
    for (int j = 0; j < 20; ++j) {
      SE2Element g = rng.se2();
      CHECK(invariants(act(g, b)) == invariants(b));
      CHECK(classify(act(g, b)) == classify(b));
      auto tr = SE2Element::translation(rng.rational(), rng.rational());
      CHECK(translational_invariants(act(tr, b)) == translational_invariants(b));
    }
  }
}

TEST_CASE("template invariants agree with the exact ones") {
  wt::Rng rng;
  KTParams b = rng.beta();
  auto t = invariants_t(b);
  auto e = invariants(b);
  CHECK(t[0] == e.d1);
  CHECK(t[1] == e.d2);
  CHECK(t[2] == e.d3);
}

TEST_CASE("canonical tensors classify") {
  CHECK(classify(canonical_kt(WebKind::Cartesian)) == WebType{WebKind::Cartesian, false});
  CHECK(classify(canonical_kt(WebKind::Polar, 0, 0)) == WebType{WebKind::Polar, false});
  CHECK(classify(canonical_kt(WebKind::Parabolic)) == WebType{WebKind::Parabolic, false});
  CHECK(classify(canonical_kt(WebKind::EllipticHyperbolic, 0, 0, 4)) == WebType{WebKind::EllipticHyperbolic, false});
  CHECK(classify({0, 0, 0, 0, 0, 1}).kind == WebKind::Polar);
}

TEST_CASE("moving frame normalizes beta3, beta4, beta5") {
  wt::Rng rng;
  int exact = 0;
  for (int i = 0; i < 50; ++i) {
    KTParams b = rng.beta();
    if (sgn(b[5]) == 0) b[5] = 1;
    auto f = moving_frame(b);
    if (f.exact) {
      ++exact;
      CHECK(act(f.g, b) == f.b_exact);
      CHECK(f.b_exact[2] == 0);
      CHECK(f.b_exact[3] == 0);
      CHECK(f.b_exact[4] == 0);
    } else {
      double scale = 1;
      for (const auto& v : b) scale = std::max(scale, std::abs(v.get_d()));
      CHECK(std::abs(f.b_float[2]) <= 1e-9 * scale * scale);
      CHECK(std::abs(f.b_float[3]) <= 1e-9 * scale);
      CHECK(std::abs(f.b_float[4]) <= 1e-9 * scale);
    }
    // translational part is always rational
    auto t = act(SE2Element::translation(-b[4] / b[5], -b[3] / b[5]), b);
    CHECK(t[3] == 0);
    CHECK(t[4] == 0);
  }
  // a diagonal tensor needs no rotation
  auto f = moving_frame({5, 1, 0, 0, 0, 1});
  CHECK(f.exact);
}
