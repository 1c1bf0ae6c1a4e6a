#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace webclass;

namespace {

// Killing equations for a contravariant symmetric 2-tensor in flat coordinates.
bool killing_by_hand(const KTComponents& k) {
  return k.k11.diff("x").is_zero() && k.k22.diff("y").is_zero() &&
         (k.k11.diff("y") + MultiPoly(2) * k.k12.diff("x")).is_zero() &&
         (k.k22.diff("x") + MultiPoly(2) * k.k12.diff("y")).is_zero();
}

}  // namespace

TEST_CASE("dimension formula") {
  CHECK(dtt_dimension(2, 2) == 6);
  CHECK(dtt_dimension(3, 2) == 20);
  for (long n = 1; n < 6; ++n) CHECK(dtt_dimension(n, 1) == n * (n + 1) / 2);
}

TEST_CASE("solved basis spans the six-parameter family") {
  auto basis = solve_killing_equation();
  REQUIRE(basis.size() == 6);
  RMat rows;
  for (const auto& k : basis) {
    CHECK(verify_killing(k));
    CHECK(killing_by_hand(k));
    rows.push_back(component_coefficients(k));
  }
  CHECK(rank(rows, 18) == 6);
  for (int i = 0; i < 6; ++i) {
    KTParams e{};
    e[i] = 1;
    auto with = rows;
    with.push_back(component_coefficients(kt_components(e)));
    CHECK(rank(with, 18) == 6);
  }
}

TEST_CASE("component forms agree and invert") {
  wt::Rng rng;
  for (int i = 0; i < 50; ++i) {
    KTParams b = rng.beta();
    auto k = kt_components(b);
    CHECK(killing_by_hand(k));
    auto c = kt_components_compact(b);
    CHECK(c.k11 == k.k11);
    CHECK(c.k12 == k.k12);
    CHECK(c.k22 == k.k22);
    CHECK(kt_params_from_components(k) == b);
  }
}

TEST_CASE("symbolic components specialize to numeric ones") {
  wt::Rng rng;
  KTParams b = rng.beta();
  auto s = kt_components(symbolic_params());
  std::map<std::string, Rational> at;
  for (int i = 0; i < 6; ++i) at["b" + std::to_string(i + 1)] = b[i];
  auto k = kt_components(b);
  CHECK(s.k11.subst(at) == k.k11);
  CHECK(s.k12.subst(at) == k.k12);
  CHECK(s.k22.subst(at) == k.k22);
}

TEST_CASE("eigen discriminant matches the component definition") {
  wt::Rng rng;
  for (int i = 0; i < 20; ++i) {
    auto k = kt_components(rng.beta());
    MultiPoly d = k.k11 - k.k22;
    CHECK(eigen_discriminant(k) == d * d + MultiPoly(4) * k.k12 * k.k12);
  }
}

TEST_CASE("singular points of canonical tensors") {
  auto eh = singular_points(canonical_kt(WebKind::EllipticHyperbolic, 0, 0, 4));
  REQUIRE(eh.size() == 2);
  for (const auto& p : eh) {
    CHECK(p.exact());
    CHECK(abs(p.x.q) == 2);
    CHECK(p.y.q == 0);
  }
  CHECK(eh[0].x.q != eh[1].x.q);
  auto pol = singular_points(canonical_kt(WebKind::Polar, 1, 2));
  REQUIRE(pol.size() == 1);
  CHECK(pol[0].x.q == 1);
  CHECK(pol[0].y.q == 2);
  CHECK_THROWS_AS(singular_points(canonical_kt(WebKind::Cartesian)), Error);
}

TEST_CASE("singular points are zeros of the discriminant") {
  wt::Rng rng;
  for (int i = 0; i < 40; ++i) {
    KTParams b = rng.beta();
    if (sgn(b[5]) == 0) continue;
    auto disc = eigen_discriminant(kt_components(b));
    for (const auto& p : singular_points(b)) {
      if (p.exact()) {
        CHECK(disc.eval({{"x", p.x.q}, {"y", p.y.q}}) == 0);
      } else {
        double scale = 1 + std::abs(disc.eval_double({{"x", p.x.d() + 1}, {"y", p.y.d()}}));
        CHECK(std::abs(disc.eval_double({{"x", p.x.d()}, {"y", p.y.d()}})) / scale < 1e-9);
      }
    }
  }
}

TEST_CASE("metric multiples") {
  CHECK(is_metric_multiple({3, 3, 0, 0, 0, 0}));
  CHECK_FALSE(is_metric_multiple({3, 2, 0, 0, 0, 0}));
  CHECK(classify({3, 3, 0, 0, 0, 0}).degenerate);
}

TEST_CASE("web names round trip") {
  for (auto k : {WebKind::Cartesian, WebKind::Polar, WebKind::Parabolic, WebKind::EllipticHyperbolic})
    CHECK(parse_web_kind(web_kind_name(k)) == k);
  CHECK_THROWS_AS(parse_web_kind("spherical"), Error);
}
