#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dynamics.hpp"
#include "test_support.hpp"

using namespace webclass;

namespace {

const std::map<std::string, double> kOnes{{"w2", 1}, {"alpha", 1}, {"beta", 1}};

double h_drift(const LaurentPotential& v, const std::map<std::string, double>& sym, PhasePoint p0, double dt, double T) {
  HamiltonianSpec h(v, sym);
  auto tr = flow_rk4(h, p0, dt, T);
  return drift(tr, [&](const PhasePoint& p) { return h.energy(p); });
}

}  // namespace

TEST_CASE("free particle") {
  HamiltonianSpec h(MultiPoly{});
  auto tr = flow_rk4(h, {0, 0, 1, 0}, 1e-3, 1);
  const auto& e = tr.states.back();
  CHECK(std::abs(e.x - 1) < 1e-12);
  CHECK(std::abs(e.y) < 1e-12);
  CHECK(std::abs(e.px - 1) < 1e-12);
  CHECK(tr.times.size() == tr.states.size());
  CHECK(tr.times.back() == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("isotropic oscillator returns after one period") {
  HamiltonianSpec h(parse_potential("laurent:1/2*x^2,1/2*y^2"));
  auto tr = flow_rk4(h, {1, 0, 0, 0}, 1e-3, 2 * M_PI);
  const auto& e = tr.states.back();
  CHECK(std::hypot(e.x - 1, e.y) < 1e-6);
  CHECK(std::hypot(e.px, e.py) < 1e-6);
}

TEST_CASE("symmetry and non-conserved quantities") {
  HamiltonianSpec h(parse_potential("laurent:1*y^2,1*y^-2"));
  auto tr = flow_rk4(h, {0.3, 1, 0.7, 0.2}, 1e-3, 10);
  CHECK(drift(tr, [](const PhasePoint& p) { return p.px; }) <= 1e-10);
  HamiltonianSpec sw(sw_potential(), kOnes);
  auto tr2 = flow_rk4(sw, {1, 1, 0, 0}, 1e-3, 10);
  CHECK(drift(tr2, [](const PhasePoint& p) { return p.x; }) > 0.1);
}

TEST_CASE("SW flow from (1,1,0,0) stays off the axes") {
  HamiltonianSpec h(sw_potential(), kOnes);
  CHECK(h.pole_in_x());
  CHECK(h.pole_in_y());
  CHECK_NOTHROW(flow_rk4(h, {1, 1, 0, 0}, 1e-3, 10));
}

TEST_CASE("first integrals are conserved along a bounded SW flow") {
  // attractive sign (w2 = -1): V = r^2 + 1/x^2 + 1/y^2 keeps the orbit bounded
  std::map<std::string, double> sym{{"w2", -1}, {"alpha", 1}, {"beta", 1}};
  auto v = sw_potential();
  HamiltonianSpec h(v, sym);
  auto tr = flow_rk4(h, {1, 1, 0.3, -0.2}, 1e-3, 10);
  CHECK(drift(tr, [&](const PhasePoint& p) { return h.energy(p); }) <= 1e-6);
  for (const auto& kt : {canonical_kt(WebKind::Cartesian), canonical_kt(WebKind::Polar),
                         canonical_kt(WebKind::EllipticHyperbolic, 0, 0, 4)}) {
    MultiPoly f = phase_function(make_first_integral(kt, v));
    REQUIRE(poisson_bracket(hamiltonian(v), f).is_zero());
    CHECK(drift(tr, phase_fn(f, sym)) <= 1e-6);
  }
}

TEST_CASE("RK4 order") {
  std::map<std::string, double> sym{{"w2", -1}, {"alpha", 1}, {"beta", 1}};
  auto v = sw_potential();
  double coarse = h_drift(v, sym, {1, 1, 0.3, -0.2}, 2e-2, 5);
  double fine = h_drift(v, sym, {1, 1, 0.3, -0.2}, 1e-2, 5);
  CHECK(coarse / fine >= 8);
  CHECK(coarse / fine <= 32);
}

TEST_CASE("pole encounter keeps the partial trajectory") {
  HamiltonianSpec h(parse_potential("laurent:-1*x^-2"));
  bool hit = false;
  try {
    flow_rk4(h, {1, 0.5, 0, 0}, 1e-3, 10);
  } catch (const PoleEncounter& e) {
    hit = true;
    CHECK(e.code() == ErrorCode::PoleEncounter);
    CHECK_FALSE(e.partial().states.empty());
    CHECK(e.partial().times.size() == e.partial().states.size());
  }
  CHECK(hit);
}

TEST_CASE("preconditions") {
  HamiltonianSpec h(MultiPoly{});
  CHECK_THROWS_AS(flow_rk4(h, {0, 0, 1, 0}, 0, 1), Error);
  CHECK_THROWS_AS(flow_rk4(h, {0, 0, 1, 0}, 1e-3, 1e-4), Error);
  CHECK_THROWS_AS(HamiltonianSpec{sw_potential()}, Error);
  HamiltonianSpec sw(sw_potential(), kOnes);
  CHECK_THROWS_AS(flow_rk4(sw, {0, 1, 0, 0}, 1e-3, 1), Error);
}

TEST_CASE("gradient check") {
  HamiltonianSpec h(sw_potential(), kOnes);
  auto g = gradient_check(h, 50, wt::seed());
  CHECK(g.points == 50);
  CHECK(g.max_rel_error <= 1e-6);
  HamiltonianSpec l(parse_potential("laurent:3*x^3*y^-2,-1/2*x^-1*y^4"));
  CHECK(gradient_check(l, 50, wt::seed()).max_rel_error <= 1e-6);
}

TEST_CASE("batch runs match single runs") {
  HamiltonianSpec h(sw_potential(), kOnes);
  std::vector<PhasePoint> p0{{1, 1, 0, 0}, {1, 2, 0.1, 0}, {2, 1, 0, 0.1}};
  auto batch = flow_batch(h, p0, 1e-2, 1);
  REQUIRE(batch.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    auto one = flow_rk4(h, p0[i], 1e-2, 1);
    CHECK(one.states.back().x == batch[i].states.back().x);
    CHECK(one.states.back().py == batch[i].states.back().py);
  }
}

TEST_CASE("trajectory CSV") {
  HamiltonianSpec h(MultiPoly{});
  auto tr = flow_rk4(h, {0, 0, 1, 0}, 0.5, 1);
  std::ostringstream os;
  write_csv(tr, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,x,y,px,py");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == static_cast<int>(tr.states.size()));
}
