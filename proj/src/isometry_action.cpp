#include "isometry_action.hpp"

#include <cmath>

namespace webclass {

SE2Element compose(const SE2Element& g2, const SE2Element& g1) {
  // L = L1 L2, p = L1 p2 + p1, with L = [[c, s], [-s, c]]
  const Rational& c1 = g1.rot.c;
  const Rational& s1 = g1.rot.s;
  SE2Element out;
  out.rot = g1.rot.compose(g2.rot);
  out.p1 = c1 * g2.p1 + s1 * g2.p2 + g1.p1;
  out.p2 = -s1 * g2.p1 + c1 * g2.p2 + g1.p2;
  return out;
}

KTParams act(const SE2Element& g, const KTParams& b) { return act_laws<Rational>(g.rot.c, g.rot.s, g.p1, g.p2, b); }

KTParams act_compact(const SE2Element& g, const KTParams& b) {
  const Rational& c = g.rot.c;
  const Rational& s = g.rot.s;
  const Rational R[2][2] = {{c, -s}, {s, c}};
  const Rational A[2][2] = {{b[0], b[2]}, {b[2], b[1]}};
  const Rational B[2] = {b[3], -b[4]};
  const Rational nu[2] = {g.p2, -g.p1};
  Rational mu[2], RB[2];
  for (int i = 0; i < 2; ++i) {
    mu[i] = R[i][0] * nu[0] + R[i][1] * nu[1];
    RB[i] = R[i][0] * B[0] + R[i][1] * B[1];
  }
  Rational At[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational rar = 0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) rar += R[i][k] * A[k][l] * R[j][l];
      At[i][j] = rar + RB[i] * mu[j] + RB[j] * mu[i] + b[5] * mu[i] * mu[j];
    }
  Rational Bt[2] = {RB[0] + b[5] * mu[0], RB[1] + b[5] * mu[1]};
  return {At[0][0], At[1][1], At[0][1], Bt[0], Rational(-Bt[1]), b[5]};
}

TranslationalInvariants translational_invariants(const KTParams& b) {
  return {b[0] * b[5] - b[3] * b[3], b[1] * b[5] - b[4] * b[4], b[2] * b[5] + b[3] * b[4], b[5]};
}

InvariantTriple invariants(const KTParams& b) {
  auto t = invariants_t<Rational>(b);
  return {t[0], t[1], t[2]};
}

WebType classify(const KTParams& b) {
  InvariantTriple d = invariants(b);
  bool d1 = sgn(d.d1) != 0;
  bool d3 = sgn(d.d3) != 0;
  WebType w;
  if (d1 && d3)
    w.kind = WebKind::EllipticHyperbolic;
  else if (!d1 && d3)
    w.kind = WebKind::Parabolic;
  else if (d1 && !d3)
    w.kind = WebKind::Polar;
  else
    w.kind = WebKind::Cartesian;
  w.degenerate = is_metric_multiple(b);
  return w;
}

MovingFrame moving_frame(const KTParams& b) {
  if (sgn(b[5]) == 0) throw Error(ErrorCode::FrameUndefined, "beta6 = 0: translational normalization impossible");
  const Rational p2 = -b[3] / b[5];
  const Rational p1 = -b[4] / b[5];
  const KTParams bt = act(SE2Element::translation(p1, p2), b);
  const Rational D = bt[0] - bt[1];
  const Rational T3 = bt[2];

  MovingFrame out;
  auto finish_exact = [&](const ExactRotation& r) {
    out.exact = true;
    out.g = {r, p1, p2};
    out.b_exact = act(SE2Element::rotation(r), bt);
    out.g_float = {r.c.get_d(), r.s.get_d(), p1.get_d(), p2.get_d()};
    for (size_t i = 0; i < 6; ++i) out.b_float[i] = out.b_exact[i].get_d();
    return out;
  };
  if (sgn(D) == 0 && sgn(T3) == 0) return finish_exact(ExactRotation{});

  // principal branch: cos 2t >= 0 with tan 2t = -2 T3 / D; D = 0 gives t = pi/4
  if (sgn(D) != 0) {
    if (auto root = exact_sqrt(Rational(D * D + 4 * T3 * T3))) {
      Rational cos2 = abs(D) / *root;
      Rational sin2 = -2 * T3 * sgn(D) / *root;
      if (auto c = exact_sqrt(Rational((1 + cos2) / 2))) {
        Rational s = sin2 / (2 * *c);
        return finish_exact(ExactRotation::make(*c, s));
      }
    }
  }
  double cos2, sin2;
  if (sgn(D) == 0) {
    cos2 = 0.0;
    sin2 = 1.0;
  } else {
    double d = D.get_d(), t = T3.get_d();
    double q = std::hypot(d, 2 * t);
    cos2 = std::fabs(d) / q;
    sin2 = -2 * t * (d > 0 ? 1 : -1) / q;
  }
  double c = std::sqrt((1 + cos2) / 2);
  double s = sin2 / (2 * c);
  std::array<double, 6> btd;
  for (size_t i = 0; i < 6; ++i) btd[i] = bt[i].get_d();
  out.exact = false;
  out.g_float = {c, s, p1.get_d(), p2.get_d()};
  out.b_float = act_laws<double>(c, s, 0.0, 0.0, btd);
  return out;
}

}  // namespace webclass
