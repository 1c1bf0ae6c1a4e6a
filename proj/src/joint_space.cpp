#include "joint_space.hpp"

#include <algorithm>
#include <cmath>

namespace webclass {

namespace {

Scalar dist2(const SingularPoint& p, const SingularPoint& q) {
  Scalar dx = p.x - q.x;
  Scalar dy = p.y - q.y;
  return dx * dx + dy * dy;
}

// -1, 0, 1; floats within a relative 1e-12 count as equal
int scalar_cmp(const Scalar& a, const Scalar& b) {
  if (a.exact && b.exact) return cmp(a.q, b.q) < 0 ? -1 : (a.q == b.q ? 0 : 1);
  double x = a.d(), y = b.d();
  if (std::fabs(x - y) <= 1e-12 * std::max({1.0, std::fabs(x), std::fabs(y)})) return 0;
  return x < y ? -1 : 1;
}

std::vector<SingularPoint> foci_or_throw(const KTParams& b, const char* which) {
  if (sgn(b[5]) == 0)
    throw Error(ErrorCode::FociUndefined, std::string(which) + " tensor has vanishing sixth parameter");
  return singular_points(b);
}

}  // namespace

FociQuad labelled_foci(const KTPair& p) {
  auto fb = foci_or_throw(p.second, "second");
  auto fa = foci_or_throw(p.first, "first");
  if (fb.size() == 1) fb.push_back(fb[0]);
  if (fa.size() == 1) fa.push_back(fa[0]);
  std::optional<FociQuad> best;
  std::array<Scalar, 3> best_key;
  for (int sw12 = 0; sw12 < 2; ++sw12)
    for (int sw34 = 0; sw34 < 2; ++sw34) {
      FociQuad q{fb[sw12], fb[1 - sw12], fa[sw34], fa[1 - sw34]};
      std::array<Scalar, 3> key = {dist2(q.s1, q.s3), dist2(q.s2, q.s3), dist2(q.s2, q.s4)};
      bool better = !best;
      if (best)
        for (size_t i = 0; i < 3; ++i) {
          int c = scalar_cmp(key[i], best_key[i]);
          if (c != 0) {
            better = c < 0;
            break;
          }
        }
      if (better) {
        best = q;
        best_key = key;
      }
    }
  return *best;
}

JointVector joint_invariants(const KTPair& p, bool with_foci) {
  JointVector j;
  InvariantTriple a = invariants(p.first);
  InvariantTriple b = invariants(p.second);
  j.d1 = a.d1;
  j.d2 = a.d2;
  j.d3 = a.d3;
  j.d4 = b.d1;
  j.d5 = b.d2;
  j.d6 = b.d3;
  if (!with_foci) return j;
  FociQuad q = labelled_foci(p);
  j.has_foci = true;
  j.d7 = dist2(q.s2, q.s3);
  j.d8 = dist2(q.s1, q.s3);
  j.d9 = dist2(q.s2, q.s4);
  return j;
}

SwVerdict sw_characterize(const KTPair& p) {
  SwVerdict v;
  JointVector j = joint_invariants(p, false);
  if (sgn(j.d1) == 0) v.violated.push_back("d1 = 0");
  if (sgn(j.d3) != 0) v.violated.push_back("d3 != 0");
  if (sgn(j.d4) == 0) v.violated.push_back("d4 = 0");
  if (sgn(j.d6) == 0) v.violated.push_back("d6 = 0");
  if (sgn(j.d1) != 0 && sgn(j.d4) != 0) {
    JointVector f = joint_invariants(p, true);
    if (!scalar_eq(f.d7, f.d8)) v.violated.push_back("d7 != d8");
    if (!scalar_eq(f.d8, f.d9)) v.violated.push_back("d8 != d9");
  } else {
    v.violated.push_back("foci undefined");
  }
  v.holds = v.violated.empty();
  return v;
}

SwOrientedVerdict sw_characterize_any(const KTPair& p) {
  SwVerdict a = sw_characterize(p);
  if (a.holds) return {a, "as-given"};
  SwVerdict b = sw_characterize({p.second, p.first});
  if (b.holds) return {b, "swapped"};
  return {a, "none"};
}

TriangleReport weakened_case(const KTPair& p) {
  JointVector j = joint_invariants(p, false);
  if (sgn(j.d1) == 0 || sgn(j.d3) != 0)
    throw Error(ErrorCode::Precondition, "weakened_case: first tensor is not polar type (needs d1 != 0, d3 = 0)");
  if (sgn(j.d4) == 0 || sgn(j.d6) == 0)
    throw Error(ErrorCode::Precondition, "weakened_case: second tensor is not elliptic-hyperbolic (needs d4, d6 != 0)");
  FociQuad q = labelled_foci(p);
  TriangleReport r;
  r.d7 = dist2(q.s2, q.s3);
  r.d8 = dist2(q.s1, q.s3);
  Scalar cross = (q.s2.x - q.s1.x) * (q.s3.y - q.s1.y) - (q.s2.y - q.s1.y) * (q.s3.x - q.s1.x);
  r.area = abs_scalar(cross) * Scalar(Rational(1, 2));
  bool eq = scalar_eq(r.d7, r.d8);
  bool flat = scalar_is_zero(r.area);
  r.case_id = !eq && !flat ? 1 : eq && !flat ? 2 : !eq && flat ? 3 : 4;
  return r;
}

RecoveredAB recover_ab(const JointVector& j) {
  if (!j.has_foci) throw Error(ErrorCode::Precondition, "recover_ab needs d7..d9");
  if (sgn(j.d4) == 0) throw Error(ErrorCode::Precondition, "recover_ab needs d4 != 0");
  if (sgn(j.d6) <= 0) throw Error(ErrorCode::Precondition, "recover_ab needs d6 > 0");
  // half focal distance of the elliptic-hyperbolic tensor
  Scalar f = sqrt_scalar(sqrt_scalar(Scalar(j.d6))) / Scalar(Rational(abs(j.d4)));
  Scalar a = (j.d7 - j.d8) / (Scalar(Rational(4)) * f);
  Scalar af = a + f;
  Scalar rad = j.d7 - af * af;
  if (rad.d() < -1e-9 * std::max(1.0, std::fabs(j.d7.d())) || (rad.exact && sgn(rad.q) < 0))
    throw Error(ErrorCode::Precondition, "recover_ab: negative radicand, inconsistent joint vector");
  return {a, sqrt_scalar(rad)};
}

RecoveredAB recover_ab_printed(const JointVector& j) {
  if (!j.has_foci) throw Error(ErrorCode::Precondition, "recover_ab needs d7..d9");
  if (sgn(j.d4) == 0 || sgn(j.d6) <= 0) throw Error(ErrorCode::Precondition, "recover_ab needs d4 != 0 and d6 > 0");
  Scalar d4(j.d4), d6(j.d6), root = sqrt_scalar(Scalar(j.d6));
  Scalar a = (d4 * d4 * (j.d8 - j.d7) - Scalar(Rational(1, 2)) * d6) / (Scalar(Rational(2)) * d4 * root);
  Scalar shift = a - root / (Scalar(Rational(2)) * d4);
  Scalar rad = j.d7 - shift * shift;
  if (rad.d() < -1e-9 * std::max(1.0, std::fabs(j.d7.d())) || (rad.exact && sgn(rad.q) < 0))
    throw Error(ErrorCode::Precondition, "recover_ab: negative radicand, inconsistent joint vector");
  return {a, sqrt_scalar(rad)};
}

}  // namespace webclass
