#pragma once

#include <array>

#include "killing_space.hpp"

namespace webclass {

struct SE2Element {
  ExactRotation rot;
  Rational p1{0}, p2{0};

  static SE2Element identity() { return {}; }
  static SE2Element translation(const Rational& p1, const Rational& p2) { return {ExactRotation{}, p1, p2}; }
  static SE2Element rotation(const ExactRotation& r) { return {r, 0, 0}; }
  friend bool operator==(const SE2Element&, const SE2Element&) = default;
};

/** g2 after g1: act(compose(g2, g1), b) == act(g2, act(g1, b)). */
SE2Element compose(const SE2Element& g2, const SE2Element& g1);

struct TranslationalInvariants {
  Rational i1, i2, i3, i4;
  friend bool operator==(const TranslationalInvariants&, const TranslationalInvariants&) = default;
};

struct InvariantTriple {
  Rational d1, d2, d3;
  friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

/**
 * Parameter transformation laws. The new tensor is the pullback
 * K'(q) = L^T K(L q + p) L with L = [[c, s], [-s, c]], p = (p1, p2).
 */
template <class T>
std::array<T, 6> act_laws(const T& c, const T& s, const T& p1, const T& p2, const std::array<T, 6>& b) {
  const T t1 = b[0] + 2 * b[3] * p2 + b[5] * p2 * p2;
  const T t2 = b[1] + 2 * b[4] * p1 + b[5] * p1 * p1;
  const T t3 = b[2] - b[3] * p1 - b[4] * p2 - b[5] * p1 * p2;
  const T t4 = b[3] + b[5] * p2;
  const T t5 = b[4] + b[5] * p1;
  return {c * c * t1 - 2 * c * s * t3 + s * s * t2,
          s * s * t1 + 2 * c * s * t3 + c * c * t2,
          c * s * t1 + (c * c - s * s) * t3 - c * s * t2,
          c * t4 + s * t5,
          c * t5 - s * t4,
          b[5]};
}

KTParams act(const SE2Element& g, const KTParams& b);
/** Same action written with the (A, B, C) blocks. */
KTParams act_compact(const SE2Element& g, const KTParams& b);

TranslationalInvariants translational_invariants(const KTParams& b);
InvariantTriple invariants(const KTParams& b);
template <class T>
std::array<T, 3> invariants_t(const std::array<T, 6>& b) {
  const T a = b[5] * (b[0] - b[1]) - b[3] * b[3] + b[4] * b[4];
  const T c = b[5] * b[2] + b[3] * b[4];
  return {b[5], b[5] * (b[0] + b[1]) - b[3] * b[3] - b[4] * b[4], a * a + 4 * c * c};
}

WebType classify(const KTParams& b);

struct MovingFrame {
  bool exact = false;
  SE2Element g;                 // meaningful when exact
  std::array<double, 4> g_float{};  // c, s, p1, p2
  KTParams b_exact{};           // meaningful when exact
  std::array<double, 6> b_float{};
};

/** Normalizes beta4 = beta5 = 0 by translation, then beta3 = 0 by rotation. */
MovingFrame moving_frame(const KTParams& b);

}  // namespace webclass
