#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "isometry_action.hpp"

namespace wt {

using namespace webclass;

inline uint64_t seed() {
  if (const char* s = std::getenv("WEBCLASS_SEED")) return std::stoull(s);
  return 20240611;
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t s = seed()) : g(s) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

  Rational rational(long num = 9, long den = 5) {
    Rational q(integer(-num, num), integer(1, den));
    q.canonicalize();
    return q;
  }
  Rational nonzero(long num = 9, long den = 5) {
    Rational q;
    do q = rational(num, den);
    while (sgn(q) == 0);
    return q;
  }
  KTParams beta() {
    KTParams b;
    for (auto& v : b) v = rational();
    return b;
  }
  SE2Element se2() {
    long m = integer(1, 6), n = integer(-6, 6);
    if (m == 0 && n == 0) m = 1;
    return {ExactRotation::pythagorean(m, n), rational(), rational()};
  }
  MultiPoly poly(const std::vector<std::string>& vars, int terms = 4, int max_exp = 3, int min_exp = 0) {
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
      Exps e(vars.size());
      for (auto& x : e) x = static_cast<int>(integer(min_exp, max_exp));
      p += MultiPoly::monomial(vars, e, rational());
    }
    return p;
  }
};

}  // namespace wt
