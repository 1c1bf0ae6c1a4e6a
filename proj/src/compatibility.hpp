#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "killing_space.hpp"

namespace webclass {

/** A potential is a Laurent polynomial in x, y whose coefficients may carry w2, alpha, beta. */
using LaurentPotential = MultiPoly;

/** -w2 (x^2 + y^2) + alpha/x^2 + beta/y^2; unset couplings stay symbolic. */
LaurentPotential sw_potential(const std::optional<Rational>& w2 = std::nullopt,
                              const std::optional<Rational>& alpha = std::nullopt,
                              const std::optional<Rational>& beta = std::nullopt);

/** "sw:omega2=1,alpha=1,beta=1" or "laurent:coeff*x^i*y^j,..." */
LaurentPotential parse_potential(const std::string& text);

/** Numerator of d(K dV) after clearing Laurent denominators by the least monomial. */
MultiPoly bd_expression(const SymParams& b, const LaurentPotential& v);
MultiPoly bd_expression(const KTParams& b, const LaurentPotential& v);
bool is_compatible(const KTParams& b, const LaurentPotential& v);

/** (omega_x, omega_y) = K dV. */
std::array<MultiPoly, 2> k_dv(const KTParams& b, const LaurentPotential& v);

LaurentPotential integrate_u(const KTParams& b, const LaurentPotential& v);

struct FirstIntegral {
  KTParams kt;
  LaurentPotential u;
};

/** Integrates U and checks dU = K dV. */
FirstIntegral make_first_integral(const KTParams& b, const LaurentPotential& v);

/** Phase-space functions are polynomials in x, y, px, py (Laurent in x, y). */
MultiPoly hamiltonian(const LaurentPotential& v);
MultiPoly phase_function(const FirstIntegral& f);

/** {f, g} = sum_i (df/dp_i dg/dq^i - dg/dp_i df/dq^i). */
MultiPoly poisson_bracket(const MultiPoly& f, const MultiPoly& g);

struct PhasePoint {
  double x = 0, y = 0, px = 0, py = 0;
};

/** Rank of the 3x4 Jacobian of (h, f1, f2) at the point, relative singular-value threshold 1e-9. */
bool functional_independence(const MultiPoly& h, const MultiPoly& f1, const MultiPoly& f2, const PhasePoint& pt,
                             const std::map<std::string, double>& symbols = {});

/** Evaluates a phase-space function with symbol values. */
double eval_phase(const MultiPoly& f, const PhasePoint& pt, const std::map<std::string, double>& symbols = {});

struct PotentialFamily {
  std::vector<RVec> basis;  // over (w2, alpha, beta)
  std::string label;        // "constants only", "alpha/x^2", "beta/y^2", "full SW" or "other"
};

/** Couplings (w2, alpha, beta) for which V_SW is compatible with every listed tensor. */
PotentialFamily sw_family(const std::vector<KTParams>& tensors);

}  // namespace webclass
