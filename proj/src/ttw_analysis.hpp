#pragma once

#include <optional>
#include <string>
#include <vector>

#include "killing_space.hpp"
#include "trig_engine.hpp"

namespace webclass {

/** Contravariant components in (r, theta); coefficients are Laurent in r. */
struct PolarKT {
  TrigPoly k11, k12, k22;
};

/** Symmetric products of X1, X2 and the rotation generator -d/dtheta, matching kt_components. */
PolarKT polar_kt_components(const SymParams& b);
PolarKT polar_kt_components(const KTParams& b);

/** The components as printed in the source text (differ from the derivation; see reconcile). */
PolarKT polar_kt_printed(const SymParams& b);

struct PolarReconciliation {
  bool k11_equal = false, k12_equal = false, k22_equal = false;
  TrigPoly k11_diff, k12_diff, k22_diff;  // printed - derived
};
PolarReconciliation reconcile_polar_kt();

/** Cartesian components pushed to polar by the Jacobian law, x = r cos, y = r sin. */
PolarKT cartesian_to_polar(const KTParams& b);

/** Missing fields are symbolic ("w2", "l1", "l2", "k"). */
struct TTWParams {
  std::optional<Rational> omega2, lambda1, lambda2, k;
};

/** Couplings as polynomials, symbolic where unset. */
MultiPoly ttw_symbol(const std::optional<Rational>& v, const char* name);

/**
 * Cleared d(K dV) for the TTW potential and a polar tensor. Multiplied by
 * sin^{4a}(k theta) cos^{4b}(k theta) (a, b flag nonzero lambda2, lambda1)
 * and then by the power of r that makes the least r exponent 0.
 */
struct ClearedCompat {
  TrigPoly poly;
  int r_power = 0;  // the extra factor is r^r_power
};
ClearedCompat ttw_compat_cleared(const PolarKT& K, const TTWParams& t);
TrigPoly ttw_compat_from_components(const PolarKT& K, const TTWParams& t);
TrigPoly ttw_compat_general(const SymParams& b, const TTWParams& t);

/** The clearing factor used above, as a TrigPoly (without the r power). */
TrigPoly ttw_clearing_factor(const TTWParams& t);

/** Rotated-Cartesian tensor X_phi (x) X_phi in polar components; phi enters via c2p, s2p. */
PolarKT cartesian_case_kt(const std::optional<Rational>& c2p = std::nullopt,
                          const std::optional<Rational>& s2p = std::nullopt);
/** The same tensor as KTParams over the symbols c2p, s2p. */
SymParams cartesian_case_params();

TrigPoly cartesian_case_compat(const TTWParams& t, const std::optional<Rational>& c2p = std::nullopt,
                               const std::optional<Rational>& s2p = std::nullopt);

/** The printed Cartesian-case equation times sin^4 cos^4 of k theta. */
TrigPoly cartesian_case_printed(const TTWParams& t);

struct ProportionalityReport {
  bool proportional = false;
  Rational factor{0};  // computed = factor * printed
  TrigPoly difference;  // computed - factor * printed
};
ProportionalityReport compare_proportional(const TrigPoly& computed, const TrigPoly& printed);

struct NecessaryCondition {
  MultiPoly e1, e2;      // coefficients of cos(theta), sin(theta) on the beta6 = 0 subspace
  MultiPoly g1, g2;      // e1 = b4 g1 - b5 g2, e2 = -b4 g2 - b5 g1
  MultiPoly combination; // b4 e1 - b5 e2 = (b4^2 + b5^2) g1
  bool verified = false;
  std::vector<std::string> constraint;  // {"b4 = 0", "b5 = 0"}
  std::string corollary;
};
NecessaryCondition derive_necessary_condition();

struct ReducedEquation {
  TrigKind kind;
  TrigArg arg;
  std::string phi_symbol;  // "s2p", "c2p" or "1"
  MultiPoly poly;          // in k, l1, l2
};
std::vector<ReducedEquation> reduced_system();

/** The listed generic-k system: 7 polynomials, each against sin 2phi and cos 2phi. */
std::vector<std::pair<std::string, MultiPoly>> listed_reduced_system();

struct ReducedMatch {
  size_t computed = 0, listed = 0, matched = 0;
  std::vector<std::string> unmatched_computed, unmatched_listed;
  bool all_matched() const { return matched == computed && matched == listed; }
};
ReducedMatch match_reduced_system(const std::vector<ReducedEquation>& sys);

struct CaseOutcome {
  std::optional<Rational> k;  // nullopt = generic
  std::string constraint;
  std::vector<std::pair<std::string, std::string>> witness;
};

/** Outcomes for one rational k (nullopt = generic k); k = +-2 style values yield two entries. */
std::vector<CaseOutcome> ttw_case(const std::optional<Rational>& k);

/** Values of k that the verdict visits: collisions of the actual Cartesian-case expansion. */
std::vector<Rational> verdict_k_values();

std::vector<CaseOutcome> multiseparability_verdict();

struct KListComparison {
  std::vector<Rational> matched, missing, extra;  // missing: listed only; extra: computed only
  bool equal() const { return missing.empty() && extra.empty(); }
};
KListComparison compare_k_lists(const std::vector<Rational>& computed, const std::vector<Rational>& listed);

/** The dependence values listed for sets N and M. */
std::vector<Rational> listed_k_values_N();
std::vector<Rational> listed_k_values_M();

}  // namespace webclass
