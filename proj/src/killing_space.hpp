#pragma once

#include <array>
#include <vector>

#include "exact_algebra.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace webclass {

/** beta_1..beta_6 stored at indices 0..5. */
using KTParams = std::array<Rational, 6>;
/** Same parameters with polynomial entries (symbolic centers, symbolic beta). */
using SymParams = std::array<MultiPoly, 6>;

SymParams to_sym(const KTParams& b);
/** (b1, ..., b6) as symbols. */
SymParams symbolic_params(const std::string& prefix = "b");

struct KTComponents {
  MultiPoly k11, k12, k22;
};

enum class WebKind { Cartesian, Polar, Parabolic, EllipticHyperbolic };
const char* web_kind_name(WebKind k);
WebKind parse_web_kind(const std::string& s);

struct WebType {
  WebKind kind = WebKind::Cartesian;
  bool degenerate = false;
  friend bool operator==(const WebType&, const WebType&) = default;
};

struct SingularPoint {
  Scalar x, y;
  bool exact() const { return x.exact && y.exact; }
};

KTComponents kt_components(const KTParams& b);
KTComponents kt_components(const SymParams& b);
/** Same tensor assembled from the (A, B, C) blocks and the rotation generator. */
KTComponents kt_components_compact(const KTParams& b);

/** Coefficients of (k11, k12, k22) on 1, x, y, x^2, xy, y^2, in that order (18 entries). */
RVec component_coefficients(const KTComponents& k);
/** Reads beta back from the components of a Killing tensor. */
KTParams kt_params_from_components(const KTComponents& k);

bool verify_killing(const KTComponents& k);
std::vector<KTComponents> solve_killing_equation();

mpz_class dtt_dimension(long n, long p);

/** Eigenvalue-coincidence discriminant (k11-k22)^2 + 4 k12^2 as a polynomial in x, y. */
MultiPoly eigen_discriminant(const KTComponents& k);

std::vector<SingularPoint> singular_points(const KTParams& b);

bool is_metric_multiple(const KTParams& b);

/** Cartesian ignores the arguments; Polar uses the center (a, b); EH uses c2; Parabolic is (0,0,0,1,0,0). */
KTParams canonical_kt(WebKind web, const Rational& a = 0, const Rational& b = 0, const Rational& c2 = 0);

std::string params_str(const KTParams& b);

}  // namespace webclass
