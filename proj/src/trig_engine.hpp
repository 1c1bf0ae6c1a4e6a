#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exact_algebra.hpp"

namespace webclass {

/** The angle (u + v k) theta. */
struct TrigArg {
  Rational u{0}, v{0};

  bool is_zero() const { return sgn(u) == 0 && sgn(v) == 0; }
  /** True when the first nonzero of (u, v) is negative. */
  bool negative() const { return sgn(u) < 0 || (sgn(u) == 0 && sgn(v) < 0); }
  TrigArg operator-() const { return {-u, -v}; }
  Rational at(const Rational& k) const { return u + v * k; }
  std::string str() const;
  friend bool operator==(const TrigArg& a, const TrigArg& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(const TrigArg& a, const TrigArg& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  }
};

TrigArg parse_trig_arg(const std::string& s);

enum class TrigKind { Cos, Sin };

struct TrigTerm {
  TrigKind kind = TrigKind::Cos;
  TrigArg arg;
  MultiPoly coeff;
};

/** Symbols reduced modulo c^2 + s^2 - 1 in every coefficient. */
inline constexpr const char* kC2Phi = "c2p";
inline constexpr const char* kS2Phi = "s2p";

class TrigPoly {
public:
  struct Key {
    TrigKind kind;
    TrigArg arg;
    friend bool operator<(const Key& a, const Key& b) {
      if (a.arg == b.arg) return a.kind < b.kind;
      return a.arg < b.arg;
    }
  };
  using Map = std::map<Key, MultiPoly>;

  TrigPoly() = default;
  TrigPoly(const MultiPoly& constant);  // NOLINT
  static TrigPoly cos(const TrigArg& a, const MultiPoly& coeff = MultiPoly(Rational(1)));
  static TrigPoly sin(const TrigArg& a, const MultiPoly& coeff = MultiPoly(Rational(1)));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<TrigTerm> term_list() const;

  /** Adds a term after canonical re-signing; sin of a zero argument is dropped. */
  void add(TrigKind kind, const TrigArg& arg, const MultiPoly& coeff);

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const TrigPoly& a, const MultiPoly& c);
  friend TrigPoly operator*(const MultiPoly& c, const TrigPoly& a) { return a * c; }
  TrigPoly operator-() const;
  friend bool operator==(const TrigPoly& a, const TrigPoly& b);
  TrigPoly pow(unsigned n) const;

  /** d/dtheta; the frequency u + v k enters the coefficient through the symbol k. */
  TrigPoly d_theta() const;
  /** Derivative of the coefficients in one symbol (e.g. r). */
  TrigPoly d_coeff(const std::string& name) const;
  /** Coefficient-wise multiplication by name^e. */
  TrigPoly mul_var_power(const std::string& name, int e) const;
  /** Sets k to a rational, merging arguments that become equal. */
  TrigPoly specialize_k(const Rational& k) const;
  TrigPoly subst(const std::string& name, const MultiPoly& value) const;
  TrigPoly subst(const std::string& name, const Rational& value) const;
  /** Smallest exponent of a symbol over all coefficients. */
  int min_exp(const std::string& name) const;

  std::vector<TrigArg> args() const;
  double eval(double theta, double k, const std::map<std::string, double>& symbols) const;
  std::string str() const;

private:
  Map terms_;
};

TrigPoly trig_mul(const TrigTerm& a, const TrigTerm& b);

/** Coefficients of p; with split_over set, each coefficient is further split by monomials in those symbols. */
std::vector<MultiPoly> coefficient_system(const TrigPoly& p, const std::vector<std::string>& split_over = {});

struct LabelledCoefficient {
  TrigKind kind;
  TrigArg arg;
  Exps key;  // exponents of the split symbols
  MultiPoly coeff;
};
std::vector<LabelledCoefficient> labelled_coefficients(const TrigPoly& p, const std::vector<std::string>& split_over = {});

/** Canonical, duplicate-free copy of an argument list (zero arguments removed). */
std::vector<TrigArg> canonical_args(const std::vector<TrigArg>& args);

/**
 * Rational k != 0 where two distinct arguments agree up to sign; with
 * include_constant, also where an argument vanishes (cos 0 meets the constant).
 */
std::vector<Rational> collision_k_values(const std::vector<TrigArg>& args, bool include_constant);

struct RankReport {
  size_t columns = 0;
  size_t rank = 0;
  size_t deficiency = 0;
  double smallest_ratio = 0.0;
};

/**
 * Samples {1} (optional), cos(a theta), sin(a theta) at theta uniform over one common period.
 * sin columns of arguments equal to zero are dropped; duplicates are kept.
 */
RankReport numeric_rank_oracle(const std::vector<TrigArg>& args, const Rational& k, size_t n_samples,
                               bool include_constant, uint64_t seed);

struct ArgSet {
  std::string name;
  bool constant = false;
  std::vector<TrigArg> args;
};

std::vector<ArgSet> load_arg_sets(const std::string& path);
std::string default_preset_path();
ArgSet preset(const std::string& name, const std::string& path = default_preset_path());

/** Rationals p/q with 1 <= q <= max_den, 0 < |p/q| <= max_abs, sorted. */
std::vector<Rational> rational_grid(long max_den, long max_abs);

struct GridAgreement {
  size_t points = 0;
  std::vector<Rational> disagreements;
};
/** Compares the collision solver with the rank oracle on every grid point; runs in parallel. */
GridAgreement oracle_solver_agreement(const std::vector<TrigArg>& args, bool include_constant,
                                      const std::vector<Rational>& grid, uint64_t seed);

}  // namespace webclass
