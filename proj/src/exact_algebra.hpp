#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace webclass {

using Rational = mpq_class;

std::string to_string(const Rational& q);
/** Accepts "p", "p/q" and plain decimals such as "-0.25". */
Rational parse_rational(std::string_view s);
int sign(const Rational& q);
double to_double(const Rational& q);
/** Exact square root when q is the square of a rational. */
std::optional<Rational> exact_sqrt(const Rational& q);

using Exps = std::vector<int>;

/** Graded order: total degree first, ties broken lexicographically. */
struct GrlexLess {
  bool operator()(const Exps& a, const Exps& b) const;
};

/**
 * Sparse Laurent polynomial with rational coefficients over an ordered list
 * of symbol names. Binary operations on polynomials with different variable
 * lists work on the union of both lists.
 */
class MultiPoly {
public:
  using TermMap = std::map<Exps, Rational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(const Rational& c);  // NOLINT: implicit constant
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT

  static MultiPoly var(const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, Exps e, const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /** Coefficient of the greatest term; zero for the zero polynomial. */
  Rational leading_coeff() const;
  int var_index(const std::string& name) const;
  bool depends_on(const std::string& name) const;
  int min_exp(const std::string& name) const;
  int max_exp(const std::string& name) const;

  /** Same polynomial over a variable list that contains every used symbol. */
  MultiPoly with_vars(const std::vector<std::string>& vars) const;
  /** Drops symbols that no term uses. */
  MultiPoly trimmed() const;

  void add_term(const Exps& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned n) const;
  MultiPoly mul_var_power(const std::string& name, int e) const;

  MultiPoly diff(const std::string& name) const;
  /** Antiderivative in one symbol; throws Unrepresentable on an exponent of -1. */
  MultiPoly integrate(const std::string& name) const;
  /** Substitutes a polynomial; negative powers need a single-term value. */
  MultiPoly subst(const std::string& name, const MultiPoly& value) const;
  MultiPoly subst(const std::string& name, const Rational& value) const;
  MultiPoly subst(const std::map<std::string, Rational>& values) const;

  Rational eval(const std::map<std::string, Rational>& values) const;
  double eval_double(const std::map<std::string, double>& values) const;

  /** Coefficients with respect to the listed symbols, keyed by their exponents. */
  std::map<Exps, MultiPoly> split(const std::vector<std::string>& over) const;
  /** Coefficient of name^e. */
  MultiPoly coeff_of(const std::string& name, int e) const;
  /** Reduces c^2 -> 1 - s^2 until c appears at most linearly. */
  MultiPoly reduce_circle(const std::string& c, const std::string& s) const;

  std::string str() const;

private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void align_to_(const std::vector<std::string>& vars);
  friend std::vector<std::string> union_vars(const MultiPoly& a, const MultiPoly& b);
};

std::vector<std::string> union_vars(const MultiPoly& a, const MultiPoly& b);

MultiPoly poly_diff(const MultiPoly& p, const std::string& var);

/** Quotient of polynomials, normalized so the denominator is monic under GrlexLess. */
class RatFunc {
public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const MultiPoly& n);  // NOLINT
  RatFunc(const MultiPoly& n, const MultiPoly& d);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  RatFunc pow(int n) const;

  std::string str() const;

private:
  MultiPoly num_, den_;
  void normalize_();
};

RatFunc poly_subst(const MultiPoly& p, const std::string& var, const RatFunc& value);

struct ExactRotation {
  Rational c{1}, s{0};

  static ExactRotation make(const Rational& c, const Rational& s);
  /** Rotation with c = (m^2-n^2)/(m^2+n^2), s = 2mn/(m^2+n^2). */
  static ExactRotation pythagorean(long m, long n);
  ExactRotation compose(const ExactRotation& o) const;
  ExactRotation inverse() const { return {c, -s}; }
  friend bool operator==(const ExactRotation&, const ExactRotation&) = default;
};

}  // namespace webclass
