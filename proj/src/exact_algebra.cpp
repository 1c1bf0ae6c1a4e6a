#include "exact_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace webclass {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Precondition: return "PreconditionError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NoFoci: return "NoFoci";
    case ErrorCode::FrameUndefined: return "FrameUndefined";
    case ErrorCode::FociUndefined: return "FociUndefined";
    case ErrorCode::Unrepresentable: return "Unrepresentable";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::PoleEncounter: return "PoleEncounter";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Error";
}

// ---- Rational helpers ----

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  auto bad = [&]() { return Error(ErrorCode::Parse, "malformed rational: '" + std::string(s) + "'"); };
  if (t.empty()) throw bad();
  size_t i = 0;
  bool neg = false;
  if (t[i] == '+' || t[i] == '-') neg = t[i++] == '-';
  auto digits = [&](size_t from) {
    size_t j = from;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    return j;
  };
  size_t j = digits(i);
  std::string whole = t.substr(i, j - i);
  Rational out;
  if (j == t.size()) {
    if (whole.empty()) throw bad();
    out = Rational(mpz_class(whole));
  } else if (t[j] == '/') {
    size_t k = digits(j + 1);
    std::string den = t.substr(j + 1, k - j - 1);
    if (whole.empty() || den.empty() || k != t.size()) throw bad();
    mpz_class d(den);
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
    out = Rational(mpz_class(whole), d);
    out.canonicalize();
  } else if (t[j] == '.') {
    size_t k = digits(j + 1);
    std::string frac = t.substr(j + 1, k - j - 1);
    if ((whole.empty() && frac.empty()) || k != t.size()) throw bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class n(whole.empty() ? "0" : whole);
    n = n * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
    out = Rational(n, scale);
    out.canonicalize();
  } else {
    throw bad();
  }
  return neg ? Rational(-out) : out;
}

int sign(const Rational& q) { return sgn(q); }

double to_double(const Rational& q) { return q.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// ---- ordering ----

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---- MultiPoly ----

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exps{}, c);
}

MultiPoly MultiPoly::var(const std::string& name) { return monomial({name}, {1}, Rational(1)); }

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exps e, const Rational& c) {
  if (e.size() != vars.size()) throw Error(ErrorCode::Internal, "exponent length mismatch");
  MultiPoly p(std::move(vars));
  if (sgn(c) != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exps& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_term() const {
  Exps z(vars_.size(), 0);
  auto it = terms_.find(z);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::leading_coeff() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

int MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool MultiPoly::depends_on(const std::string& name) const {
  int i = var_index(name);
  if (i < 0) return false;
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) return true;
  return false;
}

int MultiPoly::min_exp(const std::string& name) const {
  int i = var_index(name);
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int v = i < 0 ? 0 : e[i];
    if (first || v < m) m = v;
    first = false;
  }
  return m;
}

int MultiPoly::max_exp(const std::string& name) const {
  int i = var_index(name);
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int v = i < 0 ? 0 : e[i];
    if (first || v > m) m = v;
    first = false;
  }
  return m;
}

void MultiPoly::align_to_(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  std::vector<int> where(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    where[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exps ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw Error(ErrorCode::Internal, "variable '" + vars_[i] + "' dropped while aligning");
      ne[where[i]] = e[i];
    }
    out.emplace(std::move(ne), c);
  }
  vars_ = vars;
  terms_ = std::move(out);
}

std::vector<std::string> union_vars(const MultiPoly& a, const MultiPoly& b) {
  std::vector<std::string> u = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
  return u;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  MultiPoly p = *this;
  p.align_to_(vars);
  return p;
}

MultiPoly MultiPoly::trimmed() const {
  std::vector<std::string> used;
  for (size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        used.push_back(vars_[i]);
        break;
      }
  return with_vars(used);
}

void MultiPoly::add_term(const Exps& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (o.vars_ == vars_) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  auto u = union_vars(*this, o);
  align_to_(u);
  MultiPoly b = o;
  b.align_to_(u);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) {
    MultiPoly z(union_vars(a0, b0));
    return z;
  }
  const MultiPoly* pa = &a0;
  const MultiPoly* pb = &b0;
  MultiPoly a, b;
  if (a0.vars_ != b0.vars_) {
    auto u = union_vars(a0, b0);
    a = a0;
    a.align_to_(u);
    b = b0;
    b.align_to_(u);
    pa = &a;
    pb = &b;
  }
  MultiPoly out(pa->vars_);
  Exps e(pa->vars_.size());
  Rational c;
  for (const auto& [ea, ca] : pa->terms_)
    for (const auto& [eb, cb] : pb->terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      out.add_term(e, c);
    }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto u = union_vars(a, b);
  return a.with_vars(u).terms_ == b.with_vars(u).terms_;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::mul_var_power(const std::string& name, int e) const {
  if (e == 0 || is_zero()) return *this;
  MultiPoly p = *this;
  int i = p.var_index(name);
  if (i < 0) {
    auto v = p.vars_;
    v.push_back(name);
    p.align_to_(v);
    i = static_cast<int>(v.size()) - 1;
  }
  TermMap out;
  for (auto& [ex, c] : p.terms_) {
    Exps ne = ex;
    ne[i] += e;
    out.emplace(std::move(ne), c);
  }
  p.terms_ = std::move(out);
  return p;
}

MultiPoly MultiPoly::diff(const std::string& name) const {
  int i = var_index(name);
  MultiPoly out(vars_);
  if (i < 0) return out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exps ne = e;
    ne[i] -= 1;
    out.add_term(ne, c * e[i]);
  }
  return out;
}

MultiPoly poly_diff(const MultiPoly& p, const std::string& var) {
  if (p.var_index(var) < 0) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + var + "'");
  return p.diff(var);
}

MultiPoly MultiPoly::integrate(const std::string& name) const {
  MultiPoly p = *this;
  int i = p.var_index(name);
  if (i < 0) {
    auto v = p.vars_;
    v.push_back(name);
    p.align_to_(v);
    i = static_cast<int>(v.size()) - 1;
  }
  MultiPoly out(p.vars_);
  for (const auto& [e, c] : p.terms_) {
    if (e[i] == -1)
      throw Error(ErrorCode::Unrepresentable, "antiderivative of " + name + "^-1 needs a logarithm");
    Exps ne = e;
    ne[i] += 1;
    out.add_term(ne, c / (e[i] + 1));
  }
  return out;
}

MultiPoly MultiPoly::subst(const std::string& name, const MultiPoly& value) const {
  int i = var_index(name);
  if (i < 0) return *this;
  std::map<int, MultiPoly> powers;
  auto power_of = [&](int e) -> const MultiPoly& {
    auto it = powers.find(e);
    if (it != powers.end()) return it->second;
    MultiPoly v;
    if (e >= 0) {
      v = value.pow(static_cast<unsigned>(e));
    } else {
      if (value.size() != 1)
        throw Error(value.is_zero() ? ErrorCode::DivisionByZero : ErrorCode::Precondition,
                    "negative power of '" + name + "' needs a single-term substitute");
      const auto& [ve, vc] = *value.terms().begin();
      Exps inv(ve.size());
      for (size_t j = 0; j < ve.size(); ++j) inv[j] = -ve[j];
      v = MultiPoly::monomial(value.vars(), inv, 1 / vc).pow(static_cast<unsigned>(-e));
    }
    return powers.emplace(e, std::move(v)).first->second;
  };
  std::vector<std::string> rest_vars = vars_;
  MultiPoly out(rest_vars);
  std::map<int, MultiPoly> grouped;
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    int k = ne[i];
    ne[i] = 0;
    auto it = grouped.find(k);
    if (it == grouped.end()) it = grouped.emplace(k, MultiPoly(rest_vars)).first;
    it->second.add_term(ne, c);
  }
  for (auto& [k, coeff] : grouped) out += coeff * power_of(k);
  return out;
}

MultiPoly MultiPoly::subst(const std::string& name, const Rational& value) const {
  int i = var_index(name);
  if (i < 0) return *this;
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    int k = ne[i];
    ne[i] = 0;
    if (k < 0 && sgn(value) == 0)
      throw Error(ErrorCode::DivisionByZero, "pole: " + name + " = 0 in a negative power");
    Rational f;
    if (k >= 0) {
      mpz_class n, d;
      mpz_pow_ui(n.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(k));
      mpz_pow_ui(d.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(k));
      f = Rational(n, d);
    } else {
      mpz_class n, d;
      mpz_pow_ui(n.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(-k));
      mpz_pow_ui(d.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(-k));
      f = Rational(n, d);
    }
    f.canonicalize();
    out.add_term(ne, c * f);
  }
  return out;
}

MultiPoly MultiPoly::subst(const std::map<std::string, Rational>& values) const {
  MultiPoly p = *this;
  for (const auto& [name, v] : values) p = p.subst(name, v);
  return p;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& values) const {
  MultiPoly p = subst(values);
  if (!p.is_constant()) throw Error(ErrorCode::Precondition, "eval: unassigned symbols in " + p.str());
  return p.constant_term();
}

double MultiPoly::eval_double(const std::map<std::string, double>& values) const {
  std::vector<double> v(vars_.size(), 0.0);
  std::vector<bool> have(vars_.size(), false);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) {
      v[i] = it->second;
      have[i] = true;
    }
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!have[i]) throw Error(ErrorCode::Precondition, "eval: no value for '" + vars_[i] + "'");
      t *= std::pow(v[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

std::map<Exps, MultiPoly> MultiPoly::split(const std::vector<std::string>& over) const {
  std::vector<int> idx;
  for (const auto& name : over) idx.push_back(var_index(name));
  std::map<Exps, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    Exps key(over.size(), 0);
    Exps rest = e;
    for (size_t j = 0; j < idx.size(); ++j)
      if (idx[j] >= 0) {
        key[j] = e[idx[j]];
        rest[idx[j]] = 0;
      }
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, MultiPoly(vars_)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::coeff_of(const std::string& name, int e) const {
  auto parts = split({name});
  auto it = parts.find(Exps{e});
  return it == parts.end() ? MultiPoly(vars_) : it->second;
}

MultiPoly MultiPoly::reduce_circle(const std::string& c, const std::string& s) const {
  int ic = var_index(c);
  if (ic < 0) return *this;
  bool any = false;
  for (const auto& [e, v] : terms_)
    if (e[ic] >= 2) {
      any = true;
      break;
    }
  if (!any) return *this;
  MultiPoly base(vars_);
  auto u = vars_;
  if (std::find(u.begin(), u.end(), s) == u.end()) u.push_back(s);
  base.align_to_(u);
  int is = base.var_index(s);
  MultiPoly work = with_vars(u);
  MultiPoly out(u);
  // c^e -> c^(e mod 2) (1 - s^2)^(e div 2)
  for (const auto& [e, v] : work.terms_) {
    if (e[ic] < 2) {
      out.add_term(e, v);
      continue;
    }
    int half = e[ic] / 2;
    Exps rest = e;
    rest[ic] = e[ic] % 2;
    MultiPoly one_minus_s2(u);
    one_minus_s2.add_term(Exps(u.size(), 0), Rational(1));
    Exps s2(u.size(), 0);
    s2[is] = 2;
    one_minus_s2.add_term(s2, Rational(-1));
    MultiPoly t = MultiPoly::monomial(u, rest, v) * one_minus_s2.pow(static_cast<unsigned>(half));
    out += t;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool mono = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool unit = a == 1;
    if (!mono || !unit) os << a.get_str();
    bool need_star = !mono || !unit;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---- RatFunc ----

RatFunc::RatFunc(const MultiPoly& n) : num_(n), den_(Rational(1)) {}

RatFunc::RatFunc(const MultiPoly& n, const MultiPoly& d) : num_(n), den_(d) { normalize_(); }

void RatFunc::normalize_() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    num_ = MultiPoly(num_.vars());
    den_ = MultiPoly(Rational(1));
    return;
  }
  if (den_.size() == 1) {
    const auto& [e, c] = *den_.terms().begin();
    Exps inv(e.size());
    for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    num_ = num_ * MultiPoly::monomial(den_.vars(), inv, 1 / c);
    den_ = MultiPoly(Rational(1));
    return;
  }
  Rational lc = den_.leading_coeff();
  num_ *= Rational(1 / lc);
  den_ *= Rational(1 / lc);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + RatFunc(-b.num_, b.den_); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFunc RatFunc::pow(int n) const {
  if (n >= 0) return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  if (num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
  return RatFunc(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)));
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc poly_subst(const MultiPoly& p, const std::string& var, const RatFunc& value) {
  int i = p.var_index(var);
  if (i < 0) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + var + "'");
  std::map<int, MultiPoly> grouped;
  for (const auto& [e, c] : p.terms()) {
    Exps ne = e;
    int k = ne[i];
    ne[i] = 0;
    auto it = grouped.find(k);
    if (it == grouped.end()) it = grouped.emplace(k, MultiPoly(p.vars())).first;
    it->second.add_term(ne, c);
  }
  RatFunc out{MultiPoly(Rational(0))};
  for (const auto& [k, coeff] : grouped) {
    if (k < 0 && value.is_zero())
      throw Error(ErrorCode::DivisionByZero, "substituting zero into a negative power of '" + var + "'");
    out = out + RatFunc(coeff) * value.pow(k);
  }
  return out;
}

// ---- ExactRotation ----

ExactRotation ExactRotation::make(const Rational& c, const Rational& s) {
  if (c * c + s * s != 1)
    throw Error(ErrorCode::Precondition, "rotation pair (" + to_string(c) + ", " + to_string(s) + ") has c^2+s^2 != 1");
  return {c, s};
}

ExactRotation ExactRotation::pythagorean(long m, long n) {
  if (m == 0 && n == 0) return {};
  Rational d = Rational(m * m + n * n);
  return {Rational(m * m - n * n) / d, Rational(2 * m * n) / d};
}

ExactRotation ExactRotation::compose(const ExactRotation& o) const {
  return {c * o.c - s * o.s, s * o.c + c * o.s};
}

}  // namespace webclass
