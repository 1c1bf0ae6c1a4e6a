#include "trig_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "linalg.hpp"

namespace webclass {

// ---- TrigArg ----

std::string TrigArg::str() const {
  if (sgn(v) == 0) return to_string(u);
  std::string vk = (abs(v) == 1 ? std::string() : to_string(Rational(abs(v)))) + "k";
  if (sgn(u) == 0) return (sgn(v) < 0 ? "-" : "") + vk;
  return to_string(u) + (sgn(v) < 0 ? " - " : " + ") + vk;
}

TrigArg parse_trig_arg(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  static const std::regex both(R"(^([+-]?[0-9]+(?:/[0-9]+)?)([+-])([0-9]+(?:/[0-9]+)?)?\*?k$)");
  static const std::regex only_u(R"(^([+-]?[0-9]+(?:/[0-9]+)?)$)");
  static const std::regex only_v(R"(^([+-]?)([0-9]+(?:/[0-9]+)?)?\*?k$)");
  std::smatch m;
  if (std::regex_match(t, m, both)) {
    Rational v = m[3].matched ? parse_rational(m[3].str()) : Rational(1);
    return {parse_rational(m[1].str()), m[2].str() == "-" ? Rational(-v) : v};
  }
  if (std::regex_match(t, m, only_u)) return {parse_rational(m[1].str()), 0};
  if (std::regex_match(t, m, only_v)) {
    Rational v = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
    return {0, m[1].str() == "-" ? Rational(-v) : v};
  }
  throw Error(ErrorCode::Parse, "malformed trigonometric argument '" + s + "'");
}

// ---- TrigPoly ----

TrigPoly::TrigPoly(const MultiPoly& constant) { add(TrigKind::Cos, TrigArg{}, constant); }

TrigPoly TrigPoly::cos(const TrigArg& a, const MultiPoly& coeff) {
  TrigPoly p;
  p.add(TrigKind::Cos, a, coeff);
  return p;
}

TrigPoly TrigPoly::sin(const TrigArg& a, const MultiPoly& coeff) {
  TrigPoly p;
  p.add(TrigKind::Sin, a, coeff);
  return p;
}

std::vector<TrigTerm> TrigPoly::term_list() const {
  std::vector<TrigTerm> out;
  for (const auto& [k, c] : terms_) out.push_back({k.kind, k.arg, c});
  return out;
}

void TrigPoly::add(TrigKind kind, const TrigArg& arg0, const MultiPoly& coeff0) {
  if (coeff0.is_zero()) return;
  TrigArg arg = arg0;
  MultiPoly coeff = coeff0.reduce_circle(kC2Phi, kS2Phi);
  if (arg.negative()) {
    arg = -arg;
    if (kind == TrigKind::Sin) coeff = -coeff;
  }
  if (arg.is_zero() && kind == TrigKind::Sin) return;
  if (coeff.is_zero()) return;
  Key key{kind, arg};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(coeff));
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k.kind, k.arg, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k.kind, k.arg, -c);
  return *this;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly p;
  for (const auto& [k, c] : terms_) p.add(k.kind, k.arg, -c);
  return p;
}

namespace {

void accumulate_product(TrigPoly& out, TrigKind ka, const TrigArg& A, TrigKind kb, const TrigArg& B,
                        const MultiPoly& P) {
  const MultiPoly h = Rational(1, 2) * P;
  const TrigArg sum{A.u + B.u, A.v + B.v};
  const TrigArg diff{A.u - B.u, A.v - B.v};
  if (ka == TrigKind::Cos && kb == TrigKind::Cos) {
    out.add(TrigKind::Cos, diff, h);
    out.add(TrigKind::Cos, sum, h);
  } else if (ka == TrigKind::Sin && kb == TrigKind::Sin) {
    out.add(TrigKind::Cos, diff, h);
    out.add(TrigKind::Cos, sum, -h);
  } else if (ka == TrigKind::Sin) {
    out.add(TrigKind::Sin, sum, h);
    out.add(TrigKind::Sin, diff, h);
  } else {
    out.add(TrigKind::Sin, sum, h);
    out.add(TrigKind::Sin, diff, -h);
  }
}

}  // namespace

TrigPoly trig_mul(const TrigTerm& a, const TrigTerm& b) {
  TrigPoly out;
  accumulate_product(out, a.kind, a.arg, b.kind, b.arg, a.coeff * b.coeff);
  return out;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) accumulate_product(out, ka.kind, ka.arg, kb.kind, kb.arg, ca * cb);
  return out;
}

TrigPoly operator*(const TrigPoly& a, const MultiPoly& c) {
  TrigPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.terms_) out.add(k.kind, k.arg, v * c);
  return out;
}

bool operator==(const TrigPoly& a, const TrigPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [k, c] : a.terms_) {
    if (k.kind != it->first.kind || !(k.arg == it->first.arg) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

TrigPoly TrigPoly::pow(unsigned n) const {
  TrigPoly result(MultiPoly(Rational(1)));
  for (unsigned i = 0; i < n; ++i) result = result * *this;
  return result;
}

TrigPoly TrigPoly::d_theta() const {
  TrigPoly out;
  const MultiPoly k = MultiPoly::var("k");
  for (const auto& [key, c] : terms_) {
    MultiPoly freq = MultiPoly(key.arg.u) + key.arg.v * k;
    if (key.kind == TrigKind::Cos)
      out.add(TrigKind::Sin, key.arg, -(c * freq));
    else
      out.add(TrigKind::Cos, key.arg, c * freq);
  }
  return out;
}

TrigPoly TrigPoly::d_coeff(const std::string& name) const {
  TrigPoly out;
  for (const auto& [key, c] : terms_) out.add(key.kind, key.arg, c.diff(name));
  return out;
}

TrigPoly TrigPoly::mul_var_power(const std::string& name, int e) const {
  TrigPoly out;
  for (const auto& [key, c] : terms_) out.add(key.kind, key.arg, c.mul_var_power(name, e));
  return out;
}

TrigPoly TrigPoly::specialize_k(const Rational& k) const {
  TrigPoly out;
  for (const auto& [key, c] : terms_) out.add(key.kind, TrigArg{key.arg.at(k), 0}, c.subst("k", k));
  return out;
}

TrigPoly TrigPoly::subst(const std::string& name, const MultiPoly& value) const {
  TrigPoly out;
  for (const auto& [key, c] : terms_) out.add(key.kind, key.arg, c.subst(name, value));
  return out;
}

TrigPoly TrigPoly::subst(const std::string& name, const Rational& value) const {
  TrigPoly out;
  for (const auto& [key, c] : terms_) out.add(key.kind, key.arg, c.subst(name, value));
  return out;
}

int TrigPoly::min_exp(const std::string& name) const {
  int m = 0;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    int e = c.min_exp(name);
    if (first || e < m) m = e;
    first = false;
  }
  return m;
}

std::vector<TrigArg> TrigPoly::args() const {
  std::vector<TrigArg> out;
  for (const auto& [key, c] : terms_)
    if (out.empty() || !(out.back() == key.arg)) out.push_back(key.arg);
  return out;
}

double TrigPoly::eval(double theta, double k, const std::map<std::string, double>& symbols) const {
  std::map<std::string, double> vals = symbols;
  vals["k"] = k;
  double sum = 0.0;
  for (const auto& [key, c] : terms_) {
    double a = (key.arg.u.get_d() + key.arg.v.get_d() * k) * theta;
    sum += c.eval_double(vals) * (key.kind == TrigKind::Cos ? std::cos(a) : std::sin(a));
  }
  return sum;
}

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!key.arg.is_zero()) os << "*" << (key.kind == TrigKind::Cos ? "cos" : "sin") << "((" << key.arg.str() << ")t)";
  }
  return os.str();
}

// ---- coefficient systems ----

std::vector<LabelledCoefficient> labelled_coefficients(const TrigPoly& p, const std::vector<std::string>& split_over) {
  std::vector<LabelledCoefficient> out;
  for (const auto& [key, c] : p.terms()) {
    if (split_over.empty()) {
      out.push_back({key.kind, key.arg, {}, c});
      continue;
    }
    for (const auto& [e, part] : c.split(split_over))
      if (!part.is_zero()) out.push_back({key.kind, key.arg, e, part});
  }
  return out;
}

std::vector<MultiPoly> coefficient_system(const TrigPoly& p, const std::vector<std::string>& split_over) {
  std::vector<MultiPoly> out;
  for (auto& lc : labelled_coefficients(p, split_over)) out.push_back(std::move(lc.coeff));
  return out;
}

// ---- collisions ----

std::vector<TrigArg> canonical_args(const std::vector<TrigArg>& args) {
  std::set<TrigArg> s;
  for (auto a : args) {
    if (a.negative()) a = -a;
    if (!a.is_zero()) s.insert(a);
  }
  return {s.begin(), s.end()};
}

std::vector<Rational> collision_k_values(const std::vector<TrigArg>& args, bool include_constant) {
  auto a = canonical_args(args);
  std::set<Rational> ks;
  auto solve = [&](const Rational& c0, const Rational& c1) {
    // c0 + c1 k = 0
    if (sgn(c1) == 0) return;
    Rational k = -c0 / c1;
    if (sgn(k) != 0) ks.insert(k);
  };
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = i + 1; j < a.size(); ++j) {
      solve(a[i].u - a[j].u, a[i].v - a[j].v);
      solve(a[i].u + a[j].u, a[i].v + a[j].v);
    }
    if (include_constant) solve(a[i].u, a[i].v);
  }
  return {ks.begin(), ks.end()};
}

RankReport numeric_rank_oracle(const std::vector<TrigArg>& args, const Rational& k, size_t n_samples,
                               bool include_constant, uint64_t seed) {
  if (n_samples < 2 * (2 * args.size() + 1))
    throw Error(ErrorCode::Precondition, "numeric_rank_oracle: need n_samples >= 2(2|args|+1)");
  std::vector<double> freqs;
  std::vector<bool> with_sin;
  mpz_class period = 1;
  for (const auto& a : args) {
    Rational f = a.at(k);
    freqs.push_back(f.get_d());
    with_sin.push_back(sgn(f) != 0);
    mpz_lcm(period.get_mpz_t(), period.get_mpz_t(), f.get_den_mpz_t());
  }
  // one full common period; on (0, pi) low frequencies such as 2/7 are numerically dependent
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2 * M_PI * period.get_d());
  std::vector<std::vector<double>> rows;
  size_t cols = 0;
  for (size_t n = 0; n < n_samples; ++n) {
    double t = dist(rng);
    while (t <= 0.0) t = dist(rng);
    std::vector<double> row;
    if (include_constant) row.push_back(1.0);
    for (size_t i = 0; i < freqs.size(); ++i) {
      row.push_back(std::cos(freqs[i] * t));
      if (with_sin[i]) row.push_back(std::sin(freqs[i] * t));
    }
    cols = row.size();
    rows.push_back(std::move(row));
  }
  NumericRank nr = numeric_rank(rows, cols, 1e-8);
  return {cols, nr.rank, cols - nr.rank, nr.smallest_ratio};
}

// ---- presets ----

std::string default_preset_path() {
  if (const char* d = std::getenv("WEBCLASS_DATA_DIR")) return std::string(d) + "/trig_presets.txt";
  return std::string(WEBCLASS_DATA_DIR) + "/trig_presets.txt";
}

std::vector<ArgSet> load_arg_sets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Precondition, "cannot open argument-set manifest " + path);
  std::vector<ArgSet> sets;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line.front() == '[' && line.back() == ']') {
      sets.push_back({line.substr(1, line.size() - 2), false, {}});
      continue;
    }
    if (sets.empty()) throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": entry before a [name] header");
    if (line.rfind("constant", 0) == 0) {
      auto eq = line.find('=');
      std::string v = eq == std::string::npos ? "" : line.substr(eq + 1);
      v.erase(std::remove_if(v.begin(), v.end(), ::isspace), v.end());
      if (v != "yes" && v != "no") throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": constant = yes|no");
      sets.back().constant = v == "yes";
      continue;
    }
    sets.back().args.push_back(parse_trig_arg(line));
  }
  return sets;
}

ArgSet preset(const std::string& name, const std::string& path) {
  for (auto& s : load_arg_sets(path))
    if (s.name == name) return s;
  throw Error(ErrorCode::Precondition, "unknown argument-set preset '" + name + "'");
}

std::vector<Rational> rational_grid(long max_den, long max_abs) {
  std::set<Rational> s;
  for (long q = 1; q <= max_den; ++q)
    for (long p = 1; p <= max_abs * q; ++p) {
      Rational r(p, q);
      r.canonicalize();
      s.insert(r);
      s.insert(Rational(-r));
    }
  return {s.begin(), s.end()};
}

GridAgreement oracle_solver_agreement(const std::vector<TrigArg>& args, bool include_constant,
                                      const std::vector<Rational>& grid, uint64_t seed) {
  auto a = canonical_args(args);
  auto solved = collision_k_values(a, include_constant);
  std::set<Rational> hit(solved.begin(), solved.end());
  size_t n_samples = std::max<size_t>(400, 8 * (2 * a.size() + 1));
  size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<std::vector<Rational>>> jobs;
  for (size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w]() {
      std::vector<Rational> bad;
      for (size_t i = w; i < grid.size(); i += workers) {
        RankReport r = numeric_rank_oracle(a, grid[i], n_samples, include_constant, seed + i);
        if ((r.deficiency > 0) != (hit.count(grid[i]) > 0)) bad.push_back(grid[i]);
      }
      return bad;
    }));
  GridAgreement out;
  out.points = grid.size();
  for (auto& j : jobs)
    for (auto& k : j.get()) out.disagreements.push_back(k);
  std::sort(out.disagreements.begin(), out.disagreements.end());
  return out;
}

}  // namespace webclass
