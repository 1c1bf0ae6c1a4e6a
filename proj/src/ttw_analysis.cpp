#include "ttw_analysis.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "linalg.hpp"

namespace webclass {

namespace {

const MultiPoly R = MultiPoly::var("r");
const TrigArg kTheta{1, 0};
const TrigArg k2Theta{2, 0};
const TrigArg kKTheta{0, 1};

MultiPoly rpow(int e) { return MultiPoly(Rational(1)).mul_var_power("r", e); }

TrigPoly cos_t() { return TrigPoly::cos(kTheta); }
TrigPoly sin_t() { return TrigPoly::sin(kTheta); }

struct VField {
  TrigPoly r, th;
};

// X (x) Y + Y (x) X scaled by w, accumulated into K
void add_sym(PolarKT& K, const VField& X, const VField& Y, const MultiPoly& w) {
  K.k11 += (X.r * Y.r) * (2 * w);
  K.k12 += (X.r * Y.th + X.th * Y.r) * w;
  K.k22 += (X.th * Y.th) * (2 * w);
}

void add_sq(PolarKT& K, const VField& X, const MultiPoly& w) {
  K.k11 += (X.r * X.r) * w;
  K.k12 += (X.r * X.th) * w;
  K.k22 += (X.th * X.th) * w;
}

bool present(const std::optional<Rational>& v) { return !v || sgn(*v) != 0; }

TrigPoly apply_params(const TrigPoly& p, const TTWParams& t) {
  TrigPoly out = p;
  if (t.omega2) out = out.subst("w2", *t.omega2);
  if (t.lambda1) out = out.subst("l1", *t.lambda1);
  if (t.lambda2) out = out.subst("l2", *t.lambda2);
  if (t.k) out = out.specialize_k(*t.k);
  return out;
}

std::string phi_label(const Exps& e) {
  if (e[0] == 0 && e[1] == 0) return "1";
  if (e[0] == 1 && e[1] == 0) return "c2p";
  if (e[0] == 0 && e[1] == 1) return "s2p";
  return "c2p^" + std::to_string(e[0]) + "*s2p^" + std::to_string(e[1]);
}

// q with a = q * b for a rational q, if one exists
std::optional<Rational> rational_ratio(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(Rational(1)) : std::nullopt;
  auto vars = union_vars(a, b);
  Rational q = a.with_vars(vars).leading_coeff() / b.with_vars(vars).leading_coeff();
  if ((a - q * b).is_zero()) return q;
  return std::nullopt;
}

}  // namespace

PolarKT polar_kt_components(const SymParams& b) {
  const VField X1{cos_t(), sin_t() * (-rpow(-1))};
  const VField X2{sin_t(), cos_t() * rpow(-1)};
  const VField E{TrigPoly(), TrigPoly(MultiPoly(Rational(-1)))};
  PolarKT K;
  add_sq(K, X1, b[0]);
  add_sq(K, X2, b[1]);
  add_sym(K, X1, X2, b[2]);
  // B = (b4, -b5) as in the Cartesian compact form
  add_sym(K, X1, E, b[3]);
  add_sym(K, X2, E, -b[4]);
  add_sq(K, E, b[5]);
  return K;
}

PolarKT polar_kt_components(const KTParams& b) { return polar_kt_components(to_sym(b)); }

PolarKT polar_kt_printed(const SymParams& b) {
  TrigPoly c = cos_t(), s = sin_t(), c2 = TrigPoly::cos(k2Theta);
  PolarKT K;
  K.k11 = (c * s) * (2 * b[2]) + (c * c) * b[0] + (s * s) * b[1];
  K.k12 = c * (2 * b[3]) + s * (2 * b[4]) + c2 * (2 * b[2] * rpow(-1)) - (c * s) * (2 * b[0] * rpow(-1)) +
          (c * s) * (2 * b[1] * rpow(-1));
  K.k22 = TrigPoly(b[5]) - (c * s) * (2 * b[2] * rpow(-2)) + (s * s) * (b[0] * rpow(-2)) +
          (c * c) * (b[1] * rpow(-2)) - s * (2 * b[3] * rpow(-1)) + c * (2 * b[4] * rpow(-1));
  return K;
}

PolarReconciliation reconcile_polar_kt() {
  SymParams b = symbolic_params("b");
  PolarKT d = polar_kt_components(b), p = polar_kt_printed(b);
  PolarReconciliation rep;
  rep.k11_diff = p.k11 - d.k11;
  rep.k12_diff = p.k12 - d.k12;
  rep.k22_diff = p.k22 - d.k22;
  rep.k11_equal = rep.k11_diff.is_zero();
  rep.k12_equal = rep.k12_diff.is_zero();
  rep.k22_equal = rep.k22_diff.is_zero();
  return rep;
}

namespace {

// polynomial in x, y -> TrigPoly via x = r cos, y = r sin
TrigPoly to_polar(const MultiPoly& p) {
  TrigPoly out;
  int ix = p.var_index("x"), iy = p.var_index("y");
  for (const auto& [e, c] : p.terms()) {
    int ex = ix < 0 ? 0 : e[ix], ey = iy < 0 ? 0 : e[iy];
    MultiPoly rest = MultiPoly::monomial(p.vars(), e, c);
    if (ix >= 0) rest = rest.mul_var_power("x", -ex);
    if (iy >= 0) rest = rest.mul_var_power("y", -ey);
    TrigPoly term = cos_t().pow(ex) * sin_t().pow(ey);
    out += term * (rest.trimmed() * rpow(ex + ey));
  }
  return out;
}

}  // namespace

PolarKT cartesian_to_polar(const KTParams& b) {
  KTComponents k = kt_components(b);
  TrigPoly K11 = to_polar(k.k11), K12 = to_polar(k.k12), K22 = to_polar(k.k22);
  TrigPoly c = cos_t(), s = sin_t();
  // J = d(r, theta)/d(x, y) = [[c, s], [-s/r, c/r]]
  PolarKT P;
  P.k11 = c * c * K11 + (c * s) * K12 * MultiPoly(2) + s * s * K22;
  P.k12 = (-(s * c) * K11 + (c * c - s * s) * K12 + s * c * K22) * rpow(-1);
  P.k22 = (s * s * K11 - (s * c) * K12 * MultiPoly(2) + c * c * K22) * rpow(-2);
  return P;
}

MultiPoly ttw_symbol(const std::optional<Rational>& v, const char* name) {
  return v ? MultiPoly(*v) : MultiPoly::var(name);
}

TrigPoly ttw_clearing_factor(const TTWParams& t) {
  TrigPoly S = TrigPoly::sin(kKTheta), C = TrigPoly::cos(kKTheta);
  TrigPoly W = S.pow(present(t.lambda2) ? 4 : 0) * C.pow(present(t.lambda1) ? 4 : 0);
  return t.k ? W.specialize_k(*t.k) : W;
}

ClearedCompat ttw_compat_cleared(const PolarKT& K, const TTWParams& t) {
  const bool a = present(t.lambda2), b = present(t.lambda1);
  const MultiPoly w2 = MultiPoly::var("w2"), l1 = MultiPoly::var("l1"), l2 = MultiPoly::var("l2");
  const MultiPoly k = MultiPoly::var("k");
  const TrigPoly S = TrigPoly::sin(kKTheta), C = TrigPoly::cos(kKTheta);
  const TrigPoly one(MultiPoly(Rational(1)));
  auto sc = [&](int i, int j) { return S.pow(i) * C.pow(j); };
  const int sa = a ? 4 : 0, cb = b ? 4 : 0;
  TrigPoly W = sc(sa, cb);

  // f = l1/C^2 + l2/S^2 and its theta derivatives, each times W
  TrigPoly F0, F1, F2;
  if (b) {
    F0 += sc(sa, cb - 2) * l1;
    F1 += sc(sa + 1, cb - 3) * (2 * k * l1);
    F2 += (one * MultiPoly(3) - C * C * MultiPoly(2)) * sc(sa, cb - 4) * (2 * k * k * l1);
  }
  if (a) {
    F0 += sc(sa - 2, cb) * l2;
    F1 -= sc(sa - 3, cb + 1) * (2 * k * l2);
    F2 += (one * MultiPoly(3) - S * S * MultiPoly(2)) * sc(sa - 4, cb) * (2 * k * k * l2);
  }

  // V = -w2 r^2 + f / r^2
  TrigPoly VrW = W * (-2 * w2 * R) + F0 * (-2 * rpow(-3));
  TrigPoly VthW = F1 * rpow(-2);
  TrigPoly dthVrW = F1 * (-2 * rpow(-3));
  TrigPoly dthVthW = F2 * rpow(-2);

  // omega_r = K^rr V_r + K^rt V_t, omega_t = r^2 (K^rt V_r + K^tt V_t), d omega = d_r omega_t - d_t omega_r
  TrigPoly omega_th_W = (K.k12 * VrW + K.k22 * VthW) * rpow(2);
  TrigPoly dr_omega_th = omega_th_W.d_coeff("r");
  TrigPoly dth_omega_r = K.k11.d_theta() * VrW + K.k11 * dthVrW + K.k12.d_theta() * VthW + K.k12 * dthVthW;
  TrigPoly P = apply_params(dr_omega_th - dth_omega_r, t);
  ClearedCompat out;
  if (!P.is_zero()) {
    out.r_power = -P.min_exp("r");
    P = P.mul_var_power("r", out.r_power);
  }
  out.poly = std::move(P);
  return out;
}

TrigPoly ttw_compat_from_components(const PolarKT& K, const TTWParams& t) { return ttw_compat_cleared(K, t).poly; }

TrigPoly ttw_compat_general(const SymParams& b, const TTWParams& t) {
  return ttw_compat_cleared(polar_kt_components(b), t).poly;
}

PolarKT cartesian_case_kt(const std::optional<Rational>& c2p, const std::optional<Rational>& s2p) {
  MultiPoly c = ttw_symbol(c2p, kC2Phi), s = ttw_symbol(s2p, kS2Phi);
  TrigPoly cos2 = TrigPoly::cos(k2Theta), sin2 = TrigPoly::sin(k2Theta);
  TrigPoly cos2d = cos2 * c + sin2 * s;  // cos 2(theta - phi)
  TrigPoly sin2d = sin2 * c - cos2 * s;  // sin 2(theta - phi)
  TrigPoly half(MultiPoly(Rational(1, 2)));
  PolarKT K;
  K.k11 = half + cos2d * MultiPoly(Rational(1, 2));
  K.k12 = sin2d * (Rational(-1, 2) * rpow(-1));
  K.k22 = (half - cos2d * MultiPoly(Rational(1, 2))) * rpow(-2);
  return K;
}

SymParams cartesian_case_params() {
  MultiPoly c = MultiPoly::var(kC2Phi), s = MultiPoly::var(kS2Phi);
  return {Rational(1, 2) * (1 + c), Rational(1, 2) * (1 - c), Rational(1, 2) * s, 0, 0, 0};
}

TrigPoly cartesian_case_compat(const TTWParams& t, const std::optional<Rational>& c2p,
                               const std::optional<Rational>& s2p) {
  return ttw_compat_from_components(cartesian_case_kt(c2p, s2p), t);
}

TrigPoly cartesian_case_printed(const TTWParams& t) {
  const MultiPoly k = MultiPoly::var("k"), l1 = MultiPoly::var("l1"), l2 = MultiPoly::var("l2");
  const MultiPoly c = MultiPoly::var(kC2Phi), s = MultiPoly::var(kS2Phi);
  const TrigPoly S = TrigPoly::sin(kKTheta), C = TrigPoly::cos(kKTheta);
  TrigPoly cos2 = TrigPoly::cos(k2Theta), sin2 = TrigPoly::sin(k2Theta);
  TrigPoly cos2d = cos2 * c + sin2 * s;
  TrigPoly sin2d = sin2 * c - cos2 * s;
  MultiPoly mid = 4 + 2 * k * k;
  TrigPoly p2 = S * C.pow(5) * cos2d * (6 * k) + S.pow(2) * C.pow(4) * sin2d * mid - C.pow(4) * sin2d * (3 * k * k);
  TrigPoly p1 = -(C * S.pow(5) * cos2d * (6 * k)) + C.pow(2) * S.pow(4) * sin2d * mid - S.pow(4) * sin2d * (3 * k * k);
  return apply_params(p2 * l2 + p1 * l1, t);
}

ProportionalityReport compare_proportional(const TrigPoly& computed, const TrigPoly& printed) {
  ProportionalityReport rep;
  if (printed.is_zero()) {
    rep.proportional = computed.is_zero();
    rep.factor = rep.proportional ? 1 : 0;
    rep.difference = computed;
    return rep;
  }
  const auto& [key, pc] = *printed.terms().begin();
  auto it = computed.terms().find(key);
  if (it == computed.terms().end()) {
    rep.difference = computed;
    return rep;
  }
  auto q = rational_ratio(it->second, pc);
  if (!q) {
    rep.difference = computed;
    return rep;
  }
  rep.factor = *q;
  rep.difference = computed - printed * MultiPoly(rep.factor);
  rep.proportional = rep.difference.is_zero();
  return rep;
}

NecessaryCondition derive_necessary_condition() {
  SymParams b = symbolic_params("b");
  b[5] = MultiPoly();
  TrigPoly P = ttw_compat_general(b, {});
  NecessaryCondition nc;
  for (const auto& [key, c] : P.terms()) {
    if (!(key.arg == kTheta)) continue;
    (key.kind == TrigKind::Cos ? nc.e1 : nc.e2) = c;
  }
  const MultiPoly b4 = MultiPoly::var("b4"), b5 = MultiPoly::var("b5");
  nc.g1 = nc.e1.coeff_of("b4", 1);
  nc.g2 = -nc.e1.coeff_of("b5", 1);
  nc.combination = b4 * nc.e1 - b5 * nc.e2;
  bool shape = (nc.e1 - (b4 * nc.g1 - b5 * nc.g2)).is_zero() && (nc.e2 + (b4 * nc.g2 + b5 * nc.g1)).is_zero();
  bool free = !nc.g1.depends_on("b4") && !nc.g1.depends_on("b5");
  bool comb = (nc.combination - (b4 * b4 + b5 * b5) * nc.g1).is_zero();
  nc.verified = shape && free && comb && !nc.g1.is_zero();
  if (nc.verified) {
    nc.constraint = {"b4 = 0", "b5 = 0"};
    nc.corollary = "a second separable web besides polar can only be Cartesian";
  }
  return nc;
}

std::vector<ReducedEquation> reduced_system() {
  TrigPoly P = cartesian_case_compat({});
  std::vector<ReducedEquation> out;
  for (const auto& [key, c] : P.terms()) {
    for (const auto& [e, part] : c.split({kC2Phi, kS2Phi, "r", "w2"})) {
      if (part.is_zero()) continue;
      if (e[2] != 0 || e[3] != 0) throw Error(ErrorCode::Internal, "reduced_system: r or w2 survived clearing");
      out.push_back({key.kind, key.arg, phi_label(e), part.trimmed()});
    }
  }
  return out;
}

std::vector<std::pair<std::string, MultiPoly>> listed_reduced_system() {
  const MultiPoly k = MultiPoly::var("k"), l1 = MultiPoly::var("l1"), l2 = MultiPoly::var("l2");
  const MultiPoly m = l1 - l2, p = l1 + l2;
  std::vector<MultiPoly> polys = {
      (k - 2) * (k - 1) * m,          (23 * k * k - 15 * k - 2) * m, (23 * k * k + 15 * k - 2) * m,
      (1 + k) * (2 + k) * m,          (k - 1) * (2 * k - 1) * p,     (1 + k) * (1 + 2 * k) * p,
      (2 * k - 1) * (2 * k + 1) * p,
  };
  std::vector<std::pair<std::string, MultiPoly>> out;
  for (const char* sym : {"s2p", "c2p"})
    for (const auto& q : polys) out.emplace_back(sym, q);
  return out;
}

ReducedMatch match_reduced_system(const std::vector<ReducedEquation>& sys) {
  auto listed = listed_reduced_system();
  ReducedMatch m;
  m.computed = sys.size();
  m.listed = listed.size();
  std::vector<bool> used(listed.size(), false);
  for (const auto& eq : sys) {
    bool found = false;
    for (size_t i = 0; i < listed.size() && !found; ++i) {
      if (used[i] || listed[i].first != eq.phi_symbol) continue;
      auto q = rational_ratio(eq.poly, listed[i].second);
      if (q && sgn(*q) != 0) {
        used[i] = true;
        found = true;
      }
    }
    if (found)
      ++m.matched;
    else
      m.unmatched_computed.push_back("(" + eq.poly.str() + ")*" + eq.phi_symbol);
  }
  for (size_t i = 0; i < listed.size(); ++i)
    if (!used[i]) m.unmatched_listed.push_back("(" + listed[i].second.str() + ")*" + listed[i].first);
  return m;
}

namespace {

// rows (coefficient of l1, coefficient of l2) of lambda-linear forms
RMat lambda_rows(const std::vector<MultiPoly>& forms) {
  RMat rows;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    RVec row{Rational(0), Rational(0)};
    for (const auto& [e, c] : f.split({"l1", "l2"})) {
      if (!c.is_constant()) throw Error(ErrorCode::Internal, "verdict: coefficient not rational after splitting");
      if (e[0] == 1 && e[1] == 0)
        row[0] += c.constant_term();
      else if (e[0] == 0 && e[1] == 1)
        row[1] += c.constant_term();
      else
        throw Error(ErrorCode::Internal, "verdict: equation not linear homogeneous in lambda");
    }
    rows.push_back(row);
  }
  return rows;
}

// single c2p/s2p monomial times a lambda form
void check_shape(const MultiPoly& eq) {
  auto parts = eq.split({kC2Phi, kS2Phi});
  size_t nonzero = 0;
  for (const auto& [e, c] : parts)
    if (!c.is_zero()) ++nonzero;
  if (nonzero > 1) throw Error(ErrorCode::Internal, "verdict: equation is not a trig monomial times a lambda form");
}

std::vector<RVec> branch_solutions(const std::vector<MultiPoly>& eqs, const Rational& c, const Rational& s) {
  std::vector<MultiPoly> forms;
  for (const auto& e : eqs) forms.push_back(e.subst(kC2Phi, c).subst(kS2Phi, s));
  return nullspace(lambda_rows(forms), 2);
}

std::string lambda_zero_label(const std::vector<RVec>& basis) {
  const RVec& v = basis.front();
  if (sgn(v[0]) == 0) return "lambda1_zero_with_phi_grid";
  if (sgn(v[1]) == 0) return "lambda2_zero_with_phi_grid";
  if (v[0] == v[1]) return "lambda1_equal_lambda2_with_phi_grid";
  if (v[0] == -v[1]) return "lambda1_opposite_lambda2_with_phi_grid";
  return "lambda_ratio_with_phi_grid";
}

void add_lambda_witness(CaseOutcome& o, const std::vector<RVec>& basis) {
  if (o.constraint == "lambda1_zero_with_phi_grid") o.witness.push_back({"l1", "0"});
  else if (o.constraint == "lambda2_zero_with_phi_grid") o.witness.push_back({"l2", "0"});
  else o.witness.push_back({"l1:l2", to_string(basis.front()[0]) + ":" + to_string(basis.front()[1])});
}

}  // namespace

std::vector<CaseOutcome> ttw_case(const std::optional<Rational>& k) {
  TTWParams t;
  t.k = k;
  TrigPoly P = cartesian_case_compat(t);
  std::vector<std::string> generic = {"r", "w2"};
  if (!k) generic.push_back("k");
  std::vector<MultiPoly> eqs;
  for (const auto& c : coefficient_system(P))
    for (const auto& [e, part] : c.split(generic))
      if (!part.is_zero()) {
        check_shape(part);
        eqs.push_back(part);
      }

  std::vector<CaseOutcome> out;
  // generic phi: every monomial part vanishes on its own
  std::vector<MultiPoly> split_eqs;
  for (const auto& e : eqs)
    for (const auto& [ex, part] : e.split({kC2Phi, kS2Phi})) split_eqs.push_back(part);
  auto gen = nullspace(lambda_rows(split_eqs), 2);
  if (!gen.empty()) {
    out.push_back({k, gen.size() == 2 ? "no_constraint" : lambda_zero_label(gen) + "_any_phi", {}});
    return out;
  }

  auto A = branch_solutions(eqs, 1, 0), A2 = branch_solutions(eqs, -1, 0);
  auto B = branch_solutions(eqs, 0, 1), B2 = branch_solutions(eqs, 0, -1);
  if (A.size() != A2.size() || B.size() != B2.size())
    throw Error(ErrorCode::Internal, "verdict: phi grid branches disagree under phi -> phi + pi/2");
  if (A.size() == 2) out.push_back({k, "phi_zero", {{"c2p", "1"}, {"s2p", "0"}, {"phi", "n*pi/2"}}});
  if (A.size() == 1) {
    std::string lab = lambda_zero_label(A);
    CaseOutcome o{k, lab, {{"c2p", "+-1"}, {"s2p", "0"}, {"phi", "n*pi/2"}}};
    add_lambda_witness(o, A);
    out.push_back(o);
  }
  if (B.size() == 2) out.push_back({k, "phi_quarter", {{"c2p", "0"}, {"s2p", "+-1"}, {"phi", "(2n+1)*pi/4"}}});
  if (B.size() == 1) {
    std::string lab = lambda_zero_label(B);
    CaseOutcome o{k, lab, {{"c2p", "0"}, {"s2p", "+-1"}, {"phi", "(2n+1)*pi/4"}}};
    add_lambda_witness(o, B);
    out.push_back(o);
  }
  if (out.empty()) out.push_back({k, k ? "all_lambda_zero" : "no_solution", {{"l1", "0"}, {"l2", "0"}}});
  return out;
}

std::vector<Rational> verdict_k_values() {
  return collision_k_values(cartesian_case_compat({}).args(), true);
}

std::vector<CaseOutcome> multiseparability_verdict() {
  auto ks = verdict_k_values();
  std::vector<std::future<std::vector<CaseOutcome>>> jobs;
  for (const auto& k : ks) jobs.push_back(std::async(std::launch::async, [k]() { return ttw_case(k); }));
  std::vector<CaseOutcome> out;
  for (auto& j : jobs)
    for (auto& o : j.get()) out.push_back(std::move(o));
  for (auto& o : ttw_case(std::nullopt)) out.push_back(std::move(o));
  return out;
}

KListComparison compare_k_lists(const std::vector<Rational>& computed, const std::vector<Rational>& listed) {
  std::set<Rational> c(computed.begin(), computed.end()), l(listed.begin(), listed.end());
  KListComparison r;
  for (const auto& k : c) (l.count(k) ? r.matched : r.extra).push_back(k);
  for (const auto& k : l)
    if (!c.count(k)) r.missing.push_back(k);
  return r;
}

namespace {
std::vector<Rational> plus_minus(std::initializer_list<Rational> xs) {
  std::set<Rational> s;
  for (const auto& x : xs) {
    s.insert(x);
    s.insert(Rational(-x));
  }
  return {s.begin(), s.end()};
}
}  // namespace

std::vector<Rational> listed_k_values_N() {
  return plus_minus({1, 2, Rational(2, 3), Rational(1, 2), Rational(2, 5)});
}

std::vector<Rational> listed_k_values_M() {
  return plus_minus({2, Rational(3, 2), 1, Rational(1, 2), Rational(1, 4), Rational(1, 6), Rational(1, 8),
                     Rational(1, 10), Rational(1, 12), Rational(1, 14), Rational(1, 16), Rational(3, 4),
                     Rational(2, 3), Rational(3, 8), Rational(1, 3), Rational(3, 10), Rational(2, 7),
                     Rational(3, 14), Rational(1, 5), Rational(3, 16), Rational(2, 5), Rational(1, 7)});
}

}  // namespace webclass
