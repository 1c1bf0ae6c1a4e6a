#include "compatibility.hpp"

#include <Eigen/SVD>
#include <cctype>
#include <sstream>

namespace webclass {

namespace {

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

MultiPoly clear_xy(const MultiPoly& p) {
  if (p.is_zero()) return p;
  MultiPoly out = p;
  int mx = p.min_exp("x"), my = p.min_exp("y");
  if (mx < 0) out = out.mul_var_power("x", -mx);
  if (my < 0) out = out.mul_var_power("y", -my);
  return out;
}

MultiPoly parse_laurent_term(const std::string& term) {
  if (term.empty()) throw Error(ErrorCode::Parse, "empty term in potential");
  std::string t = term;
  Rational sgn_mult = 1;
  if (t[0] == '-' && t.size() > 1 && !std::isdigit(static_cast<unsigned char>(t[1]))) {
    sgn_mult = -1;
    t = t.substr(1);
  }
  MultiPoly out(sgn_mult);
  for (const auto& f : split_list(t, '*')) {
    if (f.empty()) throw Error(ErrorCode::Parse, "malformed term '" + term + "'");
    auto caret = f.find('^');
    std::string base = f.substr(0, caret);
    if (base == "x" || base == "y" || base == "w2" || base == "alpha" || base == "beta") {
      int e = 1;
      if (caret != std::string::npos) {
        try {
          size_t used = 0;
          e = std::stoi(f.substr(caret + 1), &used);
          if (used != f.size() - caret - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw Error(ErrorCode::Parse, "bad exponent in '" + f + "'");
        }
      }
      if ((base == "w2" || base == "alpha" || base == "beta") && e != 1)
        throw Error(ErrorCode::Parse, "couplings enter linearly: '" + f + "'");
      out = out.mul_var_power(base, e);
    } else {
      out *= parse_rational(f);
    }
  }
  return out;
}

}  // namespace

LaurentPotential sw_potential(const std::optional<Rational>& w2, const std::optional<Rational>& alpha,
                              const std::optional<Rational>& beta) {
  MultiPoly x = MultiPoly::var("x"), y = MultiPoly::var("y");
  MultiPoly W = w2 ? MultiPoly(*w2) : MultiPoly::var("w2");
  MultiPoly A = alpha ? MultiPoly(*alpha) : MultiPoly::var("alpha");
  MultiPoly B = beta ? MultiPoly(*beta) : MultiPoly::var("beta");
  MultiPoly v = -W * (x * x + y * y) + A * x.mul_var_power("x", -3) + B * y.mul_var_power("y", -3);
  return v.with_vars(union_vars(MultiPoly({"x", "y"}), v));
}

LaurentPotential parse_potential(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::Parse, "potential needs a 'sw:' or 'laurent:' prefix");
  std::string kind = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  if (kind == "sw") {
    std::optional<Rational> w2, alpha, beta;
    if (!body.empty())
      for (const auto& kv : split_list(body, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::Parse, "expected key=value in '" + kv + "'");
        std::string k = kv.substr(0, eq);
        Rational val = parse_rational(kv.substr(eq + 1));
        if (k == "omega2" || k == "w2")
          w2 = val;
        else if (k == "alpha")
          alpha = val;
        else if (k == "beta")
          beta = val;
        else
          throw Error(ErrorCode::Parse, "unknown SW coupling '" + k + "'");
      }
    return sw_potential(w2, alpha, beta);
  }
  if (kind == "laurent") {
    MultiPoly v({"x", "y"});
    if (!body.empty())
      for (const auto& term : split_list(body, ',')) v += parse_laurent_term(term);
    return v;
  }
  throw Error(ErrorCode::Parse, "unknown potential kind '" + kind + "'");
}

MultiPoly bd_expression(const SymParams& b, const LaurentPotential& v) {
  KTComponents k = kt_components(b);
  MultiPoly vx = v.diff("x"), vy = v.diff("y");
  MultiPoly wx = k.k11 * vx + k.k12 * vy;
  MultiPoly wy = k.k12 * vx + k.k22 * vy;
  return clear_xy(wy.diff("x") - wx.diff("y"));
}

MultiPoly bd_expression(const KTParams& b, const LaurentPotential& v) { return bd_expression(to_sym(b), v); }

bool is_compatible(const KTParams& b, const LaurentPotential& v) { return bd_expression(b, v).is_zero(); }

std::array<MultiPoly, 2> k_dv(const KTParams& b, const LaurentPotential& v) {
  KTComponents k = kt_components(b);
  MultiPoly vx = v.diff("x"), vy = v.diff("y");
  return {k.k11 * vx + k.k12 * vy, k.k12 * vx + k.k22 * vy};
}

LaurentPotential integrate_u(const KTParams& b, const LaurentPotential& v) {
  if (!is_compatible(b, v)) throw Error(ErrorCode::Incompatible, "integrate_u: K dV is not closed");
  auto [wx, wy] = k_dv(b, v);
  MultiPoly u = wx.integrate("x");
  MultiPoly rest = wy - u.diff("y");
  if (rest.depends_on("x")) throw Error(ErrorCode::Internal, "integrate_u: y-residual depends on x");
  u += rest.integrate("y");
  if (!(u.diff("x") == wx) || !(u.diff("y") == wy))
    throw Error(ErrorCode::Internal, "integrate_u: reconstruction check failed");
  return u.with_vars(union_vars(MultiPoly({"x", "y"}), u));
}

FirstIntegral make_first_integral(const KTParams& b, const LaurentPotential& v) {
  FirstIntegral f{b, integrate_u(b, v)};
  auto [wx, wy] = k_dv(b, v);
  if (!(f.u.diff("x") == wx) || !(f.u.diff("y") == wy))
    throw Error(ErrorCode::Internal, "first integral: dU != K dV");
  return f;
}

MultiPoly hamiltonian(const LaurentPotential& v) {
  MultiPoly px = MultiPoly::var("px"), py = MultiPoly::var("py");
  return Rational(1, 2) * (px * px + py * py) + v;
}

MultiPoly phase_function(const FirstIntegral& f) {
  KTComponents k = kt_components(f.kt);
  MultiPoly px = MultiPoly::var("px"), py = MultiPoly::var("py");
  return Rational(1, 2) * (k.k11 * px * px + 2 * k.k12 * px * py + k.k22 * py * py) + f.u;
}

MultiPoly poisson_bracket(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly out;
  for (auto [q, p] : {std::pair<const char*, const char*>{"x", "px"}, {"y", "py"}})
    out += f.diff(p) * g.diff(q) - g.diff(p) * f.diff(q);
  return out;
}

double eval_phase(const MultiPoly& f, const PhasePoint& pt, const std::map<std::string, double>& symbols) {
  std::map<std::string, double> vals = symbols;
  vals["x"] = pt.x;
  vals["y"] = pt.y;
  vals["px"] = pt.px;
  vals["py"] = pt.py;
  return f.eval_double(vals);
}

bool functional_independence(const MultiPoly& h, const MultiPoly& f1, const MultiPoly& f2, const PhasePoint& pt,
                             const std::map<std::string, double>& symbols) {
  for (const MultiPoly* f : {&h, &f1, &f2}) {
    if ((pt.x == 0.0 && f->min_exp("x") < 0) || (pt.y == 0.0 && f->min_exp("y") < 0))
      throw Error(ErrorCode::Precondition, "functional_independence: point lies on a coordinate pole");
  }
  std::vector<std::vector<double>> rows;
  for (const MultiPoly* f : {&h, &f1, &f2}) {
    std::vector<double> row;
    for (const char* v : {"x", "y", "px", "py"}) row.push_back(eval_phase(f->diff(v), pt, symbols));
    rows.push_back(row);
  }
  return numeric_rank(rows, 4, 1e-9).rank == 3;
}

PotentialFamily sw_family(const std::vector<KTParams>& tensors) {
  const std::vector<std::string> sym = {"w2", "alpha", "beta"};
  LaurentPotential v = sw_potential();
  RMat rows;
  for (const auto& b : tensors) {
    for (const auto& [key, coeff] : bd_expression(b, v).split({"x", "y"})) {
      RVec row(3, Rational(0));
      for (const auto& [e, c] : coeff.split(sym)) {
        if (!c.is_constant()) throw Error(ErrorCode::Internal, "sw_family: nonlinear coefficient");
        int idx = -1;
        for (size_t i = 0; i < 3; ++i)
          if (e[i] == 1) idx = static_cast<int>(i);
        if (idx < 0) throw Error(ErrorCode::Internal, "sw_family: coupling-free term in bd expression");
        row[idx] += c.constant_term();
      }
      rows.push_back(row);
    }
  }
  PotentialFamily fam;
  fam.basis = nullspace(rows, 3);
  auto is_unit = [&](size_t i) {
    const RVec& v0 = fam.basis[0];
    for (size_t j = 0; j < 3; ++j)
      if ((j == i) != (sgn(v0[j]) != 0)) return false;
    return true;
  };
  if (fam.basis.empty())
    fam.label = "constants only";
  else if (fam.basis.size() == 3)
    fam.label = "full SW";
  else if (fam.basis.size() == 1 && is_unit(1))
    fam.label = "alpha/x^2";
  else if (fam.basis.size() == 1 && is_unit(2))
    fam.label = "beta/y^2";
  else
    fam.label = "other";
  return fam;
}

}  // namespace webclass
