#include "dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>

namespace webclass {

HamiltonianSpec::HamiltonianSpec(const LaurentPotential& v, const std::map<std::string, double>& symbols)
    : v_(v), symbols_(symbols) {
  v_terms_ = compile(v, symbols);
  vx_terms_ = compile(v.diff("x"), symbols);
  vy_terms_ = compile(v.diff("y"), symbols);
  pole_x_ = v.min_exp("x") < 0;
  pole_y_ = v.min_exp("y") < 0;
}

std::vector<HamiltonianSpec::Term> HamiltonianSpec::compile(const MultiPoly& p,
                                                            const std::map<std::string, double>& symbols) {
  std::vector<Term> out;
  int ix = p.var_index("x"), iy = p.var_index("y");
  for (const auto& [e, c] : p.terms()) {
    double coeff = to_double(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == ix || static_cast<int>(i) == iy || e[i] == 0) continue;
      auto it = symbols.find(p.vars()[i]);
      if (it == symbols.end())
        throw Error(ErrorCode::Precondition, "potential symbol '" + p.vars()[i] + "' has no value");
      coeff *= std::pow(it->second, e[i]);
    }
    out.push_back({coeff, ix < 0 ? 0 : e[ix], iy < 0 ? 0 : e[iy]});
  }
  return out;
}

double HamiltonianSpec::eval(const std::vector<Term>& t, double x, double y) {
  double s = 0.0;
  for (const auto& term : t) s += term.c * std::pow(x, term.ex) * std::pow(y, term.ey);
  return s;
}

double HamiltonianSpec::potential(double x, double y) const { return eval(v_terms_, x, y); }

void HamiltonianSpec::gradient(double x, double y, double& vx, double& vy) const {
  vx = eval(vx_terms_, x, y);
  vy = eval(vy_terms_, x, y);
}

double HamiltonianSpec::energy(const PhasePoint& p) const {
  return 0.5 * (p.px * p.px + p.py * p.py) + potential(p.x, p.y);
}

namespace {

PhasePoint rhs(const HamiltonianSpec& h, const PhasePoint& p) {
  double vx, vy;
  h.gradient(p.x, p.y, vx, vy);
  return {p.px, p.py, -vx, -vy};
}

PhasePoint axpy(const PhasePoint& p, double a, const PhasePoint& d) {
  return {p.x + a * d.x, p.y + a * d.y, p.px + a * d.px, p.py + a * d.py};
}

bool near_pole(const HamiltonianSpec& h, const PhasePoint& p) {
  return (h.pole_in_x() && std::fabs(p.x) < kPoleRadius) || (h.pole_in_y() && std::fabs(p.y) < kPoleRadius);
}

// a step can jump over a singular axis without landing inside the pole radius
bool crossed_pole(const HamiltonianSpec& h, const PhasePoint& a, const PhasePoint& b) {
  return (h.pole_in_x() && std::signbit(a.x) != std::signbit(b.x)) ||
         (h.pole_in_y() && std::signbit(a.y) != std::signbit(b.y));
}

bool finite(const PhasePoint& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.px) && std::isfinite(p.py);
}

}  // namespace

Trajectory flow_rk4(const HamiltonianSpec& h, const PhasePoint& p0, double dt, double T) {
  if (!(dt > 0.0)) throw Error(ErrorCode::Precondition, "flow_rk4: dt must be positive");
  if (!(T >= dt)) throw Error(ErrorCode::Precondition, "flow_rk4: T must be at least dt");
  if (near_pole(h, p0)) throw Error(ErrorCode::Precondition, "flow_rk4: initial point lies on a pole");
  const long n = std::max(1L, std::lround(T / dt));
  const double step = T / static_cast<double>(n);
  Trajectory tr;
  tr.times.reserve(n + 1);
  tr.states.reserve(n + 1);
  tr.times.push_back(0.0);
  tr.states.push_back(p0);
  PhasePoint p = p0;
  for (long i = 1; i <= n; ++i) {
    const PhasePoint prev = p;
    PhasePoint k1 = rhs(h, p);
    PhasePoint k2 = rhs(h, axpy(p, 0.5 * step, k1));
    PhasePoint k3 = rhs(h, axpy(p, 0.5 * step, k2));
    PhasePoint k4 = rhs(h, axpy(p, step, k3));
    p.x += step / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    p.y += step / 6.0 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
    p.px += step / 6.0 * (k1.px + 2 * k2.px + 2 * k3.px + k4.px);
    p.py += step / 6.0 * (k1.py + 2 * k2.py + 2 * k3.py + k4.py);
    if (near_pole(h, p) || crossed_pole(h, prev, p) || !finite(p))
      throw PoleEncounter("trajectory entered a pole neighbourhood at t = " + std::to_string(i * step), tr);
    tr.times.push_back(i * step);
    tr.states.push_back(p);
  }
  return tr;
}

std::vector<Trajectory> flow_batch(const HamiltonianSpec& h, const std::vector<PhasePoint>& p0s, double dt,
                                   double T) {
  std::vector<std::future<Trajectory>> jobs;
  for (const auto& p : p0s) jobs.push_back(std::async(std::launch::async, [&h, p, dt, T]() { return flow_rk4(h, p, dt, T); }));
  std::vector<Trajectory> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

double drift(const Trajectory& traj, const PhaseFunction& f) {
  if (traj.states.empty()) return 0.0;
  const double f0 = f(traj.states.front());
  const double scale = std::max(1.0, std::fabs(f0));
  double worst = 0.0;
  for (const auto& s : traj.states) worst = std::max(worst, std::fabs(f(s) - f0) / scale);
  return worst;
}

PhaseFunction phase_fn(const MultiPoly& f, const std::map<std::string, double>& symbols) {
  return [f, symbols](const PhasePoint& p) { return eval_phase(f, p, symbols); };
}

void write_csv(const Trajectory& traj, std::ostream& os) {
  os << "t,x,y,px,py\n";
  char buf[160];
  for (size_t i = 0; i < traj.states.size(); ++i) {
    const auto& s = traj.states[i];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", traj.times[i], s.x, s.y, s.px, s.py);
    os << buf;
  }
}

GradientCheck gradient_check(const HamiltonianSpec& h, size_t n_points, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::bernoulli_distribution neg(0.5);
  const double step = 1e-6;
  GradientCheck r;
  r.points = n_points;
  for (size_t i = 0; i < n_points; ++i) {
    double x = mag(rng) * (neg(rng) ? -1 : 1), y = mag(rng) * (neg(rng) ? -1 : 1);
    double vx, vy;
    h.gradient(x, y, vx, vy);
    double fx = (h.potential(x + step, y) - h.potential(x - step, y)) / (2 * step);
    double fy = (h.potential(x, y + step) - h.potential(x, y - step)) / (2 * step);
    r.max_rel_error = std::max({r.max_rel_error, std::fabs(vx - fx) / std::max(1.0, std::fabs(vx)),
                                std::fabs(vy - fy) / std::max(1.0, std::fabs(vy))});
  }
  return r;
}

}  // namespace webclass
