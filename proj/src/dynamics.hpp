#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "compatibility.hpp"

namespace webclass {

struct Trajectory {
  std::vector<double> times;
  std::vector<PhasePoint> states;
};

/** H = (px^2 + py^2)/2 + V with V a Laurent polynomial in x, y. */
class HamiltonianSpec {
public:
  /** Symbols other than x, y must be given values. */
  explicit HamiltonianSpec(const LaurentPotential& v, const std::map<std::string, double>& symbols = {});

  double potential(double x, double y) const;
  void gradient(double x, double y, double& vx, double& vy) const;
  double energy(const PhasePoint& p) const;
  bool pole_in_x() const { return pole_x_; }
  bool pole_in_y() const { return pole_y_; }
  const LaurentPotential& v() const { return v_; }
  const std::map<std::string, double>& symbols() const { return symbols_; }

private:
  struct Term {
    double c;
    int ex, ey;
  };
  static std::vector<Term> compile(const MultiPoly& p, const std::map<std::string, double>& symbols);
  static double eval(const std::vector<Term>& t, double x, double y);

  LaurentPotential v_;
  std::map<std::string, double> symbols_;
  std::vector<Term> v_terms_, vx_terms_, vy_terms_;
  bool pole_x_ = false, pole_y_ = false;
};

class PoleEncounter : public Error {
public:
  PoleEncounter(const std::string& msg, Trajectory partial)
      : Error(ErrorCode::PoleEncounter, msg), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

private:
  Trajectory partial_;
};

inline constexpr double kPoleRadius = 1e-8;

/** Classical RK4 with step T / round(T / dt). PoleEncounter inside kPoleRadius of a singular axis or on crossing one. */
Trajectory flow_rk4(const HamiltonianSpec& h, const PhasePoint& p0, double dt, double T);

/** Independent runs over initial conditions, in parallel. */
std::vector<Trajectory> flow_batch(const HamiltonianSpec& h, const std::vector<PhasePoint>& p0s, double dt, double T);

using PhaseFunction = std::function<double(const PhasePoint&)>;

/** max_t |f(t) - f(0)| / max(1, |f(0)|). */
double drift(const Trajectory& traj, const PhaseFunction& f);
PhaseFunction phase_fn(const MultiPoly& f, const std::map<std::string, double>& symbols = {});

void write_csv(const Trajectory& traj, std::ostream& os);

struct GradientCheck {
  size_t points = 0;
  double max_rel_error = 0.0;
};
/** Symbolic gradient against central differences (step 1e-6) at random points with |x|, |y| in [0.5, 2]. */
GradientCheck gradient_check(const HamiltonianSpec& h, size_t n_points, uint64_t seed);

}  // namespace webclass
