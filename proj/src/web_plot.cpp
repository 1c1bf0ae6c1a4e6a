#include "web_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace webclass {

namespace {

using Pt = std::array<double, 2>;
using Curve = std::vector<Pt>;

constexpr int kSamples = 200;

Curve sample(const std::function<Pt(double)>& f, double t0, double t1) {
  Curve c;
  for (int i = 0; i <= kSamples; ++i) c.push_back(f(t0 + (t1 - t0) * i / kSamples));
  return c;
}

void families(const WebPlotSpec& s, std::vector<Curve>& f1, std::vector<Curve>& f2) {
  switch (s.kind) {
    case WebKind::Cartesian:
      for (int i = -5; i <= 5; ++i) {
        f1.push_back(sample([i](double t) { return Pt{double(i), t}; }, -6, 6));
        f2.push_back(sample([i](double t) { return Pt{t, double(i)}; }, -6, 6));
      }
      break;
    case WebKind::Polar: {
      double a = s.a.get_d(), b = s.b.get_d();
      for (int i = 1; i <= 10; ++i) {
        double rho = 0.5 * i;
        f1.push_back(sample([=](double t) { return Pt{a + rho * std::cos(t), b + rho * std::sin(t)}; }, 0, 2 * M_PI));
      }
      for (int i = 0; i < 16; ++i) {
        double phi = 2 * M_PI * i / 16;
        f2.push_back(sample([=](double t) { return Pt{a + t * std::cos(phi), b + t * std::sin(phi)}; }, 0, 6));
      }
      break;
    }
    case WebKind::Parabolic:
      for (int i = 1; i <= 12; ++i) {
        double u = 0.25 * i;
        f1.push_back(sample([u](double v) { return Pt{0.5 * (u * u - v * v), u * v}; }, -3, 3));
        double v = 0.25 * i;
        f2.push_back(sample([v](double uu) { return Pt{0.5 * (uu * uu - v * v), uu * v}; }, -3, 3));
      }
      break;
    case WebKind::EllipticHyperbolic: {
      double c = std::sqrt(s.c2.get_d());
      for (int i = 1; i <= 10; ++i) {
        double u = 0.2 * i;
        f1.push_back(sample([=](double v) { return Pt{c * std::cosh(u) * std::cos(v), c * std::sinh(u) * std::sin(v)}; },
                            0, 2 * M_PI));
      }
      for (int i = 0; i < 16; ++i) {
        double v = 2 * M_PI * i / 16;
        f2.push_back(sample([=](double u) { return Pt{c * std::cosh(u) * std::cos(v), c * std::sinh(u) * std::sin(v)}; },
                            0, 2));
      }
      break;
    }
  }
}

// canonical-frame markers
std::vector<SingularPoint> canonical_markers(const WebPlotSpec& s) {
  switch (s.kind) {
    case WebKind::Polar:
      return {{Scalar(s.a), Scalar(s.b)}};
    case WebKind::Parabolic:
      return {{Scalar(Rational(0)), Scalar(Rational(0))}};
    case WebKind::EllipticHyperbolic: {
      Scalar c = sqrt_scalar(Scalar(s.c2));
      return {{c, Scalar(Rational(0))}, {-c, Scalar(Rational(0))}};
    }
    case WebKind::Cartesian:
      break;
  }
  return {};
}

// q -> L^T (q - p), the preimage of the canonical web under the pullback
Pt move(const SE2Element& g, const Pt& q) {
  double c = g.rot.c.get_d(), s = g.rot.s.get_d();
  double x = q[0] - g.p1.get_d(), y = q[1] - g.p2.get_d();
  return {c * x - s * y, s * x + c * y};
}

SingularPoint move(const SE2Element& g, const SingularPoint& q) {
  Scalar c(g.rot.c), s(g.rot.s);
  Scalar x = q.x - Scalar(g.p1), y = q.y - Scalar(g.p2);
  return {c * x - s * y, s * x + c * y};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  return s == "-0.0000" ? "0.0000" : s;
}

bool same_points(std::vector<SingularPoint> a, std::vector<SingularPoint> b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool found = false;
    for (size_t i = 0; i < b.size() && !found; ++i)
      if (!used[i] && scalar_eq(p.x, b[i].x) && scalar_eq(p.y, b[i].y)) found = used[i] = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

WebPlot plot_web(const WebPlotSpec& spec) {
  if (spec.kind == WebKind::EllipticHyperbolic && sgn(spec.c2) <= 0)
    throw Error(ErrorCode::Precondition, "plot_web: elliptic-hyperbolic web needs c2 > 0");
  WebPlot out;
  KTParams canon = canonical_kt(spec.kind, spec.a, spec.b, spec.c2);
  out.tensor = spec.g ? act(*spec.g, canon) : canon;

  std::vector<Curve> f1, f2;
  families(spec, f1, f2);
  out.markers = canonical_markers(spec);
  if (spec.g) {
    for (auto* fam : {&f1, &f2})
      for (auto& c : *fam)
        for (auto& p : c) p = move(*spec.g, p);
    for (auto& m : out.markers) m = move(*spec.g, m);
  }

  if (sgn(out.tensor[5]) != 0) {
    out.markers_checked = true;
    out.markers_match = same_points(out.markers, singular_points(out.tensor));
  }

  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const auto* fam : {&f1, &f2})
    for (const auto& c : *fam)
      for (const auto& p : c) {
        lo_x = std::min(lo_x, p[0]);
        hi_x = std::max(hi_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_y = std::max(hi_y, p[1]);
      }
  const double pad = 0.5;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(lo_x - pad) << " " << fmt(-hi_y - pad) << " "
     << fmt(hi_x - lo_x + 2 * pad) << " " << fmt(hi_y - lo_y + 2 * pad) << "\" data-web=\"" << web_kind_name(spec.kind)
     << "\">\n";
  auto emit = [&](const std::vector<Curve>& fam, const char* cls, const char* color) {
    os << "  <g class=\"" << cls << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"0.02\">\n";
    for (const auto& c : fam) {
      os << "    <polyline points=\"";
      for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << fmt(c[i][0]) << "," << fmt(-c[i][1]);
      os << "\"/>\n";
    }
    os << "  </g>\n";
  };
  emit(f1, "family1", "#1f77b4");
  emit(f2, "family2", "#d62728");
  for (const auto& m : out.markers)
    os << "  <circle class=\"marker\" cx=\"" << fmt(m.x.d()) << "\" cy=\"" << fmt(-m.y.d()) << "\" r=\"0.08\" data-x=\""
       << m.x.str() << "\" data-y=\"" << m.y.str() << "\"/>\n";
  os << "</svg>\n";
  out.svg = os.str();
  return out;
}

}  // namespace webclass
