#include "webclass/webclass.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "dynamics.hpp"
#include "json_io.hpp"
#include "web_plot.hpp"

using namespace webclass;

struct wc_kt {
  KTParams b;
};

struct wc_potential {
  LaurentPotential v;
};

namespace {

thread_local std::string g_last_error;

struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
int guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return WC_OK;
  } catch (const NullArgument& e) {
    g_last_error = e.what();
    return WC_ERR_INVALID_ARGUMENT;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw NullArgument(std::string(what) + " must not be NULL");
}

char* dup_json(const Json& j) {
  std::string s = j.dump();
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Rational opt_rational(const char* s, const Rational& dflt = 0) { return s ? parse_rational(s) : dflt; }

WebKind web_from_name(const std::string& s) {
  if (s == "cartesian") return WebKind::Cartesian;
  if (s == "polar") return WebKind::Polar;
  if (s == "parabolic") return WebKind::Parabolic;
  if (s == "eh" || s == "elliptic-hyperbolic") return WebKind::EllipticHyperbolic;
  return parse_web_kind(s);
}

const std::vector<Rational>* listed_for(const std::string& name) {
  static const std::vector<Rational> n = listed_k_values_N(), m = listed_k_values_M();
  if (name.rfind("N", 0) == 0) return &n;
  if (name.rfind("M", 0) == 0) return &m;
  return nullptr;
}

}  // namespace

extern "C" {

const char* wc_version(void) { return "0.1.0"; }

const char* wc_last_error(void) { return g_last_error.c_str(); }

void wc_free_string(char* s) { std::free(s); }

int wc_kt_parse(const char* csv, wc_kt** out) {
  return guarded([&] {
    require(csv, "csv");
    require(out, "out");
    *out = new wc_kt{parse_params_csv(csv)};
  });
}

int wc_kt_canonical(const char* web, const char* a, const char* b, const char* c2, wc_kt** out) {
  return guarded([&] {
    require(web, "web");
    require(out, "out");
    *out = new wc_kt{canonical_kt(web_from_name(web), opt_rational(a), opt_rational(b), opt_rational(c2))};
  });
}

int wc_kt_act(const wc_kt* kt, const char* c, const char* s, const char* p1, const char* p2, wc_kt** out) {
  return guarded([&] {
    require(kt, "kt");
    require(out, "out");
    SE2Element g{ExactRotation::make(opt_rational(c, 1), opt_rational(s)), opt_rational(p1), opt_rational(p2)};
    *out = new wc_kt{act(g, kt->b)};
  });
}

int wc_kt_params(const wc_kt* kt, char** json) {
  return guarded([&] {
    require(kt, "kt");
    require(json, "json");
    *json = dup_json(to_json(kt->b));
  });
}

void wc_kt_free(wc_kt* kt) { delete kt; }

int wc_classify(const wc_kt* kt, char** json) {
  return guarded([&] {
    require(kt, "kt");
    require(json, "json");
    Json j = to_json(classify(kt->b));
    j["beta"] = to_json(kt->b);
    *json = dup_json(j);
  });
}

int wc_invariants(const wc_kt* kt, char** json) {
  return guarded([&] {
    require(kt, "kt");
    require(json, "json");
    *json = dup_json(invariants_report(kt->b));
  });
}

int wc_joint(const wc_kt* first, const wc_kt* second, char** json) {
  return guarded([&] {
    require(first, "first");
    require(second, "second");
    require(json, "json");
    KTPair p{first->b, second->b};
    bool foci = sgn(p.first[5]) != 0 && sgn(p.second[5]) != 0;
    JointVector jv = joint_invariants(p, foci);
    Json j;
    j["joint"] = to_json(jv);
    try {
      j["recover_ab"] = to_json(recover_ab(jv));
    } catch (const Error& e) {
      j["recover_ab"] = {{"error", error_code_name(e.code())}, {"message", e.what()}};
    }
    try {
      j["recover_ab_printed"] = to_json(recover_ab_printed(jv));
    } catch (const Error& e) {
      j["recover_ab_printed"] = {{"error", error_code_name(e.code())}, {"message", e.what()}};
    }
    *json = dup_json(j);
  });
}

int wc_sw_check(const wc_kt* first, const wc_kt* second, char** json) {
  return guarded([&] {
    require(first, "first");
    require(second, "second");
    require(json, "json");
    SwOrientedVerdict v = sw_characterize_any({first->b, second->b});
    Json j = to_json(v.verdict);
    j["orientation"] = v.orientation;
    *json = dup_json(j);
  });
}

int wc_weakened_case(const wc_kt* first, const wc_kt* second, char** json) {
  return guarded([&] {
    require(first, "first");
    require(second, "second");
    require(json, "json");
    *json = dup_json(to_json(weakened_case({first->b, second->b})));
  });
}

int wc_potential_parse(const char* text, wc_potential** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wc_potential{parse_potential(text)};
  });
}

void wc_potential_free(wc_potential* v) { delete v; }

int wc_compat(const wc_kt* kt, const wc_potential* v, char** json) {
  return guarded([&] {
    require(kt, "kt");
    require(v, "potential");
    require(json, "json");
    MultiPoly bd = bd_expression(kt->b, v->v);
    *json = dup_json({{"bd", bd.str()}, {"compatible", bd.is_zero()}, {"potential", v->v.str()}});
  });
}

int wc_integrate_u(const wc_kt* kt, const wc_potential* v, char** json) {
  return guarded([&] {
    require(kt, "kt");
    require(v, "potential");
    require(json, "json");
    FirstIntegral f = make_first_integral(kt->b, v->v);
    MultiPoly F = phase_function(f);
    MultiPoly pb = poisson_bracket(hamiltonian(v->v), F);
    *json = dup_json({{"U", f.u.str()}, {"F", F.str()}, {"poisson_with_H", pb.str()}, {"in_involution", pb.is_zero()}});
  });
}

int wc_sw_family(const wc_kt* const* kts, size_t n, char** json) {
  return guarded([&] {
    require(json, "json");
    if (n > 0) require(kts, "kts");
    std::vector<KTParams> ts;
    for (size_t i = 0; i < n; ++i) {
      require(kts[i], "kts[i]");
      ts.push_back(kts[i]->b);
    }
    *json = dup_json(to_json(sw_family(ts)));
  });
}

int wc_ttw_case(const char* k, char** json) {
  return guarded([&] {
    require(json, "json");
    std::optional<Rational> kv;
    if (k) {
      kv = parse_rational(k);
      if (sgn(*kv) == 0) throw Error(ErrorCode::Precondition, "k must be nonzero");
    }
    auto outcomes = ttw_case(kv);
    Json arr = Json::array();
    std::string joined;
    for (const auto& o : outcomes) {
      arr.push_back(to_json(o));
      joined += (joined.empty() ? "" : " or ") + o.constraint;
    }
    *json = dup_json({{"k", kv ? to_string(*kv) : std::string("generic")}, {"constraint", joined}, {"outcomes", arr}});
  });
}

int wc_ttw_scan(char** json) {
  return guarded([&] {
    require(json, "json");
    Json j;
    auto ks = verdict_k_values();
    j["k_values"] = to_json(ks);
    j["k_values_vs_listed"] = to_json(compare_k_lists(ks, listed_k_values_N()));
    Json outs = Json::array();
    for (const auto& o : multiseparability_verdict()) outs.push_back(to_json(o));
    j["verdict"] = outs;
    j["reduced_system"] = to_json(match_reduced_system(reduced_system()));
    j["necessary_condition"] = to_json(derive_necessary_condition());
    j["polar_components"] = to_json(reconcile_polar_kt());
    ProportionalityReport pr = compare_proportional(cartesian_case_compat({}), cartesian_case_printed({}));
    j["cartesian_case_printed"] = {{"proportional", pr.proportional}, {"factor", to_string(pr.factor)}};
    *json = dup_json(j);
  });
}

int wc_collide(const char* set_name, const char* args_csv, const char* manifest, int include_constant,
               int oracle_max_den, uint64_t seed, char** json) {
  return guarded([&] {
    require(json, "json");
    ArgSet set;
    if (args_csv) {
      set.name = set_name ? set_name : "custom";
      for (const auto& a : split_csv(args_csv))
        if (!a.empty()) set.args.push_back(parse_trig_arg(a));
    } else {
      require(set_name, "set_name");
      set = preset(set_name, manifest ? std::string(manifest) : default_preset_path());
    }
    bool constant = include_constant < 0 ? set.constant : include_constant != 0;
    auto ks = collision_k_values(set.args, constant);
    Json j;
    j["set"] = set.name;
    j["include_constant"] = constant;
    Json args = Json::array();
    for (const auto& a : set.args) args.push_back(a.str());
    j["args"] = args;
    j["k"] = to_json(ks);
    if (const auto* listed = listed_for(set.name); listed && !args_csv) j["vs_listed"] = to_json(compare_k_lists(ks, *listed));
    if (oracle_max_den > 0)
      j["oracle"] = to_json(oracle_solver_agreement(set.args, constant, rational_grid(oracle_max_den, 3), seed));
    *json = dup_json(j);
  });
}

int wc_simulate(const wc_potential* v, const double p0[4], double dt, double T, const wc_kt* const* kts, size_t n,
                const char* csv_path, char** json) {
  return guarded([&] {
    require(v, "potential");
    require(p0, "p0");
    require(json, "json");
    if (n > 0) require(kts, "kts");
    HamiltonianSpec h(v->v);
    PhasePoint start{p0[0], p0[1], p0[2], p0[3]};
    Trajectory tr;
    try {
      tr = flow_rk4(h, start, dt, T);
    } catch (const PoleEncounter& e) {
      if (csv_path) {
        std::ofstream os(csv_path);
        write_csv(e.partial(), os);
      }
      throw;
    }
    if (csv_path) {
      std::ofstream os(csv_path);
      if (!os) throw Error(ErrorCode::Precondition, std::string("cannot write ") + csv_path);
      write_csv(tr, os);
    }
    MultiPoly H = hamiltonian(v->v);
    Json j;
    j["steps"] = tr.states.size() - 1;
    j["step"] = tr.times.size() > 1 ? tr.times[1] : 0.0;
    const auto& e = tr.states.back();
    j["final"] = {e.x, e.y, e.px, e.py};
    j["drift_H"] = drift(tr, phase_fn(H));
    Json ints = Json::array();
    for (size_t i = 0; i < n; ++i) {
      require(kts[i], "kts[i]");
      FirstIntegral f = make_first_integral(kts[i]->b, v->v);
      MultiPoly F = phase_function(f);
      ints.push_back({{"beta", to_json(kts[i]->b)},
                      {"drift", drift(tr, phase_fn(F))},
                      {"in_involution", poisson_bracket(H, F).is_zero()}});
    }
    j["integrals"] = ints;
    *json = dup_json(j);
  });
}

int wc_plot_web(const char* web, const char* a, const char* b, const char* c2, const char* c, const char* s,
                const char* p1, const char* p2, const char* svg_path, char** json) {
  return guarded([&] {
    require(web, "web");
    require(json, "json");
    WebPlotSpec spec;
    spec.kind = web_from_name(web);
    spec.a = opt_rational(a);
    spec.b = opt_rational(b);
    spec.c2 = opt_rational(c2, 1);
    if (c || s || p1 || p2)
      spec.g = SE2Element{ExactRotation::make(opt_rational(c, 1), opt_rational(s)), opt_rational(p1), opt_rational(p2)};
    WebPlot plot = plot_web(spec);
    if (svg_path) {
      std::ofstream os(svg_path);
      if (!os) throw Error(ErrorCode::Precondition, std::string("cannot write ") + svg_path);
      os << plot.svg;
    }
    Json markers = Json::array();
    for (const auto& m : plot.markers) markers.push_back(to_json(m));
    *json = dup_json({{"web", web_kind_name(spec.kind)},
                      {"tensor", to_json(plot.tensor)},
                      {"markers", markers},
                      {"markers_checked", plot.markers_checked},
                      {"markers_match", plot.markers_match},
                      {"svg", svg_path ? std::string(svg_path) : std::string()}});
  });
}

}  // extern "C"
