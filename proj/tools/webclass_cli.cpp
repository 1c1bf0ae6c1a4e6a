#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "webclass/webclass.h"

using Json = nlohmann::json;

namespace {

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(int status) {
  switch (status) {
    case WC_OK:
      return 0;
    case WC_ERR_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

void check(int status) {
  if (status != WC_OK) throw Failure{exit_for(status), wc_last_error()};
}

Json take_json(char* s) {
  Json j = Json::parse(s);
  wc_free_string(s);
  return j;
}

struct KtDeleter {
  void operator()(wc_kt* k) const { wc_kt_free(k); }
};
using KtPtr = std::unique_ptr<wc_kt, KtDeleter>;

struct PotDeleter {
  void operator()(wc_potential* v) const { wc_potential_free(v); }
};
using PotPtr = std::unique_ptr<wc_potential, PotDeleter>;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

// "b1,...,b6", or "polar:a,b", "eh:c2", "cartesian", "parabolic"
KtPtr make_kt(const std::string& spec) {
  wc_kt* k = nullptr;
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  bool named = !head.empty() && std::isalpha(static_cast<unsigned char>(head[0]));
  if (!named) {
    check(wc_kt_parse(spec.c_str(), &k));
    return KtPtr(k);
  }
  std::vector<std::string> args = colon == std::string::npos ? std::vector<std::string>{} : split(spec.substr(colon + 1), ',');
  auto arg = [&](size_t i) { return i < args.size() ? args[i].c_str() : nullptr; };
  if (head == "polar")
    check(wc_kt_canonical("polar", arg(0), arg(1), nullptr, &k));
  else if (head == "eh")
    check(wc_kt_canonical("eh", nullptr, nullptr, arg(0), &k));
  else
    check(wc_kt_canonical(head.c_str(), nullptr, nullptr, nullptr, &k));
  return KtPtr(k);
}

PotPtr make_potential(const std::string& text) {
  wc_potential* v = nullptr;
  check(wc_potential_parse(text.c_str(), &v));
  return PotPtr(v);
}

std::string fixtures_path() {
  if (const char* d = std::getenv("WEBCLASS_DATA_DIR")) return std::string(d) + "/paper_checks.json";
  return std::string(WEBCLASS_DATA_DIR) + "/paper_checks.json";
}

uint64_t seed_from_env() {
  if (const char* s = std::getenv("WEBCLASS_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw Failure{2, std::string("WEBCLASS_SEED is not an unsigned integer: ") + s};
    }
  }
  return 1;
}

Json paper_check(const std::string& id, const std::string& command, const Json& result, bool& passed) {
  std::ifstream in(fixtures_path());
  if (!in) throw Failure{2, "cannot open fixture manifest " + fixtures_path()};
  Json all = Json::parse(in);
  if (!all["checks"].contains(id)) throw Failure{2, "unknown paper check '" + id + "'"};
  const Json& fx = all["checks"][id];
  if (fx.value("command", "") != command)
    throw Failure{2, "paper check '" + id + "' belongs to command '" + fx.value("command", "") + "'"};
  Json mismatched = Json::array();
  for (const auto& [key, want] : fx["expect"].items())
    if (!result.contains(key) || result[key] != want) mismatched.push_back(key);
  passed = mismatched.empty();
  return {{"id", id}, {"status", passed ? "pass" : "fail"}, {"expected", fx["expect"]}, {"mismatched_keys", mismatched}};
}

void print_human(const Json& j, const std::string& indent, std::ostream& os) {
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      os << indent << key << ":\n";
      print_human(val, indent + "  ", os);
    } else if (val.is_array() && !val.empty() && val.front().is_object()) {
      os << indent << key << ":\n";
      for (const auto& e : val) {
        os << indent << "  -\n";
        print_human(e, indent + "    ", os);
      }
    } else {
      os << indent << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal web classification, Killing-tensor invariants and TTW separability"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string check_id;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--paper-check", check_id, "Compare the result with a stored fixture");

  Json inputs = Json::object();
  std::string command;
  std::function<Json()> run;

  std::string beta, first, second, potential, kval, set_name, args_csv, manifest, constant = "preset", p0 = "1,1,0,0",
                                                                          csv, web = "cartesian", out = "web.svg";
  std::string a, b, c2, rot, shift;
  std::vector<std::string> betas, integrals;
  int oracle_den = 0;
  double dt = 1e-3, T = 10.0;
  bool family = false;

  auto* classify = app.add_subcommand("classify", "Web type of a Killing tensor");
  classify->add_option("--beta", beta, "b1,...,b6 or polar:a,b | eh:c2 | cartesian | parabolic")->required();
  classify->callback([&] {
    command = "classify";
    inputs = {{"beta", beta}};
    run = [&] {
      auto k = make_kt(beta);
      char* s = nullptr;
      check(wc_classify(k.get(), &s));
      return take_json(s);
    };
  });

  auto* inv = app.add_subcommand("invariants", "Invariants, moving frame and singular points");
  inv->add_option("--beta", beta)->required();
  inv->callback([&] {
    command = "invariants";
    inputs = {{"beta", beta}};
    run = [&] {
      auto k = make_kt(beta);
      char* s = nullptr;
      check(wc_invariants(k.get(), &s));
      return take_json(s);
    };
  });

  auto pair_cmd = [&](const char* name, const char* help, int (*fn)(const wc_kt*, const wc_kt*, char**)) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("--first", first, "Polar-type tensor")->required();
    sc->add_option("--second", second, "Elliptic-hyperbolic tensor")->required();
    sc->callback([&, name, fn] {
      command = name;
      inputs = {{"first", first}, {"second", second}};
      run = [&, fn] {
        auto k1 = make_kt(first), k2 = make_kt(second);
        char* s = nullptr;
        check(fn(k1.get(), k2.get(), &s));
        return take_json(s);
      };
    });
  };
  pair_cmd("joint", "Joint invariants of a pair", wc_joint);
  pair_cmd("sw-check", "Characterization of the SW pair", wc_sw_check);
  pair_cmd("weakened-case", "Focal triangle case of a polar/EH pair", wc_weakened_case);

  auto* compat = app.add_subcommand("compat", "Compatibility d(K dV) = 0");
  compat->add_option("--beta", betas, "Tensor (repeatable with --family)")->required();
  compat->add_option("--potential", potential, "sw:omega2=..,alpha=..,beta=.. or laurent:c*x^i*y^j,...")
      ->default_val("sw:");
  compat->add_flag("--family", family, "Solve for the SW couplings compatible with every tensor");
  compat->callback([&] {
    command = "compat";
    inputs = {{"beta", betas}, {"potential", potential}, {"family", family}};
    run = [&] {
      std::vector<KtPtr> ks;
      for (const auto& s : betas) ks.push_back(make_kt(s));
      auto v = make_potential(potential);
      Json r;
      Json each = Json::array();
      for (const auto& k : ks) {
        char* s = nullptr;
        check(wc_compat(k.get(), v.get(), &s));
        each.push_back(take_json(s));
      }
      r = ks.size() == 1 ? each.front() : Json{{"tensors", each}};
      if (family) {
        std::vector<const wc_kt*> raw;
        for (const auto& k : ks) raw.push_back(k.get());
        char* s = nullptr;
        check(wc_sw_family(raw.data(), raw.size(), &s));
        r["family"] = take_json(s);
      }
      return r;
    };
  });

  auto* integ = app.add_subcommand("integrate-u", "Potential part U with dU = K dV");
  integ->add_option("--beta", beta)->required();
  integ->add_option("--potential", potential)->required();
  integ->callback([&] {
    command = "integrate-u";
    inputs = {{"beta", beta}, {"potential", potential}};
    run = [&] {
      auto k = make_kt(beta);
      auto v = make_potential(potential);
      char* s = nullptr;
      check(wc_integrate_u(k.get(), v.get(), &s));
      return take_json(s);
    };
  });

  auto* ttw = app.add_subcommand("ttw", "TTW multi-separability");
  ttw->require_subcommand(1);
  ttw->fallthrough();
  auto* scan = ttw->add_subcommand("scan", "Full verdict over all special k");
  scan->callback([&] {
    command = "ttw scan";
    run = [&] {
      char* s = nullptr;
      check(wc_ttw_scan(&s));
      return take_json(s);
    };
  });
  auto* tcase = ttw->add_subcommand("case", "Outcome for one k (omit --k for generic)");
  tcase->add_option("--k", kval);
  tcase->callback([&] {
    command = "ttw case";
    inputs = {{"k", kval.empty() ? "generic" : kval}};
    run = [&] {
      char* s = nullptr;
      check(wc_ttw_case(kval.empty() ? nullptr : kval.c_str(), &s));
      return take_json(s);
    };
  });

  auto* collide = app.add_subcommand("collide", "Argument-collision values of k");
  collide->add_option("--set", set_name, "Preset name (N-printed, N-corrected, M-printed, M-corrected)");
  collide->add_option("--args", args_csv, "Explicit arguments, e.g. 2+2k,2-2k");
  collide->add_option("--manifest", manifest, "Argument-set manifest");
  collide->add_option("--constant", constant, "yes | no | preset")->check(CLI::IsMember({"yes", "no", "preset"}));
  collide->add_option("--oracle-den", oracle_den, "Also run the rank oracle on |k| <= 3 with this denominator bound");
  collide->callback([&] {
    command = "collide";
    inputs = {{"set", set_name}, {"args", args_csv}, {"constant", constant}, {"oracle_den", oracle_den}};
    run = [&] {
      if (set_name.empty() && args_csv.empty()) throw Failure{2, "collide needs --set or --args"};
      int inc = constant == "yes" ? 1 : constant == "no" ? 0 : -1;
      char* s = nullptr;
      check(wc_collide(set_name.empty() ? nullptr : set_name.c_str(), args_csv.empty() ? nullptr : args_csv.c_str(),
                       manifest.empty() ? nullptr : manifest.c_str(), inc, oracle_den, seed_from_env(), &s));
      return take_json(s);
    };
  });

  auto* sim = app.add_subcommand("simulate", "RK4 flow and first-integral drift");
  sim->add_option("--potential", potential)->required();
  sim->add_option("--p0", p0, "x,y,px,py");
  sim->add_option("--dt", dt);
  sim->add_option("--T", T);
  sim->add_option("--csv", csv, "Trajectory CSV output");
  sim->add_option("--integral", integrals, "Tensor whose first integral is tracked (repeatable)");
  sim->callback([&] {
    command = "simulate";
    inputs = {{"potential", potential}, {"p0", p0}, {"dt", dt}, {"T", T}, {"integral", integrals}, {"csv", csv}};
    run = [&] {
      auto v = make_potential(potential);
      auto parts = split(p0, ',');
      if (parts.size() != 4) throw Failure{2, "--p0 needs four comma-separated numbers"};
      double q[4];
      for (int i = 0; i < 4; ++i) {
        try {
          size_t used = 0;
          q[i] = std::stod(parts[i], &used);
          if (used != parts[i].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw Failure{2, "malformed number in --p0: '" + parts[i] + "'"};
        }
      }
      std::vector<KtPtr> ks;
      std::vector<const wc_kt*> raw;
      for (const auto& s : integrals) {
        ks.push_back(make_kt(s));
        raw.push_back(ks.back().get());
      }
      char* s = nullptr;
      check(wc_simulate(v.get(), q, dt, T, raw.data(), raw.size(), csv.empty() ? nullptr : csv.c_str(), &s));
      return take_json(s);
    };
  });

  auto* plot = app.add_subcommand("plot-web", "SVG of a coordinate web");
  plot->add_option("--web", web)->check(CLI::IsMember({"cartesian", "polar", "parabolic", "eh"}));
  plot->add_option("--a", a);
  plot->add_option("--b", b);
  plot->add_option("--c2", c2);
  plot->add_option("--rot", rot, "c,s with c^2 + s^2 = 1");
  plot->add_option("--shift", shift, "p1,p2");
  plot->add_option("--out", out);
  plot->callback([&] {
    command = "plot-web";
    inputs = {{"web", web}, {"a", a}, {"b", b}, {"c2", c2}, {"rot", rot}, {"shift", shift}, {"out", out}};
    run = [&] {
      auto opt = [](const std::string& s) { return s.empty() ? nullptr : s.c_str(); };
      std::vector<std::string> r = rot.empty() ? std::vector<std::string>{} : split(rot, ',');
      std::vector<std::string> p = shift.empty() ? std::vector<std::string>{} : split(shift, ',');
      if ((!r.empty() && r.size() != 2) || (!p.empty() && p.size() != 2))
        throw Failure{2, "--rot and --shift take two comma-separated values"};
      auto at = [](const std::vector<std::string>& v, size_t i) { return v.empty() ? nullptr : v[i].c_str(); };
      char* s = nullptr;
      check(wc_plot_web(web.c_str(), opt(a), opt(b), opt(c2), at(r, 0), at(r, 1), at(p, 0), at(p, 1), out.c_str(), &s));
      return take_json(s);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["result"] = run();
    bool passed = true;
    if (!check_id.empty()) report["paper_check"] = paper_check(check_id, command, report["result"], passed);
    if (as_json) {
      std::cout << report.dump() << "\n";
    } else {
      print_human(report, "", std::cout);
    }
    return passed ? 0 : 3;
  } catch (const Failure& f) {
    if (as_json)
      std::cout << Json{{"command", command}, {"error", f.message}}.dump() << "\n";
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
