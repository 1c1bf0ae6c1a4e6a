#include "json_io.hpp"

#include <cctype>

namespace webclass {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

KTParams parse_params_csv(const std::string& s) {
  auto parts = split_csv(s);
  if (parts.size() != 6) throw Error(ErrorCode::Parse, "expected 6 comma-separated parameters, got '" + s + "'");
  KTParams b;
  for (size_t i = 0; i < 6; ++i) b[i] = parse_rational(parts[i]);
  return b;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Scalar& s) { return {{"value", s.str()}, {"exact", s.exact}}; }

Json to_json(const KTParams& b) {
  Json a = Json::array();
  for (const auto& v : b) a.push_back(to_string(v));
  return a;
}

Json to_json(const WebType& w) { return {{"web", web_kind_name(w.kind)}, {"degenerate", w.degenerate}}; }

Json to_json(const SingularPoint& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(const MovingFrame& f) {
  Json j;
  j["exact"] = f.exact;
  if (f.exact) {
    j["g"] = {{"c", to_string(f.g.rot.c)}, {"s", to_string(f.g.rot.s)}, {"p1", to_string(f.g.p1)},
              {"p2", to_string(f.g.p2)}};
    j["beta"] = to_json(f.b_exact);
  } else {
    j["g"] = {{"c", f.g_float[0]}, {"s", f.g_float[1]}, {"p1", f.g_float[2]}, {"p2", f.g_float[3]}};
    j["beta"] = f.b_float;
  }
  return j;
}

Json to_json(const JointVector& v) {
  Json j;
  j["d1"] = to_string(v.d1);
  j["d2"] = to_string(v.d2);
  j["d3"] = to_string(v.d3);
  j["d4"] = to_string(v.d4);
  j["d5"] = to_string(v.d5);
  j["d6"] = to_string(v.d6);
  if (v.has_foci) {
    j["d7"] = to_json(v.d7);
    j["d8"] = to_json(v.d8);
    j["d9"] = to_json(v.d9);
  } else {
    j["d7"] = j["d8"] = j["d9"] = nullptr;
  }
  return j;
}

Json to_json(const SwVerdict& v) { return {{"holds", v.holds}, {"violated", v.violated}}; }

Json to_json(const TriangleReport& t) {
  return {{"d7", to_json(t.d7)}, {"d8", to_json(t.d8)}, {"area", to_json(t.area)}, {"case", t.case_id}};
}

Json to_json(const RecoveredAB& r) { return {{"a", to_json(r.a)}, {"b", to_json(r.b)}}; }

Json to_json(const PotentialFamily& f) {
  Json basis = Json::array();
  for (const auto& v : f.basis) {
    Json row = Json::array();
    for (const auto& q : v) row.push_back(to_string(q));
    basis.push_back(row);
  }
  return {{"label", f.label}, {"basis", basis}, {"coordinates", {"w2", "alpha", "beta"}}};
}

Json to_json(const CaseOutcome& o) {
  Json w = Json::object();
  for (const auto& [k, v] : o.witness) w[k] = v;
  return {{"k", o.k ? to_string(*o.k) : std::string("generic")}, {"constraint", o.constraint}, {"witness", w}};
}

Json to_json(const std::vector<Rational>& ks) {
  Json a = Json::array();
  for (const auto& k : ks) a.push_back(to_string(k));
  return a;
}

Json to_json(const KListComparison& c) {
  return {{"matched", to_json(c.matched)}, {"missing", to_json(c.missing)}, {"extra", to_json(c.extra)},
          {"equal", c.equal()}};
}

Json to_json(const ReducedMatch& m) {
  return {{"computed", m.computed},
          {"listed", m.listed},
          {"matched", m.matched},
          {"all_matched", m.all_matched()},
          {"unmatched_computed", m.unmatched_computed},
          {"unmatched_listed", m.unmatched_listed}};
}

Json to_json(const NecessaryCondition& n) {
  return {{"verified", n.verified},   {"constraint", n.constraint}, {"corollary", n.corollary},
          {"g1", n.g1.str()},         {"g2", n.g2.str()},           {"e1", n.e1.str()},
          {"e2", n.e2.str()},         {"combination", "(b4^2 + b5^2)*g1"}};
}

Json to_json(const PolarReconciliation& r) {
  return {{"k11_equal", r.k11_equal},        {"k12_equal", r.k12_equal},        {"k22_equal", r.k22_equal},
          {"k11_diff", r.k11_diff.str()},    {"k12_diff", r.k12_diff.str()},    {"k22_diff", r.k22_diff.str()}};
}

Json to_json(const GridAgreement& g) {
  return {{"points", g.points}, {"disagreements", to_json(g.disagreements)}, {"agree", g.disagreements.empty()}};
}

Json invariants_report(const KTParams& b) {
  Json j;
  j["beta"] = to_json(b);
  TranslationalInvariants t = translational_invariants(b);
  j["translational"] = {{"I1", to_string(t.i1)}, {"I2", to_string(t.i2)}, {"I3", to_string(t.i3)}, {"I4", to_string(t.i4)}};
  InvariantTriple d = invariants(b);
  j["fundamental"] = {{"d1", to_string(d.d1)}, {"d2", to_string(d.d2)}, {"d3", to_string(d.d3)}};
  j["classification"] = to_json(classify(b));
  try {
    j["moving_frame"] = to_json(moving_frame(b));
  } catch (const Error& e) {
    j["moving_frame"] = {{"error", error_code_name(e.code())}, {"message", e.what()}};
  }
  try {
    Json pts = Json::array();
    for (const auto& p : singular_points(b)) pts.push_back(to_json(p));
    j["singular_points"] = pts;
  } catch (const Error& e) {
    j["singular_points"] = {{"error", error_code_name(e.code())}, {"message", e.what()}};
  }
  return j;
}

}  // namespace webclass
