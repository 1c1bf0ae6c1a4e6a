#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "webclass/webclass.h"

using Json = nlohmann::json;

namespace {

Json take(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(s);
  wc_free_string(s);
  return j;
}

wc_kt* kt(const char* csv) {
  wc_kt* k = nullptr;
  REQUIRE(wc_kt_parse(csv, &k) == WC_OK);
  return k;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(wc_version()).size() > 0);
  wc_kt* k = nullptr;
  CHECK(wc_kt_parse("1,2", &k) == WC_ERR_PARSE);
  CHECK(k == nullptr);
  CHECK(std::string(wc_last_error()).size() > 0);
  CHECK(wc_kt_parse("1,2,3,4,5,x", &k) == WC_ERR_PARSE);
  CHECK(wc_kt_parse(nullptr, &k) == WC_ERR_INVALID_ARGUMENT);
  CHECK(wc_kt_parse("1,2,3,4,5,6", nullptr) == WC_ERR_INVALID_ARGUMENT);
  k = kt("1,2,3,4,5,6");
  CHECK(std::string(wc_last_error()).empty());
  wc_kt_free(k);
  wc_kt_free(nullptr);
  wc_free_string(nullptr);
  CHECK(wc_kt_canonical("eh", nullptr, nullptr, "-1", &k) == WC_ERR_PRECONDITION);
  CHECK(wc_kt_canonical("spherical", nullptr, nullptr, nullptr, &k) != WC_OK);
}

TEST_CASE("classification and invariants across an isometry") {
  wc_kt* p = nullptr;
  REQUIRE(wc_kt_canonical("polar", "1", "2", nullptr, &p) == WC_OK);
  char* s = nullptr;
  REQUIRE(wc_classify(p, &s) == WC_OK);
  Json c = take(s);
  CHECK(c["web"] == "Polar");
  CHECK(c["degenerate"] == false);

  wc_kt* q = nullptr;
  REQUIRE(wc_kt_act(p, "3/5", "4/5", "1/2", "-7", &q) == WC_OK);
  REQUIRE(wc_invariants(p, &s) == WC_OK);
  Json a = take(s);
  REQUIRE(wc_invariants(q, &s) == WC_OK);
  Json b = take(s);
  CHECK(a["fundamental"] == b["fundamental"]);
  CHECK(wc_kt_act(p, "1", "1", "0", "0", &q) == WC_ERR_PRECONDITION);
  wc_kt_free(p);
  wc_kt_free(q);
}

TEST_CASE("pair reports") {
  wc_kt *p = nullptr, *e = nullptr;
  REQUIRE(wc_kt_canonical("polar", nullptr, nullptr, nullptr, &p) == WC_OK);
  REQUIRE(wc_kt_canonical("eh", nullptr, nullptr, "4", &e) == WC_OK);
  char* s = nullptr;
  REQUIRE(wc_sw_check(p, e, &s) == WC_OK);
  CHECK(take(s)["holds"] == true);
  REQUIRE(wc_joint(p, e, &s) == WC_OK);
  Json j = take(s);
  CHECK(j["joint"]["d7"]["value"] == "4");
  REQUIRE(wc_weakened_case(p, e, &s) == WC_OK);
  CHECK(take(s)["case"] == 4);
  CHECK(wc_weakened_case(e, e, &s) == WC_ERR_PRECONDITION);
  wc_kt_free(p);
  wc_kt_free(e);
}

TEST_CASE("compatibility and integrals") {
  wc_potential* v = nullptr;
  REQUIRE(wc_potential_parse("sw:", &v) == WC_OK);
  wc_kt* e = nullptr;
  REQUIRE(wc_kt_canonical("eh", nullptr, nullptr, "9", &e) == WC_OK);
  char* s = nullptr;
  REQUIRE(wc_compat(e, v, &s) == WC_OK);
  CHECK(take(s)["compatible"] == true);
  REQUIRE(wc_integrate_u(e, v, &s) == WC_OK);
  CHECK(take(s)["in_involution"] == true);
  wc_kt* off = kt("4,1,-2,-2,-1,1");
  CHECK(wc_integrate_u(off, v, &s) != WC_OK);
  const wc_kt* pair[] = {off, e};
  REQUIRE(wc_sw_family(pair, 2, &s) == WC_OK);
  CHECK(take(s)["label"] == "constants only");
  wc_potential* bad = nullptr;
  CHECK(wc_potential_parse("sw:gamma=2", &bad) == WC_ERR_PARSE);
  wc_potential_free(v);
  wc_kt_free(e);
  wc_kt_free(off);
}

TEST_CASE("TTW cases") {
  char* s = nullptr;
  REQUIRE(wc_ttw_case("1", &s) == WC_OK);
  CHECK(take(s)["constraint"] == "phi_zero");
  REQUIRE(wc_ttw_case("2/5", &s) == WC_OK);
  CHECK(take(s)["constraint"] == "all_lambda_zero");
  REQUIRE(wc_ttw_case(nullptr, &s) == WC_OK);
  Json g = take(s);
  CHECK(g["k"] == "generic");
  CHECK(g["constraint"] == "no_solution");
  CHECK(wc_ttw_case("0", &s) == WC_ERR_PRECONDITION);
  CHECK(wc_ttw_case("1/x", &s) == WC_ERR_PARSE);
}

TEST_CASE("collisions") {
  char* s = nullptr;
  REQUIRE(wc_collide("N-corrected", nullptr, nullptr, 0, 0, 1, &s) == WC_OK);
  Json n = take(s);
  CHECK(n["k"] == Json{"-2", "-1", "-2/3", "-1/2", "-2/5", "2/5", "1/2", "2/3", "1", "2"});
  REQUIRE(wc_collide(nullptr, "1+k", nullptr, 1, 0, 1, &s) == WC_OK);
  CHECK(take(s)["k"] == Json{"-1"});
  CHECK(wc_collide("nope", nullptr, nullptr, -1, 0, 1, &s) == WC_ERR_PRECONDITION);
  CHECK(wc_collide("N-printed", nullptr, "/nonexistent", -1, 0, 1, &s) == WC_ERR_PRECONDITION);
  REQUIRE(wc_collide("N-printed", nullptr, nullptr, -1, 4, 7, &s) == WC_OK);
  Json o = take(s);
  CHECK(o["oracle"]["disagreements"].empty());
}

TEST_CASE("simulation") {
  auto dir = std::filesystem::temp_directory_path();
  auto csv = (dir / "webclass_capi_traj.csv").string();
  wc_potential* v = nullptr;
  REQUIRE(wc_potential_parse("sw:omega2=-1,alpha=1,beta=1", &v) == WC_OK);
  wc_kt* c = nullptr;
  REQUIRE(wc_kt_canonical("cartesian", nullptr, nullptr, nullptr, &c) == WC_OK);
  const wc_kt* ints[] = {c};
  double p0[4] = {1, 1, 0, 0};
  char* s = nullptr;
  REQUIRE(wc_simulate(v, p0, 1e-2, 1, ints, 1, csv.c_str(), &s) == WC_OK);
  Json r = take(s);
  CHECK(r["steps"] == 100);
  CHECK(r["integrals"][0]["in_involution"] == true);
  CHECK(slurp(csv).rfind("t,x,y,px,py\n", 0) == 0);

  wc_potential* fall = nullptr;
  REQUIRE(wc_potential_parse("laurent:-1*x^-2", &fall) == WC_OK);
  CHECK(wc_simulate(fall, p0, 1e-3, 10, nullptr, 0, csv.c_str(), &s) == WC_ERR_POLE);
  CHECK(slurp(csv).size() > 20);
  wc_potential* sym = nullptr;
  REQUIRE(wc_potential_parse("sw:", &sym) == WC_OK);
  CHECK(wc_simulate(sym, p0, 1e-3, 1, nullptr, 0, nullptr, &s) == WC_ERR_PRECONDITION);
  std::filesystem::remove(csv);
  wc_potential_free(v);
  wc_potential_free(fall);
  wc_potential_free(sym);
  wc_kt_free(c);
}

TEST_CASE("web plot") {
  auto svg = (std::filesystem::temp_directory_path() / "webclass_capi_eh.svg").string();
  char* s = nullptr;
  REQUIRE(wc_plot_web("eh", nullptr, nullptr, "4", nullptr, nullptr, nullptr, nullptr, svg.c_str(), &s) == WC_OK);
  Json r = take(s);
  CHECK(r["markers_checked"] == true);
  CHECK(r["markers_match"] == true);
  std::string text = slurp(svg);
  CHECK(text.find("data-x=\"2\" data-y=\"0\"") != std::string::npos);
  CHECK(text.find("data-x=\"-2\" data-y=\"0\"") != std::string::npos);
  REQUIRE(wc_plot_web("polar", "1", "2", nullptr, "3/5", "4/5", "1", "0", svg.c_str(), &s) == WC_OK);
  CHECK(take(s)["markers_match"] == true);
  CHECK(wc_plot_web("eh", nullptr, nullptr, "0", nullptr, nullptr, nullptr, nullptr, svg.c_str(), &s) ==
        WC_ERR_PRECONDITION);
  std::filesystem::remove(svg);
}
