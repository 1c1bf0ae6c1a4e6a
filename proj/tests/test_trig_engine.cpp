#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "test_support.hpp"
#include "trig_engine.hpp"
#include "ttw_analysis.hpp"

using namespace webclass;

namespace {

TrigArg A(const char* s) { return parse_trig_arg(s); }

TrigPoly random_trig(wt::Rng& rng, int terms) {
  TrigPoly p;
  for (int i = 0; i < terms; ++i) {
    TrigArg a{rng.integer(-3, 3), rng.integer(-3, 3)};
    MultiPoly c = rng.poly({"r", "l1"}, 2, 2, -1);
    p += rng.integer(0, 1) ? TrigPoly::cos(a, c) : TrigPoly::sin(a, c);
  }
  return p;
}

// every k != 0 with u + v k = +-(u' + v' k) for a pair, or u + v k = 0
std::set<Rational> brute_collisions(const std::vector<TrigArg>& args, bool constant) {
  std::set<Rational> out;
  auto root = [&](const Rational& u, const Rational& v) {
    if (sgn(v) == 0) return;
    Rational k = -u / v;
    if (sgn(k) != 0) out.insert(k);
  };
  for (size_t i = 0; i < args.size(); ++i) {
    if (constant) root(args[i].u, args[i].v);
    for (size_t j = i + 1; j < args.size(); ++j) {
      if (args[i] == args[j] || args[i] == -args[j]) continue;
      root(args[i].u - args[j].u, args[i].v - args[j].v);
      root(args[i].u + args[j].u, args[i].v + args[j].v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("argument syntax") {
  CHECK(A("2+6k") == TrigArg{2, 6});
  CHECK(A("1 - 3k") == TrigArg{1, -3});
  CHECK(A("1/2-k") == TrigArg{Rational(1, 2), -1});
  CHECK(A("-k") == TrigArg{0, -1});
  CHECK(A("2/3k") == TrigArg{0, Rational(2, 3)});
  CHECK(A("4") == TrigArg{4, 0});
  CHECK_THROWS_AS(A("2+x"), Error);
  CHECK_THROWS_AS(A("k+1"), Error);
}

TEST_CASE("product-to-sum identities") {
  TrigArg k{0, 1}, one{1, 0};
  CHECK(TrigPoly::cos(k) * TrigPoly::cos(k) == TrigPoly(MultiPoly(Rational(1, 2))) + TrigPoly::cos({0, 2}, Rational(1, 2)));
  CHECK(TrigPoly::sin(one) * TrigPoly::cos(one) == TrigPoly::sin({2, 0}, Rational(1, 2)));
  CHECK(TrigPoly::sin(k) * TrigPoly::sin(k) == TrigPoly(MultiPoly(Rational(1, 2))) - TrigPoly::cos({0, 2}, Rational(1, 2)));
}

TEST_CASE("canonical signs") {
  CHECK(TrigPoly::cos({-1, 2}) == TrigPoly::cos({1, -2}));
  CHECK(TrigPoly::sin({-1, 2}) == -TrigPoly::sin({1, -2}));
  CHECK(TrigPoly::sin({0, 0}).is_zero());
  CHECK(TrigPoly::cos({0, 0}) == TrigPoly(MultiPoly(1)));
  for (const auto& t : TrigPoly::sin({0, -3}).term_list()) CHECK_FALSE(t.arg.negative());
}

TEST_CASE("algebraic laws on random trigonometric polynomials") {
  wt::Rng rng;
  for (int i = 0; i < 25; ++i) {
    TrigPoly a = random_trig(rng, 3), b = random_trig(rng, 3), c = random_trig(rng, 2);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    TrigPoly again;
    for (const auto& t : a.term_list()) again.add(t.kind, t.arg, t.coeff);
    CHECK(again == a);
  }
}

TEST_CASE("expansion agrees with float evaluation") {
  wt::Rng rng;
  for (int i = 0; i < 25; ++i) {
    TrigPoly a = random_trig(rng, 3), b = random_trig(rng, 3);
    double th = rng.real(0.1, 3.0), k = rng.real(-2, 2);
    std::map<std::string, double> s{{"r", rng.real(0.5, 2)}, {"l1", rng.real(-1, 1)}};
    double lhs = (a * b).eval(th, k, s), rhs = a.eval(th, k, s) * b.eval(th, k, s);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    s["k"] = k;
    double h = 1e-6;
    double fd = (a.eval(th + h, k, s) - a.eval(th - h, k, s)) / (2 * h);
    CHECK(a.d_theta().eval(th, k, s) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("specializing k merges equal arguments") {
  TrigPoly p = TrigPoly::cos({2, 1}) - TrigPoly::cos({4, -1});
  CHECK(p.specialize_k(1).is_zero());
  CHECK_FALSE(p.specialize_k(2).is_zero());
  TrigPoly q = TrigPoly::sin({2, 1}) + TrigPoly::sin({-4, 1});
  CHECK(q.specialize_k(1).is_zero());
}

TEST_CASE("coefficient systems") {
  CHECK(coefficient_system(TrigPoly()).empty());
  MultiPoly l1 = MultiPoly::var("l1"), l2 = MultiPoly::var("l2");
  auto sys = coefficient_system(TrigPoly::cos({1, 0}, 3) + TrigPoly::sin({2, 0}, l1 - l2));
  REQUIRE(sys.size() == 2);
  CHECK(sys[0] == MultiPoly(3));
  CHECK(sys[1] == l1 - l2);
  auto split = coefficient_system(TrigPoly::cos({1, 0}, l1 * MultiPoly::var("r") + l2), {"r"});
  CHECK(split.size() == 2);
}

TEST_CASE("collision values") {
  CHECK(collision_k_values({A("1+k")}, true) == std::vector<Rational>{-1});
  CHECK(collision_k_values({A("1+k")}, false).empty());
  wt::Rng rng;
  for (int i = 0; i < 40; ++i) {
    std::vector<TrigArg> args;
    for (int j = 0; j < 6; ++j) args.push_back({rng.rational(4, 3), rng.rational(4, 3)});
    bool c = rng.integer(0, 1);
    auto got = collision_k_values(args, c);
    CHECK(std::set<Rational>(got.begin(), got.end()) == brute_collisions(canonical_args(args), c));
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("presets") {
  auto n = preset("N-corrected");
  CHECK(n.constant);
  CHECK(collision_k_values(n.args, false) == listed_k_values_N());
  for (const char* name : {"N-printed", "N-corrected", "M-printed", "M-corrected"}) {
    auto s = preset(name);
    auto got = collision_k_values(s.args, s.constant);
    CHECK(std::set<Rational>(got.begin(), got.end()) == brute_collisions(canonical_args(s.args), s.constant));
  }
  CHECK_THROWS_AS(preset("nope"), Error);
}

TEST_CASE("manifest errors") {
  auto path = std::filesystem::temp_directory_path() / "webclass_bad_manifest.txt";
  auto write = [&](const char* text) {
    std::ofstream(path) << text;
    return path.string();
  };
  CHECK_THROWS_AS(load_arg_sets(write("2+k\n")), Error);
  CHECK_THROWS_AS(load_arg_sets(write("[a]\nconstant = maybe\n")), Error);
  CHECK_THROWS_AS(load_arg_sets(write("[a]\n2+q\n")), Error);
  auto ok = load_arg_sets(write("# c\n[a]\nconstant = no\n1+k  # trailing\n\n[b]\n2\n"));
  REQUIRE(ok.size() == 2);
  CHECK(ok[0].args.size() == 1);
  CHECK_FALSE(ok[0].constant);
  CHECK(ok[1].args[0] == TrigArg{2, 0});
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_arg_sets("/nonexistent/manifest.txt"), Error);
}

TEST_CASE("rank oracle") {
  auto n = preset("N-corrected");
  auto args = canonical_args(n.args);
  CHECK(numeric_rank_oracle(args, Rational(1, 2), 200, true, wt::seed()).deficiency > 0);
  CHECK(numeric_rank_oracle(args, Rational(3, 7), 200, true, wt::seed()).deficiency == 0);
  auto dup = args;
  dup.push_back(args.back());
  CHECK(numeric_rank_oracle(dup, Rational(3, 7), 200, true, wt::seed()).deficiency > 0);
}

TEST_CASE("grid") {
  auto g = rational_grid(4, 1);
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(std::find(g.begin(), g.end(), Rational(3, 4)) != g.end());
  CHECK(std::find(g.begin(), g.end(), Rational(-1)) != g.end());
  CHECK(std::find(g.begin(), g.end(), Rational(0)) == g.end());
  CHECK(g.size() == 2 * 6);
}

TEST_CASE("oracle and solver agree on the full grid") {
  auto grid = rational_grid(16, 3);
  for (const char* name : {"N-printed", "N-corrected", "M-printed", "M-corrected"}) {
    auto s = preset(name);
    auto agree = oracle_solver_agreement(s.args, s.constant, grid, wt::seed());
    CHECK(agree.points == grid.size());
    CHECK(agree.disagreements.empty());
  }
}
