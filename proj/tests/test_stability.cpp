#include <doctest.h>

#include <random>

#include "canon4/exactalg.hpp"
#include "canon4/stability.hpp"

using namespace canon4;

namespace {

TwoThreeScheme scheme(const char* q, const char* f) {
  return make_scheme(parse_poly_string(q, scheme_vars()), parse_poly_string(f, scheme_vars()));
}

MultiPoly cubic(const char* F) { return parse_poly_string(F, cubic_vars()); }

std::string verdict(const char* q, const char* f) {
  StabilityVerdict v = git_verdict(scheme(q, f));
  std::string s = to_string(v.status) + " " + v.reasons.at(0);
  if (v.minimal_orbit) s += " " + *v.minimal_orbit;
  return s;
}

std::string cubic_verdict(const char* F) {
  CubicThreefold X;
  X.F = cubic(F);
  StabilityVerdict v = allcock_verdict(analyze_cubic(X).data);
  return to_string(v.status) + " " + v.reasons.at(0);
}

}  // namespace

TEST_CASE("one-parameter subgroup conventions") {
  OnePS r = OnePS::r_weights({0, 1, 1, 1});
  CHECK(r.to_sum_zero().str() == "(-3,1,1,1)");
  CHECK(r.to_sum_zero().tag == Convention::SumZero);
  CHECK(OnePS::sum_zero({2, -1, -1}).to_sum_zero().str() == "(2,-1,-1)");
}

TEST_CASE("weights of a monomial") {
  MultiPoly F = cubic("x0^2*x1 + x2*x3*x4");
  CHECK(torus_weight_min(F, OnePS::sum_zero({1, 1, 0, -1, -1})) == -2);
  CHECK(support_exponents(F).size() == 2);
}

TEST_CASE("verdicts of the (2,3) normal forms") {
  CHECK(verdict("x3^2-x2*x4", "x2^3+x1*x2*x3+x1^2*x4") == "StrictlySemistable 2.ii.alpha C_{A,B}(4A/B^2!=1)");
  CHECK(verdict("x1*x4-x2*x3", "x1*x3^2+x2^2*x4") == "StrictlySemistable 2.i.alpha C_2A5");
  CHECK(verdict("x3^2-x2*x4", "x1^2*x4+x1*x2^2+x2^3+x3^3+x4^3") == "Stable 1");
  CHECK(verdict("x3^2-x2*x4", "x2^3+x3^3+x4^3+x1*x2*x3") == "Unstable 0'");
  CHECK(verdict("x1*x2", "x3^2*x4+x1^3+x2^3+x1*x4^2") == "Unstable not(1,2)");
  CHECK(verdict("x3^2-x2*x4", "x2^3-2*x1*x2*x3+x1^2*x4").rfind("StrictlySemistable 0", 0) == 0);
}

TEST_CASE("cubic threefold verdicts") {
  CHECK(cubic_verdict("x0^3+x1^3+x2^3+x3^3+x4^3") == "Stable 1");
  CHECK(cubic_verdict("x0*x1*x2+x3^3+x4^3") == "StrictlySemistable 3.a");
  CHECK(cubic_verdict("x0*(x3^2-x2*x4)+x2^3+x1*x2*x3+x1^2*x4") == "StrictlySemistable 3.b");
  CHECK(cubic_verdict("x0*(x3^2-x2*x4)+x2^3-2*x1*x2*x3+x1^2*x4") == "StrictlySemistable 3.d");
}

TEST_CASE("destabilizing certificates verify independently") {
  MultiPoly F = curve_to_cubic(scheme("x1*x2", "x3^2*x4+x1^3+x2^3+x1*x4^2")).F;
  auto c = destabilize_search(F, SearchOptions{20, 7, {}});
  REQUIRE(c.has_value());
  MultiPoly G = c->frame_index == 0 ? F : substitute_linear(F, c->frame);
  CHECK(torus_weight_min(G, c->w) == c->min_weight);
  CHECK(c->min_weight >= 1);
  Rational s = 0;
  for (const auto& x : c->w.to_sum_zero().w) s += Rational(x);
  CHECK(s == 0);
}

TEST_CASE("stable cubics admit no certificate in seeded frames") {
  CHECK(!destabilize_search(cubic("x0^3+x1^3+x2^3+x3^3+x4^3"), SearchOptions{20, 7, {}}).has_value());
  MultiPoly a2 = curve_to_cubic(scheme("x3^2-x2*x4", "x1^2*x4+x1*x2^2+x2^3+x3^3+x4^3")).F;
  CHECK(!destabilize_search(a2, SearchOptions{20, 7, {}}).has_value());
}

TEST_CASE("normal forms have a zero-weight one-parameter subgroup") {
  for (const char* F : {"x0*x1*x2+x3^3+x4^3", "x0*(x3^2-x2*x4)+x2^3+x1*x2*x3+x1^2*x4",
                        "x0*(x1*x4-x2*x3)+x1*x3^2+x2^2*x4"}) {
    auto z = zero_weight_1ps(cubic(F));
    REQUIRE(z.has_value());
    for (const auto& e : support_exponents(cubic(F))) {
      Integer dot = 0;
      for (std::size_t i = 0; i < e.size(); ++i) dot += e[i] * z->to_sum_zero().w[i];
      CHECK(dot == 0);
    }
  }
  CHECK(!zero_weight_1ps(cubic("x0^3+x1^3+x2^3+x3^3+x4^3")).has_value());
}

TEST_CASE("random frames are deterministic and unimodular") {
  auto a = random_frames(5, 6, 42), b = random_frames(5, 6, 42);
  REQUIRE(a.size() == 6);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(det_bareiss(a[i]) == 1);
  }
  CHECK(random_frames(5, 1, 43)[0] != a[0]);
}

TEST_CASE("Mumford and Schubert numerics") {
  CHECK(mumford_rhs(1, 3, 6, OnePS::r_weights({0, 1, 1, 1})) == 9);
  CHECK_THROWS(mumford_rhs(1, 3, 6, OnePS::sum_zero({-3, 1, 1, 1})));
  SchubertBound b = schubert_bound(3, 3);
  CHECK(b.bound == 9);
  CHECK(b.rhs == 9);
  CHECK(!b.exceeds);
  CHECK(schubert_bound(4, 2).exceeds);
  CHECK(schubert_surviving_splits() == std::vector<std::pair<int, int>>{{3, 3}});
  CHECK(linearization_balance(3, 2));
  CHECK(!linearization_balance(3, 3));
}

TEST_CASE("Plücker coordinates satisfy the quadric relation") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-5, 5);
  MultiPoly rel = plucker_relation();
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> a(4), b(4);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    CHECK(rel.evaluate(plucker_point(a, b)) == 0);
  }
}

TEST_CASE("Chow form: degree 6 and agreement with the incidence oracle") {
  TwoThreeScheme C = scheme("x1*x4-x2*x3", "x1*x3^2+x2^2*x4");
  ChowForm R = chow_form(C);
  CHECK(R.degree == 6);
  CHECK(plucker_normal_form(R.R) == R.R);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-4, 4);
  int meets = 0;
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> a(4), b(4);
    for (auto& x : b) x = c(rng);
    if (t % 2 == 0) {
      a = t % 4 == 0 ? std::vector<Rational>{1, 0, 0, 0} : std::vector<Rational>{0, 0, 0, 1};
    } else {
      for (auto& x : a) x = c(rng);
    }
    auto p = plucker_point(a, b);
    if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; })) continue;
    bool oracle = line_meets_curve(C, a, b);
    meets += oracle;
    CHECK(oracle == (R.R.evaluate(p) == 0));
  }
  CHECK(meets > 0);
}

TEST_CASE("Chow certificate for the rank-2 tangent curve") {
  ChowForm R = chow_form(scheme("x1*x2", "x3^2*x4+x1^3+x2^3+x1*x4^2"));
  auto c = destabilize_chow(R);
  REQUIRE(c.has_value());
  CHECK(chow_weight_min(R, c->w) >= 1);
  CHECK(!destabilize_chow(chow_form(scheme("x3^2-x2*x4", "x1^2*x4+x1*x2^2+x2^3+x3^3+x4^3"))).has_value());
}
