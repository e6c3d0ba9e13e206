#include <doctest.h>

#include <random>

#include "canon4/divisors.hpp"
#include "canon4/polyio.hpp"

using namespace canon4;

TEST_CASE("constants table") {
  PEConstants k = pe_constants();
  CHECK(k.get("K").str() == "-14eta-16h");
  CHECK(k.get("V").str() == "4eta+0h");
  CHECK(k.get("Sigma").str() == "33eta+34h");
  CHECK(k.get("lambda").str() == "4eta+4h");
  CHECK(k.get("delta").str() == "33eta+34h");
  CHECK_THROWS(k.get("Z"));
}

TEST_CASE("eta and h in terms of lambda and delta") {
  // Inverse of [[4,4],[33,34]] by the adjugate, determinant 4.
  PEConstants k = pe_constants();
  CHECK(k.eta == PEClass{Rational(34) / 4, Rational(-4) / 4, PEBasis::LambdaDelta});
  CHECK(k.h == PEClass{Rational(-33) / 4, Rational(4) / 4, PEBasis::LambdaDelta});
  CHECK(convert(k.eta, PEBasis::EtaH) == PEClass{1, 0, PEBasis::EtaH});
  CHECK(convert(k.h, PEBasis::EtaH) == PEClass{0, 1, PEBasis::EtaH});
}

TEST_CASE("basis change round trips") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-50, 50), d(1, 9);
  for (int t = 0; t < 50; ++t) {
    PEClass x{Rational(c(rng)) / d(rng), Rational(c(rng)) / d(rng), PEBasis::LambdaDelta};
    PEClass y = convert(x, PEBasis::EtaH);
    CHECK(convert(y, PEBasis::LambdaDelta) == x);
    // By hand: a lambda + b delta = a(4,4) + b(33,34).
    CHECK(y.a == 4 * x.a + 33 * x.b);
    CHECK(y.b == 4 * x.a + 34 * x.b);
  }
}

TEST_CASE("class parsing") {
  CHECK(parse_pe_class("9l-1d") == PEClass{9, -1, PEBasis::LambdaDelta});
  CHECK(parse_pe_class("9*lambda - delta") == PEClass{9, -1, PEBasis::LambdaDelta});
  CHECK(parse_pe_class("3eta+2h") == PEClass{3, 2, PEBasis::EtaH});
  CHECK(parse_pe_class("Sigma+9/2V") == PEClass{51, 34, PEBasis::EtaH});
  CHECK_THROWS_AS(parse_pe_class("9q"), ParseError);
  CHECK_THROWS_AS(parse_pe_class(""), ParseError);
  CHECK_THROWS_AS(parse_pe_class("3eta 2h"), ParseError);
}

TEST_CASE("the (3,2) linearization") {
  CHECK(convert(parse_pe_class("9l-d"), PEBasis::EtaH).str() == "3eta+2h");
  PEClass s = parse_pe_class("Sigma+9/2V");
  CHECK(proportional(s, parse_pe_class("9l-d")));
  CHECK(s == PEClass{3, 2, PEBasis::EtaH} * 17);
  CHECK(!proportional(parse_pe_class("K"), parse_pe_class("9l-d")));
}

TEST_CASE("pencil singular fibre counts") {
  // Blown-up surface: e = e(S) + base points; fibration over P1 with fibre of genus 4.
  auto expected = [](int e_surface, int base) { return e_surface + base - 2 * (2 - 2 * 4); };
  PencilCount q = pencil_singular_count(PencilConfig::FixedQuadric);
  PencilCount c = pencil_singular_count(PencilConfig::FixedCubic);
  CHECK(q.singular_fibers == expected(4, 18));
  CHECK(c.singular_fibers == expected(9, 12));
  CHECK(q.singular_fibers == 34);
  CHECK(c.singular_fibers == 33);
  CHECK(parse_pencil_config("quadric") == PencilConfig::FixedQuadric);
  CHECK(parse_pencil_config("fixed_cubic_pencil_of_quadrics") == PencilConfig::FixedCubic);
  CHECK_THROWS_AS(parse_pencil_config("plane"), ParseError);
}

TEST_CASE("test curve constraints derive b1 = b2 = 3") {
  TestCurveSolution t = test_curve_constraints();
  CHECK(t.a == 9);
  CHECK(t.b0 == 1);
  CHECK(t.b1 == 3);
  CHECK(t.b2 == 3);
  CHECK(t.weierstrass_scale == 1);
  CHECK(t.pullback().str() == "9l-1d0-3d1-3d2");
  CHECK(t.adjusted().str() == "9l-1d0-1d1-1d2");
  // Elliptic tail test curve: a - 12 b0 + b1 = 0.
  CHECK(t.a - 12 * t.b0 + t.b1 == 0);
  CHECK_THROWS(test_curve_constraints(1, 0));
}

TEST_CASE("alpha from a class on M4") {
  auto a = hassett_keel_alpha(test_curve_constraints().adjusted());
  REQUIRE(a.has_value());
  CHECK(*a == Rational(5) / 9);
  // K + alpha delta with K = 13 lambda - 2 delta is proportional to a lambda - b delta.
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> c(1, 40);
  for (int t = 0; t < 30; ++t) {
    Rational A = c(rng), B = c(rng);
    auto al = hassett_keel_alpha({A, B, B, B});
    REQUIRE(al.has_value());
    CHECK(Rational(13) * (-B) == A * (*al - 2));
  }
  CHECK(!hassett_keel_alpha({9, 1, 3, 3}).has_value());
  CHECK(!hassett_keel_alpha({0, 1, 1, 1}).has_value());
}
