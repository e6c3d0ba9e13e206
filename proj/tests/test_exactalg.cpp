#include <doctest.h>

#include <random>

#include "canon4/exactalg.hpp"
#include "canon4/poly.hpp"
#include "canon4/scalar.hpp"

using namespace canon4;

namespace {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rational(num(rng)) / den(rng);
}

MultiPoly random_form(std::mt19937_64& rng, const std::vector<std::string>& vars, int deg) {
  MultiPoly p(vars);
  std::uniform_int_distribution<int> c(-4, 4);
  std::function<void(int, int, Monomial&)> rec = [&](int i, int left, Monomial& e) {
    if (i + 1 == static_cast<int>(vars.size())) {
      e[i] = left;
      p.add_term(e, Rational(c(rng)));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k, e);
    }
  };
  Monomial e(vars.size(), 0);
  rec(0, deg, e);
  return p;
}

}  // namespace

TEST_CASE("rational parsing and printing are canonical") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0")) == "0");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("number field arithmetic in Q(w), w^2+w+1=0") {
  auto K = std::make_shared<const NumberField>("w", std::vector<Rational>{1, 1, 1});
  AlgNum w = AlgNum::generator(K);
  CHECK(w * w * w == AlgNum(1));
  CHECK(w * w + w + AlgNum(1) == AlgNum(0));
  AlgNum x = w + AlgNum(2);
  CHECK(x * (AlgNum(1) / x) == AlgNum(1));
  CHECK(!w.is_rational());
  CHECK((w * w - w * w).is_rational());
}

TEST_CASE("modular helpers") {
  CHECK(powmod(3, 100, 101) == 1);
  CHECK((invmod(7, 101) * 7) % 101 == 1);
  CHECK(is_prime(101));
  CHECK(!is_prime(91));
  Rational r;
  std::uint64_t p = 1000003;
  std::uint64_t a = (2 * invmod(7, p)) % p;
  REQUIRE(rational_reconstruct(a, p, r));
  CHECK(r == Rational(2) / 7);
  CHECK(reduce_mod(Rational(1) / 2, 101) == 51);
  CHECK_THROWS(reduce_mod(Rational(1) / 101, 101));
}

TEST_CASE("polynomial string round trip") {
  auto vars = var_names("x", 1, 4);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    MultiPoly p = random_form(rng, vars, 3);
    CHECK(parse_poly_string(to_string(p), vars) == p);
  }
  CHECK_THROWS_AS(parse_poly_string("x1*y", vars), std::exception);
}

TEST_CASE("resultant of split binary forms matches the product of root differences") {
  std::mt19937_64 rng(11);
  std::vector<std::string> su{"s", "u"};
  MultiPoly s = MultiPoly::variable(su, 0), u = MultiPoly::variable(su, 1);
  for (int t = 0; t < 25; ++t) {
    std::vector<Rational> a(1 + t % 3), b(1 + (t / 3) % 3);
    for (auto& x : a) x = small_rational(rng);
    for (auto& x : b) x = small_rational(rng);
    MultiPoly f = MultiPoly::constant(su, 1), g = MultiPoly::constant(su, 1);
    for (const auto& x : a) f = f * (s - u.scaled(x));
    for (const auto& x : b) g = g * (s - u.scaled(x));
    Rational expect = 1;
    for (const auto& x : a)
      for (const auto& y : b) expect *= x - y;
    Rational got = resultant_binary(f, g);
    CHECK((got == expect || got == -expect));
    if (a.size() * b.size() % 2 == 0) CHECK(got == expect);
  }
}

TEST_CASE("binary cubic discriminant equals the product of squared root differences") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Rational r1 = small_rational(rng), r2 = small_rational(rng), r3 = small_rational(rng);
    Rational a = 1, b = -(r1 + r2 + r3), c = r1 * r2 + r1 * r3 + r2 * r3, d = -r1 * r2 * r3;
    Rational expect = (r1 - r2) * (r1 - r2) * (r1 - r3) * (r1 - r3) * (r2 - r3) * (r2 - r3);
    CHECK(binary_cubic_discriminant(a, b, c, d) == expect);
  }
}

TEST_CASE("Smith normal form: U M V = D, divisibility chain, unimodular factors") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-6, 6), dim(1, 5);
  for (int t = 0; t < 40; ++t) {
    int r = dim(rng), k = dim(rng);
    IntMatrix M(r, k);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < k; ++j) M(i, j) = c(rng);
    SmithForm S = smith_normal_form(M);
    CHECK(S.U * M * S.V == S.D);
    auto diag = S.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      if (diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    Integer du = det_bareiss(S.U), dv = det_bareiss(S.V);
    CHECK(abs(du) == 1);
    CHECK(abs(dv) == 1);
    if (r == k) {
      Integer prod = 1;
      for (const auto& x : diag) prod *= x;
      CHECK(abs(prod) == abs(det_bareiss(M)));
    }
  }
}

TEST_CASE("linear substitution composes") {
  auto vars = var_names("x", 0, 3);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    MultiPoly F = random_form(rng, vars, 3);
    RatMatrix M(3, 3), N(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        M(i, j) = small_rational(rng);
        N(i, j) = small_rational(rng);
      }
    CHECK(substitute_linear(substitute_linear(F, M), N) == substitute_linear(F, M * N));
    std::vector<Rational> x{small_rational(rng), small_rational(rng), small_rational(rng)};
    CHECK(substitute_linear(F, M).evaluate(x) == F.evaluate(M.apply(x)));
  }
}

TEST_CASE("quadric Gram matrix reproduces the form") {
  auto vars = var_names("x", 1, 4);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    MultiPoly q = random_form(rng, vars, 2);
    RatMatrix G = quadric_gram(q);
    CHECK(G == G.transpose());
    std::vector<Rational> x(4);
    for (auto& v : x) v = small_rational(rng);
    auto Gx = G.apply(x);
    Rational val = 0;
    for (int i = 0; i < 4; ++i) val += x[i] * Gx[i];
    CHECK(val == q.evaluate(x));
    RatMatrix P;
    auto d = congruence_diagonalize(G, P);
    RatMatrix D = P.transpose() * G * P;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(D(i, j) == (i == j ? d[i] : Rational(0)));
  }
}

TEST_CASE("implicit series solution annihilates F to the requested order") {
  std::vector<std::string> vars{"x", "y"};
  const int J = 10;
  for (const char* s : {"y - x - y^2 + x*y", "2*y + x^2 - y^3 + x^3*y", "y - x^2 - x*y^2"}) {
    MultiPoly F = parse_poly_string(s, vars);
    Series phi = series_implicit_solve(F, 1, J);
    MultiPoly X = MultiPoly::variable({"x"}, 0);
    MultiPoly sub = F.compose({X, phi.poly}, J);
    CHECK(sub.is_zero());
  }
}

TEST_CASE("univariate gcd") {
  UniPoly a = uni_mul({-1, 1}, {-2, 1});  // (x-1)(x-2)
  UniPoly b = uni_mul({-1, 1}, {3, 1});   // (x-1)(x+3)
  UniPoly g = uni_gcd(a, b);
  REQUIRE(uni_degree(g) == 1);
  CHECK(g[0] / g[1] == Rational(-1));
  CHECK(uni_derivative({1, 2, 3}) == UniPoly{2, 6});
  Rational root;
  CHECK(rational_sqrt(Rational(9) / 4, root));
  CHECK(root * root == Rational(9) / 4);
  CHECK(!rational_sqrt(Rational(2), root));
}
