#include <doctest.h>

#include <algorithm>
#include <random>

#include "canon4/correspond.hpp"

using namespace canon4;

namespace {

TwoThreeScheme scheme(const char* q, const char* f) {
  return make_scheme(parse_poly_string(q, scheme_vars()), parse_poly_string(f, scheme_vars()));
}

CubicThreefold cubic(const char* F) {
  CubicThreefold X;
  X.F = parse_poly_string(F, cubic_vars());
  return X;
}

const ProjPoint kMarked = rational_point({1, 0, 0, 0, 0});

MultiPoly random_form(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(-3, 3);
  MultiPoly p(scheme_vars());
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      for (int d = 0; a + b + d <= deg; ++d) p.add_term({a, b, d, deg - a - b - d}, Rational(c(rng)));
  return p;
}

}  // namespace

TEST_CASE("cubic of a (2,3) scheme is x0 q + f") {
  TwoThreeScheme C = scheme("x3^2-x2*x4", "x2^3+x1*x2*x3+x1^2*x4");
  CubicThreefold X = curve_to_cubic(C);
  CHECK(X.F == parse_poly_string("x0*(x3^2-x2*x4)+x2^3+x1*x2*x3+x1^2*x4", cubic_vars()));
}

TEST_CASE("projection from the marked point inverts the construction") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 15; ++t) {
    MultiPoly q = random_form(rng, 2), f = random_form(rng, 3);
    if (q.is_zero()) continue;
    TwoThreeScheme C = make_scheme(q, f);
    CHECK(same_scheme(cubic_to_curve(curve_to_cubic(C), kMarked), C));
  }
}

TEST_CASE("projection requires a double point") {
  CubicThreefold fermat = cubic("x0^3+x1^3+x2^3+x3^3+x4^3");
  CHECK_THROWS(cubic_to_curve(fermat, kMarked));
  CHECK_THROWS(cubic_to_curve(fermat, rational_point({1, 1, 0, 0, 0})));
}

TEST_CASE("marked point: A1 over a smooth quadric, A2 over a cone missing the curve at the vertex") {
  CHECK(marked_point_type_direct(curve_to_cubic(scheme("x1*x4-x2*x3", "x1^3+2*x2^3+3*x3^3+5*x4^3"))) == SingType::A(1));
  CHECK(marked_point_type_direct(curve_to_cubic(scheme("x3^2-x2*x4", "x1^3+x2^3+x4^3"))) == SingType::A(2));
}

TEST_CASE("bijection and marked type on the normal forms") {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"x3^2-x2*x4", "x2^3+x1*x2*x3+x1^2*x4"},
      {"x1*x4-x2*x3", "x1*x3^2+x2^2*x4"},
      {"x1*x4-x2*x3", "x1*x2*x4+x1*x3*x4+x2^3+x3^3"},
      {"x3^2-x2*x4", "x1*x2*x3+x1^2*x4"},
  };
  for (const auto& [q, f] : cases) {
    TwoThreeScheme C = scheme(q, f);
    CorrespondenceReport r = correspondence_check(C);
    CHECK(r.bijection);
    // A vertex point of C is absorbed into the marked point.
    auto off_vertex = std::count_if(r.curve.points.begin(), r.curve.points.end(),
                                    [](const SingularPoint& p) { return p.location != Location::VertexOfQ; });
    CHECK(static_cast<long>(r.cubic.size()) == off_vertex);
    for (const auto& off : r.cubic) {
      REQUIRE(off.curve_index >= 0);
      CHECK(off.type == r.curve.points[off.curve_index].type);
    }
    REQUIRE(r.marked.type.has_value());
    CHECK(*r.marked.type == marked_point_type_direct(curve_to_cubic(C)));
  }
}

TEST_CASE("random F_101 instances: singular counts agree off the marked point") {
  std::mt19937_64 rng(101);
  int tested = 0;
  for (int t = 0; t < 30; ++t) {
    RandomInstance inst = random_fp_instance(rng, 101);
    bool line = false;
    auto sx = cubic_singular_scan(curve_to_cubic(inst.C), 101, line);
    if (line) continue;
    auto sc = singular_points_scan(inst.C, 101);
    CHECK(sx.size() == sc.size());
    CHECK(static_cast<int>(sc.size()) >= inst.planted);
    ++tested;
  }
  CHECK(tested >= 20);
}

TEST_CASE("chordal cubic pairs with the ribbon") {
  TwoThreeScheme ribbon = scheme("x3^2-x2*x4", "x2^3-2*x1*x2*x3+x1^2*x4");
  CHECK(chordal_detect(ribbon));
  CHECK(!chordal_detect(scheme("x3^2-x2*x4", "x2^3+x1*x2*x3+x1^2*x4")));
  // F_c is minus the Hankel determinant of the twisted cubic.
  CubicThreefold fc = cubic("x0*(x3^2-x2*x4)+x2^3-2*x1*x2*x3+x1^2*x4");
  MultiPoly hankel = parse_poly_string("x0*x2*x4 + 2*x1*x2*x3 - x2^3 - x0*x3^2 - x1^2*x4", cubic_vars());
  CHECK(fc.F == -hankel);
  CHECK(curve_to_cubic(ribbon).F == fc.F);
}

TEST_CASE("non-ADE singularities make the correspondence refuse") {
  TwoThreeScheme C = scheme("x1*x2", "x3^2*x4+x1^3+x2^3+x1*x4^2");
  MarkedType m = marked_point_type(C);
  CHECK(!m.type.has_value());
  CHECK(!m.refusal.empty());
}
