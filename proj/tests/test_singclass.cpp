#include <doctest.h>

#include <algorithm>
#include <random>

#include "canon4/exactalg.hpp"
#include "canon4/singclass.hpp"

using namespace canon4;

namespace {

TwoThreeScheme scheme(const char* q, const char* f) {
  return make_scheme(parse_poly_string(q, scheme_vars()), parse_poly_string(f, scheme_vars()));
}

std::vector<std::string> labels(const SingularityReport& rep) {
  std::vector<std::string> out;
  for (const auto& p : rep.points) out.push_back(p.type.str() + "@" + to_string(normalize_point(p.point)) + "/" + to_string(p.location));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> types(const SingularityReport& rep) {
  std::vector<std::string> out;
  for (const auto& p : rep.points) out.push_back(p.type.str());
  std::sort(out.begin(), out.end());
  return out;
}

// SL4 frame with small entries and its inverse.
RatMatrix random_frame(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  RatMatrix L = RatMatrix::identity(4), U = RatMatrix::identity(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) {
      L(i, j) = c(rng);
      U(j, i) = c(rng);
    }
  return L * U;
}

}  // namespace

TEST_CASE("SingType strings round trip") {
  for (const char* s : {"A1", "A5", "A12", "D4", "Corank2Other", "NonIsolated", "NotHypersurface"})
    CHECK(SingType::parse(s).str() == s);
  CHECK_THROWS(SingType::parse("B3"));
  CHECK(parse_location(to_string(Location::VertexOfQ)) == Location::VertexOfQ);
}

TEST_CASE("local normal forms in two and three variables") {
  std::vector<std::string> xy{"x", "y"}, xyz{"x", "y", "z"};
  for (int k = 1; k <= 12; ++k) {
    std::string g = "x^2 + y^" + std::to_string(k + 1);
    CHECK(classify_local(parse_poly_string(g, xy)).type == SingType::A(k));
    CHECK(classify_local(parse_poly_string(g + " + z^2", xyz)).type == SingType::A(k));
  }
  CHECK(classify_local(parse_poly_string("x^3 + y^3", xy)).type == SingType::D4());
  CHECK(classify_local(parse_poly_string("x^2*y + y^3 + z^2", xyz)).type == SingType::D4());
  CHECK(classify_local(parse_poly_string("x^3 + y^4", xy)).type.kind == SingKind::Corank2Other);
  CHECK(classify_local(parse_poly_string("x^2*y + y^4", xy)).type.kind == SingKind::Corank2Other);
  LocalClass nonred = classify_local(parse_poly_string("x^2", xy), 10);
  CHECK((nonred.type.kind == SingKind::NonIsolated || nonred.type.kind == SingKind::Inconclusive));
}

TEST_CASE("local type is invariant under analytic coordinate changes") {
  std::vector<std::string> xy{"x", "y"};
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-3, 3);
  MultiPoly X = MultiPoly::variable(xy, 0), Y = MultiPoly::variable(xy, 1);
  for (int k = 1; k <= 8; ++k) {
    MultiPoly g = parse_poly_string("x^2 + y^" + std::to_string(k + 1), xy);
    for (int t = 0; t < 4; ++t) {
      int a = c(rng), b = c(rng);
      // x -> x + a y + b y^2, y -> y + x^2: invertible at the origin.
      MultiPoly u = X + Y.scaled(a) + (Y * Y).scaled(b);
      MultiPoly v = Y + X * X;
      MultiPoly h = g.compose({u, v}, 20);
      CHECK(classify_local(h).type == SingType::A(k));
    }
  }
}

TEST_CASE("quadric rank and location") {
  CHECK(quadric_rank(parse_poly_string("x1*x4-x2*x3", scheme_vars())).rank == 4);
  QuadricRank cone = quadric_rank(parse_poly_string("x3^2-x2*x4", scheme_vars()));
  CHECK(cone.rank == 3);
  CHECK(cone.kernel.size() == 1);
  CHECK(quadric_rank(parse_poly_string("x1*x2", scheme_vars())).rank == 2);
  MultiPoly q = parse_poly_string("x3^2-x2*x4", scheme_vars());
  CHECK(locate(q, rational_point({1, 0, 0, 0})) == Location::VertexOfQ);
  CHECK(locate(q, rational_point({0, 0, 0, 1})) == Location::SmoothPointOfQ);
  CHECK(locate(parse_poly_string("x1*x2", scheme_vars()), rational_point({0, 0, 1, 5})) == Location::OnSingularLineOfQ);
}

TEST_CASE("normal form C_{1,1}: A3 at the vertex, A5 at (0:0:0:1)") {
  SingularityReport rep = classify_scheme(scheme("x3^2-x2*x4", "x2^3+x1*x2*x3+x1^2*x4"));
  CHECK(rep.quadric_rank == 3);
  CHECK(rep.complete);
  CHECK(labels(rep) == std::vector<std::string>{"A3@(1:0:0:0)/VertexOfQ", "A5@(0:0:0:1)/SmoothPointOfQ"});
}

TEST_CASE("normal form C_D: three A1 and two D4") {
  TwoThreeScheme C = scheme("x1*x2", "x3^3+x4^3");
  auto K = std::make_shared<const NumberField>("w", std::vector<Rational>{1, 1, 1});
  AlgNum w = AlgNum::generator(K);
  C.field = K;
  C.hints = {rational_point({0, 0, 1, -1}), {0, 0, 1, -w}, {0, 0, 1, w + AlgNum(1)}};
  SingularityReport rep = classify_scheme(C);
  CHECK(types(rep) == std::vector<std::string>{"A1", "A1", "A1", "D4", "D4"});
  CHECK(rep.types_at(Location::OnSingularLineOfQ).size() == 3);
}

TEST_CASE("normal form C_2A5: two A5 on a smooth quadric") {
  SingularityReport rep = classify_scheme(scheme("x1*x4-x2*x3", "x1*x3^2+x2^2*x4"));
  CHECK(rep.quadric_rank == 4);
  CHECK(labels(rep) == std::vector<std::string>{"A5@(0:0:0:1)/SmoothPointOfQ", "A5@(1:0:0:0)/SmoothPointOfQ"});
}

TEST_CASE("degenerate schemes are reported, not classified") {
  SingularityReport simul = classify_scheme(scheme("x3^2-x2*x4", "x2^3+x3^3+x4^3+x1*x2*x3"));
  CHECK(simul.has_not_hypersurface());
  SingularityReport ribbon = classify_scheme(scheme("x3^2-x2*x4", "x2^3-2*x1*x2*x3+x1^2*x4"));
  CHECK(ribbon.non_isolated);
  TwoThreeScheme reducible = scheme("x1*x2", "x1*x3^2");
  CHECK(!is_complete_intersection(reducible));
}

TEST_CASE("verify_singular_point rejects points off the curve") {
  TwoThreeScheme C = scheme("x1*x4-x2*x3", "x1*x3^2+x2^2*x4");
  CHECK_THROWS(verify_singular_point(C, rational_point({1, 1, 1, 2})));
  PointCheck pc = verify_singular_point(C, rational_point({1, 0, 0, 0}));
  CHECK(pc.singular);
  CHECK(!pc.not_hypersurface());
}

TEST_CASE("singular types are invariant under projective frames") {
  std::mt19937_64 rng(13);
  const std::vector<std::pair<const char*, const char*>> cases{
      {"x1*x4-x2*x3", "x1*x3^2+x2^2*x4"},
      {"x3^2-x2*x4", "x2^3+x1*x2*x3+x1^2*x4"},
      {"x1*x4-x2*x3", "x1*x2*x4+x1*x3*x4+x2^3+x3^3"},
  };
  for (const auto& [q, f] : cases) {
    TwoThreeScheme C = scheme(q, f);
    auto base = types(classify_scheme(C));
    for (int t = 0; t < 2; ++t) {
      RatMatrix M = random_frame(rng);
      TwoThreeScheme D = make_scheme(substitute_linear(C.q, M), substitute_linear(C.f, M));
      CHECK(types(classify_scheme(D)) == base);
    }
  }
}

TEST_CASE("F_p scan agrees with reductions of the exact points") {
  TwoThreeScheme C = scheme("x1*x4-x2*x3", "x1*x2*x4+x1*x3*x4+x2^3+x3^3");
  SingularityReport rep = classify_scheme(C);
  for (std::uint32_t p : {101u, 103u, 107u}) {
    auto scan = singular_points_scan(C, p);
    std::vector<FpPoint> red;
    for (const auto& pt : rep.points)
      for (auto& r : reduce_point_mod_p(pt.point, p)) red.push_back(r);
    std::sort(red.begin(), red.end());
    CHECK(scan == red);
  }
}

TEST_CASE("plane test applies to long A_k and vertex A_k, k >= 4") {
  SingularPoint sp;
  sp.type = SingType::A(6);
  CHECK(needs_plane_test(sp));
  sp.type = SingType::A(5);
  CHECK(!needs_plane_test(sp));
  sp.location = Location::VertexOfQ;
  sp.type = SingType::A(4);
  CHECK(needs_plane_test(sp));
  sp.type = SingType::A(3);
  CHECK(!needs_plane_test(sp));
}

TEST_CASE("A6 exemplars carry a resolved plane flag") {
  SingularityReport rep = classify_scheme(scheme("x1^2-x2*x4+x3^2", "4*x1^2*x4+4*x1*x2*x3+4*x1*x2^2+x2^3"));
  auto it = std::find_if(rep.points.begin(), rep.points.end(), [](const SingularPoint& p) { return p.type.is_A(6); });
  REQUIRE(it != rep.points.end());
  REQUIRE(it->plane_component.has_value());
  CHECK(*it->plane_component != Tri::Unknown);
}
