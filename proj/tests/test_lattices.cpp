#include <doctest.h>

#include <random>

#include "canon4/lattices.hpp"
#include "canon4/polyio.hpp"

using namespace canon4;

namespace {

IntMatrix mpow(const IntMatrix& M, int k) {
  IntMatrix R = IntMatrix::identity(M.rows());
  for (int i = 0; i < k; ++i) R = R * M;
  return R;
}

// Independent form and fixed-point checks: rho^T G rho = G, rho^3 = 1, det(rho - 1) != 0.
void check_rho(const Lattice& L, const IntMatrix& rho) {
  const IntMatrix& G = L.gram;
  CHECK((rho.transpose() * G * rho == G || rho * G * rho.transpose() == G));
  CHECK(mpow(rho, 3) == IntMatrix::identity(L.rank()));
  CHECK(det_bareiss(rho - IntMatrix::identity(L.rank())) != 0);
  CHECK(check_isometry(G, rho).all());
}

}  // namespace

TEST_CASE("root counts of the irreducible root lattices") {
  for (int n = 1; n <= 8; ++n) CHECK(roots(make_lattice("A" + std::to_string(n))).size() == static_cast<std::size_t>(n * (n + 1)));
  for (int n = 4; n <= 8; ++n)
    CHECK(roots(make_lattice("D" + std::to_string(n))).size() == static_cast<std::size_t>(2 * n * (n - 1)));
  CHECK(roots(make_lattice("E6")).size() == 72);
  CHECK(roots(make_lattice("E7")).size() == 126);
  CHECK(roots(make_lattice("E8")).size() == 240);
  CHECK(classical_root_count('E', 7) == 126);
  CHECK(classical_root_count('E', 9) == -1);
}

TEST_CASE("E8 theta series: 2160 vectors of norm 4") {
  CHECK(short_vectors(make_lattice("E8").positive_gram(), 4).size() == 2160);
}

TEST_CASE("root systems of direct sums") {
  std::mt19937_64 rng(4);
  const std::vector<std::string> pieces{"A1", "A2", "A3", "D4", "E6"};
  for (int t = 0; t < 10; ++t) {
    std::string a = pieces[rng() % pieces.size()], b = pieces[rng() % pieces.size()];
    RootSystem rs = root_system(make_lattice(a + "+" + b));
    CHECK(rs.root_count == root_system(make_lattice(a)).root_count + root_system(make_lattice(b)).root_count);
    CHECK(rs.components.size() == 2);
    CHECK(!rs.has_unknown());
  }
  CHECK(root_system(make_lattice("E6^2+A2^2")).label() == "A2^2+E6^2");
}

TEST_CASE("lattice expressions and sign conventions") {
  Lattice u = make_lattice("U(3)");
  CHECK(u.gram == IntMatrix{{0, 3}, {3, 0}});
  CHECK(make_lattice("A2").gram == IntMatrix{{-2, 1}, {1, -2}});
  CHECK(make_lattice("A2", Sign::Positive).gram == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(make_lattice("E8^2+U+U(3)").rank() == 20);
  CHECK_THROWS_AS(make_lattice("F4"), ParseError);
  CHECK_THROWS_AS(make_lattice("E8+"), ParseError);
  CHECK_THROWS(make_lattice("U").positive_gram());
}

TEST_CASE("discriminant group order equals |det|") {
  for (const char* e : {"A1", "A2", "A5", "D4", "D5", "E6", "E7", "E8", "U(3)+E8", "E6+A2", "E8^2+U+U(3)"}) {
    Lattice L = make_lattice(e);
    Integer order = 1;
    for (const auto& x : discriminant_group(L)) order *= x;
    CHECK(order == abs(det_bareiss(L.gram)));
  }
  auto d = discriminant_group(make_lattice("D4"));
  CHECK(d == std::vector<Integer>{2, 2});
  CHECK(discriminant_group(make_lattice("E8")).empty());
  CHECK(discriminant_group(make_lattice("U(3)+E8")) == std::vector<Integer>{3, 3});
}

TEST_CASE("orthogonal complements in E8") {
  Lattice E8 = make_lattice("E8");
  for (const auto& emb : {a2_in_e8(), e6_in_e8()}) {
    Complement c = orthogonal_complement(E8, emb.rows);
    CHECK(c.lattice.rank() + emb.rows.rows() == 8);
    IntMatrix cross = emb.rows * E8.gram * c.basis.transpose();
    for (int i = 0; i < cross.rows(); ++i)
      for (int j = 0; j < cross.cols(); ++j) CHECK(cross(i, j) == 0);
    CHECK(c.saturated);
  }
  CHECK(root_system(orthogonal_complement(E8, a2_in_e8().rows).lattice).label() == "E6");
  CHECK(root_system(orthogonal_complement(E8, e6_in_e8().rows).lattice).label() == "A2");
  CHECK(restricted_gram(E8, a2_perp_e6_in_e8().rows) == make_lattice("A2").gram);
  CHECK(root_system(orthogonal_complement(make_lattice("E6"), a2_in_e6().rows).lattice).label() == "A2^2");
}

TEST_CASE("Coxeter elements have the Coxeter number as order") {
  for (auto [name, h] : std::vector<std::pair<const char*, int>>{{"A2", 3}, {"D4", 6}, {"E6", 12}, {"E8", 30}}) {
    IntMatrix c = coxeter_element(make_lattice(name, Sign::Positive).gram);
    int n = c.rows();
    CHECK(mpow(c, h) == IntMatrix::identity(n));
    for (int k = 1; k < h; ++k)
      if (h % k == 0) CHECK(mpow(c, k) != IntMatrix::identity(n));
  }
}

TEST_CASE("fixed-point-free isometries of order three") {
  for (const char* e : {"A2", "D4", "E6", "E8", "E6+A2", "A2^2+D4"}) {
    Lattice L = make_lattice(e);
    FpfResult r = fpf_order3(L);
    CHECK(r.outcome == FpfOutcome::Found);
    REQUIRE(r.rho.has_value());
    check_rho(L, *r.rho);
  }
  for (const char* e : {"A1", "A3", "A4", "D5"}) CHECK(fpf_order3(make_lattice(e)).outcome == FpfOutcome::Nonexistent);
  FpfResult a4 = fpf_order3(make_lattice("A4"));
  CHECK(a4.automorphisms_seen == 240);
  CHECK(fpf_order3(make_lattice("U+E8")).outcome == FpfOutcome::Inconclusive);
}

TEST_CASE("characteristic polynomial of the A2 rotation") {
  CHECK(characteristic_polynomial(IntMatrix{{0, -1}, {1, -1}}) == std::vector<Rational>{1, 1, 1});
}

TEST_CASE("Heegner divisor types") {
  auto hs = heegner_types();
  REQUIRE(hs.size() == 3);
  for (const auto& h : hs) {
    CHECK(h.system.label() == h.expected);
    CHECK(h.roots_r == 78);
    CHECK(h.contains_r);
    CHECK(h.eisenstein);
    CHECK(restricted_gram(h.lattice, h.r_embedding.rows) == make_lattice("E6+A2").gram);
  }
  CHECK(hs[0].roots_mperp + hs[1].roots_mperp + hs[2].roots_mperp == 96 + 84 + 246);
}

TEST_CASE("Borcherds vanishing orders and coefficients") {
  auto rows = borcherds_orders();
  REQUIRE(rows.size() == 3);
  std::vector<std::string> v, c;
  for (const auto& b : rows) {
    CHECK(b.vanishing == Rational(b.roots_mperp - b.roots_r) / 2);
    CHECK(b.coefficient == b.vanishing / b.ramification);
    v.push_back(to_string(b.vanishing));
    c.push_back(to_string(b.coefficient));
  }
  CHECK(v == std::vector<std::string>{"3", "9", "84"});
  CHECK(c == std::vector<std::string>{"1", "9/2", "14"});
  CHECK(rows[0].flagged);
  CHECK(rows[0].stated_vanishing == "2");
  CHECK(!rows[1].flagged);
  CHECK(!rows[2].flagged);
}

TEST_CASE("cusp labels") {
  auto cs = cusp_invariants();
  REQUIRE(cs.size() == 3);
  for (const auto& c : cs) CHECK(c.complement.label() == c.expected);
  CHECK(cs[0].expected == "A2^2+E6^2");
  CHECK(cs[1].expected == "A2+E6+E8");
  CHECK(cs[2].expected == "E8^2");
  CHECK(!cs[0].meets_hh);
  CHECK(cs[1].meets_hh);
  CHECK(!cs[2].meets_hh);
}
