#include "canon4/correspond.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "canon4/polyio.hpp"

namespace canon4 {

namespace {

std::vector<Monomial> monomials(int nvars, int deg) {
  std::vector<Monomial> out;
  Monomial e(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, deg);
  return out;
}

std::vector<AlgNum> grad(const MultiPoly& P, const ProjPoint& x) {
  std::vector<AlgNum> g;
  for (int i = 0; i < P.nvars(); ++i) g.push_back(P.derivative(i).evaluate(x));
  return g;
}

}  // namespace

CubicThreefold curve_to_cubic(const TwoThreeScheme& C) {
  if (C.q.is_zero()) throw MathError("curve_to_cubic: q = 0 gives a triple point");
  auto v = cubic_vars();
  CubicThreefold X;
  X.name = C.name.empty() ? "" : C.name + " cubic";
  X.F = MultiPoly::variable(v, 0) * C.q.with_vars(v) + C.f.with_vars(v);
  X.marked = rational_point({1, 0, 0, 0, 0});
  return X;
}

TwoThreeScheme cubic_to_curve(const CubicThreefold& X, const ProjPoint& p0) {
  if (p0.size() != 5) throw MathError("cubic_to_curve: point must have 5 coordinates");
  ProjPoint p = normalize_point(p0);
  std::vector<Rational> pr;
  for (const auto& x : p) {
    if (!x.is_rational()) throw MathError("cubic_to_curve: projection point must be rational");
    pr.push_back(x.rational_value());
  }
  int i0 = 0;
  while (is_zero(pr[i0])) ++i0;
  RatMatrix M(5, 5);
  for (int i = 0; i < 5; ++i) M(i, 0) = pr[i];
  int col = 1;
  for (int j = 0; j < 5; ++j) {
    if (j == i0) continue;
    M(j, col++) = 1;
  }
  MultiPoly G = substitute_linear(X.F, M);
  MultiPoly q(scheme_vars()), f(scheme_vars());
  for (const auto& [e, c] : G.terms()) {
    Monomial rest(e.begin() + 1, e.end());
    if (e[0] == 3) throw MathError("cubic_to_curve: point does not lie on X");
    if (e[0] == 2) throw MathError("cubic_to_curve: point has multiplicity 1 on X");
    if (e[0] == 1) q.add_term(rest, c);
    else f.add_term(rest, c);
  }
  if (q.is_zero()) throw MathError("cubic_to_curve: point has multiplicity 3 on X (projection undefined)");
  return make_scheme(q, f, X.name);
}

SingType classify_cubic_point(const CubicThreefold& X, const ProjPoint& pt0, int J) {
  ProjPoint pt = normalize_point(pt0);
  if (!X.F.evaluate(pt).zero()) throw MathError("point " + to_string(pt) + " is not on X");
  for (const auto& g : grad(X.F, pt))
    if (!g.zero()) throw MathError("point " + to_string(pt) + " is a smooth point of X");
  int i0 = 0;
  while (pt[i0].zero()) ++i0;
  auto tv = var_names("t", 1, 4);
  std::vector<AlgPoly> images(5);
  int k = 0;
  for (int j = 0; j < 5; ++j)
    images[j] = j == i0 ? AlgPoly::constant(tv, AlgNum(1)) : AlgPoly::constant(tv, pt[j]) + AlgPoly::variable(tv, k++);
  AlgPoly local = to_alg(X.F).compose(images);
  if (local.homogeneous_part(2).is_zero()) throw MathError("point " + to_string(pt) + " is a triple point of X");
  return classify_local(local, J).type;
}

SingType marked_point_type_direct(const CubicThreefold& X, int J) {
  return classify_cubic_point(X, rational_point({1, 0, 0, 0, 0}), J);
}

MarkedType marked_point_type(const TwoThreeScheme& C, const SingularityReport& rep) {
  MarkedType m;
  if (!rep.complete_intersection || rep.non_isolated) {
    m.refusal = "hypotheses fail: C is not a complete intersection with isolated singularities";
    return m;
  }
  for (const auto& sp : rep.points)
    if (sp.type.kind != SingKind::A && sp.type.kind != SingKind::D4) {
      m.refusal = "hypotheses fail: singularity " + sp.type.str() + " at " + to_string(sp.point) + " is not of type A_k or D4";
      return m;
    }
  QuadricRank qr = quadric_rank(C.q);
  if (qr.rank == 4) {
    m.type = SingType::A(1);
    return m;
  }
  if (qr.rank == 3) {
    ProjPoint v = rational_point(qr.kernel[0]);
    if (!C.f.evaluate(v).zero()) {
      m.type = SingType::A(2);
      m.flags.push_back("k=2 boundary: vertex off C read as A2 at p");
      return m;
    }
    for (const auto& sp : rep.points)
      if (sp.location == Location::VertexOfQ) {
        if (!sp.type.is_A()) break;
        m.type = SingType::A(sp.type.k + 2);
        return m;
      }
    m.refusal = "hypotheses fail: vertex singularity is not of type A_k";
    return m;
  }
  if (qr.rank == 2) {
    // f on the singular line as a binary cubic in (s,u).
    std::vector<std::string> su{"s", "u"};
    std::vector<MultiPoly> images;
    for (int j = 0; j < 4; ++j)
      images.push_back(MultiPoly::variable(su, 0, qr.kernel[0][j]) + MultiPoly::variable(su, 1, qr.kernel[1][j]));
    MultiPoly fl = C.f.compose(images);
    if (fl.is_zero()) {
      m.refusal = "hypotheses fail: the singular line of Q lies on C";
      return m;
    }
    Rational disc = binary_cubic_discriminant(fl.coeff({3, 0}), fl.coeff({2, 1}), fl.coeff({1, 2}), fl.coeff({0, 3}));
    if (is_zero(disc)) {
      m.refusal = "hypotheses fail: C meets the singular line of Q in fewer than three distinct points";
      return m;
    }
    m.type = SingType::D4();
    return m;
  }
  m.refusal = "hypotheses fail: rank Q <= 1";
  return m;
}

MarkedType marked_point_type(const TwoThreeScheme& C) { return marked_point_type(C, classify_scheme(C)); }

std::vector<FpPoint> cubic_singular_scan(const CubicThreefold& X, std::uint32_t p, bool& line_singular) {
  line_singular = false;
  std::array<MultiPoly, 4> parts;
  for (auto& pp : parts) pp = MultiPoly(scheme_vars());
  for (const auto& [e, c] : X.F.terms()) parts[e[0]].add_term(Monomial(e.begin() + 1, e.end()), c);
  std::array<PolyFp, 4> Fk;
  std::array<std::array<PolyFp, 4>, 4> dFk;
  for (int k = 0; k < 4; ++k) {
    Fk[k] = PolyFp(parts[k], p);
    for (int i = 0; i < 4; ++i) dFk[k][i] = Fk[k].derivative(i);
  }
  std::vector<FpPoint> out;
  for_each_projective_point(4, p, [&](const FpPoint& x) {
    std::uint64_t v[4], d[4][4];
    for (int k = 1; k < 4; ++k) v[k] = Fk[k].eval(x);
    if (v[2] == 0 && v[3] == 0 && v[1] != 0) return;
    v[0] = Fk[0].eval(x);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i) d[k][i] = dFk[k][i].eval(x);
    int hits = 0;
    for (std::uint64_t x0 = 0; x0 < p; ++x0) {
      std::uint64_t pw[4] = {1, x0, x0 * x0 % p, x0 * x0 % p * x0 % p};
      std::uint64_t F = 0, d0 = 0;
      for (int k = 0; k < 4; ++k) F = (F + v[k] * pw[k]) % p;
      if (F) continue;
      for (int k = 1; k < 4; ++k) d0 = (d0 + k * v[k] % p * pw[k - 1]) % p;
      if (d0) continue;
      bool sing = true;
      for (int i = 0; i < 4 && sing; ++i) {
        std::uint64_t di = 0;
        for (int k = 0; k < 4; ++k) di = (di + d[k][i] * pw[k]) % p;
        sing = di == 0;
      }
      if (!sing) continue;
      ++hits;
      FpPoint y{static_cast<std::uint32_t>(x0), x[0], x[1], x[2], x[3]};
      out.push_back(normalize_fp(y, p));
    }
    if (hits == static_cast<int>(p)) line_singular = true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

CorrespondenceReport correspondence_check(const TwoThreeScheme& C, const ClassifyOptions& opt) {
  CorrespondenceReport r;
  r.curve = classify_scheme(C, opt);
  if (r.curve.non_isolated || !r.curve.complete_intersection) {
    r.non_isolated = true;
    r.notes.push_back("non-isolated singularities: the chordal check applies");
    return r;
  }
  CubicThreefold X = curve_to_cubic(C);
  bool types_match = true;
  for (std::size_t i = 0; i < r.curve.points.size(); ++i) {
    const auto& sp = r.curve.points[i];
    if (sp.location != Location::SmoothPointOfQ) {
      r.notes.push_back("point " + to_string(sp.point) + " (" + to_string(sp.location) + ") is absorbed into the marked point");
      continue;
    }
    auto gq = grad(C.q, sp.point), gf = grad(C.f, sp.point);
    int j = 0;
    while (gq[j].zero()) ++j;
    AlgNum lambda = gf[j] / gq[j];
    ProjPoint xp{-lambda};
    for (const auto& c : sp.point) xp.push_back(c);
    OffPointSingularity o;
    o.point = normalize_point(xp);
    o.curve_index = static_cast<int>(i);
    o.type = classify_cubic_point(X, o.point, opt.J);
    if (o.type != sp.type) types_match = false;
    r.cubic.push_back(o);
  }
  bool some_equal = false, all_subset = true, any_scan = false;
  for (std::uint32_t p : opt.primes) {
    std::vector<FpPoint> scan;
    bool line = false;
    try {
      scan = cubic_singular_scan(X, p, line);
    } catch (const MathError&) {
      continue;
    }
    any_scan = true;
    if (line) {
      r.non_isolated = true;
      r.notes.push_back("X is singular along a line through the marked point at p = " + std::to_string(p));
    }
    std::vector<FpPoint> img;
    for (const auto& o : r.cubic)
      for (auto& x : reduce_point_mod_p(o.point, p))
        if (std::find(img.begin(), img.end(), x) == img.end()) img.push_back(x);
    std::sort(img.begin(), img.end());
    if (img == scan) some_equal = true;
    for (const auto& x : img) all_subset = all_subset && std::binary_search(scan.begin(), scan.end(), x);
  }
  r.marked = marked_point_type(C, r.curve);
  r.bijection = types_match && any_scan && some_equal && all_subset && !r.non_isolated;
  if (!types_match) r.notes.push_back("type mismatch between C and X");
  return r;
}

namespace {

using I128 = __int128;

std::vector<std::pair<Monomial, Integer>> integral_terms(const MultiPoly& p) {
  std::vector<Rational> cs;
  for (const auto& [e, c] : p.terms()) cs.push_back(c);
  Integer den = lcm_of_denominators(cs);
  std::vector<std::pair<Monomial, Integer>> out;
  for (const auto& [e, c] : p.terms()) {
    Rational s = c * den;
    out.emplace_back(e, s.get_num());
  }
  return out;
}

bool vanishes_small(const std::vector<std::pair<Monomial, Integer>>& t, const int* x) {
  I128 acc = 0;
  for (const auto& [e, c] : t) {
    I128 v = c.get_si();
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) v *= x[i];
    acc += v;
  }
  return acc == 0;
}

MultiPoly from_coeffs(const std::vector<Monomial>& mons, const std::vector<Rational>& c) {
  MultiPoly p(scheme_vars());
  for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], c[i]);
  return p;
}

}  // namespace

bool chordal_detect(const TwoThreeScheme& C) {
  if (quadric_rank(C.q).rank < 3 || C.f.is_zero()) return false;
  auto tq = integral_terms(C.q), tf = integral_terms(C.f);
  for (const auto& t : tq)
    if (!mpz_fits_slong_p(t.second.get_mpz_t())) return false;
  for (const auto& t : tf)
    if (!mpz_fits_slong_p(t.second.get_mpz_t())) return false;
  const int B = 8;
  std::vector<std::array<int, 4>> pts;
  int x[4];
  for (x[0] = -B; x[0] <= B; ++x[0])
    for (x[1] = -B; x[1] <= B; ++x[1])
      for (x[2] = -B; x[2] <= B; ++x[2])
        for (x[3] = -B; x[3] <= B; ++x[3]) {
          int lead = 0;
          while (lead < 4 && x[lead] == 0) ++lead;
          if (lead == 4 || x[lead] < 0) continue;
          int g = 0;
          for (int v : x) g = std::gcd(g, std::abs(v));
          if (g != 1) continue;
          if (vanishes_small(tq, x) && vanishes_small(tf, x)) pts.push_back({x[0], x[1], x[2], x[3]});
        }
  if (pts.size() < 7) return false;
  auto mons2 = monomials(4, 2), mons3 = monomials(4, 3);
  RatMatrix E(static_cast<int>(pts.size()), 10);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int j = 0; j < 10; ++j) {
      long v = 1;
      for (int k = 0; k < 4; ++k)
        for (int r = 0; r < mons2[j][k]; ++r) v *= pts[i][k];
      E(static_cast<int>(i), j) = Rational(v);
    }
  auto I2 = kernel(E);
  if (I2.size() != 3) return false;
  std::vector<MultiPoly> Q;
  for (const auto& v : I2) Q.push_back(from_coeffs(mons2, v));
  // Linear syzygies among the three quadrics.
  std::vector<MultiPoly> prods;
  for (const auto& Qi : Q)
    for (int k = 0; k < 4; ++k) prods.push_back(MultiPoly::variable(scheme_vars(), k) * Qi);
  RatMatrix S(20, 12);
  for (int c = 0; c < 12; ++c)
    for (int r = 0; r < 20; ++r) S(r, c) = prods[c].coeff(mons3[r]);
  if (kernel(S).size() != 2) return false;
  RatMatrix Qq(10, 4);
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 10; ++r) Qq(r, c) = Q[c].coeff(mons2[r]);
  for (int r = 0; r < 10; ++r) Qq(r, 3) = C.q.coeff(mons2[r]);
  if (rank(Qq) != 3) return false;
  RatMatrix Sf(20, 13);
  for (int c = 0; c < 12; ++c)
    for (int r = 0; r < 20; ++r) Sf(r, c) = S(r, c);
  for (int r = 0; r < 20; ++r) Sf(r, 12) = C.f.coeff(mons3[r]);
  if (rank(Sf) != rank(S)) return false;
  int checked = 0;
  for (std::uint32_t p : {101u, 103u, 107u}) {
    try {
      PolyFp q(C.q, p), f(C.f, p);
      std::vector<PolyFp> qs;
      for (const auto& Qi : Q) qs.emplace_back(Qi, p);
      std::size_t count = 0;
      bool inside = true;
      for_each_projective_point(4, p, [&](const FpPoint& y) {
        if (q.eval(y) || f.eval(y)) return;
        ++count;
        for (const auto& Qi : qs) inside = inside && Qi.eval(y) == 0;
      });
      if (count != p + 1 || !inside) return false;
      ++checked;
    } catch (const MathError&) {
      continue;
    }
  }
  return checked > 0;
}

namespace {

// Random solution of A x = b over F_p, or false when inconsistent.
bool solve_fp(std::vector<std::vector<std::uint64_t>> A, std::vector<std::uint64_t> b, std::uint32_t p,
              std::mt19937_64& rng, std::vector<std::uint64_t>& x) {
  int m = static_cast<int>(A.size()), n = m ? static_cast<int>(A[0].size()) : 0;
  for (int i = 0; i < m; ++i) A[i].push_back(b[i]);
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int s = -1;
    for (int i = r; i < m; ++i)
      if (A[i][c] % p) {
        s = i;
        break;
      }
    if (s < 0) continue;
    std::swap(A[r], A[s]);
    std::uint64_t inv = invmod(A[r][c], p);
    for (auto& v : A[r]) v = v * inv % p;
    for (int i = 0; i < m; ++i) {
      if (i == r || A[i][c] == 0) continue;
      std::uint64_t f = A[i][c];
      for (int j = 0; j <= n; ++j) A[i][j] = (A[i][j] + (p - f) * A[r][j]) % p;
    }
    piv.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (A[i][n]) return false;
  x.assign(n, 0);
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) x[c] = rng() % p;
  for (int k = static_cast<int>(piv.size()) - 1; k >= 0; --k) {
    std::uint64_t v = A[k][n];
    for (int c = 0; c < n; ++c)
      if (c != piv[k] && !is_piv[c]) v = (v + (p - A[k][c]) * x[c]) % p;
    x[piv[k]] = v;
  }
  return true;
}

std::uint64_t eval_mon(const Monomial& e, const std::vector<std::uint64_t>& x, std::uint32_t p) {
  std::uint64_t v = 1;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < e[i]; ++k) v = v * x[i] % p;
  return v;
}

}  // namespace

RandomInstance random_fp_instance(std::mt19937_64& rng, std::uint32_t p) {
  auto vars = scheme_vars();
  auto mons3 = monomials(4, 3);
  for (;;) {
    bool rank3 = rng() % 4 == 0;
    // q = sum d_i l_i^2 with independent random linear forms l_i.
    std::vector<std::vector<std::uint64_t>> L(4, std::vector<std::uint64_t>(4));
    for (auto& row : L)
      for (auto& v : row) v = rng() % p;
    MultiPoly q(vars);
    for (int i = 0; i < (rank3 ? 3 : 4); ++i) {
      MultiPoly l(vars);
      for (int j = 0; j < 4; ++j) l += MultiPoly::variable(vars, j, Rational(static_cast<long>(L[i][j])));
      q += (l * l).scaled(Rational(static_cast<long>(1 + rng() % (p - 1))));
    }
    q = q.map_coeffs<Rational>([&](const Rational& c) { return Rational(static_cast<unsigned long>(reduce_mod(c, p))); });
    PolyFp qf(q, p);
    std::array<PolyFp, 4> dq;
    for (int i = 0; i < 4; ++i) dq[i] = qf.derivative(i);
    // The forms must be independent mod p for the advertised rank.
    RatMatrix Lm(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) Lm(i, j) = Rational(static_cast<long>(L[i][j]));
    Integer dz = det_bareiss(to_int(Lm)) % Integer(p);
    if (sgn(dz) == 0) continue;
    int nodes = static_cast<int>(rng() % 4);
    std::vector<std::vector<std::uint64_t>> A;
    std::vector<std::uint64_t> b;
    int planted = 0;
    for (int j = 0; j < nodes; ++j) {
      std::vector<std::uint64_t> P(4);
      bool found = false;
      for (int tries = 0; tries < 20000 && !found; ++tries) {
        for (auto& v : P) v = rng() % p;
        std::vector<std::uint32_t> P32(P.begin(), P.end());
        if (std::all_of(P.begin(), P.end(), [](std::uint64_t v) { return v == 0; })) continue;
        if (qf.eval(P32) != 0) continue;
        bool smooth = false;
        for (int i = 0; i < 4; ++i) smooth = smooth || dq[i].eval(P32) != 0;
        found = smooth;
      }
      if (!found) break;
      std::vector<std::uint32_t> P32(P.begin(), P.end());
      std::uint64_t lambda = 1 + rng() % (p - 1);
      for (int i = 0; i < 4; ++i) {
        std::vector<std::uint64_t> row(20);
        for (int c = 0; c < 20; ++c) {
          const Monomial& e = mons3[c];
          if (e[i] == 0) continue;
          Monomial d = e;
          --d[i];
          row[c] = e[i] * eval_mon(d, P, p) % p;
        }
        A.push_back(row);
        b.push_back(lambda * dq[i].eval(P32) % p);
      }
      ++planted;
    }
    std::vector<std::uint64_t> coef(20);
    if (A.empty()) {
      for (auto& v : coef) v = rng() % p;
    } else if (!solve_fp(A, b, p, rng, coef)) {
      continue;
    }
    MultiPoly f(vars);
    for (int c = 0; c < 20; ++c) f.add_term(mons3[c], Rational(static_cast<long>(coef[c])));
    PolyFp ff(f, p);
    if (ff.is_zero()) continue;
    if (rank3) {
      // Vertex of a rank-3 form: the kernel of the first three forms mod p.
      std::vector<std::vector<std::uint64_t>> K(3, std::vector<std::uint64_t>(4));
      for (int i = 0; i < 3; ++i) K[i] = L[i];
      std::vector<std::uint64_t> v;
      std::mt19937_64 r2(rng());
      if (!solve_fp(K, {0, 0, 0}, p, r2, v)) continue;
      std::vector<std::uint32_t> v32(v.begin(), v.end());
      if (std::all_of(v.begin(), v.end(), [](std::uint64_t t) { return t == 0; })) continue;
      if (ff.eval(v32) == 0) continue;
    }
    RandomInstance inst;
    inst.C.name = "random";
    inst.C.q = q;
    inst.C.f = f;
    inst.planted = planted;
    return inst;
  }
}

}  // namespace canon4
