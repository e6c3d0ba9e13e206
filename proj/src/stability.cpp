#include "canon4/stability.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

namespace canon4 {

OnePS OnePS::sum_zero(std::vector<Integer> w) {
  Integer s = 0;
  for (const auto& x : w) s += x;
  if (s != 0) throw MathError("sum-zero 1-PS with weight sum " + to_string(s));
  return {std::move(w), Convention::SumZero};
}

OnePS OnePS::r_weights(std::vector<Integer> r) {
  for (const auto& x : r)
    if (sgn(x) < 0) throw MathError("r-convention weights must be nonnegative");
  return {std::move(r), Convention::RWeights};
}

OnePS OnePS::to_sum_zero() const {
  if (tag == Convention::SumZero) return *this;
  Integer s = 0;
  for (const auto& x : w) s += x;
  OnePS o;
  Integer n1 = static_cast<long>(w.size());
  for (const auto& x : w) o.w.push_back(n1 * x - s);
  return o;
}

std::string OnePS::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s + ")";
}

std::string to_string(Convention c) { return c == Convention::SumZero ? "sum-zero" : "r-weights"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Stable: return "Stable";
    case Status::StrictlySemistable: return "StrictlySemistable";
    case Status::Unstable: return "Unstable";
    case Status::NotApplicable: return "NotApplicable";
  }
  return "?";
}

namespace {

StabilityVerdict make(Status s, std::vector<std::string> reasons) {
  StabilityVerdict v;
  v.status = s;
  v.reasons = std::move(reasons);
  return v;
}

const char* kNotOneNotTwo = "not(1,2)";

bool line_meets_three(const TwoThreeScheme& C) {
  QuadricRank qr = quadric_rank(C.q);
  if (qr.rank != 2) throw MathError("singular line requires rank Q = 2");
  std::vector<std::string> su{"s", "u"};
  std::vector<MultiPoly> images;
  for (int j = 0; j < 4; ++j)
    images.push_back(MultiPoly::variable(su, 0, qr.kernel[0][j]) + MultiPoly::variable(su, 1, qr.kernel[1][j]));
  MultiPoly fl = C.f.compose(images);
  if (fl.is_zero()) return false;
  return !is_zero(binary_cubic_discriminant(fl.coeff({3, 0}), fl.coeff({2, 1}), fl.coeff({1, 2}), fl.coeff({0, 3})));
}

}  // namespace

VerdictFlags verdict_flags(const TwoThreeScheme& C, const SingularityReport& rep) {
  VerdictFlags fl;
  if (rep.non_isolated && rep.complete_intersection) fl.ribbon = chordal_detect(C);
  if (rep.quadric_rank == 2 && rep.complete_intersection) fl.line_meets_three = line_meets_three(C);
  return fl;
}

std::string degeneration_target(const SingularityReport& rep, int rankQ) {
  bool d4 = false, a5_or_vertex_a3 = false;
  for (const auto& sp : rep.points) {
    if (sp.type.kind == SingKind::D4) d4 = true;
    if (sp.location == Location::SmoothPointOfQ && sp.type.is_A(5)) a5_or_vertex_a3 = true;
    if (sp.location == Location::VertexOfQ && sp.type.is_A(3)) a5_or_vertex_a3 = true;
  }
  if (d4 || rankQ == 2) return kOrbitCD;
  if (rankQ >= 3 && a5_or_vertex_a3) return kOrbitC2A5OrCAB;
  return kOrbitRibbon;
}

namespace {

std::string minimal_orbit(const SingularityReport& rep, int rankQ) {
  std::string t = degeneration_target(rep, rankQ);
  if (t != kOrbitC2A5OrCAB) return t;
  auto smooth = rep.types_at(Location::SmoothPointOfQ);
  auto vertex = rep.types_at(Location::VertexOfQ);
  auto count = [&](const SingType& s) { return std::count(smooth.begin(), smooth.end(), s); };
  if (rankQ == 4 && smooth.size() == 2 && count(SingType::A(5)) == 2) return kOrbitC2A5;
  if (rankQ == 3 && vertex.size() == 1 && vertex[0].is_A(3) && count(SingType::A(5)) == 1 &&
      smooth.size() == 1 + static_cast<std::size_t>(count(SingType::A(1))) && count(SingType::A(1)) <= 1)
    return kOrbitCABGeneric;
  return t;
}

}  // namespace

StabilityVerdict git_verdict(const SingularityReport& rep, int rankQ, const VerdictFlags& flags) {
  if (!rep.complete_intersection) return make(Status::Unstable, {"0", "q and f share a component; not a complete intersection"});
  if (rep.non_isolated) {
    if (flags.ribbon) {
      auto v = make(Status::StrictlySemistable, {"0", "non-reduced with twisted cubic support: a genus 4 ribbon"});
      v.minimal_orbit = kOrbitRibbon;
      return v;
    }
    return make(Status::Unstable, {"0", "non-reduced and not a ribbon"});
  }
  if (rep.has_not_hypersurface()) {
    for (const auto& sp : rep.points)
      if (sp.type.kind == SingKind::NotHypersurface)
        return make(Status::Unstable, {"0'", "quadric and cubic simultaneously singular at " + to_string(sp.point)});
  }
  if (!rep.complete) return make(Status::NotApplicable, {"pre", "exact singular points do not account for the scanned locus"});
  if (rankQ <= 1) return make(Status::Unstable, {"0", "rank Q <= 1"});
  if (rankQ == 2) {
    if (!flags.line_meets_three) return make(Status::NotApplicable, {"2.iii", "singular-line flag missing"});
    if (*flags.line_meets_three) {
      auto v = make(Status::StrictlySemistable, {"2.iii", "rank Q = 2 and C meets Sing(Q) in three distinct points"});
      v.minimal_orbit = minimal_orbit(rep, rankQ);
      return v;
    }
    return make(Status::Unstable, {kNotOneNotTwo, "rank Q = 2 and C does not meet Sing(Q) in three distinct points"});
  }
  const std::string prefix = rankQ == 4 ? "2.i" : "2.ii";
  std::optional<SingType> vertex;
  for (const auto& sp : rep.points) {
    if (sp.type.kind == SingKind::Inconclusive)
      return make(Status::NotApplicable, {prefix, "type " + sp.type.str() + " at " + to_string(sp.point)});
    if (sp.location == Location::VertexOfQ) vertex = sp.type;
  }
  if (vertex && !vertex->is_A())
    return make(Status::Unstable, {kNotOneNotTwo, "vertex singularity " + vertex->str() + " is not of type A_k"});
  bool alpha = false, beta = false;
  for (const auto& sp : rep.points) {
    bool smooth = sp.location == Location::SmoothPointOfQ;
    if (smooth && !sp.type.is_A() && sp.type.kind != SingKind::D4)
      return make(Status::Unstable, {kNotOneNotTwo, "singularity " + sp.type.str() + " at " + to_string(sp.point)});
    if (needs_plane_test(sp)) {
      if (!sp.plane_component || *sp.plane_component == Tri::Unknown)
        return make(Status::NotApplicable, {prefix + ".beta", "plane-component flag unknown at " + to_string(sp.point)});
      if (*sp.plane_component == Tri::True)
        return make(Status::Unstable, {kNotOneNotTwo, sp.type.str() + " at " + to_string(sp.point) + " lies on a plane component"});
      beta = true;
    }
    if (smooth && (sp.type.kind == SingKind::D4 || sp.type.is_A(5))) alpha = true;
    if (!smooth && sp.type.is_A(3)) alpha = true;
  }
  if (alpha || beta) {
    StabilityVerdict v;
    v.status = Status::StrictlySemistable;
    if (alpha) v.reasons.push_back(prefix + ".alpha");
    if (beta) v.reasons.push_back(prefix + ".beta");
    v.minimal_orbit = minimal_orbit(rep, rankQ);
    return v;
  }
  for (const auto& sp : rep.points) {
    int bound = sp.location == Location::VertexOfQ ? 2 : 4;
    if (!sp.type.is_A() || sp.type.k > bound)
      return make(Status::Unstable, {kNotOneNotTwo, "singularity " + sp.type.str() + " at " + to_string(sp.point)});
  }
  return make(Status::Stable, {"1"});
}

StabilityVerdict git_verdict(const TwoThreeScheme& C, const ClassifyOptions& opt) {
  SingularityReport rep = classify_scheme(C, opt);
  return git_verdict(rep, rep.quadric_rank, verdict_flags(C, rep));
}

Rational torus_weight_min(const MultiPoly& F, const OnePS& w0) {
  if (F.is_zero()) throw MathError("torus weight of the zero polynomial");
  OnePS w = w0.to_sum_zero();
  if (static_cast<int>(w.w.size()) != F.nvars()) throw MathError("1-PS length does not match the variable count");
  std::optional<Rational> best;
  for (const auto& [e, c] : F.terms()) {
    Integer s = 0;
    for (int i = 0; i < F.nvars(); ++i) s += w.w[i] * e[i];
    if (!best || Rational(s) < *best) best = Rational(s);
  }
  return *best;
}

std::vector<std::vector<Integer>> support_exponents(const MultiPoly& F) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<Integer>> out;
  for (const auto& [e, c] : F.terms())
    if (seen.insert(e).second) out.emplace_back(e.begin(), e.end());
  return out;
}

namespace {

Rational min_weight(const std::vector<std::vector<Integer>>& rows, const std::vector<Integer>& w) {
  std::optional<Integer> best;
  for (const auto& a : rows) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * w[i];
    if (!best || s < *best) best = s;
  }
  return Rational(*best);
}

std::optional<Certificate> certify(const std::vector<std::vector<Integer>>& rows, int n) {
  if (rows.empty()) return std::nullopt;
  auto w = positive_weight_point(rows);
  if (w.empty()) return std::nullopt;
  Certificate c;
  c.w = OnePS::sum_zero(primitive_integer(w));
  c.frame = RatMatrix::identity(n);
  c.min_weight = min_weight(rows, c.w.w);
  if (sgn(c.min_weight) <= 0) throw MathError("internal: LP certificate without positive weight");
  return c;
}

}  // namespace

std::optional<Certificate> destabilize_in_frame(const MultiPoly& F) {
  return certify(support_exponents(F), F.nvars());
}

std::vector<RatMatrix> random_frames(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RatMatrix> out;
  for (int k = 0; k < count; ++k) {
    RatMatrix L = RatMatrix::identity(n), U = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) L(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) U(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
    out.push_back(L * U);
  }
  return out;
}

std::optional<Certificate> destabilize_search(const MultiPoly& F, const SearchOptions& opt) {
  int n = F.nvars();
  std::vector<RatMatrix> frames{RatMatrix::identity(n)};
  for (const auto& M : opt.known_frames) frames.push_back(M);
  for (auto& M : random_frames(n, opt.frames, opt.seed)) frames.push_back(std::move(M));
  for (std::size_t k = 0; k < frames.size(); ++k) {
    auto c = destabilize_in_frame(k == 0 ? F : substitute_linear(F, frames[k]));
    if (c) {
      c->frame = frames[k];
      c->frame_index = static_cast<int>(k);
      return c;
    }
  }
  return std::nullopt;
}

std::optional<OnePS> zero_weight_1ps(const MultiPoly& F) {
  auto rows = support_exponents(F);
  int n = F.nvars();
  RatMatrix A(static_cast<int>(rows.size()) + 1, n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) A(static_cast<int>(i), j) = Rational(rows[i][j]);
  for (int j = 0; j < n; ++j) A(static_cast<int>(rows.size()), j) = 1;
  auto ker = kernel(A);
  if (ker.empty()) return std::nullopt;
  auto w = primitive_integer(ker[0]);
  for (const auto& x : w)
    if (sgn(x) != 0) {
      if (sgn(x) < 0)
        for (auto& y : w) y = -y;
      break;
    }
  return OnePS::sum_zero(w);
}

std::vector<std::string> plucker_vars() { return {"p01", "p02", "p03", "p12", "p13", "p23"}; }

std::vector<Rational> plucker_point(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != 4 || b.size() != 4) throw MathError("Plücker coordinates need two points of P^3");
  std::vector<Rational> p;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) p.push_back(a[i] * b[j] - a[j] * b[i]);
  return p;
}

MultiPoly plucker_relation() {
  auto v = plucker_vars();
  auto P = [&](int i) { return MultiPoly::variable(v, i); };
  return P(0) * P(5) - P(1) * P(4) + P(2) * P(3);
}

MultiPoly plucker_normal_form(const MultiPoly& R0) {
  auto v = plucker_vars();
  MultiPoly tail = MultiPoly::variable(v, 1) * MultiPoly::variable(v, 4) - MultiPoly::variable(v, 2) * MultiPoly::variable(v, 3);
  MultiPoly R = R0;
  for (;;) {
    const Monomial* hit = nullptr;
    Rational c;
    for (const auto& [e, cc] : R.terms())
      if (e[0] >= 1 && e[5] >= 1) {
        hit = &e;
        c = cc;
        break;
      }
    if (!hit) return R;
    Monomial e = *hit, rest = *hit;
    --rest[0];
    --rest[5];
    MultiPoly mono(v), restp(v);
    mono.add_term(e, c);
    restp.add_term(rest, c);
    R = R - mono + restp * tail;
  }
}

ChowForm chow_form(const TwoThreeScheme& C) {
  if (!is_complete_intersection(C)) throw MathError("chow_form: q and f share a factor (surface component)");
  std::vector<std::string> v{"s", "u", "a2", "a3", "b2", "b3"};
  auto X = [&](int i) { return MultiPoly::variable(v, i); };
  MultiPoly one = MultiPoly::constant(v, Rational(1));
  std::vector<MultiPoly> a{one, MultiPoly(v), X(2), X(3)}, b{MultiPoly(v), one, X(4), X(5)};
  std::vector<MultiPoly> images;
  for (int j = 0; j < 4; ++j) images.push_back(X(0) * a[j] + X(1) * b[j]);
  MultiPoly g = C.q.compose(images), h = C.f.compose(images);
  MultiPoly res = resultant_binary(g, h, 0, 1);
  if (res.is_zero()) throw MathError("chow_form: the resultant vanishes identically");
  std::map<int, MultiPoly> by_degree;
  for (const auto& [e, c] : res.terms()) {
    int d = e[2] + e[3] + e[4] + e[5];
    auto it = by_degree.find(d);
    if (it == by_degree.end()) it = by_degree.emplace(d, MultiPoly(v)).first;
    it->second.add_term(e, c);
  }
  MultiPoly delta = X(2) * X(5) - X(3) * X(4);
  auto pv = plucker_vars();
  MultiPoly R(pv);
  for (auto& [d, G] : by_degree) {
    if (d > 12) throw MathError("chow_form: chart degree exceeds 12");
    int j = std::max(0, d - 6);
    MultiPoly H = G;
    for (int k = 0; k < j; ++k) H = H.divide_exact(delta);
    for (const auto& [e, c] : H.terms()) {
      Monomial m(6, 0);
      m[0] = d <= 6 ? 6 - d : 0;
      m[5] = j;
      m[1] = e[4];
      m[2] = e[5];
      m[3] = e[2];
      m[4] = e[3];
      R.add_term(m, (e[2] + e[3]) % 2 ? Rational(-c) : c);
    }
  }
  std::vector<Rational> cs;
  for (const auto& [e, c] : R.terms()) cs.push_back(c);
  Integer den = lcm_of_denominators(cs);
  Integer g0 = 0;
  for (const auto& c : cs) {
    Rational s = c * den;
    mpz_gcd(g0.get_mpz_t(), g0.get_mpz_t(), s.get_num().get_mpz_t());
  }
  Rational scale = Rational(den) / Rational(g0);
  if (sgn(R.leading_term().second) < 0) scale = -scale;
  ChowForm out;
  out.R = plucker_normal_form(R.scaled(scale));
  out.degree = 6;
  for (const auto& [e, c] : out.R.terms())
    if (total_degree(e) != 6) throw MathError("chow_form: non-homogeneous result");
  return out;
}

bool line_meets_curve(const TwoThreeScheme& C, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<std::string> su{"s", "u"};
  std::vector<MultiPoly> images;
  for (int j = 0; j < 4; ++j) images.push_back(MultiPoly::variable(su, 0, a[j]) + MultiPoly::variable(su, 1, b[j]));
  MultiPoly g = C.q.compose(images), h = C.f.compose(images);
  if (g.is_zero() || h.is_zero()) return true;
  if (is_zero(g.coeff({2, 0})) && is_zero(h.coeff({3, 0}))) return true;
  auto uni = [](const MultiPoly& p, int deg) {
    UniPoly r(deg + 1);
    for (const auto& [e, c] : p.terms()) r[e[0]] += c;
    uni_trim(r);
    return r;
  };
  return uni_degree(uni_gcd(uni(g, 2), uni(h, 3))) > 0;
}

std::vector<std::vector<Integer>> chow_weight_vectors(const ChowForm& R) {
  static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::set<std::vector<long>> seen;
  std::vector<std::vector<Integer>> out;
  MultiPoly nf = plucker_normal_form(R.R);
  for (const auto& [e, c] : nf.terms()) {
    std::vector<long> a(4, 0);
    for (int k = 0; k < 6; ++k) {
      a[pairs[k][0]] += e[k];
      a[pairs[k][1]] += e[k];
    }
    if (seen.insert(a).second) out.emplace_back(a.begin(), a.end());
  }
  return out;
}

Rational chow_weight_min(const ChowForm& R, const OnePS& w0) {
  OnePS w = w0.to_sum_zero();
  if (w.w.size() != 4) throw MathError("Chow weights need a 1-PS on four coordinates");
  return min_weight(chow_weight_vectors(R), w.w);
}

std::optional<Certificate> destabilize_chow(const ChowForm& R) { return certify(chow_weight_vectors(R), 4); }

Rational mumford_rhs(int r, int N, const Rational& deg, const OnePS& w) {
  if (w.tag != Convention::RWeights) throw MathError("mumford_rhs expects r-convention weights");
  if (static_cast<int>(w.w.size()) != N + 1) throw MathError("weight vector length must be N+1");
  Integer s = 0;
  for (const auto& x : w.w) s += x;
  return Rational(r + 1) / (N + 1) * deg * Rational(s);
}

SchubertBound schubert_bound(int d1, int d2) {
  if (d1 < 0 || d2 < 0 || (d1 + d2 != 6 && d1 + d2 != 0))
    throw MathError("schubert_bound: degrees must sum to 6");
  SchubertBound b;
  b.bound = 2 * d1 + d2;
  b.rhs = mumford_rhs(1, 3, 6, OnePS::r_weights({0, 1, 1, 1}));
  b.exceeds = b.bound > b.rhs;
  return b;
}

std::vector<std::pair<int, int>> schubert_surviving_splits() {
  std::vector<std::pair<int, int>> out;
  for (int d1 = 3; d1 <= 6; ++d1)
    if (!schubert_bound(d1, 6 - d1).exceeds) out.emplace_back(d1, 6 - d1);
  return out;
}

StabilityVerdict allcock_verdict(const CubicSingData& d) {
  if (d.non_isolated) {
    if (!d.chordal) return make(Status::NotApplicable, {"3.d", "chordal flag missing"});
    if (*d.chordal) {
      auto v = make(Status::StrictlySemistable, {"3.d", "chordal cubic"});
      v.minimal_orbit = "F_c";
      return v;
    }
    return make(Status::Unstable, {"4.a", "non-isolated singularities, not chordal"});
  }
  if (d.plane.size() != d.types.size()) throw MathError("allcock_verdict: plane flags must match the type list");
  bool d4 = false, a5 = false, big = false;
  for (std::size_t i = 0; i < d.types.size(); ++i) {
    const SingType& t = d.types[i];
    if (t.kind == SingKind::Inconclusive) return make(Status::NotApplicable, {"1", "type " + t.str()});
    if (t.kind == SingKind::D4) {
      d4 = true;
      continue;
    }
    if (!t.is_A()) return make(Status::Unstable, {"4.b", "singularity " + t.str()});
    if (t.k == 5) a5 = true;
    if (t.k >= 6) {
      if (!d.plane[i] || *d.plane[i] == Tri::Unknown) return make(Status::NotApplicable, {"3.c", "plane flag missing for " + t.str()});
      if (*d.plane[i] == Tri::True) return make(Status::Unstable, {"4.b", t.str() + " with a plane containing its null line"});
      big = true;
    }
  }
  if (d4 || a5 || big) {
    StabilityVerdict v;
    v.status = Status::StrictlySemistable;
    if (d4) v.reasons.push_back("3.a");
    if (a5) v.reasons.push_back("3.b");
    if (big) v.reasons.push_back("3.c");
    v.minimal_orbit = d4 ? "F_D" : (a5 ? "F_{A,B}(4A/B^2!=1)" : "F_c");
    return v;
  }
  return make(Status::Stable, {"1"});
}

CubicSingData cubic_data_from_curve(const TwoThreeScheme& C, const CorrespondenceReport& corr) {
  CubicSingData d;
  if (corr.non_isolated) {
    d.non_isolated = true;
    d.chordal = corr.curve.complete_intersection && chordal_detect(C);
    return d;
  }
  CubicThreefold X = curve_to_cubic(C);
  SingType marked = marked_point_type_direct(X);
  d.types.push_back(marked);
  std::optional<Tri> mplane;
  if (marked.is_A() && marked.k >= 6)
    for (const auto& sp : corr.curve.points)
      if (sp.location == Location::VertexOfQ) mplane = sp.plane_component;
  d.plane.push_back(mplane);
  for (const auto& o : corr.cubic) {
    d.types.push_back(o.type);
    d.plane.push_back(corr.curve.points[o.curve_index].plane_component);
  }
  return d;
}

namespace {

std::vector<FpPoint> cubic_scan_full(const CubicThreefold& X, std::uint32_t p) {
  PolyFp F(X.F, p);
  std::array<PolyFp, 5> dF;
  for (int i = 0; i < 5; ++i) dF[i] = F.derivative(i);
  std::vector<FpPoint> out;
  for_each_projective_point(5, p, [&](const FpPoint& x) {
    if (F.eval(x)) return;
    for (const auto& d : dF)
      if (d.eval(x)) return;
    out.push_back(x);
  });
  return out;
}

bool singular_on(const CubicThreefold& X, const ProjPoint& pt) {
  if (!X.F.evaluate(pt).zero()) return false;
  for (int i = 0; i < 5; ++i)
    if (!X.F.derivative(i).evaluate(pt).zero()) return false;
  return true;
}

}  // namespace

CubicAnalysis analyze_cubic(const CubicThreefold& X, int J) {
  CubicAnalysis out;
  const std::vector<std::uint32_t> primes{31, 37, 41};
  std::vector<std::pair<std::uint32_t, std::vector<FpPoint>>> scans;
  std::size_t big = 0;
  for (auto p : primes) {
    try {
      auto s = cubic_scan_full(X, p);
      if (s.size() > 20) ++big;
      scans.emplace_back(p, std::move(s));
    } catch (const MathError&) {
      continue;
    }
  }
  if (scans.empty()) throw MathError("analyze_cubic: no good reduction prime");
  std::vector<ProjPoint> cands;
  if (X.marked) cands.push_back(*X.marked);
  for (const auto& [p, pts] : scans)
    for (const auto& x : pts) {
      std::vector<Rational> r(5);
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i) ok = rational_reconstruct(x[i], p, r[i]);
      if (ok) cands.push_back(rational_point(r));
    }
  std::vector<ProjPoint> exact;
  for (const auto& c : cands) {
    ProjPoint n;
    try {
      n = normalize_point(c);
    } catch (const MathError&) {
      continue;
    }
    if (!singular_on(X, n)) continue;
    bool dup = false;
    for (const auto& e : exact) dup = dup || same_point(e, n);
    if (!dup) exact.push_back(n);
  }
  if (big == scans.size()) {
    out.data.non_isolated = true;
    for (const auto& e : exact) {
      try {
        TwoThreeScheme C = cubic_to_curve(X, e);
        out.data.chordal = chordal_detect(C);
        out.notes.push_back("chordal test by projection from " + to_string(e));
        break;
      } catch (const MathError&) {
        continue;
      }
    }
    if (!out.data.chordal) out.notes.push_back("no rational double point found for the chordal test");
    return out;
  }
  bool some_equal = false, all_subset = true;
  for (const auto& [p, pts] : scans) {
    std::vector<FpPoint> img;
    for (const auto& e : exact)
      for (auto& x : reduce_point_mod_p(e, p))
        if (std::find(img.begin(), img.end(), x) == img.end()) img.push_back(x);
    std::sort(img.begin(), img.end());
    if (img == pts) some_equal = true;
    for (const auto& x : img) all_subset = all_subset && std::binary_search(pts.begin(), pts.end(), x);
  }
  if (!(some_equal && all_subset)) {
    out.notes.push_back("exact singular points do not account for the scanned locus");
    out.data.types.push_back(SingType::inconclusive(J));
    out.data.plane.push_back(std::nullopt);
  }
  for (const auto& e : exact) {
    SingType t;
    try {
      t = classify_cubic_point(X, e, J);
    } catch (const MathError&) {
      t = SingType::other();  // triple point
    }
    std::optional<Tri> plane;
    if (t.is_A() && t.k >= 6) {
      TwoThreeScheme C = cubic_to_curve(X, e);
      for (const auto& sp : classify_scheme(C).points)
        if (sp.location == Location::VertexOfQ) plane = sp.plane_component;
    }
    out.points.emplace_back(e, t);
    out.data.types.push_back(t);
    out.data.plane.push_back(plane);
  }
  return out;
}

bool linearization_balance(long a, long b) { return 2 * a == 3 * b; }

}  // namespace canon4
