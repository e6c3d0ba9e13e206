#include "canon4/singclass.hpp"

#include <algorithm>
#include <random>

#include "canon4/polyio.hpp"

namespace canon4 {

namespace {

constexpr std::size_t kNonIsolatedThreshold = 20;

std::vector<AlgNum> gradient_at(const MultiPoly& P, const ProjPoint& x) {
  std::vector<AlgNum> g;
  for (int i = 0; i < P.nvars(); ++i) g.push_back(P.derivative(i).evaluate(x));
  return g;
}

bool all_zero(const std::vector<AlgNum>& v) {
  for (const auto& x : v)
    if (!x.zero()) return false;
  return true;
}

int compare_alg(const AlgNum& a, const AlgNum& b) {
  bool ra = a.is_rational(), rb = b.is_rational();
  if (ra != rb) return ra ? -1 : 1;
  if (ra) {
    int c = cmp(a.rational_value(), b.rational_value());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const auto &ca = a.coeffs(), &cb = b.coeffs();
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
    int c = cmp(ca[i], cb[i]);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool point_less(const ProjPoint& a0, const ProjPoint& b0) {
  ProjPoint a = normalize_point(a0), b = normalize_point(b0);
  bool ra = point_is_rational(a), rb = point_is_rational(b);
  if (ra != rb) return ra;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = compare_alg(a[i], b[i]);
    if (c) return c > 0;  // (1,..) before (0,..)
  }
  return false;
}

std::vector<std::string> local_vars(int n) { return var_names("t", 1, n); }

}  // namespace

SingType SingType::parse(const std::string& s) {
  if (s == "D4") return D4();
  if (s == "Corank2Other") return other();
  if (s == "NonIsolated") return non_isolated();
  if (s == "NotHypersurface") return not_hypersurface();
  if (s.rfind("InconclusiveAtJet(", 0) == 0 && s.back() == ')')
    return inconclusive(std::stoi(s.substr(18, s.size() - 19)));
  if (s.size() >= 2 && s[0] == 'A') {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw MathError("unknown singularity type '" + s + "'");
    int k = std::stoi(s.substr(1));
    if (k >= 1) return A(k);
  }
  throw MathError("unknown singularity type '" + s + "'");
}

std::string SingType::str() const {
  switch (kind) {
    case SingKind::A: return "A" + std::to_string(k);
    case SingKind::D4: return "D4";
    case SingKind::Corank2Other: return "Corank2Other";
    case SingKind::NonIsolated: return "NonIsolated";
    case SingKind::Inconclusive: return "InconclusiveAtJet(" + std::to_string(k) + ")";
    case SingKind::NotHypersurface: return "NotHypersurface";
  }
  return "?";
}

std::string to_string(Location l) {
  switch (l) {
    case Location::SmoothPointOfQ: return "SmoothPointOfQ";
    case Location::VertexOfQ: return "VertexOfQ";
    case Location::OnSingularLineOfQ: return "OnSingularLineOfQ";
  }
  return "?";
}

Location parse_location(const std::string& s) {
  if (s == "SmoothPointOfQ") return Location::SmoothPointOfQ;
  if (s == "VertexOfQ") return Location::VertexOfQ;
  if (s == "OnSingularLineOfQ") return Location::OnSingularLineOfQ;
  throw MathError("unknown location '" + s + "'");
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

QuadricRank quadric_rank(const MultiPoly& q) {
  RatMatrix G = quadric_gram(q);
  QuadricRank r;
  r.rank = rank(G);
  r.kernel = kernel(G);
  return r;
}

LocalClass classify_local(const AlgPoly& g0, int J) {
  int n = g0.nvars();
  AlgPoly g = g0.truncated(J);
  Monomial zero(n, 0);
  if (!g.coeff(zero).zero()) throw MathError("nonsingular input: g(0) != 0");
  for (int i = 0; i < n; ++i) {
    Monomial e = zero;
    e[i] = 1;
    if (!g.coeff(e).zero()) throw MathError("nonsingular input: dg(0) != 0");
  }
  Matrix<AlgNum> G = quadric_gram(g.homogeneous_part(2));
  Matrix<AlgNum> P;
  std::vector<AlgNum> d = congruence_diagonalize(G, P);
  AlgPoly h = substitute_linear(g, P).truncated(J);
  std::vector<int> nondeg, corank;
  for (int i = 0; i < n; ++i) (d[i].zero() ? corank : nondeg).push_back(i);
  LocalClass out;
  out.corank = static_cast<int>(corank.size());
  if (corank.empty()) {
    out.type = SingType::A(1);
    return out;
  }
  if (corank.size() > 2) {
    out.type = SingType::other();
    return out;
  }
  std::vector<AlgPoly> eqs;
  for (int i : nondeg) eqs.push_back(h.derivative(i));
  std::vector<AlgPoly> phi = series_implicit_solve_system(eqs, nondeg, J);
  std::vector<std::string> zvars;
  for (int j : corank) zvars.push_back(h.vars()[j]);
  std::vector<AlgPoly> images(n);
  for (std::size_t k = 0; k < nondeg.size(); ++k) images[nondeg[k]] = phi[k];
  for (std::size_t k = 0; k < corank.size(); ++k) images[corank[k]] = AlgPoly::variable(zvars, static_cast<int>(k));
  AlgPoly R = h.compose(images, J);
  if (corank.size() == 1) {
    out.kernel_dir = P.col(corank[0]);
    if (R.is_zero() || R.order() > J) {
      out.type = SingType::inconclusive(J);
      return out;
    }
    out.type = SingType::A(R.order() - 1);
    return out;
  }
  AlgPoly R3 = R.homogeneous_part(3);
  AlgNum a = R3.coeff({3, 0}), b = R3.coeff({2, 1}), c = R3.coeff({1, 2}), dd = R3.coeff({0, 3});
  out.type = binary_cubic_discriminant(a, b, c, dd).zero() ? SingType::other() : SingType::D4();
  return out;
}

LocalClass classify_local(const MultiPoly& g, int J) { return classify_local(to_alg(g), J); }

SingType classify_branch(const Series& g, int J) {
  if (g.poly.nvars() != 2) throw MathError("classify_branch expects two local variables");
  return classify_local(g.poly, std::min(J, g.J)).type;
}

PointCheck verify_singular_point(const TwoThreeScheme& C, const ProjPoint& pt) {
  if (pt.size() != 4) throw MathError("point must have 4 coordinates");
  if (!C.q.evaluate(pt).zero() || !C.f.evaluate(pt).zero())
    throw MathError("point " + to_string(pt) + " does not lie on the curve");
  std::vector<AlgNum> gq = gradient_at(C.q, pt), gf = gradient_at(C.f, pt);
  PointCheck r;
  r.q_singular = all_zero(gq);
  r.f_singular = all_zero(gf);
  Matrix<AlgNum> J(2, 4);
  for (int j = 0; j < 4; ++j) {
    J(0, j) = gq[j];
    J(1, j) = gf[j];
  }
  r.jacobian_rank = rank(J);
  r.singular = r.jacobian_rank <= 1;
  return r;
}

Location locate(const MultiPoly& q, const ProjPoint& pt) {
  QuadricRank qr = quadric_rank(q);
  Matrix<AlgNum> G = quadric_gram(to_alg(q));
  if (!all_zero(G.apply(pt))) return Location::SmoothPointOfQ;
  return qr.rank == 3 ? Location::VertexOfQ : Location::OnSingularLineOfQ;
}

PointClass classify_point(const TwoThreeScheme& C, const ProjPoint& pt0, int J) {
  ProjPoint pt = normalize_point(pt0);
  PointCheck chk = verify_singular_point(C, pt);
  if (!chk.singular) throw MathError("point " + to_string(pt) + " is a smooth point of the curve");
  PointClass out;
  out.location = locate(C.q, pt);
  if (chk.not_hypersurface()) {
    out.type = SingType::not_hypersurface();
    return out;
  }
  int i0 = 0;
  while (pt[i0].zero()) ++i0;
  auto tv = local_vars(3);
  std::vector<AlgPoly> images(4);
  std::vector<int> chart_of(4, -1);
  int k = 0;
  for (int j = 0; j < 4; ++j) {
    if (j == i0) {
      images[j] = AlgPoly::constant(tv, AlgNum(1));
    } else {
      chart_of[j] = k;
      images[j] = AlgPoly::constant(tv, pt[j]) + AlgPoly::variable(tv, k++);
    }
  }
  AlgPoly Q = to_alg(C.q).compose(images), F = to_alg(C.f).compose(images);
  auto linear_index = [&](const AlgPoly& P) {
    for (int i = 0; i < 3; ++i) {
      Monomial e(3, 0);
      e[i] = 1;
      if (!P.coeff(e).zero()) return i;
    }
    return -1;
  };
  int mq = linear_index(Q), mf = linear_index(F);
  const AlgPoly& smooth = mq >= 0 ? Q : F;
  const AlgPoly& other = mq >= 0 ? F : Q;
  int m = mq >= 0 ? mq : mf;
  AlgPoly phi = series_implicit_solve(smooth, m, J);
  std::vector<AlgPoly> sub(3);
  int r = 0;
  for (int i = 0; i < 3; ++i) sub[i] = i == m ? phi : AlgPoly::variable(phi.vars(), r++);
  AlgPoly g = other.compose(sub, J);
  LocalClass lc = classify_local(g, J);
  out.type = lc.type;
  if (!lc.kernel_dir.empty()) {
    std::vector<AlgNum> t(3);
    r = 0;
    AlgNum tm = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == m) continue;
      t[i] = lc.kernel_dir[r];
      Monomial e(2, 0);
      e[r] = 1;
      tm += phi.coeff(e) * lc.kernel_dir[r];
      ++r;
    }
    t[m] = tm;
    out.tangent.assign(4, AlgNum(0));
    for (int j = 0; j < 4; ++j)
      if (chart_of[j] >= 0) out.tangent[j] = t[chart_of[j]];
  }
  return out;
}

std::vector<FpPoint> singular_points_scan(const TwoThreeScheme& C, std::uint32_t p) {
  if (!is_prime(p)) throw MathError(std::to_string(p) + " is not prime");
  PolyFp q, f;
  try {
    q = PolyFp(C.q, p);
    f = PolyFp(C.f, p);
  } catch (const MathError& e) {
    throw MathError("bad reduction prime " + std::to_string(p) + ": " + e.what());
  }
  if ((q.is_zero() && !C.q.is_zero()) || (f.is_zero() && !C.f.is_zero()))
    throw MathError("bad reduction prime " + std::to_string(p) + ": a defining form vanishes");
  std::array<PolyFp, 4> dq, df;
  for (int i = 0; i < 4; ++i) {
    dq[i] = q.derivative(i);
    df[i] = f.derivative(i);
  }
  std::vector<FpPoint> out;
  for_each_projective_point(4, p, [&](const FpPoint& x) {
    if (q.eval(x) || f.eval(x)) return;
    std::uint64_t a[4], b[4];
    for (int i = 0; i < 4; ++i) {
      a[i] = dq[i].eval(x);
      b[i] = df[i].eval(x);
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if ((a[i] * b[j] + (p - a[j]) * b[i] % p) % p != 0) return;
    out.push_back(x);
  });
  return out;
}

std::vector<ProjPoint> exact_singular_points(const TwoThreeScheme& C, const std::vector<std::uint32_t>& primes,
                                             bool& complete, bool& non_isolated) {
  std::vector<std::pair<std::uint32_t, std::vector<FpPoint>>> scans;
  std::size_t big = 0;
  for (std::uint32_t p : primes) {
    try {
      auto s = singular_points_scan(C, p);
      if (s.size() > kNonIsolatedThreshold) ++big;
      scans.emplace_back(p, std::move(s));
    } catch (const MathError&) {
      continue;
    }
  }
  if (scans.empty()) throw MathError("no good reduction prime among those supplied");
  non_isolated = big == scans.size();
  complete = false;
  if (non_isolated) return {};
  std::vector<ProjPoint> cands = C.hints;
  for (const auto& [p, pts] : scans)
    for (const auto& x : pts) {
      std::vector<Rational> r(4);
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) ok = rational_reconstruct(x[i], p, r[i]);
      if (ok) cands.push_back(rational_point(r));
    }
  // Points with larger heights: combine one point from each of several scans by CRT.
  auto lift = [&](const std::vector<std::size_t>& idx, const std::vector<const FpPoint*>& pts) {
    std::uint64_t m = 1;
    std::vector<std::uint64_t> a(4, 0);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::uint64_t p = scans[idx[k]].first;
      std::uint64_t inv = invmod(m % p, p);
      for (int i = 0; i < 4; ++i) {
        std::uint64_t d = ((*pts[k])[i] + p - a[i] % p) % p;
        a[i] += m * ((d * inv) % p);
      }
      m *= p;
    }
    std::vector<Rational> r(4);
    for (int i = 0; i < 4; ++i)
      if (!rational_reconstruct(a[i], m, r[i])) return;
    cands.push_back(rational_point(r));
  };
  for (std::size_t i = 0; i < scans.size(); ++i)
    for (std::size_t j = i + 1; j < scans.size(); ++j) {
      for (const auto& x : scans[i].second)
        for (const auto& y : scans[j].second) {
          lift({i, j}, {&x, &y});
          for (std::size_t k = j + 1; k < scans.size(); ++k)
            for (const auto& z : scans[k].second) lift({i, j, k}, {&x, &y, &z});
        }
    }
  std::vector<ProjPoint> exact;
  for (const auto& c : cands) {
    ProjPoint n;
    try {
      n = normalize_point(c);
      if (!verify_singular_point(C, n).singular) continue;
    } catch (const MathError&) {
      continue;
    }
    bool dup = false;
    for (const auto& e : exact) dup = dup || same_point(e, n);
    if (!dup) exact.push_back(n);
  }
  bool all_subset = true, some_equal = false;
  for (const auto& [p, pts] : scans) {
    std::vector<FpPoint> img;
    for (const auto& e : exact)
      for (auto& x : reduce_point_mod_p(e, p))
        if (std::find(img.begin(), img.end(), x) == img.end()) img.push_back(x);
    std::sort(img.begin(), img.end());
    if (img == pts) some_equal = true;
    for (const auto& x : img) all_subset = all_subset && std::binary_search(pts.begin(), pts.end(), x);
  }
  complete = all_subset && some_equal;
  std::sort(exact.begin(), exact.end(), point_less);
  return exact;
}

namespace {

// Ternary forms on one plane; true when they share a factor.
bool plane_has_common_component(const MultiPoly& qh, const MultiPoly& fh, std::mt19937_64& rng) {
  if (qh.is_zero() || fh.is_zero()) return true;
  for (int attempt = 0; attempt < 32; ++attempt) {
    RatMatrix M = RatMatrix::identity(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) M(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
    if (is_zero(det_bareiss(M))) continue;
    MultiPoly a = substitute_linear(qh, M), b = substitute_linear(fh, M);
    if (is_zero(a.coeff({0, 0, 2}))) continue;
    MultiPoly r = resultant_univariate(a, b, 2, 2, 3);
    return r.is_zero();
  }
  return true;
}

UniPoly t_coeffs(const MultiPoly& p, int tvar) {
  UniPoly u;
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(u.size()) <= e[tvar]) u.resize(e[tvar] + 1);
    u[e[tvar]] += c;
  }
  uni_trim(u);
  return u;
}

}  // namespace

Tri plane_component_test(const TwoThreeScheme& C, const SingularPoint& sp, std::uint64_t seed) {
  if (!needs_plane_test(sp))
    throw MathError("plane-component test applies only to A_k with k >= 6, or k >= 4 at the vertex of Q");
  if (!point_is_rational(sp.point) || sp.tangent.size() != 4) return Tri::Unknown;
  std::vector<Rational> pt(4), d(4);
  ProjPoint np = normalize_point(sp.point);
  for (int i = 0; i < 4; ++i) {
    pt[i] = np[i].rational_value();
    if (!sp.tangent[i].is_rational()) return Tri::Unknown;
    d[i] = sp.tangent[i].rational_value();
  }
  RatMatrix L(2, 4);
  for (int j = 0; j < 4; ++j) {
    L(0, j) = pt[j];
    L(1, j) = d[j];
  }
  if (rank(L) != 2) return Tri::Unknown;
  auto ls = kernel(L);
  RatMatrix Lf(2, 4);
  for (int j = 0; j < 4; ++j) {
    Lf(0, j) = ls[0][j];
    Lf(1, j) = ls[1][j];
  }
  std::vector<Rational> w1, w2;
  if (!solve_linear(Lf, {Rational(0), Rational(1)}, w1) || !solve_linear(Lf, {Rational(1), Rational(0)}, w2))
    return Tri::Unknown;
  std::mt19937_64 rng(seed);
  std::vector<std::string> pv{"a", "b", "c", "t"};
  auto restrict_to = [&](bool at_infinity) {
    std::vector<MultiPoly> images;
    for (int j = 0; j < 4; ++j) {
      MultiPoly x = MultiPoly::variable(pv, 0, pt[j]) + MultiPoly::variable(pv, 1, d[j]);
      if (at_infinity) {
        x += MultiPoly::variable(pv, 2, w2[j]);
      } else {
        x += MultiPoly::variable(pv, 2, w1[j]);
        x -= MultiPoly::variable(pv, 2) * MultiPoly::variable(pv, 3, w2[j]);
      }
      images.push_back(x);
    }
    return std::make_pair(C.q.compose(images), C.f.compose(images));
  };
  auto [qinf, finf] = restrict_to(true);
  std::vector<std::string> pv3{"a", "b", "c"};
  if (plane_has_common_component(qinf.with_vars(pv3), finf.with_vars(pv3), rng)) return Tri::True;
  auto [qt, ft] = restrict_to(false);
  if (qt.is_zero() || ft.is_zero()) return Tri::True;
  UniPoly common;
  bool have = false;
  int used = 0;
  for (int attempt = 0; attempt < 40 && used < 3; ++attempt) {
    RatMatrix M = RatMatrix::identity(4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) M(i, j) = Rational(static_cast<long>(rng() % 9) - 4);
    if (is_zero(det_bareiss(M))) continue;
    MultiPoly a = substitute_linear(qt, M), b = substitute_linear(ft, M);
    bool lc_zero = true;
    for (const auto& [e, c] : a.terms())
      if (e[2] == 2) lc_zero = false;
    if (lc_zero) continue;
    MultiPoly r = resultant_univariate(a, b, 2, 2, 3);
    std::map<std::pair<int, int>, MultiPoly> groups;
    for (const auto& [e, c] : r.terms()) {
      auto key = std::make_pair(e[0], e[1]);
      auto it = groups.find(key);
      if (it == groups.end()) it = groups.emplace(key, MultiPoly(pv)).first;
      it->second.add_term(e, c);
    }
    UniPoly g;
    for (const auto& [key, poly] : groups) g = uni_gcd(g, t_coeffs(poly, 3));
    if (groups.empty()) return Tri::True;
    common = have ? uni_gcd(common, g) : g;
    have = true;
    ++used;
    if (uni_degree(common) <= 0) return Tri::False;
  }
  if (!have) return Tri::Unknown;
  return uni_degree(common) > 0 ? Tri::True : Tri::False;
}

bool needs_plane_test(const SingularPoint& sp) {
  if (!sp.type.is_A()) return false;
  return sp.type.k >= 6 || (sp.type.k >= 4 && sp.location == Location::VertexOfQ);
}

bool SingularityReport::has_not_hypersurface() const {
  for (const auto& p : points)
    if (p.type.kind == SingKind::NotHypersurface) return true;
  return false;
}

std::vector<SingType> SingularityReport::types_at(Location l) const {
  std::vector<SingType> out;
  for (const auto& p : points)
    if (p.location == l) out.push_back(p.type);
  return out;
}

SingularityReport classify_scheme(const TwoThreeScheme& C, const ClassifyOptions& opt) {
  SingularityReport rep;
  rep.quadric_rank = quadric_rank(C.q).rank;
  rep.complete_intersection = is_complete_intersection(C);
  if (!rep.complete_intersection) {
    rep.non_isolated = true;
    rep.complete = false;
    rep.notes.push_back("q and f share a component; the scheme is not a complete intersection curve");
    return rep;
  }
  bool complete = false, non_isolated = false;
  std::vector<ProjPoint> pts = exact_singular_points(C, opt.primes, complete, non_isolated);
  rep.complete = complete;
  rep.non_isolated = non_isolated;
  if (non_isolated) {
    rep.notes.push_back("singular locus is positive dimensional at every scanned prime");
    return rep;
  }
  if (!complete) rep.notes.push_back("exact singular points do not account for every scanned point");
  for (const auto& p : pts) {
    SingularPoint sp;
    sp.point = p;
    PointClass pc = classify_point(C, p, opt.J);
    sp.type = pc.type;
    sp.location = pc.location;
    sp.tangent = pc.tangent;
    if (needs_plane_test(sp)) sp.plane_component = plane_component_test(C, sp, opt.seed);
    rep.points.push_back(sp);
  }
  return rep;
}

}  // namespace canon4
