#include "canon4/model.hpp"

#include "canon4/exactalg.hpp"

namespace canon4 {

ProjPoint normalize_point(ProjPoint p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].zero()) continue;
    AlgNum lead = p[i];
    for (auto& x : p) x = x / lead;
    return p;
  }
  throw MathError("zero vector is not a projective point");
}

bool same_point(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return false;
  ProjPoint x = normalize_point(a), y = normalize_point(b);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

bool point_is_rational(const ProjPoint& p) {
  ProjPoint n = normalize_point(p);
  for (const auto& x : n)
    if (!x.is_rational()) return false;
  return true;
}

std::string to_string(const ProjPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ":";
    s += p[i].str();
  }
  return s + ")";
}

ProjPoint rational_point(const std::vector<Rational>& xs) {
  ProjPoint p;
  for (const auto& x : xs) p.emplace_back(x);
  return p;
}

std::vector<std::string> scheme_vars() { return var_names("x", 1, 4); }
std::vector<std::string> cubic_vars() { return var_names("x", 0, 5); }

MultiPoly reduce_mod_q(const MultiPoly& f, const MultiPoly& q) {
  if (q.is_zero()) return f;
  const auto& vars = f.vars();
  // Echelon basis of span{x_i q}, pivots at leading monomials.
  std::vector<MultiPoly> basis;
  for (int i = 0; i < static_cast<int>(vars.size()); ++i) {
    MultiPoly g = MultiPoly::variable(vars, i) * q.with_vars(vars);
    for (const auto& b : basis) {
      auto [lm, lc] = b.leading_term();
      Rational c = g.coeff(lm);
      if (!is_zero(c)) g -= b.scaled(c / lc);
    }
    if (g.is_zero()) continue;
    auto [lm, lc] = g.leading_term();
    g = g.scaled(Rational(1) / lc);
    for (auto& b : basis) {
      Rational c = b.coeff(lm);
      if (!is_zero(c)) b -= g.scaled(c);
    }
    basis.push_back(g);
  }
  MultiPoly r = f;
  for (const auto& b : basis) {
    Rational c = r.coeff(b.leading_term().first);
    if (!is_zero(c)) r -= b.scaled(c);
  }
  return r;
}

TwoThreeScheme make_scheme(MultiPoly q, MultiPoly f, std::string name) {
  auto vars = scheme_vars();
  q = q.with_vars(vars);
  f = f.with_vars(vars);
  if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != 2)) throw MathError("q must be a quadratic form");
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != 3)) throw MathError("f must be a cubic form");
  TwoThreeScheme C;
  C.name = std::move(name);
  C.q = q;
  C.f = reduce_mod_q(f, q);
  return C;
}

namespace {

bool divides_linear(const MultiPoly& l, const MultiPoly& f) {
  try {
    (void)f.divide_exact(l);
    return true;
  } catch (const MathError&) {
    return false;
  }
}

}  // namespace

bool is_complete_intersection(const TwoThreeScheme& C) {
  if (C.q.is_zero() || C.f.is_zero()) return false;
  RatMatrix P;
  RatMatrix G = quadric_gram(C.q);
  std::vector<Rational> d = congruence_diagonalize(G, P);
  std::vector<int> nz;
  for (int i = 0; i < 4; ++i)
    if (!is_zero(d[i])) nz.push_back(i);
  RatMatrix Pinv = inverse(P);
  auto yform = [&](int i) {
    MultiPoly y(C.q.vars());
    for (int j = 0; j < 4; ++j) y += MultiPoly::variable(C.q.vars(), j, Pinv(i, j));
    return y;
  };
  if (nz.size() >= 3) return true;
  if (nz.size() == 1) return !divides_linear(yform(nz[0]), C.f);
  Rational s;
  if (!rational_sqrt(-d[nz[1]] / d[nz[0]], s)) return true;
  MultiPoly y1 = yform(nz[0]), y2 = yform(nz[1]);
  return !divides_linear(y1 - y2.scaled(s), C.f) && !divides_linear(y1 + y2.scaled(s), C.f);
}

bool same_scheme(const TwoThreeScheme& a, const TwoThreeScheme& b) {
  auto norm = [](const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading_term().second);
  };
  MultiPoly qa = norm(a.q), qb = norm(b.q);
  if (qa != qb) return false;
  return norm(reduce_mod_q(a.f, qa)) == norm(reduce_mod_q(b.f, qa));
}

}  // namespace canon4
