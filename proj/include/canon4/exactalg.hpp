#pragma once

#include <string>
#include <vector>

#include "canon4/matrix.hpp"
#include "canon4/poly.hpp"

namespace canon4 {

constexpr int kDefaultJet = 16;

// F(x) composed with x -> M x, i.e. x_i replaced by sum_j M(i,j) x_j.
MultiPoly substitute_linear(const MultiPoly& F, const RatMatrix& M);
AlgPoly substitute_linear(const AlgPoly& F, const Matrix<AlgNum>& M);

// Coefficients of a binary form of degree m in (s,u), listed for s^m, s^{m-1}u, ..., u^m.
// Each coefficient is a polynomial in the full variable list with s,u absent.
template <class K>
std::vector<BasicPoly<K>> binary_form_coeffs(const BasicPoly<K>& g, int s, int u, int& m) {
  if (g.is_zero()) throw MathError("resultant of zero form");
  m = -1;
  for (const auto& [e, c] : g.terms()) {
    int d = e[s] + e[u];
    if (m < 0) m = d;
    if (d != m) throw MathError("non-homogeneous binary form");
  }
  std::vector<BasicPoly<K>> out(m + 1, BasicPoly<K>(g.vars()));
  for (const auto& [e, c] : g.terms()) {
    Monomial f = e;
    int i = e[u];
    f[s] = 0;
    f[u] = 0;
    out[i].add_term(f, c);
  }
  return out;
}

template <class T>
Matrix<T> sylvester_matrix(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  Matrix<T> S(m + n, m + n, zero);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) S(r, r + i) = a[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) S(n + r, r + i) = b[i];
  return S;
}

// Resultant of binary forms in (s,u) = variables s,u; other variables are coefficients.
template <class K>
BasicPoly<K> resultant_binary(const BasicPoly<K>& g, const BasicPoly<K>& h, int s, int u) {
  if (g.vars() != h.vars()) throw MathError("resultant operands in different rings");
  int m = 0, n = 0;
  auto a = binary_form_coeffs(g, s, u, m);
  auto b = binary_form_coeffs(h, s, u, n);
  if (m + n == 0) return BasicPoly<K>::constant(g.vars(), K(1));
  BasicPoly<K> zero(g.vars());
  return det_bareiss(sylvester_matrix(a, b, zero));
}

// Resultant in one variable with formal degrees m, n; leading coefficients may vanish.
template <class K>
BasicPoly<K> resultant_univariate(const BasicPoly<K>& g, const BasicPoly<K>& h, int var, int m, int n) {
  if (g.vars() != h.vars()) throw MathError("resultant operands in different rings");
  auto coeffs = [&](const BasicPoly<K>& p, int deg) {
    std::vector<BasicPoly<K>> out(deg + 1, BasicPoly<K>(p.vars()));
    for (const auto& [e, c] : p.terms()) {
      if (e[var] > deg) throw MathError("formal degree below actual degree");
      Monomial f = e;
      f[var] = 0;
      out[deg - e[var]].add_term(f, c);
    }
    return out;
  };
  if (m + n == 0) return BasicPoly<K>::constant(g.vars(), K(1));
  return det_bareiss(sylvester_matrix(coeffs(g, m), coeffs(h, n), BasicPoly<K>(g.vars())));
}

// Numeric binary forms in exactly two variables.
Rational resultant_binary(const MultiPoly& g, const MultiPoly& h);

struct SmithForm {
  IntMatrix D, U, V;  // U * M * V = D
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& M);

// Solves F(phi, rest) = 0 for the chosen variable as a series in the remaining variables.
Series series_implicit_solve(const MultiPoly& F, int solve_var, int J = kDefaultJet);
AlgPoly series_implicit_solve(const AlgPoly& F, int solve_var, int J);

// Simultaneous version: solves Fs = 0 for solve_vars; result indexed like solve_vars.
std::vector<AlgPoly> series_implicit_solve_system(const std::vector<AlgPoly>& Fs,
                                                  const std::vector<int>& solve_vars, int J);

// Symmetric Gram matrix of a quadratic form: q(x) = x^T G x.
RatMatrix quadric_gram(const MultiPoly& q);
Matrix<AlgNum> quadric_gram(const AlgPoly& q);

// Univariate helpers over Q, coefficients low to high.
using UniPoly = std::vector<Rational>;
void uni_trim(UniPoly& a);
UniPoly uni_gcd(UniPoly a, UniPoly b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_derivative(const UniPoly& a);
int uni_degree(const UniPoly& a);
bool rational_sqrt(const Rational& x, Rational& root);

// Discriminant of a binary cubic a s^3 + b s^2 u + c s u^2 + d u^3.
template <class K>
K binary_cubic_discriminant(const K& a, const K& b, const K& c, const K& d) {
  return b * b * c * c - K(4) * a * c * c * c - K(4) * b * b * b * d - K(27) * a * a * d * d +
         K(18) * a * b * c * d;
}

// Symmetric congruence: returns d with P^T G P = diag(d), P accumulated in place.
template <class K>
std::vector<K> congruence_diagonalize(Matrix<K> G, Matrix<K>& P) {
  int n = G.rows();
  P = Matrix<K>::identity(n);
  auto add_col = [&](int dst, int src, const K& c) {  // basis vector dst += c * src
    for (int i = 0; i < n; ++i) G(i, dst) += c * G(i, src);
    for (int j = 0; j < n; ++j) G(dst, j) += c * G(src, j);
    for (int i = 0; i < n; ++i) P(i, dst) += c * P(i, src);
  };
  for (int k = 0; k < n; ++k) {
    if (is_zero(G(k, k))) {
      int j = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(G(i, i))) {
          j = i;
          break;
        }
      if (j >= 0) {
        G.swap_rows(k, j);
        G.swap_cols(k, j);
        P.swap_cols(k, j);
      } else {
        for (int i = k + 1; i < n; ++i)
          if (!is_zero(G(k, i))) {
            j = i;
            break;
          }
        if (j < 0) continue;
        add_col(k, j, K(1));
      }
    }
    for (int i = k + 1; i < n; ++i) {
      if (is_zero(G(i, k))) continue;
      K c = -(G(i, k) / G(k, k));
      add_col(i, k, c);
    }
  }
  std::vector<K> d(n);
  for (int i = 0; i < n; ++i) d[i] = G(i, i);
  return d;
}

std::vector<std::string> var_names(const std::string& prefix, int first, int count);

}  // namespace canon4
