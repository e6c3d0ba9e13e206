#include "canon4/exactalg.hpp"

#include <cstdlib>

namespace canon4 {

namespace {

template <class K>
BasicPoly<K> substitute_linear_impl(const BasicPoly<K>& F, const Matrix<K>& M) {
  int n = F.nvars();
  if (!M.square() || M.rows() != n) throw MathError("substitute_linear: dimension mismatch");
  if (is_zero(det_bareiss(M))) throw MathError("substitute_linear: singular matrix");
  std::vector<BasicPoly<K>> images;
  for (int i = 0; i < n; ++i) {
    BasicPoly<K> im(F.vars());
    for (int j = 0; j < n; ++j) im += BasicPoly<K>::variable(F.vars(), j, M(i, j));
    images.push_back(im);
  }
  return F.compose(images);
}

template <class K>
BasicPoly<K> implicit_solve_impl(const BasicPoly<K>& F, int z, int J) {
  if (z < 0 || z >= F.nvars()) throw MathError("implicit solve: bad variable index");
  Monomial zero(F.nvars(), 0);
  if (!is_zero(F.coeff(zero))) throw MathError("implicit function hypothesis fails: F(0) != 0");
  Monomial ez = zero;
  ez[z] = 1;
  K c = F.coeff(ez);
  if (is_zero(c)) throw MathError("implicit function hypothesis fails: dF/dz(0) = 0");
  std::vector<std::string> rest;
  for (int i = 0; i < F.nvars(); ++i)
    if (i != z) rest.push_back(F.vars()[i]);
  std::vector<BasicPoly<K>> images(F.nvars());
  int k = 0;
  for (int i = 0; i < F.nvars(); ++i)
    if (i != z) images[i] = BasicPoly<K>::variable(rest, k++);
  BasicPoly<K> phi(rest);
  K inv = K(1) / c;
  for (int it = 0; it <= J; ++it) {
    images[z] = phi;
    BasicPoly<K> r = F.compose(images, J);
    if (r.is_zero()) break;
    phi -= r.scaled(inv);
  }
  return phi.truncated(J);
}

}  // namespace

MultiPoly substitute_linear(const MultiPoly& F, const RatMatrix& M) { return substitute_linear_impl(F, M); }
AlgPoly substitute_linear(const AlgPoly& F, const Matrix<AlgNum>& M) { return substitute_linear_impl(F, M); }

Rational resultant_binary(const MultiPoly& g, const MultiPoly& h) {
  if (g.nvars() != 2 || h.nvars() != 2) throw MathError("numeric resultant expects binary forms");
  MultiPoly r = resultant_binary(g, h.with_vars(g.vars()), 0, 1);
  return r.constant_term();
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& M) {
  int r = M.rows(), c = M.cols();
  IntMatrix A = M, U = IntMatrix::identity(r), V = IntMatrix::identity(c);
  auto row_op = [&](int dst, int src, const Integer& k) {  // row dst -= k * row src
    for (int j = 0; j < c; ++j) A(dst, j) -= k * A(src, j);
    for (int j = 0; j < r; ++j) U(dst, j) -= k * U(src, j);
  };
  auto col_op = [&](int dst, int src, const Integer& k) {  // col dst -= k * col src
    for (int i = 0; i < r; ++i) A(i, dst) -= k * A(i, src);
    for (int i = 0; i < c; ++i) V(i, dst) -= k * V(i, src);
  };
  auto swap_r = [&](int i, int k) {
    A.swap_rows(i, k);
    U.swap_rows(i, k);
  };
  auto swap_c = [&](int j, int k) {
    A.swap_cols(j, k);
    V.swap_cols(j, k);
  };
  for (int t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      Integer best;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j) {
          if (sgn(A(i, j)) == 0) continue;
          Integer v = abs(A(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;
      swap_r(t, pi);
      swap_c(t, pj);
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (sgn(A(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        row_op(i, t, q);
        if (sgn(A(i, t)) != 0) clean = false;
      }
      for (int j = t + 1; j < c; ++j) {
        if (sgn(A(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        col_op(j, t, q);
        if (sgn(A(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, Integer(-1));
    }
    if (sgn(A(t, t)) < 0) {
      for (int j = 0; j < c; ++j) A(t, j) = -A(t, j);
      for (int j = 0; j < r; ++j) U(t, j) = -U(t, j);
    }
  }
  return {A, U, V};
}

Series series_implicit_solve(const MultiPoly& F, int solve_var, int J) {
  return Series(implicit_solve_impl(F, solve_var, J), J);
}

AlgPoly series_implicit_solve(const AlgPoly& F, int solve_var, int J) {
  return implicit_solve_impl(F, solve_var, J);
}

std::vector<AlgPoly> series_implicit_solve_system(const std::vector<AlgPoly>& Fs,
                                                  const std::vector<int>& solve_vars, int J) {
  int k = static_cast<int>(solve_vars.size());
  if (static_cast<int>(Fs.size()) != k) throw MathError("implicit system: equation count mismatch");
  if (k == 0) return {};
  const auto& vars = Fs[0].vars();
  int n = static_cast<int>(vars.size());
  std::vector<bool> solved(n, false);
  for (int z : solve_vars) solved.at(z) = true;
  std::vector<std::string> rest;
  for (int i = 0; i < n; ++i)
    if (!solved[i]) rest.push_back(vars[i]);
  Matrix<AlgNum> A(k, k);
  Monomial zero(n, 0);
  for (int i = 0; i < k; ++i) {
    if (!is_zero(Fs[i].coeff(zero))) throw MathError("implicit function hypothesis fails: F(0) != 0");
    for (int j = 0; j < k; ++j) {
      Monomial e = zero;
      e[solve_vars[j]] = 1;
      A(i, j) = Fs[i].coeff(e);
    }
  }
  Matrix<AlgNum> Ainv = inverse(A);
  std::vector<AlgPoly> images(n);
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (!solved[i]) images[i] = AlgPoly::variable(rest, r++);
  std::vector<AlgPoly> phi(k, AlgPoly(rest));
  for (int it = 0; it <= J; ++it) {
    for (int j = 0; j < k; ++j) images[solve_vars[j]] = phi[j];
    std::vector<AlgPoly> res;
    bool all_zero = true;
    for (const auto& F : Fs) {
      res.push_back(F.compose(images, J));
      if (!res.back().is_zero()) all_zero = false;
    }
    if (all_zero) break;
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i) phi[j] -= res[i].scaled(Ainv(j, i));
  }
  for (auto& p : phi) p = p.truncated(J);
  return phi;
}

namespace {
template <class K>
Matrix<K> gram_impl(const BasicPoly<K>& q) {
  int n = q.nvars();
  Matrix<K> G(n, n);
  for (const auto& [e, c] : q.terms()) {
    if (total_degree(e) != 2) throw MathError("quadric_gram: input is not a quadratic form");
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      G(idx[0], idx[0]) += c;
    } else {
      K half = c / K(2);
      G(idx[0], idx[1]) += half;
      G(idx[1], idx[0]) += half;
    }
  }
  return G;
}
}  // namespace

RatMatrix quadric_gram(const MultiPoly& q) { return gram_impl(q); }
Matrix<AlgNum> quadric_gram(const AlgPoly& q) { return gram_impl(q); }

void uni_trim(UniPoly& a) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

int uni_degree(const UniPoly& a0) {
  UniPoly a = a0;
  uni_trim(a);
  return static_cast<int>(a.size()) - 1;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

UniPoly uni_derivative(const UniPoly& a) {
  UniPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rational(static_cast<long>(i)));
  uni_trim(r);
  return r;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = a;
    int db = static_cast<int>(b.size()) - 1;
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
      int shift = static_cast<int>(r.size()) - 1 - db;
      Rational k = r.back() / b.back();
      for (int i = 0; i <= db; ++i) r[shift + i] -= k * b[i];
      uni_trim(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& x : a) x /= lc;
  }
  return a;
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (sgn(x) < 0) return false;
  Integer n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

std::vector<std::string> var_names(const std::string& prefix, int first, int count) {
  std::vector<std::string> v;
  for (int i = 0; i < count; ++i) v.push_back(prefix + std::to_string(first + i));
  return v;
}

}  // namespace canon4
