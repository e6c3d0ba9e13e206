#include "canon4/lp.hpp"

namespace canon4 {

namespace {

// Dense tableau: rows 0..m-1 constraints, last column rhs.
struct Tableau {
  int m, n;
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rational inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (int i = 0; i < static_cast<int>(t.size()); ++i) {
      if (i == r || is_zero(t[i][c])) continue;
      Rational f = t[i][c];
      for (int j = 0; j <= n; ++j)
        if (!is_zero(t[r][j])) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Minimizes the objective stored in row m (reduced costs); allowed[j] gates entering columns.
  LpStatus run(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && sgn(t[m][j]) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        Rational ratio = t[i][n] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  void set_objective(const std::vector<Rational>& c) {
    t[m].assign(n + 1, Rational(0));
    for (int j = 0; j < static_cast<int>(c.size()); ++j) t[m][j] = c[j];
    for (int i = 0; i < m; ++i) {
      const Rational& cb = t[m][basis[i]];
      if (is_zero(cb)) continue;
      Rational f = cb;
      for (int j = 0; j <= n; ++j) t[m][j] -= f * t[i][j];
    }
  }
};

}  // namespace

LpResult solve_lp(const RatMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  int m = A.rows(), nv = A.cols();
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != nv) throw MathError("LP dimension mismatch");
  Tableau T;
  T.m = m;
  T.n = nv + m;
  T.t.assign(m + 1, std::vector<Rational>(T.n + 1));
  T.basis.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    int s = sgn(b[i]) < 0 ? -1 : 1;
    for (int j = 0; j < nv; ++j) T.t[i][j] = s * A(i, j);
    T.t[i][nv + i] = 1;
    T.t[i][T.n] = s * b[i];
    T.basis[i] = nv + i;
  }
  std::vector<Rational> phase1(T.n);
  for (int i = 0; i < m; ++i) phase1[nv + i] = 1;
  T.set_objective(phase1);
  T.run(std::vector<bool>(T.n, true));
  LpResult res;
  if (sgn(T.t[m][T.n]) != 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Drive zero-level artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (T.basis[i] < nv) continue;
    for (int j = 0; j < nv; ++j)
      if (!is_zero(T.t[i][j])) {
        T.pivot(i, j);
        break;
      }
  }
  std::vector<Rational> c2(T.n);
  for (int j = 0; j < nv; ++j) c2[j] = c[j];
  T.set_objective(c2);
  std::vector<bool> allowed(T.n, false);
  for (int j = 0; j < nv; ++j) allowed[j] = true;
  if (T.run(allowed) == LpStatus::Unbounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x.assign(nv, Rational(0));
  for (int i = 0; i < m; ++i)
    if (T.basis[i] < nv) res.x[T.basis[i]] = T.t[i][T.n];
  res.value = 0;
  for (int j = 0; j < nv; ++j) res.value += c[j] * res.x[j];
  return res;
}

std::vector<Rational> positive_weight_point(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty()) return {};
  int n = static_cast<int>(rows[0].size());
  int m = static_cast<int>(rows.size());
  // Variables: u (n), v (n), slack (m). w = u - v.
  RatMatrix A(m + 1, 2 * n + m);
  std::vector<Rational> b(m + 1), c(2 * n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      A(i, j) = Rational(rows[i][j]);
      A(i, n + j) = -Rational(rows[i][j]);
    }
    A(i, 2 * n + i) = -1;
    b[i] = 1;
  }
  for (int j = 0; j < n; ++j) {
    A(m, j) = 1;
    A(m, n + j) = -1;
  }
  for (int j = 0; j < 2 * n; ++j) c[j] = 1;
  LpResult r = solve_lp(A, b, c);
  if (r.status != LpStatus::Optimal) return {};
  std::vector<Rational> w(n);
  for (int j = 0; j < n; ++j) w[j] = r.x[j] - r.x[n + j];
  return w;
}

std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
  Integer den = lcm_of_denominators(v);
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : v) {
    Rational s = x * den;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) throw MathError("primitive_integer of the zero vector");
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace canon4
