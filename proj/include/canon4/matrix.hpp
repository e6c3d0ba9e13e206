#pragma once

#include <string>
#include <utility>
#include <vector>

#include "canon4/poly.hpp"
#include "canon4/scalar.hpp"

namespace canon4 {

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline AlgNum exact_div(const AlgNum& a, const AlgNum& b) { return a / b; }
template <class K>
BasicPoly<K> exact_div(const BasicPoly<K>& a, const BasicPoly<K>& b) {
  return a.divide_exact(b);
}
template <class K>
bool is_zero(const BasicPoly<K>& p) {
  return p.is_zero();
}

template <class T>
T one_like(const T&) {
  return T(1);
}
template <class K>
BasicPoly<K> one_like(const BasicPoly<K>& p) {
  return BasicPoly<K>::constant(p.vars(), K(1));
}
template <class T>
T zero_like(const T&) {
  return T(0);
}
template <class K>
BasicPoly<K> zero_like(const BasicPoly<K>& p) {
  return BasicPoly<K>(p.vars());
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T(0)) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c_) throw MathError("ragged matrix literal");
      for (const auto& x : row) a_.push_back(x);
    }
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw MathError("ragged matrix");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  std::vector<T> row(int i) const { return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_); }
  std::vector<T> col(int j) const {
    std::vector<T> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (int i = 0; i < r_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw MathError("matrix product dimension mismatch");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (int j = 0; j < b.c_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw MathError("matrix sum dimension mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw MathError("matrix difference dimension mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != c_) throw MathError("matrix-vector dimension mismatch");
    std::vector<T> out(r_, T(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  void swap_rows(int i, int k) {
    for (int j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(int j, int k) {
    for (int i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// Fraction-free determinant; valid over any integral domain with exact_div.
template <class T>
T det_bareiss(Matrix<T> m) {
  if (!m.square()) throw MathError("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return one_like(T());
  T prev = one_like(m(0, 0));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(m(k, k))) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(m(i, k))) {
          p = i;
          break;
        }
      if (p < 0) return zero_like(m(0, 0));
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(v, prev);
      }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

// Row echelon over a field; returns pivot columns.
template <class T>
std::vector<int> rref_in_place(Matrix<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(r, p);
    T inv = T(1) / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref_in_place(m).size());
}

template <class T>
T det(const Matrix<T>& m) {
  return det_bareiss(m);
}

// Basis of the right kernel, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  std::vector<int> piv = rref_in_place(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(static_cast<int>(k), f);
    out.push_back(v);
  }
  return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw MathError("inverse of non-square matrix");
  int n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  std::vector<int> piv = rref_in_place(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw MathError("singular matrix");
  Matrix<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Solves m x = b over a field; returns false when inconsistent.
template <class T>
bool solve_linear(const Matrix<T>& m, const std::vector<T>& b, std::vector<T>& x) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<int> piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == m.cols()) return false;
  x.assign(m.cols(), T(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(static_cast<int>(k), m.cols());
  return true;
}

RatMatrix to_rat(const IntMatrix& m);
IntMatrix to_int(const RatMatrix& m);  // throws on non-integral entries

}  // namespace canon4
