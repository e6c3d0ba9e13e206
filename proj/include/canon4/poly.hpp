#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "canon4/scalar.hpp"

namespace canon4 {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Graded lexicographic order with x0 > x1 > ...; ascending in the map.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

template <class K>
class BasicPoly {
 public:
  using Coeff = K;
  using Terms = std::map<Monomial, K, GrlexLess>;

  BasicPoly() = default;
  explicit BasicPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static BasicPoly constant(std::vector<std::string> vars, const K& c) {
    BasicPoly p(std::move(vars));
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
  }
  static BasicPoly variable(std::vector<std::string> vars, int i, const K& c = K(1)) {
    BasicPoly p(std::move(vars));
    Monomial e(p.nvars(), 0);
    e.at(i) = 1;
    p.add_term(e, c);
    return p;
  }
  static BasicPoly monomial(std::vector<std::string> vars, Monomial e, const K& c = K(1)) {
    BasicPoly p(std::move(vars));
    p.add_term(std::move(e), c);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars_[i] == name) return i;
    return -1;
  }

  void add_term(Monomial e, const K& c) {
    if (static_cast<int>(e.size()) != nvars()) throw MathError("exponent length does not match variable count");
    for (int x : e)
      if (x < 0) throw MathError("negative exponent");
    if (canon4::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (canon4::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }
  int order() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }
  bool is_constant() const { return degree() <= 0; }
  K constant_term() const { return coeff(Monomial(nvars(), 0)); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return degree() == order();
  }

  std::pair<Monomial, K> leading_term() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  BasicPoly homogeneous_part(int d) const {
    BasicPoly r(vars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
  }

  BasicPoly truncated(int J) const {
    BasicPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) > J) break;
      r.terms_.emplace(e, c);
    }
    return r;
  }

  BasicPoly derivative(int i) const {
    BasicPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Monomial f = e;
      K k = c * K(e[i]);
      --f[i];
      r.add_term(std::move(f), k);
    }
    return r;
  }

  template <class T>
  T evaluate(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != nvars()) throw MathError("evaluation point has wrong length");
    T sum = T(0);
    for (const auto& [e, c] : terms_) {
      T term = T(c);
      for (int i = 0; i < nvars(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= x[i];
      sum += term;
    }
    return sum;
  }

  // Substitutes images[i] for variable i; trunc >= 0 drops terms above that total degree.
  BasicPoly compose(const std::vector<BasicPoly>& images, int trunc = -1) const {
    if (static_cast<int>(images.size()) != nvars()) throw MathError("compose: wrong number of images");
    std::vector<std::string> tv;
    bool have = false;
    for (const auto& im : images) {
      if (im.is_constant()) continue;
      if (have && im.vars() != tv) throw MathError("compose: images live in different rings");
      tv = im.vars();
      have = true;
    }
    if (!have && !images.empty()) tv = images[0].vars();
    std::vector<std::vector<BasicPoly>> powers(nvars());
    BasicPoly result(tv);
    for (const auto& [e, c] : terms_) {
      BasicPoly term = BasicPoly::constant(tv, c);
      for (int i = 0; i < nvars() && !term.is_zero(); ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(BasicPoly::constant(tv, K(1)));
        while (static_cast<int>(pw.size()) <= e[i])
          pw.push_back(mul_trunc(pw.back(), images[i].with_vars(tv), trunc));
        term = mul_trunc(term, pw[e[i]], trunc);
      }
      result += term;
    }
    return result;
  }

  // Reinterprets a polynomial in a new variable list; every used variable must be present.
  BasicPoly with_vars(const std::vector<std::string>& nv) const {
    if (nv == vars_) return *this;
    BasicPoly r(nv);
    std::vector<int> map(nvars(), -1);
    for (int i = 0; i < nvars(); ++i) {
      for (int j = 0; j < static_cast<int>(nv.size()); ++j)
        if (nv[j] == vars_[i]) map[i] = j;
    }
    for (const auto& [e, c] : terms_) {
      Monomial f(nv.size(), 0);
      for (int i = 0; i < nvars(); ++i) {
        if (e[i] == 0) continue;
        if (map[i] < 0) throw MathError("variable " + vars_[i] + " is not in the target ring");
        f[map[i]] += e[i];
      }
      r.add_term(std::move(f), c);
    }
    return r;
  }

  template <class K2, class Fn>
  BasicPoly<K2> map_coeffs(Fn fn) const {
    BasicPoly<K2> r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  BasicPoly operator-() const {
    BasicPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.vars_ != vars_) {
      std::vector<std::string> v = common_vars(*this, o);
      BasicPoly b = o.with_vars(v);
      if (v != vars_) *this = with_vars(v);
      for (const auto& [e, c] : b.terms_) add_term(e, c);
      return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) { return *this += -o; }
  BasicPoly& operator*=(const BasicPoly& o) {
    *this = mul_trunc(*this, o, -1);
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) { return mul_trunc(a, b, -1); }
  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.vars_ != b.vars_) {
      if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
      return false;
    }
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (it->first != e || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  BasicPoly scaled(const K& k) const {
    BasicPoly r(vars_);
    if (canon4::is_zero(k)) return r;
    for (const auto& [e, c] : terms_) {
      K v = c * k;
      r.terms_.emplace(e, v);
    }
    return r;
  }

  BasicPoly pow(int n, int trunc = -1) const {
    BasicPoly r = BasicPoly::constant(vars_, K(1));
    BasicPoly base = *this;
    while (n > 0) {
      if (n & 1) r = mul_trunc(r, base, trunc);
      n >>= 1;
      if (n) base = mul_trunc(base, base, trunc);
    }
    return r;
  }

  static BasicPoly mul_trunc(const BasicPoly& a0, const BasicPoly& b0, int trunc) {
    std::vector<std::string> v = common_vars(a0, b0);
    BasicPoly a = a0.with_vars(v), b = b0.with_vars(v);
    BasicPoly r(v);
    for (const auto& [ea, ca] : a.terms_) {
      int da = total_degree(ea);
      if (trunc >= 0 && da > trunc) break;
      for (const auto& [eb, cb] : b.terms_) {
        if (trunc >= 0 && da + total_degree(eb) > trunc) break;
        Monomial e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        K c = ca * cb;
        r.add_term(std::move(e), c);
      }
    }
    return r;
  }

  // Exact division; throws when the divisor does not divide.
  BasicPoly divide_exact(const BasicPoly& d0) const {
    if (d0.is_zero()) throw MathError("division by zero polynomial");
    std::vector<std::string> v = common_vars(*this, d0);
    BasicPoly rem = with_vars(v), d = d0.with_vars(v), q(v);
    auto [ld, lc] = d.leading_term();
    while (!rem.is_zero()) {
      auto [lr, rc] = rem.leading_term();
      Monomial m(lr.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = lr[i] - ld[i];
        if (m[i] < 0) throw MathError("inexact polynomial division");
      }
      K c = rc / lc;
      BasicPoly t = BasicPoly::monomial(v, m, c);
      q += t;
      rem -= t * d;
    }
    return q;
  }

 private:
  bool uses_only(const std::vector<std::string>& v) const {
    for (int i = 0; i < nvars(); ++i) {
      if (std::find(v.begin(), v.end(), vars_[i]) != v.end()) continue;
      for (const auto& t : terms_)
        if (t.first[i] != 0) return false;
    }
    return true;
  }

  static std::vector<std::string> common_vars(const BasicPoly& a, const BasicPoly& b) {
    if (a.vars_ == b.vars_) return a.vars_;
    if (a.uses_only(b.vars_)) return b.vars_;
    if (b.uses_only(a.vars_)) return a.vars_;
    throw MathError("polynomials live in different rings");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

using MultiPoly = BasicPoly<Rational>;
using AlgPoly = BasicPoly<AlgNum>;
using FpPoly = BasicPoly<Fp>;

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool is_zero(const AlgPoly& p) { return p.is_zero(); }

MultiPoly parse_poly_string(const std::string& s, const std::vector<std::string>& vars);
std::string to_string(const MultiPoly& p);
std::string to_string(const AlgPoly& p);

AlgPoly to_alg(const MultiPoly& p);

// A polynomial together with the total order bound up to which it is exact.
template <class K>
struct TruncatedSeries {
  BasicPoly<K> poly;
  int J = 16;

  TruncatedSeries() = default;
  TruncatedSeries(BasicPoly<K> p, int j) : poly(p.truncated(j)), J(j) {}

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int j = std::min(a.J, b.J);
    return TruncatedSeries((a.poly + b.poly).truncated(j), j);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int j = std::min(a.J, b.J);
    return TruncatedSeries((a.poly - b.poly).truncated(j), j);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int j = std::min(a.J, b.J);
    return TruncatedSeries(BasicPoly<K>::mul_trunc(a.poly, b.poly, j), j);
  }
  // Order of vanishing, or J+1 when the series is zero up to its bound.
  int order() const { return poly.is_zero() ? J + 1 : poly.order(); }
};

using Series = TruncatedSeries<Rational>;

}  // namespace canon4
