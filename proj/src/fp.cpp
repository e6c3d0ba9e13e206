#include "canon4/fp.hpp"

#include <algorithm>

namespace canon4 {

PolyFp::PolyFp(const MultiPoly& P, std::uint32_t p) : p_(p), n_(P.nvars()) {
  for (const auto& [e, c] : P.terms()) {
    std::uint32_t v = reduce_mod(c, p);
    if (v == 0) continue;
    coeffs_.push_back(v);
    for (int x : e) {
      if (x > 255) throw MathError("exponent too large for prime-field evaluator");
      exps_.push_back(static_cast<std::uint8_t>(x));
    }
    deg_ = std::max(deg_, total_degree(e));
  }
}

std::uint32_t PolyFp::eval(const std::uint32_t* x) const {
  std::uint64_t acc = 0;
  const std::uint8_t* e = exps_.data();
  if (deg_ <= 7 && n_ <= 8) {
    std::uint64_t pw[8][8];
    for (int i = 0; i < n_; ++i) {
      pw[i][0] = 1;
      for (int k = 1; k <= deg_; ++k) pw[i][k] = pw[i][k - 1] * x[i] % p_;
    }
    for (std::uint32_t c : coeffs_) {
      std::uint64_t t = c;
      for (int i = 0; i < n_; ++i)
        if (e[i]) t = t * pw[i][e[i]] % p_;
      acc += t;
      e += n_;
    }
    return static_cast<std::uint32_t>(acc % p_);
  }
  for (std::uint32_t c : coeffs_) {
    std::uint64_t t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) t = t * x[i] % p_;
    acc += t;
    e += n_;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

PolyFp PolyFp::derivative(int i) const {
  PolyFp d;
  d.p_ = p_;
  d.n_ = n_;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    const std::uint8_t* e = &exps_[t * n_];
    if (e[i] == 0) continue;
    std::uint64_t c = static_cast<std::uint64_t>(coeffs_[t]) * e[i] % p_;
    if (c == 0) continue;
    d.coeffs_.push_back(static_cast<std::uint32_t>(c));
    int deg = 0;
    for (int k = 0; k < n_; ++k) {
      std::uint8_t v = e[k] - (k == i ? 1 : 0);
      d.exps_.push_back(v);
      deg += v;
    }
    d.deg_ = std::max(d.deg_, deg);
  }
  return d;
}

std::vector<FpPoint> projective_points(int n, std::uint32_t p) {
  std::vector<FpPoint> out;
  for_each_projective_point(n, p, [&](const FpPoint& x) { out.push_back(x); });
  return out;
}

FpPoint normalize_fp(FpPoint x, std::uint32_t p) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] % p == 0) continue;
    std::uint64_t inv = invmod(x[i] % p, p);
    for (auto& v : x) v = static_cast<std::uint32_t>(v % p * inv % p);
    return x;
  }
  throw MathError("zero vector modulo p");
}

std::vector<std::uint32_t> roots_mod_p(const std::vector<Rational>& poly, std::uint32_t p) {
  std::vector<std::uint32_t> c;
  for (const auto& x : poly) c.push_back(reduce_mod(x, p));
  std::vector<std::uint32_t> roots;
  for (std::uint32_t r = 0; r < p; ++r) {
    std::uint64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * r + *it) % p;
    if (acc == 0) roots.push_back(r);
  }
  return roots;
}

std::vector<FpPoint> reduce_point_mod_p(const ProjPoint& pt0, std::uint32_t p) {
  ProjPoint pt = normalize_point(pt0);
  std::vector<Rational> all;
  for (const auto& x : pt)
    for (const auto& c : x.coeffs()) all.push_back(c);
  Integer den = lcm_of_denominators(all);
  FieldPtr field;
  for (const auto& x : pt)
    if (x.field() && !x.is_rational()) field = x.field();
  std::vector<std::uint32_t> images{0};
  if (field) images = roots_mod_p(field->minpoly(), p);
  std::vector<FpPoint> out;
  for (std::uint32_t r : images) {
    FpPoint v;
    bool ok = true;
    for (const auto& x : pt) {
      std::uint64_t acc = 0, rp = 1;
      for (const auto& c : x.coeffs()) {
        Rational scaled = c * den;
        std::uint32_t cv = reduce_mod(scaled, p);
        acc = (acc + cv * rp) % p;
        rp = rp * r % p;
      }
      v.push_back(static_cast<std::uint32_t>(acc));
    }
    for (std::uint32_t x : v) ok = ok && x == 0;
    if (ok) continue;
    FpPoint n = normalize_fp(v, p);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace canon4
