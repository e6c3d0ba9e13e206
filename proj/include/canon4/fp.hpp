#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "canon4/model.hpp"
#include "canon4/poly.hpp"

namespace canon4 {

// Rational polynomial reduced modulo p, flattened for fast evaluation.
class PolyFp {
 public:
  PolyFp() = default;
  PolyFp(const MultiPoly& P, std::uint32_t p);  // throws on a denominator divisible by p

  std::uint32_t eval(const std::uint32_t* x) const;
  std::uint32_t eval(const std::vector<std::uint32_t>& x) const { return eval(x.data()); }
  bool is_zero() const { return coeffs_.empty(); }
  int nvars() const { return n_; }
  std::uint32_t prime() const { return p_; }
  PolyFp derivative(int i) const;

 private:
  std::uint32_t p_ = 0;
  int n_ = 0, deg_ = 0;
  std::vector<std::uint32_t> coeffs_;
  std::vector<std::uint8_t> exps_;  // n_ entries per term
};

using FpPoint = std::vector<std::uint32_t>;

// All points of P^{n-1}(F_p), first nonzero coordinate 1, lexicographically sorted.
std::vector<FpPoint> projective_points(int n, std::uint32_t p);

// Visits the same points without materializing them.
template <class Fn>
void for_each_projective_point(int n, std::uint32_t p, Fn&& fn) {
  FpPoint x(n);
  for (int lead = n - 1; lead >= 0; --lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    int free = n - 1 - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= p;
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t r = k;
      for (int i = n - 1; i > lead; --i) {
        x[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      fn(x);
    }
  }
}

FpPoint normalize_fp(FpPoint x, std::uint32_t p);

// Reduction of an exact point modulo p under every embedding of its field into F_p.
std::vector<FpPoint> reduce_point_mod_p(const ProjPoint& pt, std::uint32_t p);

// Roots in F_p of a rational univariate polynomial (coefficients low to high).
std::vector<std::uint32_t> roots_mod_p(const std::vector<Rational>& poly, std::uint32_t p);

}  // namespace canon4
