#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace canon4 {

using Integer = mpz_class;
using Rational = mpq_class;

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

Integer lcm_of_denominators(const std::vector<Rational>& xs);

// Q(alpha) with alpha a root of a monic polynomial. Irreducibility is the
// caller's responsibility; a failed inversion reports a zero divisor.
class NumberField {
 public:
  NumberField(std::string name, std::vector<Rational> minpoly);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::string& name() const { return name_; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }

  std::vector<Rational> reduce(std::vector<Rational> a) const;
  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;
  std::vector<Rational> inverse(const std::vector<Rational>& a) const;

 private:
  std::string name_;
  std::vector<Rational> minpoly_;  // low to high, monic
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field, or a plain rational when no field is attached.
class AlgNum {
 public:
  AlgNum() : c_(1) {}
  AlgNum(int v) : c_(1, Rational(v)) {}  // NOLINT
  AlgNum(const Rational& v) : c_(1, v) {}  // NOLINT
  AlgNum(FieldPtr field, std::vector<Rational> coeffs);

  static AlgNum generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_rational() const;
  Rational rational_value() const;
  bool zero() const;

  AlgNum operator-() const;
  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o);
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
  friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
  friend bool operator==(const AlgNum& a, const AlgNum& b);
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  std::string str() const;

 private:
  void promote_to(const FieldPtr& f);
  static FieldPtr common_field(const AlgNum& a, const AlgNum& b);
  void normalize();

  FieldPtr field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const AlgNum& x) { return x.zero(); }
inline std::string to_string(const AlgNum& x) { return x.str(); }

// Prime field element. A zero modulus marks an untyped integer constant that
// adopts the modulus of the first typed operand it meets.
class Fp {
 public:
  Fp() = default;
  Fp(int v) : raw_(v) {}  // NOLINT
  Fp(std::int64_t v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const;
  bool zero() const { return p_ ? v_ == 0 : raw_ == 0; }

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const;

 private:
  void adopt(std::uint32_t p);
  static std::uint32_t unify(Fp& a, Fp& b);

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
  std::int64_t raw_ = 0;
};

inline bool is_zero(const Fp& x) { return x.zero(); }
inline std::string to_string(const Fp& x) { return x.str(); }

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
bool is_prime(std::uint64_t n);
std::uint32_t reduce_mod(const Rational& x, std::uint32_t p);  // throws on bad reduction

// Smallest |r|,|s| <= bound with r/s = a mod p, if any.
bool rational_reconstruct(std::uint64_t a, std::uint64_t p, Rational& out);

}  // namespace canon4
