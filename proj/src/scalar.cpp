#include "canon4/scalar.hpp"

#include <cctype>

namespace canon4 {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw MathError("empty rational literal");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw MathError("malformed rational literal '" + s + "' at offset " + std::to_string(i));
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    throw MathError("malformed rational literal '" + s + "'");
  std::string body = s[0] == '+' ? s.substr(1) : s;
  Rational r;
  if (r.set_str(body, 10) != 0) throw MathError("malformed rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw MathError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Integer lcm_of_denominators(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

namespace {

using UPoly = std::vector<Rational>;

void trim(UPoly& a) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& m) {
  trim(a);
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    Rational c = a.back() / m.back();
    for (int i = 0; i <= dm; ++i) a[shift + i] -= c * m[i];
    trim(a);
  }
  return a;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly upoly_sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void upoly_divmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    Rational c = a.back() / b.back();
    q[shift] += c;
    for (int i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  r = a;
}

}  // namespace

NumberField::NumberField(std::string name, std::vector<Rational> minpoly)
    : name_(std::move(name)), minpoly_(std::move(minpoly)) {
  trim(minpoly_);
  if (minpoly_.size() < 2) throw MathError("number field minimal polynomial must have degree >= 1");
  if (minpoly_.back() != 1) throw MathError("number field minimal polynomial must be monic");
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> a) const {
  a = upoly_mod(std::move(a), minpoly_);
  a.resize(degree());
  return a;
}

std::vector<Rational> NumberField::multiply(const std::vector<Rational>& a,
                                            const std::vector<Rational>& b) const {
  return reduce(upoly_mul(a, b));
}

std::vector<Rational> NumberField::inverse(const std::vector<Rational>& a) const {
  UPoly r0 = minpoly_, r1 = a;
  trim(r1);
  if (r1.empty()) throw MathError("division by zero in " + name_);
  UPoly t0, t1{Rational(1)};
  while (r1.size() > 1) {
    UPoly q, r;
    upoly_divmod(r0, r1, q, r);
    UPoly t2 = upoly_sub(t0, upoly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
    if (r1.empty()) throw MathError("zero divisor in " + name_ + ": minimal polynomial is reducible");
  }
  Rational c = r1[0];
  for (auto& x : t1) x /= c;
  return reduce(t1);
}

AlgNum::AlgNum(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

AlgNum AlgNum::generator(const FieldPtr& field) {
  std::vector<Rational> c(2);
  c[1] = 1;
  return AlgNum(field, c);
}

void AlgNum::normalize() {
  if (field_) {
    c_ = field_->reduce(c_);
  } else {
    c_.resize(1);
  }
}

bool AlgNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!is_zero(c_[i])) return false;
  return true;
}

Rational AlgNum::rational_value() const {
  if (!is_rational()) throw MathError("algebraic number " + str() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

bool AlgNum::zero() const {
  for (const auto& x : c_)
    if (!is_zero(x)) return false;
  return true;
}

FieldPtr AlgNum::common_field(const AlgNum& a, const AlgNum& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (a.field_ != b.field_ && a.field_->minpoly() != b.field_->minpoly())
    throw MathError("mixing elements of different number fields");
  return a.field_;
}

void AlgNum::promote_to(const FieldPtr& f) {
  if (!f || field_ == f) return;
  field_ = f;
  normalize();
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  FieldPtr f = common_field(*this, o);
  promote_to(f);
  AlgNum b = o;
  b.promote_to(f);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) { return *this += -o; }

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  FieldPtr f = common_field(*this, o);
  if (!f) {
    c_[0] *= o.c_[0];
    return *this;
  }
  promote_to(f);
  AlgNum b = o;
  b.promote_to(f);
  c_ = f->multiply(c_, b.c_);
  return *this;
}

AlgNum& AlgNum::operator/=(const AlgNum& o) {
  if (o.zero()) throw MathError("division by zero");
  FieldPtr f = common_field(*this, o);
  if (!f) {
    c_[0] /= o.c_[0];
    return *this;
  }
  promote_to(f);
  AlgNum b = o;
  b.promote_to(f);
  c_ = f->multiply(c_, f->inverse(b.c_));
  return *this;
}

bool operator==(const AlgNum& a, const AlgNum& b) { return (a - b).zero(); }

std::string AlgNum::str() const {
  if (is_rational()) return to_string(c_.empty() ? Rational(0) : c_[0]);
  std::string out;
  std::string g = field_ ? field_->name() : "a";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (is_zero(c_[i])) continue;
    std::string coef = to_string(c_[i]);
    std::string term;
    if (i == 0) {
      term = coef;
    } else {
      std::string mon = i == 1 ? g : g + "^" + std::to_string(i);
      if (c_[i] == 1) term = mon;
      else if (c_[i] == -1) term = "-" + mon;
      else term = coef + "*" + mon;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
  while (r1) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw MathError("element not invertible modulo " + std::to_string(m));
  if (t0 < 0) t0 += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t0);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t reduce_mod(const Rational& x, std::uint32_t p) {
  Integer pz = p;
  Integer num = x.get_num() % pz, den = x.get_den() % pz;
  if (sgn(den) == 0) throw MathError("bad reduction: denominator of " + to_string(x) + " divisible by " + std::to_string(p));
  if (sgn(num) < 0) num += pz;
  std::uint64_t n = num.get_ui(), d = den.get_ui();
  return static_cast<std::uint32_t>(n * invmod(d, p) % p);
}

bool rational_reconstruct(std::uint64_t a, std::uint64_t p, Rational& out) {
  std::int64_t bound = 1;
  while (static_cast<std::uint64_t>((bound + 1) * (bound + 1) * 2) <= p) ++bound;
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 > bound) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || std::llabs(t1) > bound) return false;
  Integer g;
  Integer rn = r1, tn = t1;
  mpz_gcd(g.get_mpz_t(), rn.get_mpz_t(), tn.get_mpz_t());
  if (g != 1 && r1 != 0) return false;
  out = Rational(rn, tn);
  out.canonicalize();
  return true;
}

Fp::Fp(std::int64_t v, std::uint32_t p) : p_(p) {
  if (p == 0) {
    raw_ = v;
    return;
  }
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  v_ = static_cast<std::uint32_t>(m);
}

std::uint32_t Fp::value() const {
  if (!p_) throw MathError("untyped prime-field constant has no residue");
  return v_;
}

void Fp::adopt(std::uint32_t p) {
  if (p_ || !p) return;
  *this = Fp(raw_, p);
}

std::uint32_t Fp::unify(Fp& a, Fp& b) {
  if (a.p_ && b.p_ && a.p_ != b.p_) throw MathError("mixing different prime fields");
  std::uint32_t p = a.p_ ? a.p_ : b.p_;
  a.adopt(p);
  b.adopt(p);
  return p;
}

Fp Fp::operator-() const {
  if (!p_) return Fp(-raw_, 0);
  return Fp(v_ ? p_ - v_ : 0, p_);
}

Fp& Fp::operator+=(const Fp& o) {
  Fp b = o;
  std::uint32_t p = unify(*this, b);
  if (!p) raw_ += b.raw_;
  else v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) + b.v_) % p);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) { return *this += -o; }

Fp& Fp::operator*=(const Fp& o) {
  Fp b = o;
  std::uint32_t p = unify(*this, b);
  if (!p) raw_ *= b.raw_;
  else v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * b.v_ % p);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) {
  Fp b = o;
  std::uint32_t p = unify(*this, b);
  if (b.zero()) throw MathError("division by zero in prime field");
  if (!p) {
    if (raw_ % b.raw_ != 0) throw MathError("inexact division of untyped prime-field constants");
    raw_ /= b.raw_;
  } else {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * invmod(b.v_, p) % p);
  }
  return *this;
}

bool operator==(const Fp& a, const Fp& b) {
  Fp x = a, y = b;
  std::uint32_t p = Fp::unify(x, y);
  return p ? x.v_ == y.v_ : x.raw_ == y.raw_;
}

std::string Fp::str() const { return p_ ? std::to_string(v_) : std::to_string(raw_); }

}  // namespace canon4
