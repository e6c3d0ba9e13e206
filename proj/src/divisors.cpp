#include "canon4/divisors.hpp"

#include <cctype>
#include <map>

#include "canon4/matrix.hpp"
#include "canon4/polyio.hpp"

namespace canon4 {

namespace {

// Columns lambda, delta in (eta, h) coordinates.
RatMatrix ld_to_eh() {
  return RatMatrix{{Rational(4), Rational(33)}, {Rational(4), Rational(34)}};
}

PEClass eh(long a, long b) { return {Rational(a), Rational(b), PEBasis::EtaH}; }

}  // namespace

PEClass PEClass::operator+(const PEClass& o) const {
  if (basis != o.basis) throw MathError("adding classes in different bases");
  return {a + o.a, b + o.b, basis};
}

PEClass PEClass::operator*(const Rational& s) const { return {a * s, b * s, basis}; }

std::string PEClass::str() const {
  const char* x = basis == PEBasis::EtaH ? "eta" : "l";
  const char* y = basis == PEBasis::EtaH ? "h" : "d";
  std::string out = to_string(a) + x;
  out += sgn(b) < 0 ? "-" + to_string(Rational(-b)) : "+" + to_string(b);
  return out + y;
}

const PEClass& PEConstants::get(const std::string& name) const {
  for (const auto& [n, c] : table)
    if (n == name) return c;
  throw MathError("no constant named " + name);
}

PEConstants pe_constants() {
  PEConstants k;
  k.table = {{"K", eh(-14, -16)}, {"V", eh(4, 0)}, {"Sigma", eh(33, 34)}, {"lambda", eh(4, 4)}, {"delta", eh(33, 34)}};
  RatMatrix inv = inverse(ld_to_eh());
  k.eta = {inv(0, 0), inv(1, 0), PEBasis::LambdaDelta};
  k.h = {inv(0, 1), inv(1, 1), PEBasis::LambdaDelta};
  return k;
}

PEClass convert(const PEClass& cls, PEBasis to) {
  if (cls.basis == to) return cls;
  RatMatrix M = to == PEBasis::EtaH ? ld_to_eh() : inverse(ld_to_eh());
  auto v = M.apply({cls.a, cls.b});
  return {v[0], v[1], to};
}

PEClass parse_pe_class(const std::string& s) {
  static const std::map<std::string, std::pair<PEBasis, int>> symbols{
      {"l", {PEBasis::LambdaDelta, 0}}, {"lambda", {PEBasis::LambdaDelta, 0}},
      {"d", {PEBasis::LambdaDelta, 1}}, {"delta", {PEBasis::LambdaDelta, 1}},
      {"eta", {PEBasis::EtaH, 0}},      {"h", {PEBasis::EtaH, 1}},
  };
  PEConstants k = pe_constants();
  std::vector<std::pair<Rational, std::string>> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i == s.size()) throw ParseError("empty class");
  while (i < s.size()) {
    std::size_t at = i;
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!terms.empty()) {
      throw ParseError("expected + or - at position " + std::to_string(i));
    }
    std::size_t c0 = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coeff = c0 == i ? Rational(1) : parse_rational(s.substr(c0, i - c0));
    skip();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip();
    }
    std::size_t n0 = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::string sym = s.substr(n0, i - n0);
    if (sym.empty()) throw ParseError("missing symbol at position " + std::to_string(at));
    terms.emplace_back(sign * coeff, sym);
    skip();
  }
  bool all_ld = true;
  PEClass total = eh(0, 0);
  for (const auto& [c, sym] : terms) {
    PEClass unit;
    auto it = symbols.find(sym);
    if (it != symbols.end()) {
      unit = it->second.second == 0 ? PEClass{1, 0, it->second.first} : PEClass{0, 1, it->second.first};
      if (it->second.first != PEBasis::LambdaDelta) all_ld = false;
    } else {
      bool found = false;
      for (const auto& [n, v] : k.table)
        if (n == sym) {
          unit = v;
          found = true;
        }
      if (!found) throw ParseError("unknown symbol '" + sym + "'");
      all_ld = false;
    }
    total = total + convert(unit, PEBasis::EtaH) * c;
  }
  return all_ld ? convert(total, PEBasis::LambdaDelta) : total;
}

bool proportional(const PEClass& x, const PEClass& y) {
  PEClass u = convert(x, PEBasis::EtaH), v = convert(y, PEBasis::EtaH);
  return u.a * v.b == u.b * v.a;
}

PencilConfig parse_pencil_config(const std::string& s) {
  if (s == "quadric" || s == "fixed_quadric_pencil_of_cubics") return PencilConfig::FixedQuadric;
  if (s == "cubic" || s == "fixed_cubic_pencil_of_quadrics") return PencilConfig::FixedCubic;
  throw ParseError("unknown pencil configuration '" + s + "'");
}

PencilCount pencil_singular_count(PencilConfig c) {
  PencilCount p;
  const int genus = 4;
  p.euler_fiber = 2 - 2 * genus;
  if (c == PencilConfig::FixedQuadric) {
    // Two (3,3) curves on P1 x P1.
    p.euler_surface = 4;
    p.base_points = 3 * 3 + 3 * 3;
    p.base_point_product = "3*3+3*3";
  } else {
    // Two quadric sections of a cubic surface.
    p.euler_surface = 9;
    p.base_points = 2 * 2 * 3;
    p.base_point_product = "2*2*3";
  }
  p.singular_fibers = p.euler_surface + p.base_points - 2 * p.euler_fiber;
  return p;
}

std::string M4Class::str() const {
  return to_string(a) + "l-" + to_string(b0) + "d0-" + to_string(b1) + "d1-" + to_string(b2) + "d2";
}

M4Class TestCurveSolution::adjusted() const { return {a, b0, b1 - 2, b2 - 2}; }

TestCurveSolution test_curve_constraints() {
  PEClass lin = convert(PEClass{3, 2, PEBasis::EtaH}, PEBasis::LambdaDelta);
  return test_curve_constraints(lin.a, -lin.b);
}

TestCurveSolution test_curve_constraints(const Rational& a, const Rational& b0) {
  TestCurveSolution s;
  s.a = a;
  s.b0 = b0;
  // Elliptic tails: Z.(lambda, delta0, delta1, delta2) and Z.L = 0.
  const std::vector<Rational> z{1, 12, -1, 0};
  if (is_zero(z[2])) throw MathError("test curve does not see delta1");
  s.b1 = (a * z[0] - b0 * z[1]) / z[2];
  // Gluing map: delta2 pulls back to -omega; basis (omega, lambda, delta0, delta1).
  // The genus-2 relation 10 lambda = delta0 + 2 delta1 eliminates delta0.
  // b2 is left symbolic: the omega coefficient is fixed afterwards.
  std::vector<Rational> rel{0, 10, -1, -2};
  std::vector<Rational> cls{0, a, -b0, -s.b1};
  Rational t = cls[2] / rel[2];
  for (int i = 0; i < 4; ++i) cls[i] -= t * rel[i];
  // Modulo delta1 the class must be a multiple of the Weierstrass divisor 3 omega - lambda.
  const std::vector<Rational> w{3, -1};
  s.weierstrass_scale = cls[1] / w[1];
  if (sgn(s.weierstrass_scale) <= 0) throw MathError("inconsistent inputs: no effective Weierstrass multiple");
  s.b2 = s.weierstrass_scale * w[0];
  s.reduced_pullback = {s.b2, cls[1], cls[3]};
  return s;
}

std::optional<Rational> hassett_keel_alpha(const M4Class& c) {
  if (c.b0 != c.b1 || c.b1 != c.b2) return std::nullopt;
  if (is_zero(c.a)) return std::nullopt;
  // K = 13 lambda - 2 delta, so K + alpha delta is proportional to a lambda - b delta iff 2 - alpha = 13 b / a.
  return Rational(2) - Rational(13) * c.b0 / c.a;
}

}  // namespace canon4
