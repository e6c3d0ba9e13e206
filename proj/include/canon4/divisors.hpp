#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canon4/scalar.hpp"

namespace canon4 {

enum class PEBasis { EtaH, LambdaDelta };

// Coefficients in a fixed basis of Pic(PE) tensor Q.
struct PEClass {
  Rational a, b;
  PEBasis basis = PEBasis::EtaH;
  bool operator==(const PEClass& o) const { return a == o.a && b == o.b && basis == o.basis; }
  PEClass operator+(const PEClass& o) const;
  PEClass operator*(const Rational& s) const;
  std::string str() const;
};

struct PEConstants {
  std::vector<std::pair<std::string, PEClass>> table;  // K, V, Sigma, lambda, delta in (eta, h)
  PEClass eta;  // in (lambda, delta)
  PEClass h;
  const PEClass& get(const std::string& name) const;
};

PEConstants pe_constants();

PEClass convert(const PEClass& cls, PEBasis to);

// Parses "9l-1d", "3eta+2h", "l", "-d" and similar.
PEClass parse_pe_class(const std::string& s);

bool proportional(const PEClass& x, const PEClass& y);

enum class PencilConfig { FixedQuadric, FixedCubic };
PencilConfig parse_pencil_config(const std::string& s);  // "quadric" or "cubic"

struct PencilCount {
  int euler_surface = 0;
  int base_points = 0;
  int euler_fiber = 0;
  int singular_fibers = 0;
  std::string base_point_product;
};

PencilCount pencil_singular_count(PencilConfig c);

// a lambda - b0 delta0 - b1 delta1 - b2 delta2.
struct M4Class {
  Rational a, b0, b1, b2;
  std::string str() const;
};

struct TestCurveSolution {
  Rational a, b0, b1, b2;
  // g^* of the class on the genus-2 side, coefficients of (omega, lambda, delta1) after eliminating delta0.
  std::vector<Rational> reduced_pullback;
  Rational weierstrass_scale;
  M4Class pullback() const { return {a, b0, b1, b2}; }
  // Adds 2(delta1 + delta2), the exceptional adjustment.
  M4Class adjusted() const;
};

// a and b0 come from the (3,2) linearization converted to (lambda, delta).
TestCurveSolution test_curve_constraints();
TestCurveSolution test_curve_constraints(const Rational& a, const Rational& b0);

std::optional<Rational> hassett_keel_alpha(const M4Class& cls);

}  // namespace canon4
