#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canon4/poly.hpp"
#include "canon4/scalar.hpp"

namespace canon4 {

// Projective point with coordinates in Q or a number field.
using ProjPoint = std::vector<AlgNum>;

ProjPoint normalize_point(ProjPoint p);  // first nonzero coordinate becomes 1
bool same_point(const ProjPoint& a, const ProjPoint& b);
bool point_is_rational(const ProjPoint& p);
std::string to_string(const ProjPoint& p);
ProjPoint rational_point(const std::vector<Rational>& xs);

// (q, f) on P^3 with variables x1..x4; f is kept reduced modulo x_i q.
struct TwoThreeScheme {
  std::string name;
  MultiPoly q, f;
  FieldPtr field;                 // optional coordinate field for known points
  std::vector<ProjPoint> hints;   // candidate singular points
};

struct CubicThreefold {
  std::string name;
  MultiPoly F;  // variables x0..x4
  std::optional<ProjPoint> marked;
};

std::vector<std::string> scheme_vars();  // x1..x4
std::vector<std::string> cubic_vars();   // x0..x4

// Validates degrees and reduces f; throws MathError on bad input.
TwoThreeScheme make_scheme(MultiPoly q, MultiPoly f, std::string name = "");

// Canonical representative of f modulo span{x_i q}.
MultiPoly reduce_mod_q(const MultiPoly& f, const MultiPoly& q);

// Complete-intersection flag: q nonzero and q, f without common factor.
bool is_complete_intersection(const TwoThreeScheme& C);

bool same_scheme(const TwoThreeScheme& a, const TwoThreeScheme& b);

}  // namespace canon4
