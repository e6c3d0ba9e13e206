#pragma once

#include <vector>

#include "canon4/matrix.hpp"

namespace canon4 {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational value;
};

// minimize c.x subject to A x = b, x >= 0. Exact two-phase simplex, Bland's rule.
LpResult solve_lp(const RatMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c);

// Some w with sum(w) = 0 and <a, w> >= 1 for every row a, of least l1 norm; empty if none.
std::vector<Rational> positive_weight_point(const std::vector<std::vector<Integer>>& rows);

// Primitive integer multiple of a nonzero rational vector.
std::vector<Integer> primitive_integer(const std::vector<Rational>& v);

}  // namespace canon4
