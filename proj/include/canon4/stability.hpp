#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canon4/correspond.hpp"
#include "canon4/lp.hpp"

namespace canon4 {

enum class Convention { SumZero, RWeights };

struct OnePS {
  std::vector<Integer> w;
  Convention tag = Convention::SumZero;

  // r-weights map to (N+1) r_i - sum r_j.
  OnePS to_sum_zero() const;
  std::string str() const;
  static OnePS sum_zero(std::vector<Integer> w);
  static OnePS r_weights(std::vector<Integer> r);
};

std::string to_string(Convention c);

enum class Status { Stable, StrictlySemistable, Unstable, NotApplicable };
std::string to_string(Status s);

struct StabilityVerdict {
  Status status = Status::NotApplicable;
  std::vector<std::string> reasons;  // first entry is the clause label
  std::optional<std::string> minimal_orbit;
  std::optional<OnePS> certificate;
};

// Orbit labels.
inline const char* kOrbitCD = "C_D";
inline const char* kOrbitC2A5 = "C_2A5";
inline const char* kOrbitCABGeneric = "C_{A,B}(4A/B^2!=1)";
inline const char* kOrbitC2A5OrCAB = "C_2A5 or C_{A,B}(4A/B^2!=1)";
inline const char* kOrbitRibbon = "C_{A,B}(4A/B^2=1)";

struct VerdictFlags {
  bool ribbon = false;                      // support is a twisted cubic (chordal detection)
  std::optional<bool> line_meets_three;     // rank 2: C meets Sing(Q) in three distinct points
};

VerdictFlags verdict_flags(const TwoThreeScheme& C, const SingularityReport& rep);

StabilityVerdict git_verdict(const SingularityReport& rep, int rankQ, const VerdictFlags& flags);
StabilityVerdict git_verdict(const TwoThreeScheme& C, const ClassifyOptions& opt = {});

std::string degeneration_target(const SingularityReport& rep, int rankQ);

// Min over supp(F) of <e, w> after converting w to the sum-zero convention.
Rational torus_weight_min(const MultiPoly& F, const OnePS& w);

struct Certificate {
  OnePS w;
  RatMatrix frame;    // F is evaluated at frame * x
  int frame_index = 0;  // 0 = given frame
  Rational min_weight;
};

// Exponent vectors of the support, deduplicated.
std::vector<std::vector<Integer>> support_exponents(const MultiPoly& F);

std::optional<Certificate> destabilize_in_frame(const MultiPoly& F);

// Deterministic SL frames L*U with small unitriangular factors.
std::vector<RatMatrix> random_frames(int n, int count, std::uint64_t seed);

struct SearchOptions {
  int frames = 0;
  std::uint64_t seed = 0;
  std::vector<RatMatrix> known_frames;
};

std::optional<Certificate> destabilize_search(const MultiPoly& F, const SearchOptions& opt = {});

// Primitive w != 0 with sum zero and every support weight equal to zero.
std::optional<OnePS> zero_weight_1ps(const MultiPoly& F);

struct ChowForm {
  MultiPoly R;  // variables p01 p02 p03 p12 p13 p23
  int degree = 0;
};

std::vector<std::string> plucker_vars();
std::vector<Rational> plucker_point(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Normal form modulo p01 p23 - p02 p13 + p03 p12 with p01 p23 leading.
MultiPoly plucker_normal_form(const MultiPoly& R);
MultiPoly plucker_relation();

ChowForm chow_form(const TwoThreeScheme& C);

// Line through a and b meets C, by gcd of the restricted binary forms.
bool line_meets_curve(const TwoThreeScheme& C, const std::vector<Rational>& a, const std::vector<Rational>& b);

// Torus weight of each Plücker monomial as a vector on x1..x4.
std::vector<std::vector<Integer>> chow_weight_vectors(const ChowForm& R);
Rational chow_weight_min(const ChowForm& R, const OnePS& w);
std::optional<Certificate> destabilize_chow(const ChowForm& R);

Rational mumford_rhs(int r, int N, const Rational& deg, const OnePS& w);

struct SchubertBound {
  Rational bound;
  Rational rhs;  // Mumford right side for (0,1,1,1), degree 6
  bool exceeds = false;
};

SchubertBound schubert_bound(int deg_C1, int deg_C2_cap_H1);

// Splittings deg C1 >= deg C2, deg C1 + deg C2 = 6, not excluded by the bound.
std::vector<std::pair<int, int>> schubert_surviving_splits();

struct CubicSingData {
  std::vector<SingType> types;
  std::vector<std::optional<Tri>> plane;  // per entry; consulted for A_n, n >= 6
  bool non_isolated = false;
  std::optional<bool> chordal;
};

StabilityVerdict allcock_verdict(const CubicSingData& d);

// Cubic data for curve_to_cubic(C); the marked point is classified on X directly.
CubicSingData cubic_data_from_curve(const TwoThreeScheme& C, const CorrespondenceReport& corr);

// Cubic data from X alone: scans at small primes, exact points, local jets.
struct CubicAnalysis {
  CubicSingData data;
  std::vector<std::pair<ProjPoint, SingType>> points;
  std::vector<std::string> notes;
};
CubicAnalysis analyze_cubic(const CubicThreefold& X, int J = kDefaultJet);

bool linearization_balance(long a, long b);

}  // namespace canon4
