#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "canon4/singclass.hpp"

namespace canon4 {

CubicThreefold curve_to_cubic(const TwoThreeScheme& C);

// Projects X from the double point p; throws unless p is a double point.
TwoThreeScheme cubic_to_curve(const CubicThreefold& X, const ProjPoint& p);

struct MarkedType {
  std::optional<SingType> type;
  std::string refusal;              // nonempty when the hypotheses fail
  std::vector<std::string> flags;   // recorded boundary readings
};

MarkedType marked_point_type(const TwoThreeScheme& C, const SingularityReport& rep);
MarkedType marked_point_type(const TwoThreeScheme& C);

// Independent route: local jet of F at (1:0:0:0:0).
SingType marked_point_type_direct(const CubicThreefold& X, int J = kDefaultJet);

// Type of X at an exact point via its local jet.
SingType classify_cubic_point(const CubicThreefold& X, const ProjPoint& pt, int J = kDefaultJet);

struct OffPointSingularity {
  ProjPoint point;       // on X, in P^4
  SingType type;
  int curve_index = -1;  // matched entry of the curve report
};

struct CorrespondenceReport {
  SingularityReport curve;
  std::vector<OffPointSingularity> cubic;
  MarkedType marked;
  bool bijection = false;
  bool non_isolated = false;
  std::vector<std::string> notes;
};

CorrespondenceReport correspondence_check(const TwoThreeScheme& C, const ClassifyOptions& opt = {});

// Singular F_p points of X other than (1:0:0:0:0); sets line_singular if a whole
// line through that point is singular.
std::vector<FpPoint> cubic_singular_scan(const CubicThreefold& X, std::uint32_t p, bool& line_singular);

bool chordal_detect(const TwoThreeScheme& C);

// Random (q, f) over F_p with planted nodes; q has rank 4, or rank 3 with the vertex off C.
struct RandomInstance {
  TwoThreeScheme C;
  int planted = 0;
};
RandomInstance random_fp_instance(std::mt19937_64& rng, std::uint32_t p);

}  // namespace canon4
