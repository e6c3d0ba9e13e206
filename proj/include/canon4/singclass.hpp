#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canon4/exactalg.hpp"
#include "canon4/fp.hpp"
#include "canon4/model.hpp"

namespace canon4 {

enum class SingKind { A, D4, Corank2Other, NonIsolated, Inconclusive, NotHypersurface };

struct SingType {
  SingKind kind = SingKind::A;
  int k = 0;  // A_k index, or the jet bound for Inconclusive

  static SingType A(int k) { return {SingKind::A, k}; }
  static SingType D4() { return {SingKind::D4, 0}; }
  static SingType other() { return {SingKind::Corank2Other, 0}; }
  static SingType inconclusive(int J) { return {SingKind::Inconclusive, J}; }
  static SingType not_hypersurface() { return {SingKind::NotHypersurface, 0}; }
  static SingType non_isolated() { return {SingKind::NonIsolated, 0}; }
  static SingType parse(const std::string& s);

  bool is_A() const { return kind == SingKind::A; }
  bool is_A(int j) const { return kind == SingKind::A && k == j; }
  std::string str() const;
  friend bool operator==(const SingType& a, const SingType& b) { return a.kind == b.kind && a.k == b.k; }
  friend bool operator!=(const SingType& a, const SingType& b) { return !(a == b); }
};

enum class Location { SmoothPointOfQ, VertexOfQ, OnSingularLineOfQ };
std::string to_string(Location l);
Location parse_location(const std::string& s);

enum class Tri { False, True, Unknown };
std::string to_string(Tri t);

struct QuadricRank {
  int rank = 0;
  std::vector<std::vector<Rational>> kernel;  // basis of the singular locus
};

QuadricRank quadric_rank(const MultiPoly& q);

// Local classification of a hypersurface germ at the origin.
struct LocalClass {
  SingType type;
  int corank = 0;
  std::vector<AlgNum> kernel_dir;  // corank 1: tangent direction in the input coordinates
};

// Requires g(0) = 0 and dg(0) = 0; any number of variables.
LocalClass classify_local(const AlgPoly& g, int J = kDefaultJet);
LocalClass classify_local(const MultiPoly& g, int J = kDefaultJet);

// Two-variable wrapper operating on a truncated series.
SingType classify_branch(const Series& g, int J = kDefaultJet);

struct PointCheck {
  bool singular = false;
  bool q_singular = false;
  bool f_singular = false;
  int jacobian_rank = 0;
  bool not_hypersurface() const { return q_singular && f_singular; }
};

// Throws MathError if pt does not lie on C.
PointCheck verify_singular_point(const TwoThreeScheme& C, const ProjPoint& pt);

struct PointClass {
  SingType type;
  Location location = Location::SmoothPointOfQ;
  std::vector<AlgNum> tangent;  // projective direction of the branch tangent (A_k, k >= 2)
};

Location locate(const MultiPoly& q, const ProjPoint& pt);
PointClass classify_point(const TwoThreeScheme& C, const ProjPoint& pt, int J = kDefaultJet);

// Sorted F_p singular points of C; throws on bad reduction.
std::vector<FpPoint> singular_points_scan(const TwoThreeScheme& C, std::uint32_t p);

struct SingularPoint {
  ProjPoint point;
  SingType type;
  Location location = Location::SmoothPointOfQ;
  std::optional<Tri> plane_component;  // filled when needs_plane_test holds
  std::vector<AlgNum> tangent;
};

// A_k with k >= 6, or A_k with k >= 4 at the vertex of Q.
bool needs_plane_test(const SingularPoint& sp);

// Whether a plane through the branch tangent line cuts a common component from q and f.
// Rejects points failing needs_plane_test.
Tri plane_component_test(const TwoThreeScheme& C, const SingularPoint& sp, std::uint64_t seed = 1);

struct SingularityReport {
  std::vector<SingularPoint> points;
  int quadric_rank = 0;
  bool complete_intersection = true;
  bool non_isolated = false;
  bool complete = true;  // exact points account for every scanned point at some prime
  std::vector<std::string> notes;

  bool has_not_hypersurface() const;
  std::vector<SingType> types_at(Location l) const;
};

struct ClassifyOptions {
  std::vector<std::uint32_t> primes{101, 103, 107};
  int J = kDefaultJet;
  std::uint64_t seed = 1;
};

SingularityReport classify_scheme(const TwoThreeScheme& C, const ClassifyOptions& opt = {});

// Candidate exact points from scans plus hints, each verified exactly.
std::vector<ProjPoint> exact_singular_points(const TwoThreeScheme& C, const std::vector<std::uint32_t>& primes,
                                             bool& complete, bool& non_isolated);

}  // namespace canon4
