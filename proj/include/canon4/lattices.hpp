#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canon4/matrix.hpp"

namespace canon4 {

using LVec = std::vector<long long>;

// Negative sign: root lattices negative definite, U = [[0,1],[1,0]].
enum class Sign { Negative, Positive };

struct Lattice {
  IntMatrix gram;
  Sign sign = Sign::Negative;
  // Irreducible summands as written, e.g. {"E8", "E8", "U", "U(3)"}; empty for derived lattices.
  std::vector<std::string> blocks;
  std::vector<int> block_ranks;

  int rank() const { return gram.rows(); }
  Lattice flipped() const;
  // Gram in the positive-definite convention; throws if the form is not definite.
  IntMatrix positive_gram() const;
};

Lattice make_lattice(const std::string& expr, Sign sign = Sign::Negative);
Lattice direct_sum(const std::vector<Lattice>& parts);

bool is_positive_definite(const IntMatrix& G);

// All v with v^T G v = norm (positive convention), lexicographically sorted.
std::vector<LVec> short_vectors(const IntMatrix& positive_gram, long long norm);
std::vector<LVec> roots(const Lattice& L);

struct RootComponent {
  char family = '?';  // 'A', 'D', 'E', or '?' when unrecognised
  int rank = 0;
  int root_count = 0;
  std::string str() const;
};

struct RootSystem {
  std::vector<RootComponent> components;  // sorted by family then rank
  int root_count = 0;
  bool has_unknown() const;
  std::string label() const;  // "A2^2+E6^2"; "0" when empty
};

RootSystem root_system(const Lattice& L);
// Expected count for a family and rank; -1 if not a root system type.
int classical_root_count(char family, int rank);

std::vector<Integer> discriminant_group(const Lattice& L);

struct Complement {
  Lattice lattice;
  IntMatrix basis;  // rows in ambient coordinates
  bool saturated = true;  // false: input was not primitive, the kernel is unaffected
};

// Sublattice given by rows of S in ambient coordinates.
Complement orthogonal_complement(const Lattice& ambient, const IntMatrix& S);

// Restriction S G S^T.
IntMatrix restricted_gram(const Lattice& ambient, const IntMatrix& S);

struct IsometryChecks {
  bool preserves_form = false;
  bool order3 = false;
  bool fixed_point_free = false;
  bool charpoly_ok = false;
  bool all() const { return preserves_form && order3 && fixed_point_free && charpoly_ok; }
};

IsometryChecks check_isometry(const IntMatrix& gram, const IntMatrix& rho);
std::vector<Rational> characteristic_polynomial(const IntMatrix& M);  // leading coefficient first

enum class FpfOutcome { Found, Nonexistent, Inconclusive };
std::string to_string(FpfOutcome o);

struct FpfResult {
  FpfOutcome outcome = FpfOutcome::Inconclusive;
  std::optional<IntMatrix> rho;
  std::string method;
  std::string certificate;
  long long automorphisms_seen = 0;
};

struct FpfOptions {
  long long node_limit = 20000000;
};

FpfResult fpf_order3(const Lattice& L, const FpfOptions& opt = {});

// Coxeter element of a root lattice in its simple-root basis.
IntMatrix coxeter_element(const IntMatrix& positive_cartan);

struct Embedding {
  std::string name;
  IntMatrix rows;  // images of the sublattice basis, ambient coordinates
};

struct HeegnerRecord {
  std::string name;        // H_v, H_n, H_h
  std::string expr;        // M-perp
  std::string expected;    // root system label from the table
  Lattice lattice;
  RootSystem system;
  int roots_mperp = 0;
  int roots_r = 0;
  Embedding r_embedding;   // E6 + A2 inside M-perp
  bool contains_r = false;
  bool eisenstein = false;
};

std::vector<HeegnerRecord> heegner_types();

struct BorcherdsRow {
  std::string name;
  int roots_mperp = 0;
  int roots_r = 0;
  Rational vanishing;      // (roots_mperp - roots_r) / 2
  int ramification = 0;
  Rational coefficient;
  Rational stated_coefficient;
  std::string stated_vanishing;  // as printed in the source table
  bool flagged = false;
  std::string note;
};

std::vector<BorcherdsRow> borcherds_orders();

struct CuspRecord {
  std::string case_name;
  std::string ambient;     // "E6^4" or "E8^3"
  std::string placement;
  RootSystem complement;
  std::string expected;
  bool meets_hh = false;
};

std::vector<CuspRecord> cusp_invariants();

// Fixed embeddings, each verified against the target Gram on first use.
Embedding a2_in_e6();
Embedding a2_in_e8();
Embedding e6_in_e8();
Embedding a2_perp_e6_in_e8();

}  // namespace canon4
