#pragma once

// Construction of the regular irreducible characters of the matrix groups
// over p-adic quotient rings: additive characters of congruence kernels,
// their stabilizers, the characters lying above them, and induction to the
// full group.  Also a closed-form character table of the level-one unitary
// group for cross-checking.

#include <memory>

#include "rloc/dixon.hpp"

namespace rloc {

// exponent e with psi(pi^i x) = zeta_emod^e, where psi is the fixed
// primitive additive character of the ring at full level
int64_t psi_exponent(const RingSpec& R, int64_t emod, int i, Scalar x);

// entrywise canonical lift between rings of the same kind
Mat2 lift_mat(const RingSpec& to, const Mat2& A);

// the character of K (the i-th congruence kernel) attached to A:
// I + pi^i B  ->  psi(pi^i tr(A B))
LinChar psi_char(const Group& G, const Subgroup& K, int i, const Mat2& Atilde,
                 int64_t emod);

// all data attached to one coadjoint orbit with regular reduction
struct StabFamily {
  Mat2 Atilde;      // lift of the orbit representative to full level
  MatType type;     // type of the reduction mod pi
  Subgroup K;       // congruence kernel at level ceil(l/2)
  Subgroup S;       // stabilizer of psi_A: centralizer times kernel at floor(l/2)
  Subgroup kerpsi;  // K intersect ker psi_A
  QuotientGroup Q;  // S / kerpsi
  ClassTable ctQ;
  LinChar psi;  // on K
  // irreducible characters of S above psi_A, as value rows per Q-class
  std::vector<std::vector<Cyclotomic>> rows;

  Cyclotomic value(size_t row, uint32_t g) const;  // g must lie in S
  StabFamily() = default;
  StabFamily(const StabFamily&) = delete;
};

// Abar lives in the ring at level floor(l/2)
std::unique_ptr<StabFamily> stab_family(const Group& G, int64_t emod,
                                        const Mat2& Abar);

// induce every character of the family to G
std::vector<ClassFunction> induce_family(const ClassTable& ct, const Group& G,
                                         const StabFamily& fam);

struct RegularChar {
  ClassFunction cf;
  MatType type;
  int32_t orbit;  // index into the orbit list; -1 at level one
};

struct RegularSet {
  AdOrbits orbits;  // at level floor(l/2) (level one for l = 1)
  std::vector<RegularChar> chars;
};

// all regular irreducible characters of G, tagged by type
RegularSet regular_characters(const Group& G, const ClassTable& ct);

// the closed-form character table of the level-one unitary group, built
// from the four classical families by eigenvalue matching
std::vector<ClassFunction> gu2_closed_form(const Group& G, const ClassTable& ct);

}  // namespace rloc
