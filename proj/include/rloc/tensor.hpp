#pragma once

// Tensor products of the constructed characters: exact and residue-based
// multiplicity computation, double-coset censuses for stabilizer pairs,
// predicted-versus-measured multiplicity formulas for principal-series
// pairs, and the verification suites used by the command line tool and
// the acceptance harness.

#include "rloc/regular.hpp"

namespace rloc {

struct CheckResult {
  bool ok = true;
  std::string detail;  // human-readable outcome, one line per sub-check

  void note(const std::string& line) { detail += line + "\n"; }
  void fail(const std::string& line) {
    ok = false;
    detail += "FAIL: " + line + "\n";
  }
  void expect(bool cond, const std::string& line) {
    if (cond)
      note(line);
    else
      fail(line);
  }
};

// exact multiplicity <a*b, c>
int64_t multiplicity(const ClassFunction& a, const ClassFunction& b,
                     const ClassFunction& c);

// residue evaluation of many characters over one class table, with
// certified triple multiplicities (exact whenever the true value < r/2)
struct TensorScanner {
  const ClassTable* ct = nullptr;
  ModRView mv;
  std::vector<uint64_t> weights;  // class sizes mod r
  explicit TensorScanner(const ClassTable& tab,
                         uint64_t min_r = (uint64_t)1 << 31);
  std::vector<uint64_t> residues(const ClassFunction& f) const;
  // residues of the complex conjugate (values at inverse classes)
  std::vector<uint64_t> dual_residues(const ClassFunction& f) const;
  int64_t mult(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
               const std::vector<uint64_t>& c_dual) const;
};

// orthogonal projection of chi onto the span of the given characters;
// if excess is non-null it receives dim(chi) - dim(projection)
ClassFunction regular_part(const ClassFunction& chi,
                           const std::vector<RegularChar>& regs,
                           int64_t* excess = nullptr);

// the 2x2 obstruction matrix attached to two antidiagonal orbit
// representatives [[0, eps*alpha_i],[eps, 0]] and two upper-triangular
// group elements g_i = [[a_i, b_i],[0, c_i]]; its vanishing pattern
// controls equality of the corresponding stabilizer double cosets
Mat2 coset_obstruction(const RingSpec& R, Scalar alpha1t, Scalar alpha2t,
                       const Mat2& g1, const Mat2& g2);

// census of the double cosets S_{A1} h S_{A2} whose shifted orbit
// Ad-class of A1t + h A2t h^-1 (mod the half-level) matches a given one
struct CosetMatchScan {
  const Group* G = nullptr;
  Mat2 A1t, A2t;  // full-level lifts
  Subgroup S1, S2;
  DoubleCosets dc;
  std::vector<int32_t> coset_orbit;  // per double coset: matched orbit id
  // number of double cosets whose orbit id equals that of coset of g
  int64_t match_count(uint32_t g) const;
};
CosetMatchScan coset_match_scan(const Group& G, const Mat2& A1bar,
                                const Mat2& A2bar);

// --- verification suites -----------------------------------------------------

// level-one unitary group: closed-form table equals the computed table,
// and the induction/tensor identities for the four character families
CheckResult check_unitary_level_one(const GroupSpec& spec);

// every tensor product of two irreducibles has multiplicity at most two,
// attained only at constituents of dimension q or q+1
CheckResult check_pair_multiplicity_bound(const GroupSpec& spec);

// the constructed regular set equals the set of computed irreducibles
// whose restriction to the last congruence kernel is regular
CheckResult check_regular_exhaustive(const GroupSpec& spec);

// exhaustive multiplicity bounds over regular triples, stratified by type,
// plus multiplicity-freeness of cuspidal-times-other products
CheckResult check_regular_triple_bounds(const GroupSpec& spec);

// induced-from-nilpotent-stabilizer witness with a large self-tensor
// multiplicity: <rho x rho, rho> >= bound
CheckResult check_triple_product_witness(const GroupSpec& spec, int64_t bound);

// double-coset suite: obstruction determinant identity on random pairs,
// the 1-or-2 dichotomy for a split/non-split pair, and the always-1 count
// for cuspidal against the other types (exhaustive over the group)
CheckResult check_coset_census(const GroupSpec& spec, int nrandom);

// principal-series suite: irreducibility of the intermediate induced
// pieces, predicted multiplicities versus direct inner products for all
// split-pair parameters, and the exact three-term decomposition
CheckResult check_borel_predictions(const GroupSpec& spec);

// parameter-space double-coset counts for the nilpotent-stabilizer family
// (no group enumeration); returns per-shift counts and checks the closed
// forms (q-1)(q-2)q^{l1-2} (shift below l1) and (q-2)q^{l1-1} (at l1)
CheckResult check_nilpotent_coset_counts(int64_t p, int ell);

// depth-three suite: stabilizer intersection cardinalities, character
// value constraints on the cuspidal stabilizer, the restricted-pair
// product norm and multiplicity-freeness, and sampled triple bounds
CheckResult check_depth_three(const GroupSpec& spec, int64_t budget_elems,
                              int64_t samples);

// informational constituent census for mixed-type products, compared
// against the conjectured counts (mismatches reported, never fatal)
CheckResult constituent_census(const GroupSpec& spec);

// table-level integrity: orthogonality, degree bookkeeping, and
// reproducibility of the computed data
CheckResult check_table_integrity(const GroupSpec& spec);

}  // namespace rloc
