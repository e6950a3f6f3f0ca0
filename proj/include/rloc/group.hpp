#pragma once

// Explicit enumeration of GL2 and GU2 over Z/p^l (GU2 over the unramified
// quadratic extension), with subgroups represented as sorted index lists
// into the parent group's element table.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rloc/ring.hpp"

namespace rloc {

enum class Kind { GL, GU };

struct GroupSpec {
  Kind kind = Kind::GL;
  int64_t p = 3;
  int ell = 1;
  int64_t d = -1;  // optional override of theta^2 for GU

  RingSpec ring() const {
    return kind == Kind::GL ? RingSpec::base(p, ell) : RingSpec::quad(p, ell, d);
  }
  GroupSpec at_level(int i) const { return GroupSpec{kind, p, i, d}; }
  std::string name() const;
  int64_t expected_order() const;
  // Delta from the multiplicity formulas: -1 for GL, +1 for GU
  int delta() const { return kind == Kind::GL ? -1 : +1; }
};

bool is_member(const GroupSpec& spec, const RingSpec& R, const Mat2& m);
// Lie algebra membership: gl2 (everything) or gu2 (anti-hermitian)
bool is_lie_member(const GroupSpec& spec, const RingSpec& R, const Mat2& m);
std::vector<Mat2> lie_algebra(const GroupSpec& spec, const RingSpec& R);

class Group {
 public:
  GroupSpec spec;
  RingSpec R;
  std::vector<uint64_t> elems;    // sorted encodings
  std::vector<uint32_t> inv_idx;  // index of the inverse of each element
  std::vector<uint32_t> gens;     // a small verified generating set

  static Group enumerate(const GroupSpec& spec, int64_t budget = 1000000);

  int64_t order() const { return (int64_t)elems.size(); }
  int32_t index_of(uint64_t enc) const;  // -1 if absent
  int32_t index_of(const Mat2& m) const { return index_of(menc(R, m)); }
  Mat2 mat(uint32_t i) const { return mdec(R, elems[i]); }
  uint32_t mul(uint32_t i, uint32_t j) const;
  uint32_t inv(uint32_t i) const { return inv_idx[i]; }
  uint32_t id() const { return id_; }
  int64_t element_order(uint32_t i) const;

 private:
  uint32_t id_ = 0;
};

struct Subgroup {
  const Group* G = nullptr;
  std::vector<uint32_t> idx;   // sorted
  std::vector<uint32_t> gens;  // generators (indices into G)

  int64_t order() const { return (int64_t)idx.size(); }
  bool contains(uint32_t i) const;
  int32_t position(uint32_t i) const;  // position within idx, -1 if absent

  static Subgroup whole(const Group& G);
  static Subgroup from_indices(const Group& G, std::vector<uint32_t> idx);
  static Subgroup closure(const Group& G, const std::vector<uint32_t>& gens);
  static Subgroup product(const Subgroup& A, const Subgroup& B);
  static Subgroup intersect(const Subgroup& A, const Subgroup& B);
  Subgroup conjugated(uint32_t g) const;  // g^-1 H g
};

// named subgroups
Subgroup center(const Group& G);
Subgroup borel(const Group& G);
Subgroup torus(const Group& G);                  // diagonal
Subgroup unipotent(const Group& G);              // upper unitriangular
Subgroup congruence_kernel(const Group& G, int i);  // K^i
Subgroup centralizer_of(const Group& G, const Mat2& A);
// Z_t = {diag(a, a + pi^t d)} in G
Subgroup zt_subgroup(const Group& G, int t);
// N from the split-non-semisimple construction at level l1:
// elements I + pi^l1 [[x, pi^{l2-l1} z], [y, w]] of G
Subgroup sns_n_subgroup(const Group& G);

struct DoubleCosets {
  std::vector<uint32_t> reps;   // minimal-encoding representative per coset
  std::vector<int64_t> sizes;
  std::vector<int32_t> coset_of;  // per group element index
};
DoubleCosets double_cosets(const Subgroup& H1, const Subgroup& H2);

}  // namespace rloc
