#pragma once

// Conjugacy classes (generic over an abstract finite group so the same code
// serves matrix groups and quotient groups), adjoint orbits on the Lie
// algebra, and the regularity/type classification of matrices.

#include <cstdint>
#include <vector>

#include "rloc/group.hpp"

namespace rloc {

struct IGroup {
  virtual ~IGroup() = default;
  virtual uint32_t size() const = 0;
  virtual uint32_t mul(uint32_t a, uint32_t b) const = 0;
  virtual uint32_t inv(uint32_t a) const = 0;
  virtual uint32_t id() const = 0;
};

struct MatrixGroupView final : IGroup {
  const Group* G;
  explicit MatrixGroupView(const Group& g) : G(&g) {}
  uint32_t size() const override { return (uint32_t)G->elems.size(); }
  uint32_t mul(uint32_t a, uint32_t b) const override { return G->mul(a, b); }
  uint32_t inv(uint32_t a) const override { return G->inv(a); }
  uint32_t id() const override { return G->id(); }
};

// finite group given by an explicit multiplication table
struct TableGroup final : IGroup {
  std::vector<uint32_t> table;  // n*n
  std::vector<uint32_t> invs;
  uint32_t n = 0, ident = 0;
  uint32_t size() const override { return n; }
  uint32_t mul(uint32_t a, uint32_t b) const override {
    return table[(size_t)a * n + b];
  }
  uint32_t inv(uint32_t a) const override { return invs[a]; }
  uint32_t id() const override { return ident; }
};

// quotient H/N of a subgroup by a normal subgroup, with the projection map
struct QuotientGroup {
  TableGroup Q;
  std::vector<uint32_t> coset_reps;  // per quotient element: index into H.idx
  std::vector<uint32_t> coset_of;    // per position in H.idx
  static QuotientGroup build(const Subgroup& H, const Subgroup& N);
};

struct ClassTable {
  const IGroup* G = nullptr;
  std::vector<uint32_t> reps;                 // minimal element per class
  std::vector<int64_t> sizes;
  std::vector<int32_t> class_of;              // per element
  std::vector<int64_t> rep_order;
  std::vector<std::vector<uint32_t>> members;
  int64_t exponent = 1;

  int64_t order() const;
  int32_t num_classes() const { return (int32_t)reps.size(); }
  // class of reps[i]^t (t may be negative)
  int32_t power_class(int32_t i, int64_t t) const;
  int32_t inverse_class(int32_t i) const { return power_class(i, -1); }

  static ClassTable build(const IGroup& G, const std::vector<uint32_t>& gens);
};

enum class MatType { NREG, SS, SNS, CUS };
const char* mat_type_name(MatType t);

// type of the reduction mod pi; regular iff non-scalar mod pi
MatType type_of_matrix(const GroupSpec& spec, const RingSpec& R, const Mat2& A);
bool is_regular_matrix(const RingSpec& R, const Mat2& A);

struct AdOrbits {
  GroupSpec spec;  // full-level spec
  int level = 1;
  RingSpec R;                     // ring at `level`
  std::vector<uint64_t> encs;     // sorted encodings of Lie elements
  std::vector<int32_t> orbit_of;  // per Lie element position
  std::vector<uint32_t> reps;     // position of minimal element per orbit
  std::vector<int64_t> sizes;
  std::vector<MatType> types;

  Mat2 rep_mat(int32_t o) const { return mdec(R, encs[reps[(size_t)o]]); }
  int32_t orbit_of_mat(const Mat2& m) const;
};

AdOrbits ad_orbits(const GroupSpec& spec, int level);

}  // namespace rloc
