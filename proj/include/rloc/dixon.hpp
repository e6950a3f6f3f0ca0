#pragma once

// Exact complex character tables of finite groups: simultaneous
// eigenvector computation for the class-algebra matrices over a prime
// field, followed by an exact cyclotomic lift via power maps, and full
// orthogonality certification.

#include <vector>

#include "rloc/charfn.hpp"
#include "rloc/classes.hpp"

namespace rloc {

struct CharTable {
  const ClassTable* ct = nullptr;
  // one row per irreducible character, indexed by class
  std::vector<std::vector<Cyclotomic>> rows;

  int64_t degree(size_t r) const;
};

// the full set of irreducible characters; throws on any certification
// failure (row norms, degree sum, pairwise orthogonality)
CharTable character_table(const ClassTable& ct);

// wrap the rows as class functions of a matrix group
std::vector<ClassFunction> irreducibles(const ClassTable& ct, const Group& G);

}  // namespace rloc
