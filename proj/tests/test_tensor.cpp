#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rloc/tensor.hpp"

using namespace rloc;

namespace {

struct Ctx {
  Group G;
  MatrixGroupView view;
  ClassTable ct;
  Ctx(GroupSpec s)
      : G(Group::enumerate(s)), view(G), ct(ClassTable::build(view, G.gens)) {}
};

}  // namespace

TEST_CASE("residue multiplicities agree with exact inner products") {
  Ctx c(GroupSpec{Kind::GL, 3, 1, 0});
  auto irrs = irreducibles(c.ct, c.G);
  TensorScanner sc(c.ct);
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 60; ++trial) {
    size_t i = rng() % irrs.size(), j = rng() % irrs.size(),
           k = rng() % irrs.size();
    int64_t exact = multiplicity(irrs[i], irrs[j], irrs[k]);
    int64_t fast = sc.mult(sc.residues(irrs[i]), sc.residues(irrs[j]),
                           sc.dual_residues(irrs[k]));
    CHECK(exact == fast);
    // full symmetry of the triple form
    CHECK(exact == multiplicity(irrs[j], irrs[i], irrs[k]));
    CHECK(exact == multiplicity(irrs[i], cf_dual(irrs[k]), cf_dual(irrs[j])));
  }
}

TEST_CASE("tensor decomposition is complete over all irreducibles") {
  Ctx c(GroupSpec{Kind::GU, 3, 1, 2});
  auto irrs = irreducibles(c.ct, c.G);
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 5; ++trial) {
    size_t i = rng() % irrs.size(), j = rng() % irrs.size();
    int64_t dim = 0;
    for (const auto& f : irrs)
      dim += multiplicity(irrs[i], irrs[j], f) * f.degree();
    CHECK(dim == irrs[i].degree() * irrs[j].degree());
  }
}

TEST_CASE("regular projection splits off the regular constituents") {
  Ctx c(GroupSpec{Kind::GL, 3, 2, 0});
  RegularSet rs = regular_characters(c.G, c.ct);
  // a product of two regular characters of distinct types decomposes
  // entirely into regular constituents
  const RegularChar* cus = nullptr;
  const RegularChar* ss = nullptr;
  for (const auto& rc : rs.chars) {
    if (!cus && rc.type == MatType::CUS) cus = &rc;
    if (!ss && rc.type == MatType::SS) ss = &rc;
  }
  REQUIRE(cus != nullptr);
  REQUIRE(ss != nullptr);
  ClassFunction prod = cf_tensor(cus->cf, ss->cf);
  int64_t excess = -1;
  ClassFunction reg = regular_part(prod, rs.chars, &excess);
  CHECK(excess == 0);
  CHECK(reg.v == prod.v);
}

TEST_CASE("obstruction determinant identity on random pairs") {
  GroupSpec spec{Kind::GL, 3, 2, 0};
  RingSpec R = spec.ring();
  std::mt19937_64 rng(0xC0FFEE);
  auto units = R.units();
  auto allv = R.all();
  for (int trial = 0; trial < 300; ++trial) {
    Scalar al1 = units[rng() % units.size()];
    Scalar al2 = units[rng() % units.size()];
    Mat2 g1{units[rng() % units.size()], allv[rng() % allv.size()], R.zero(),
            units[rng() % units.size()]};
    Mat2 g2{units[rng() % units.size()], allv[rng() % allv.size()], R.zero(),
            units[rng() % units.size()]};
    Mat2 A1{R.zero(), al1, R.one(), R.zero()};
    Mat2 A2{R.zero(), al2, R.one(), R.zero()};
    Scalar lhs = R.sub(mdet(R, madd(R, A1, mconjugate(R, g1, A2))),
                       mdet(R, madd(R, A1, mconjugate(R, g2, A2))));
    Mat2 D = coset_obstruction(R, al1, al2, g1, g2);
    Scalar denom = R.mul(R.mul(g1.a, g2.a), R.mul(g1.d, g2.d));
    CHECK(lhs == R.mul(R.inv(denom), mdet(R, D)));
  }
}

TEST_CASE("parameter-space coset counts") {
  CheckResult a = check_nilpotent_coset_counts(3, 2);
  CHECK(a.ok);
  CheckResult b = check_nilpotent_coset_counts(3, 4);
  CHECK(b.ok);
  CheckResult c = check_nilpotent_coset_counts(5, 2);
  CHECK(c.ok);
}

TEST_CASE("pair multiplicity bound at the residue field") {
  CheckResult r = check_pair_multiplicity_bound(GroupSpec{Kind::GL, 3, 1, 0});
  INFO(r.detail);
  CHECK(r.ok);
}
