#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "rloc/dixon.hpp"
#include "rloc/group.hpp"

using namespace rloc;

namespace {

std::vector<int64_t> degrees(const CharTable& t) {
  std::vector<int64_t> d;
  for (size_t i = 0; i < t.rows.size(); ++i) d.push_back(t.degree(i));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("character degrees of the 2x2 general linear group mod 3") {
  Group G = Group::enumerate(GroupSpec{Kind::GL, 3, 1, 0});
  MatrixGroupView view(G);
  ClassTable ct = ClassTable::build(view, G.gens);
  CharTable tab = character_table(ct);
  CHECK(degrees(tab) == std::vector<int64_t>{1, 1, 2, 2, 2, 3, 3, 4});
  // linear characters factor through det: there are q-1 = 2 of them
  auto irr = irreducibles(ct, G);
  int lin = 0;
  for (auto& c : irr)
    if (c.degree() == 1) ++lin;
  CHECK(lin == 2);
  // every irreducible has norm one and distinct rows
  for (size_t a = 0; a < irr.size(); ++a) {
    CHECK(inner_product(irr[a], irr[a]) == 1);
    for (size_t b = a + 1; b < irr.size(); ++b) CHECK(!(irr[a] == irr[b]));
  }
}

TEST_CASE("the central quotient of the mod-3 general linear group") {
  Group G = Group::enumerate(GroupSpec{Kind::GL, 3, 1, 0});
  QuotientGroup Q = QuotientGroup::build(Subgroup::whole(G), center(G));
  ClassTable ct = ClassTable::build(Q.Q, {});
  CHECK(ct.order() == 24);
  CharTable tab = character_table(ct);
  CHECK(degrees(tab) == std::vector<int64_t>{1, 1, 2, 3, 3});
}

TEST_CASE("unitary group at the residue field") {
  for (int64_t p : {3, 5}) {
    Group G = Group::enumerate(GroupSpec{Kind::GU, p, 1, 2});
    MatrixGroupView view(G);
    ClassTable ct = ClassTable::build(view, G.gens);
    CharTable tab = character_table(ct);
    CHECK((int32_t)tab.rows.size() == ct.num_classes());
    auto d = degrees(tab);
    int64_t q = p;
    CHECK(d.front() == 1);
    CHECK(d.back() == q + 1);
    // q+1 linear characters (through the determinant to norm-one units)
    CHECK(std::count(d.begin(), d.end(), 1) == q + 1);
  }
}

TEST_CASE("abelian groups give all linear characters") {
  Group G = Group::enumerate(GroupSpec{Kind::GL, 3, 2, 0});
  Subgroup T = torus(G);
  // present the diagonal torus as an explicit abelian group
  QuotientGroup Q = QuotientGroup::build(T, Subgroup::from_indices(*T.G, {G.id()}));
  ClassTable ct = ClassTable::build(Q.Q, {});
  CHECK(ct.order() == 36);
  CharTable tab = character_table(ct);
  CHECK(tab.rows.size() == 36);
  for (size_t i = 0; i < 36; ++i) CHECK(tab.degree(i) == 1);
}

TEST_CASE("full character table of the level-two principal congruence quotient") {
  // the whole group modulo K^1 is the residue group; its table must agree
  // with the directly computed one up to row order
  Group G2 = Group::enumerate(GroupSpec{Kind::GL, 3, 2, 0});
  QuotientGroup Q = QuotientGroup::build(Subgroup::whole(G2), congruence_kernel(G2, 1));
  ClassTable ct = ClassTable::build(Q.Q, {});
  CharTable tab = character_table(ct);
  CHECK(degrees(tab) == std::vector<int64_t>{1, 1, 2, 2, 2, 3, 3, 4});
}
