#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>

#include "doctest.h"
#include "rloc/regular.hpp"

using namespace rloc;

namespace {

struct Ctx {
  Group G;
  MatrixGroupView view;
  ClassTable ct;
  Ctx(GroupSpec s)
      : G(Group::enumerate(s)), view(G), ct(ClassTable::build(view, G.gens)) {}
};

std::map<MatType, int> type_counts(const RegularSet& rs) {
  std::map<MatType, int> m;
  for (auto& c : rs.chars) m[c.type]++;
  return m;
}

}  // namespace

TEST_CASE("regular characters of the level-one linear group") {
  Ctx c(GroupSpec{Kind::GL, 3, 1, 0});
  RegularSet rs = regular_characters(c.G, c.ct);
  CHECK(rs.chars.size() == 6);
  auto tc = type_counts(rs);
  CHECK(tc[MatType::SS] == 1);   // (q-1)(q-2)/2 principal series
  CHECK(tc[MatType::SNS] == 2);  // q-1 twists of the q-dimensional one
  CHECK(tc[MatType::CUS] == 3);  // q(q-1)/2 cuspidal
}

TEST_CASE("closed-form table of the level-one unitary group") {
  Ctx c(GroupSpec{Kind::GU, 3, 1, 2});
  auto rows = gu2_closed_form(c.G, c.ct);
  int64_t q = 3;
  CHECK((int64_t)rows.size() == (q + 1) * (q + 1));
  auto oracle = irreducibles(c.ct, c.G);
  REQUIRE(oracle.size() == rows.size());
  for (auto& r : rows) {
    bool found = false;
    for (auto& o : oracle) found = found || r == o;
    CHECK(found);
  }
}

TEST_CASE("level-two linear group: all regular characters") {
  Ctx c(GroupSpec{Kind::GL, 3, 2, 0});
  RegularSet rs = regular_characters(c.G, c.ct);
  auto tc = type_counts(rs);
  CHECK(tc[MatType::SS] == 12);
  CHECK(tc[MatType::SNS] == 18);
  CHECK(tc[MatType::CUS] == 24);
  for (auto& rc : rs.chars) {
    int64_t d = rc.cf.degree();
    if (rc.type == MatType::SS) CHECK(d == 12);
    if (rc.type == MatType::SNS) CHECK(d == 8);
    if (rc.type == MatType::CUS) CHECK(d == 6);
  }
  // every regular character is an irreducible of the full table, and the
  // non-regular ones account for the remaining squares
  auto oracle = irreducibles(c.ct, c.G);
  int64_t reg_sq = 0;
  for (auto& rc : rs.chars) {
    bool found = false;
    for (auto& o : oracle) found = found || rc.cf == o;
    CHECK(found);
    reg_sq += rc.cf.degree() * rc.cf.degree();
  }
  int64_t all_sq = 0;
  for (auto& o : oracle) all_sq += o.degree() * o.degree();
  CHECK(all_sq == (int64_t)c.G.elems.size());
  CHECK(reg_sq < all_sq);
}

TEST_CASE("level-two unitary group: split semisimple count") {
  Ctx c(GroupSpec{Kind::GU, 3, 2, 2});
  RegularSet rs = regular_characters(c.G, c.ct);
  auto tc = type_counts(rs);
  CHECK(tc[MatType::SS] == 24);
  CHECK(tc[MatType::SNS] > 0);
  CHECK(tc[MatType::CUS] > 0);
  int64_t sq = 0;
  for (auto& rc : rs.chars) sq += rc.cf.degree() * rc.cf.degree();
  CHECK(sq < (int64_t)c.G.elems.size());
}

TEST_CASE("the construction does not depend on the chosen non-residue") {
  Ctx a(GroupSpec{Kind::GU, 5, 1, 2});
  Ctx b(GroupSpec{Kind::GU, 5, 1, 3});
  CHECK(a.G.elems.size() == b.G.elems.size());
  auto sa = a.ct.sizes, sb = b.ct.sizes;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  CHECK(sa == sb);
  auto da = gu2_closed_form(a.G, a.ct), db = gu2_closed_form(b.G, b.ct);
  std::vector<int64_t> ga, gb;
  for (auto& r : da) ga.push_back(r.degree());
  for (auto& r : db) gb.push_back(r.degree());
  std::sort(ga.begin(), ga.end());
  std::sort(gb.begin(), gb.end());
  CHECK(ga == gb);
}
