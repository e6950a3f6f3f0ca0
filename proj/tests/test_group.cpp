#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rloc/group.hpp"

using namespace rloc;

TEST_CASE("group orders across levels") {
  CHECK(Group::enumerate({Kind::GL, 3, 1}).order() == 48);
  CHECK(Group::enumerate({Kind::GU, 3, 1}).order() == 96);
  CHECK(Group::enumerate({Kind::GL, 3, 2}).order() == 3888);
  CHECK(Group::enumerate({Kind::GU, 3, 2}).order() == 7776);
  CHECK(Group::enumerate({Kind::GL, 5, 1}).order() == 480);
  CHECK(Group::enumerate({Kind::GU, 5, 1}).order() == 720);
}

TEST_CASE("lifted enumeration agrees with a direct filter") {
  GroupSpec spec{Kind::GU, 3, 2};
  Group G = Group::enumerate(spec);
  RingSpec R = spec.ring();
  std::vector<uint64_t> direct;
  uint64_t n = (uint64_t)R.card();
  for (uint64_t v = 0; v < n * n * n * n; ++v)
    if (is_member(spec, R, mdec(R, v))) direct.push_back(v);
  CHECK(direct == G.elems);
}

TEST_CASE("group closure and inverses") {
  Group G = Group::enumerate({Kind::GU, 3, 2});
  for (uint32_t i = 0; i < G.elems.size(); i += 97) {
    CHECK(G.mul(i, G.inv(i)) == G.id());
    Mat2 m = G.mat(i);
    CHECK(mmul(G.R, mstar(G.R, m), m) == mident(G.R));
  }
}

TEST_CASE("congruence filtration sizes") {
  Group G = Group::enumerate({Kind::GL, 3, 3});
  CHECK(G.order() == 314928);
  CHECK(congruence_kernel(G, 1).order() == 6561);  // q^{4(l-1)}
  CHECK(congruence_kernel(G, 2).order() == 81);
  Group H = Group::enumerate({Kind::GU, 3, 2});
  CHECK(congruence_kernel(H, 1).order() == 81);
}

TEST_CASE("named subgroups") {
  Group G = Group::enumerate({Kind::GL, 3, 2});
  CHECK(center(G).order() == 6);
  CHECK(borel(G).order() == 324);   // units^2 * 9
  CHECK(torus(G).order() == 36);
  CHECK(unipotent(G).order() == 9);
  CHECK(zt_subgroup(G, 1).order() == 18);  // a unit, d = a + 3t

  Group U = Group::enumerate({Kind::GU, 3, 1});
  CHECK(center(U).order() == 4);       // norm-one scalars
  CHECK(unipotent(U).order() == 3);    // b in theta*F_3
  CHECK(torus(U).order() == 8);        // (x, conj(x)^-1)
}

TEST_CASE("double cosets partition the group") {
  Group G = Group::enumerate({Kind::GL, 3, 2});
  Subgroup B = borel(G);
  DoubleCosets dc = double_cosets(B, B);
  // B\G/B has l+1 = 3 cosets: the big cell and g_i = [[1,0],[pi^i,1]], i=1,2
  CHECK(dc.reps.size() == 3);
  int64_t tot = 0;
  for (int64_t s : dc.sizes) tot += s;
  CHECK(tot == G.order());
}

TEST_CASE("subgroup product and conjugation") {
  Group G = Group::enumerate({Kind::GL, 3, 2});
  Subgroup T = torus(G), U = unipotent(G);
  Subgroup B = Subgroup::product(T, U);
  CHECK(B.order() == 324);
  Subgroup K = congruence_kernel(G, 1);
  CHECK(Subgroup::intersect(B, K).order() == 27);
  uint32_t w = (uint32_t)G.index_of(Mat2{G.R.zero(), G.R.one(), G.R.one(), G.R.zero()});
  Subgroup Bw = borel(G).conjugated(w);
  CHECK(Bw.order() == 324);
  // upper meets lower triangular in the diagonal torus
  CHECK(Subgroup::intersect(borel(G), Bw).order() == torus(G).order());
}

TEST_CASE("sns N subgroup at even level") {
  Group G = Group::enumerate({Kind::GL, 3, 2});
  // at l = 2: l1 = l2 = 1, so N = K^1
  CHECK(sns_n_subgroup(G).order() == congruence_kernel(G, 1).order());
  Group H = Group::enumerate({Kind::GL, 3, 3});
  // l1 = 1, l2 = 2: entries a,c,d at valuation >= 1, b at valuation >= 2
  CHECK(sns_n_subgroup(H).order() == 2187);
}
