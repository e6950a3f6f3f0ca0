#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "rloc/classes.hpp"

using namespace rloc;

TEST_CASE("conjugacy classes of GL2(F3)") {
  Group G = Group::enumerate({Kind::GL, 3, 1});
  MatrixGroupView V(G);
  ClassTable ct = ClassTable::build(V, G.gens);
  CHECK(ct.num_classes() == 8);
  CHECK(ct.order() == 48);
  for (int32_t i = 0; i < ct.num_classes(); ++i)
    CHECK(48 % ct.sizes[(size_t)i] == 0);
  // exponent of GL2(F3) is lcm(1,2,3,4,6,8) = 24
  CHECK(ct.exponent == 24);
}

TEST_CASE("classes at level 2 and power maps") {
  Group G = Group::enumerate({Kind::GL, 3, 2});
  MatrixGroupView V(G);
  ClassTable ct = ClassTable::build(V, G.gens);
  CHECK(ct.order() == 3888);
  // class of g^-1 has the same size
  for (int32_t i = 0; i < ct.num_classes(); ++i) {
    int32_t j = ct.inverse_class(i);
    CHECK(ct.sizes[(size_t)i] == ct.sizes[(size_t)j]);
    CHECK(ct.inverse_class(j) == i);
  }
  // representatives are minimal in their class
  for (int32_t i = 0; i < ct.num_classes(); ++i)
    CHECK(ct.members[(size_t)i].front() == ct.reps[(size_t)i]);
  CHECK(ct.exponent % 9 == 0);
}

TEST_CASE("matrix type classification") {
  GroupSpec gl{Kind::GL, 3, 2};
  RingSpec R = gl.ring();
  auto T = [&](int a, int b, int c, int d) {
    return type_of_matrix(gl, R, Mat2{R.of(a), R.of(b), R.of(c), R.of(d)});
  };
  CHECK(T(1, 0, 0, 1) == MatType::NREG);
  CHECK(T(1, 3, 6, 1) == MatType::NREG);   // scalar mod pi
  CHECK(T(0, 1, 1, 0) == MatType::SS);     // disc = 4, square
  CHECK(T(0, 0, 1, 0) == MatType::SNS);    // nilpotent non-scalar
  CHECK(T(0, 2, 1, 0) == MatType::CUS);    // disc = 8 = 2 mod 3 non-square

  GroupSpec gu{Kind::GU, 3, 2};
  RingSpec Q = gu.ring();
  Scalar th = Q.theta();
  // [[0, theta a], [theta, 0]]: cus for a square, ss for a non-square
  auto S = [&](int64_t aa) {
    Mat2 m{Q.zero(), Q.mul(th, Q.of(aa)), th, Q.zero()};
    REQUIRE(is_lie_member(gu, Q, m));
    return type_of_matrix(gu, Q, m);
  };
  CHECK(S(1) == MatType::CUS);
  CHECK(S(2) == MatType::SS);
  Mat2 sns{Q.zero(), Q.zero(), th, Q.zero()};
  CHECK(type_of_matrix(gu, Q, sns) == MatType::SNS);
}

TEST_CASE("adjoint orbits of gl2(F3)") {
  AdOrbits ao = ad_orbits({Kind::GL, 3, 2}, 1);
  CHECK(ao.encs.size() == 81);
  std::map<MatType, int> cnt;
  int64_t tot = 0;
  for (size_t o = 0; o < ao.reps.size(); ++o) {
    cnt[ao.types[o]]++;
    tot += ao.sizes[o];
  }
  CHECK(tot == 81);
  CHECK(cnt[MatType::NREG] == 3);
  CHECK(cnt[MatType::SS] == 3);
  CHECK(cnt[MatType::SNS] == 3);
  CHECK(cnt[MatType::CUS] == 3);
  // orbit sizes per type (x-translates of 1, 6, 8, 12, 4 at q = 3)
  for (size_t o = 0; o < ao.reps.size(); ++o) {
    switch (ao.types[o]) {
      case MatType::NREG: CHECK(ao.sizes[o] == 1); break;
      case MatType::SS: CHECK(ao.sizes[o] == 12); break;
      case MatType::SNS: CHECK(ao.sizes[o] == 8); break;
      case MatType::CUS: CHECK(ao.sizes[o] == 6); break;
    }
  }
}

TEST_CASE("adjoint orbits of gu2(F3)") {
  AdOrbits ao = ad_orbits({Kind::GU, 3, 2}, 1);
  CHECK(ao.encs.size() == 81);
  int64_t tot = 0;
  std::map<MatType, int> cnt;
  for (size_t o = 0; o < ao.reps.size(); ++o) {
    cnt[ao.types[o]]++;
    tot += ao.sizes[o];
  }
  CHECK(tot == 81);
  CHECK(cnt[MatType::NREG] == 3);
  CHECK(cnt[MatType::SNS] == 3);
  // type stays constant along each orbit
  for (size_t e = 0; e < ao.encs.size(); ++e) {
    Mat2 m = mdec(ao.R, ao.encs[e]);
    CHECK(type_of_matrix(ao.spec, ao.R, m) ==
          ao.types[(size_t)ao.orbit_of[e]]);
  }
}

TEST_CASE("quotient group construction") {
  Group G = Group::enumerate({Kind::GL, 3, 2});
  Subgroup W = Subgroup::whole(G);
  Subgroup K = congruence_kernel(G, 1);
  QuotientGroup qg = QuotientGroup::build(W, K);
  CHECK(qg.Q.size() == 48);  // GL2(F3)
  MatrixGroupView V(G);
  ClassTable cq = ClassTable::build(qg.Q, [&] {
    std::vector<uint32_t> gq;
    for (uint32_t i = 0; i < qg.Q.size(); ++i) gq.push_back(i);
    return gq;
  }());
  CHECK(cq.num_classes() == 8);
}
