#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rloc/ring.hpp"

using namespace rloc;

TEST_CASE("base ring arithmetic mod 9") {
  RingSpec R = RingSpec::base(3, 2);
  CHECK(R.pl == 9);
  CHECK(R.add(R.of(5), R.of(7)) == R.of(3));
  CHECK(R.mul(R.of(5), R.of(7)) == R.of(8));
  CHECK(R.neg(R.of(4)) == R.of(5));
  for (Scalar u : R.units()) CHECK(R.mul(u, R.inv(u)) == R.one());
  CHECK(R.units().size() == 6);
}

TEST_CASE("unit squares of Z/9 found by brute force") {
  RingSpec R = RingSpec::base(3, 2);
  std::set<int64_t> squares;
  for (Scalar u : R.units()) squares.insert(R.mul(u, u).a);
  CHECK(squares == std::set<int64_t>{1, 4, 7});
  for (Scalar u : R.units()) CHECK(R.is_square(u) == squares.count(u.a));
  CHECK(R.is_square(R.zero()));
  CHECK_FALSE(R.is_square(R.of(3)));  // odd valuation
  CHECK(R.valuation(R.of(3)) == 1);
  CHECK(R.valuation(R.zero()) == 2);  // marker = ell
  CHECK(R.valuation(R.of(6)) == 1);
}

TEST_CASE("quadratic extension of Z/9") {
  RingSpec Q = RingSpec::quad(3, 2);
  CHECK(Q.d == 2);  // smallest non-residue mod 3
  CHECK(Q.card() == 81);
  Scalar th = Q.theta();
  CHECK(Q.mul(th, th) == Q.of(2));
  // Galois conjugation and norms
  Scalar x = Q.make(4, 7);
  CHECK(Q.conj(x) == Q.make(4, 2));
  Scalar n = Q.norm(x);
  CHECK(n.b == 0);
  CHECK(n.a == ((4 * 4 - 2 * 7 * 7) % 9 + 9) % 9);
  CHECK(Q.units().size() == 72);
  for (Scalar u : Q.units()) CHECK(Q.mul(u, Q.inv(u)) == Q.one());
  // trace lands in the base ring
  for (Scalar u : Q.all()) CHECK(Q.trace_q(u).b == 0);
}

TEST_CASE("projection is a ring homomorphism") {
  RingSpec Q = RingSpec::quad(3, 3);
  RingSpec Q1 = Q.at_level(1);
  for (int64_t v = 0; v < Q.card(); v += 7)
    for (int64_t w = 0; w < Q.card(); w += 11) {
      Scalar x = Q.dec(v), y = Q.dec(w);
      CHECK(Q.project(Q.mul(x, y), 1) ==
            Q1.mul(Q.project(x, 1), Q.project(y, 1)));
      CHECK(Q.project(Q.add(x, y), 1) ==
            Q1.add(Q.project(x, 1), Q.project(y, 1)));
    }
}

TEST_CASE("matrix ops and encoding round-trip") {
  RingSpec R = RingSpec::base(5, 2);
  Mat2 m{R.of(2), R.of(3), R.of(7), R.of(1)};
  CHECK(mdec(R, menc(R, m)) == m);
  Mat2 mi = minv(R, m);
  CHECK(mmul(R, m, mi) == mident(R));
  CHECK(mdet(R, mmul(R, m, m)) == R.mul(mdet(R, m), mdet(R, m)));

  RingSpec Q = RingSpec::quad(3, 2);
  Mat2 g{Q.make(1, 1), Q.make(0, 2), Q.make(3, 0), Q.make(2, 2)};
  CHECK(mdec(Q, menc(Q, g)) == g);
  // star is an anti-automorphism: (AB)* = B* A*
  Mat2 h{Q.make(2, 0), Q.make(1, 1), Q.make(0, 1), Q.make(1, 0)};
  CHECK(mstar(Q, mmul(Q, g, h)) == mmul(Q, mstar(Q, h), mstar(Q, g)));
}
