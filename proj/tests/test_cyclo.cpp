#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rloc/cyclo.hpp"

using namespace rloc;

TEST_CASE("roots of unity basics") {
  Cyclotomic i = Cyclotomic::root(4, 1);
  CHECK(i * i == Cyclotomic::integer(-1));
  // sum of all 9th roots vanishes
  Cyclotomic s = Cyclotomic::zero();
  for (int k = 0; k < 9; ++k) s += Cyclotomic::root(9, k);
  CHECK(s.is_zero());
  // zeta_6 = -zeta_3^2
  CHECK(Cyclotomic::root(6, 1) == -Cyclotomic::root(3, 2));
}

TEST_CASE("integer detection and exact division") {
  Cyclotomic z = Cyclotomic::root(5, 1);
  Cyclotomic norm = Cyclotomic::integer(1);
  for (int k = 1; k < 5; ++k)
    norm *= (Cyclotomic::integer(2) - Cyclotomic::root(5, k));
  int64_t v = 0;
  CHECK(norm.as_integer(&v));
  CHECK(v == (16 + 8 + 4 + 2 + 1) / 1);  // Phi_5(2) = 31
  CHECK_FALSE(z.as_integer(nullptr));
  CHECK(Cyclotomic::integer(12).divided(4) == Cyclotomic::integer(3));
  CHECK_THROWS(Cyclotomic::integer(13).divided(4));
}

TEST_CASE("mixed orders and galois action") {
  Cyclotomic a = Cyclotomic::root(3, 1);
  Cyclotomic b = Cyclotomic::root(4, 1);
  Cyclotomic p = a * b;
  CHECK(p == Cyclotomic::root(12, 7));
  CHECK(a.conj() == Cyclotomic::root(3, 2));
  // conj is an involution
  CHECK(p.conj().conj() == p);
  // |zeta^k + zeta^-k|^2 is rational
  Cyclotomic c = Cyclotomic::root(7, 2) + Cyclotomic::root(7, 5);
  int64_t v = 0;
  CHECK_FALSE(c.as_integer(&v));
  CHECK((c * c.conj() + c).as_integer(nullptr) == false);
}

TEST_CASE("lift preserves value") {
  Cyclotomic a = Cyclotomic::root(6, 1);
  CHECK(a.lifted(12) == Cyclotomic::root(12, 2));
  CHECK(a.lifted(12).order() == 12);
  CHECK(a.lifted(12) == a);
}

TEST_CASE("modular evaluation matches ring homomorphism") {
  // r = 13, order-12 root omega = 2 (2^12 = 4096 = 1 mod 13, ord(2) = 12)
  uint64_t r = 13, omega = 2;
  Cyclotomic x = Cyclotomic::root(12, 5) + Cyclotomic::integer(7);
  Cyclotomic y = Cyclotomic::root(12, 11).scaled(3) - Cyclotomic::integer(2);
  CHECK((x * y).eval_mod(r, omega) ==
        x.eval_mod(r, omega) * y.eval_mod(r, omega) % r);
  CHECK((x + y).eval_mod(r, omega) ==
        (x.eval_mod(r, omega) + y.eval_mod(r, omega)) % r);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(216) == 72);
  CHECK(euler_phi(600) == 160);
}
