#pragma once

// Finite local rings Z/p^l (p odd) and their unramified quadratic extension
// Z/p^l[theta], theta^2 = d with d a non-square unit.  Scalars are stored as
// canonical residues; every operation is exact integer arithmetic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rloc {

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

struct Scalar {
  int64_t a = 0;  // coefficient of 1
  int64_t b = 0;  // coefficient of theta (0 in the base ring)
  bool operator==(const Scalar&) const = default;
};

struct RingSpec {
  int64_t p = 3;
  int ell = 1;
  bool quadratic = false;
  int64_t d = 0;   // theta^2, a non-square unit (0 in the base ring)
  int64_t pl = 3;  // p^ell

  static int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  }

  // smallest positive non-residue mod p
  static int64_t nonresidue(int64_t p);

  static RingSpec base(int64_t p, int ell) {
    check(p % 2 == 1 && p >= 3 && ell >= 1, "ring: need odd p, ell >= 1");
    return RingSpec{p, ell, false, 0, ipow(p, ell)};
  }
  static RingSpec quad(int64_t p, int ell, int64_t dval = -1) {
    check(p % 2 == 1 && p >= 3 && ell >= 1, "ring: need odd p, ell >= 1");
    if (dval < 0) dval = nonresidue(p);
    return RingSpec{p, ell, true, dval, ipow(p, ell)};
  }
  RingSpec at_level(int i) const {
    check(i >= 1 && i <= ell, "ring: bad level");
    return RingSpec{p, i, quadratic, quadratic ? d % ipow(p, i) : 0, ipow(p, i)};
  }
  RingSpec base_ring() const { return RingSpec{p, ell, false, 0, pl}; }

  int64_t card() const { return quadratic ? pl * pl : pl; }
  // residue field size of the coefficient ring o_l
  int64_t q() const { return p; }

  Scalar of(int64_t v) const { return Scalar{((v % pl) + pl) % pl, 0}; }
  Scalar make(int64_t a, int64_t b) const {
    check(quadratic || b % pl == 0, "ring: theta part in base ring");
    return Scalar{((a % pl) + pl) % pl, quadratic ? ((b % pl) + pl) % pl : 0};
  }
  Scalar zero() const { return Scalar{0, 0}; }
  Scalar one() const { return Scalar{1, 0}; }
  Scalar theta() const {
    check(quadratic, "ring: theta needs quadratic ring");
    return Scalar{0, 1};
  }
  // eps from the paper-side conventions: 1 for the base ring, theta otherwise
  Scalar eps() const { return quadratic ? theta() : one(); }

  Scalar add(Scalar x, Scalar y) const {
    return Scalar{(x.a + y.a) % pl, (x.b + y.b) % pl};
  }
  Scalar sub(Scalar x, Scalar y) const {
    return Scalar{(x.a - y.a + pl) % pl, (x.b - y.b + pl) % pl};
  }
  Scalar neg(Scalar x) const {
    return Scalar{(pl - x.a) % pl, (pl - x.b) % pl};
  }
  Scalar mul(Scalar x, Scalar y) const {
    // (a + b theta)(c + e theta) = ac + be*d + (ae + bc) theta
    int64_t a = (x.a * y.a + ((x.b * y.b) % pl) * d) % pl;
    int64_t b = (x.a * y.b + x.b * y.a) % pl;
    return Scalar{a, b};
  }
  Scalar conj(Scalar x) const {  // Galois conjugate a + b theta -> a - b theta
    return Scalar{x.a, (pl - x.b) % pl};
  }
  Scalar trace_q(Scalar x) const { return add(x, conj(x)); }
  Scalar norm(Scalar x) const { return mul(x, conj(x)); }

  bool is_unit(Scalar x) const {
    if (!quadratic) return x.a % p != 0;
    return (x.a * x.a - d * x.b * x.b) % p != 0;
  }
  Scalar inv(Scalar x) const;

  Scalar project(Scalar x, int i) const {  // image in the level-i quotient
    int64_t m = ipow(p, i);
    return Scalar{x.a % m, x.b % m};
  }

  // pi-adic valuation; returns ell for x = 0 (marker)
  int valuation(Scalar x) const {
    if (x.a == 0 && x.b == 0) return ell;
    int v = 0;
    int64_t a = x.a, b = x.b;
    while (a % p == 0 && b % p == 0) {
      a /= p;
      b /= p;
      ++v;
    }
    return v;
  }

  // squares: 0 is a square; otherwise even valuation and unit part a square
  // in the residue field (base-ring scalars)
  bool is_square(Scalar x) const;

  int64_t enc(Scalar x) const { return quadratic ? x.a + x.b * pl : x.a; }
  Scalar dec(int64_t v) const {
    return quadratic ? Scalar{v % pl, v / pl} : Scalar{v, 0};
  }

  std::vector<Scalar> all() const;
  std::vector<Scalar> units() const;
};

// ---------------------------------------------------------------------------

struct Mat2 {
  Scalar a, b, c, d;  // [[a, b], [c, d]]
  bool operator==(const Mat2&) const = default;
};

inline Mat2 mmul(const RingSpec& R, const Mat2& x, const Mat2& y) {
  return Mat2{R.add(R.mul(x.a, y.a), R.mul(x.b, y.c)),
              R.add(R.mul(x.a, y.b), R.mul(x.b, y.d)),
              R.add(R.mul(x.c, y.a), R.mul(x.d, y.c)),
              R.add(R.mul(x.c, y.b), R.mul(x.d, y.d))};
}
inline Mat2 madd(const RingSpec& R, const Mat2& x, const Mat2& y) {
  return Mat2{R.add(x.a, y.a), R.add(x.b, y.b), R.add(x.c, y.c), R.add(x.d, y.d)};
}
inline Mat2 msub(const RingSpec& R, const Mat2& x, const Mat2& y) {
  return Mat2{R.sub(x.a, y.a), R.sub(x.b, y.b), R.sub(x.c, y.c), R.sub(x.d, y.d)};
}
inline Mat2 mneg(const RingSpec& R, const Mat2& x) {
  return Mat2{R.neg(x.a), R.neg(x.b), R.neg(x.c), R.neg(x.d)};
}
inline Mat2 mscale(const RingSpec& R, Scalar s, const Mat2& x) {
  return Mat2{R.mul(s, x.a), R.mul(s, x.b), R.mul(s, x.c), R.mul(s, x.d)};
}
inline Scalar mdet(const RingSpec& R, const Mat2& x) {
  return R.sub(R.mul(x.a, x.d), R.mul(x.b, x.c));
}
inline Scalar mtr(const RingSpec& R, const Mat2& x) { return R.add(x.a, x.d); }
inline Mat2 mident(const RingSpec& R) {
  return Mat2{R.one(), R.zero(), R.zero(), R.one()};
}
inline Mat2 mzero(const RingSpec& R) {
  return Mat2{R.zero(), R.zero(), R.zero(), R.zero()};
}
inline Mat2 minv(const RingSpec& R, const Mat2& x) {
  Scalar di = R.inv(mdet(R, x));
  return Mat2{R.mul(di, x.d), R.mul(di, R.neg(x.b)), R.mul(di, R.neg(x.c)),
              R.mul(di, x.a)};
}
// star map for the unitary group: [[a,b],[c,d]]* = [[d°, b°], [c°, a°]]
inline Mat2 mstar(const RingSpec& R, const Mat2& x) {
  return Mat2{R.conj(x.d), R.conj(x.b), R.conj(x.c), R.conj(x.a)};
}
inline Mat2 mproject(const RingSpec& R, const Mat2& x, int i) {
  return Mat2{R.project(x.a, i), R.project(x.b, i), R.project(x.c, i),
              R.project(x.d, i)};
}
inline Mat2 mconjugate(const RingSpec& R, const Mat2& g, const Mat2& x) {
  return mmul(R, mmul(R, g, x), minv(R, g));
}

inline uint64_t menc(const RingSpec& R, const Mat2& x) {
  uint64_t S = (uint64_t)R.card();
  return ((((uint64_t)R.enc(x.d) * S + (uint64_t)R.enc(x.c)) * S +
           (uint64_t)R.enc(x.b)) *
              S +
          (uint64_t)R.enc(x.a));
}
inline Mat2 mdec(const RingSpec& R, uint64_t v) {
  uint64_t S = (uint64_t)R.card();
  Mat2 m;
  m.a = R.dec(v % S);
  v /= S;
  m.b = R.dec(v % S);
  v /= S;
  m.c = R.dec(v % S);
  v /= S;
  m.d = R.dec(v % S);
  return m;
}

}  // namespace rloc
