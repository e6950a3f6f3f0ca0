#pragma once

// Exact arithmetic in Z[zeta_e].  Values are kept reduced modulo the e-th
// cyclotomic polynomial, in the power basis zeta^0 .. zeta^{phi(e)-1}, stored
// sparsely as (exponent, coefficient) pairs.  Mixed orders are combined by
// lifting to the lcm.

#include <cstdint>
#include <vector>

#include "rloc/ring.hpp"

namespace rloc {

int64_t euler_phi(int64_t n);
int64_t lcm64(int64_t a, int64_t b);

class Cyclotomic {
 public:
  Cyclotomic() : e_(1) {}
  static Cyclotomic integer(int64_t n);
  static Cyclotomic zero(int64_t e = 1) { return Cyclotomic(e); }
  // zeta_e^k
  static Cyclotomic root(int64_t e, int64_t k);

  int64_t order() const { return e_; }
  bool is_zero() const { return terms_.empty(); }
  // true if the value lies in Z; if so *out receives it
  bool as_integer(int64_t* out) const;

  Cyclotomic lifted(int64_t m) const;  // rewrite in Z[zeta_m], e_ | m
  Cyclotomic conj() const;             // complex conjugation zeta -> zeta^-1
  Cyclotomic galois(int64_t k) const;  // zeta -> zeta^k, gcd(k, e) = 1

  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& y) { return *this = *this + y; }
  Cyclotomic& operator-=(const Cyclotomic& y) { return *this = *this - y; }
  Cyclotomic& operator*=(const Cyclotomic& y) { return *this = *this * y; }
  bool operator==(const Cyclotomic& y) const;
  bool operator!=(const Cyclotomic& y) const { return !(*this == y); }

  Cyclotomic scaled(int64_t n) const;
  // exact division by a rational integer; throws unless every coefficient
  // is divisible
  Cyclotomic divided(int64_t n) const;
  bool divisible(int64_t n) const;

  // evaluation at a fixed e-th root of unity mod r (omega has order e in F_r)
  uint64_t eval_mod(uint64_t r, uint64_t omega_e) const;

  const std::vector<std::pair<int32_t, int64_t>>& terms() const {
    return terms_;
  }
  // construct from raw exponent/coefficient pairs in Z[x]/(x^e - 1)
  static Cyclotomic from_raw(int64_t e,
                             const std::vector<std::pair<int64_t, int64_t>>& t);

 private:
  explicit Cyclotomic(int64_t e) : e_(e) {}
  int64_t e_;
  std::vector<std::pair<int32_t, int64_t>> terms_;  // sorted by exponent
};

}  // namespace rloc
