#include "rloc/ring.hpp"

namespace rloc {

int64_t RingSpec::nonresidue(int64_t p) {
  std::vector<bool> sq(p, false);
  for (int64_t x = 1; x < p; ++x) sq[(x * x) % p] = true;
  for (int64_t v = 2; v < p; ++v)
    if (!sq[v]) return v;
  throw std::runtime_error("ring: no non-residue (p = 2?)");
}

static int64_t inv_mod(int64_t a, int64_t m) {
  // extended Euclid; a must be a unit mod m
  int64_t t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    int64_t qd = r / nr;
    int64_t tmp = t - qd * nt;
    t = nt;
    nt = tmp;
    tmp = r - qd * nr;
    r = nr;
    nr = tmp;
  }
  check(r == 1, "ring: inverse of non-unit");
  return ((t % m) + m) % m;
}

Scalar RingSpec::inv(Scalar x) const {
  check(is_unit(x), "ring: inverse of non-unit");
  if (!quadratic) return Scalar{inv_mod(x.a, pl), 0};
  // (a + b theta)^-1 = (a - b theta) / (a^2 - d b^2)
  int64_t n = ((x.a * x.a - d * x.b * x.b) % pl + pl) % pl;
  int64_t ni = inv_mod(n, pl);
  return Scalar{(x.a * ni) % pl, ((pl - x.b) * ni) % pl};
}

bool RingSpec::is_square(Scalar x) const {
  check(x.b == 0, "ring: is_square is defined for base-ring scalars");
  if (x.a == 0) return true;
  int v = 0;
  int64_t a = x.a;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  if (v % 2 != 0) return false;
  // Legendre symbol of the unit part via Euler's criterion
  int64_t r = 1, b = a % p, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r == 1;
}

std::vector<Scalar> RingSpec::all() const {
  std::vector<Scalar> out;
  out.reserve((size_t)card());
  for (int64_t v = 0; v < card(); ++v) out.push_back(dec(v));
  return out;
}

std::vector<Scalar> RingSpec::units() const {
  std::vector<Scalar> out;
  for (int64_t v = 0; v < card(); ++v) {
    Scalar s = dec(v);
    if (is_unit(s)) out.push_back(s);
  }
  return out;
}

}  // namespace rloc
