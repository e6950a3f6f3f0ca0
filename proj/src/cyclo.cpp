#include "rloc/cyclo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace rloc {

int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) r -= r / n;
  return r;
}

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<int64_t>;  // coefficients, low degree first

// exact division of polynomials over Z (remainder must vanish)
Poly poly_div(Poly num, const Poly& den) {
  check(!den.empty() && den.back() != 0, "cyclo: bad divisor");
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  for (int64_t i = (int64_t)num.size() - 1; i >= (int64_t)den.size() - 1; --i) {
    int64_t lead = num[(size_t)i];
    if (lead == 0) continue;
    check(lead % den.back() == 0, "cyclo: non-exact division");
    int64_t f = lead / den.back();
    size_t off = (size_t)i - (den.size() - 1);
    q[off] = f;
    for (size_t j = 0; j < den.size(); ++j) num[off + j] -= f * den[j];
  }
  for (int64_t c : num) check(c == 0, "cyclo: nonzero remainder");
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

struct Ctx {
  int64_t e, phi;
  // x^k mod Phi_e for k in [phi, e), each a dense row of length phi
  std::vector<std::vector<int64_t>> rows;
};

const Poly& cyclotomic_poly(int64_t n) {
  static std::map<int64_t, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::function<const Poly&(int64_t)> get = [&](int64_t m) -> const Poly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    Poly f((size_t)m + 1, 0);
    f[0] = -1;
    f[(size_t)m] = 1;  // x^m - 1
    for (int64_t dd = 1; dd < m; ++dd)
      if (m % dd == 0) f = poly_div(std::move(f), get(dd));
    return cache.emplace(m, std::move(f)).first->second;
  };
  return get(n);
}

const Ctx& ctx(int64_t e) {
  static std::map<int64_t, Ctx> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  Ctx c;
  c.e = e;
  c.phi = euler_phi(e);
  const Poly& f = cyclotomic_poly(e);
  check((int64_t)f.size() == c.phi + 1, "cyclo: Phi degree mismatch");
  // iteratively build x^k mod Phi_e
  std::vector<int64_t> cur((size_t)c.phi, 0);
  if (c.phi > 0) {
    // x^phi = -(f - x^phi)
    for (int64_t j = 0; j < c.phi; ++j) cur[(size_t)j] = -f[(size_t)j];
  }
  for (int64_t k = c.phi; k < e; ++k) {
    c.rows.push_back(cur);
    // multiply by x and reduce
    std::vector<int64_t> nxt((size_t)c.phi, 0);
    int64_t top = cur[(size_t)c.phi - 1];
    for (int64_t j = c.phi - 1; j > 0; --j) nxt[(size_t)j] = cur[(size_t)j - 1];
    nxt[0] = 0;
    if (top != 0)
      for (int64_t j = 0; j < c.phi; ++j) nxt[(size_t)j] += top * -f[(size_t)j];
    cur = std::move(nxt);
  }
  return cache.emplace(e, std::move(c)).first->second;
}

}  // namespace

Cyclotomic Cyclotomic::from_raw(
    int64_t e, const std::vector<std::pair<int64_t, int64_t>>& t) {
  const Ctx& c = ctx(e);
  std::vector<int64_t> dense((size_t)e, 0);
  for (auto& [k, v] : t) dense[(size_t)(((k % e) + e) % e)] += v;
  std::vector<int64_t> red((size_t)c.phi, 0);
  for (int64_t k = 0; k < e; ++k) {
    int64_t v = dense[(size_t)k];
    if (v == 0) continue;
    if (k < c.phi) {
      red[(size_t)k] += v;
    } else {
      const auto& row = c.rows[(size_t)(k - c.phi)];
      for (int64_t j = 0; j < c.phi; ++j) red[(size_t)j] += v * row[(size_t)j];
    }
  }
  Cyclotomic out(e);
  for (int64_t j = 0; j < c.phi; ++j)
    if (red[(size_t)j] != 0) out.terms_.push_back({(int32_t)j, red[(size_t)j]});
  return out;
}

Cyclotomic Cyclotomic::integer(int64_t n) {
  Cyclotomic out(1);
  if (n != 0) out.terms_.push_back({0, n});
  return out;
}

Cyclotomic Cyclotomic::root(int64_t e, int64_t k) {
  return from_raw(e, {{k, 1}});
}

bool Cyclotomic::as_integer(int64_t* out) const {
  if (terms_.empty()) {
    if (out) *out = 0;
    return true;
  }
  if (terms_.size() == 1 && terms_[0].first == 0) {
    if (out) *out = terms_[0].second;
    return true;
  }
  return false;
}

Cyclotomic Cyclotomic::lifted(int64_t m) const {
  check(m % e_ == 0, "cyclo: lift order must be a multiple");
  if (m == e_) return *this;
  int64_t f = m / e_;
  std::vector<std::pair<int64_t, int64_t>> raw;
  raw.reserve(terms_.size());
  for (auto& [k, v] : terms_) raw.push_back({(int64_t)k * f, v});
  return from_raw(m, raw);
}

Cyclotomic Cyclotomic::galois(int64_t k) const {
  check(std::gcd(((k % e_) + e_) % e_, e_) == 1, "cyclo: galois needs unit k");
  std::vector<std::pair<int64_t, int64_t>> raw;
  raw.reserve(terms_.size());
  for (auto& [j, v] : terms_) raw.push_back({(int64_t)j * k, v});
  return from_raw(e_, raw);
}

Cyclotomic Cyclotomic::conj() const { return galois(e_ - 1 + (e_ == 1)); }

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  int64_t m = lcm64(x.e_, y.e_);
  Cyclotomic a = x.lifted(m), b = y.lifted(m);
  std::vector<std::pair<int64_t, int64_t>> raw;
  for (auto& t : a.terms_) raw.push_back({t.first, t.second});
  for (auto& t : b.terms_) raw.push_back({t.first, t.second});
  return Cyclotomic::from_raw(m, raw);
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) {
  return x + (-y);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(e_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  int64_t m = lcm64(x.e_, y.e_);
  Cyclotomic a = x.lifted(m), b = y.lifted(m);
  std::vector<std::pair<int64_t, int64_t>> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (auto& [k1, v1] : a.terms_)
    for (auto& [k2, v2] : b.terms_)
      raw.push_back({(int64_t)k1 + k2, v1 * v2});
  return Cyclotomic::from_raw(m, raw);
}

bool Cyclotomic::operator==(const Cyclotomic& y) const {
  int64_t m = lcm64(e_, y.e_);
  return lifted(m).terms_ == y.lifted(m).terms_;
}

Cyclotomic Cyclotomic::scaled(int64_t n) const {
  if (n == 0) return zero(e_);
  Cyclotomic out(e_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= n;
  return out;
}

bool Cyclotomic::divisible(int64_t n) const {
  for (auto& t : terms_)
    if (t.second % n != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::divided(int64_t n) const {
  check(n != 0, "cyclo: division by zero");
  Cyclotomic out(e_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) {
    check(t.second % n == 0, "cyclo: non-exact integer division");
    t.second /= n;
  }
  return out;
}

uint64_t Cyclotomic::eval_mod(uint64_t r, uint64_t omega_e) const {
  auto pw = [&](uint64_t b, uint64_t e) {
    uint64_t acc = 1;
    b %= r;
    while (e) {
      if (e & 1) acc = acc * b % r;
      b = b * b % r;
      e >>= 1;
    }
    return acc;
  };
  uint64_t s = 0;
  for (auto& [k, v] : terms_) {
    uint64_t c = (uint64_t)(((v % (int64_t)r) + (int64_t)r) % (int64_t)r);
    s = (s + c * pw(omega_e, (uint64_t)k)) % r;
  }
  return s;
}

}  // namespace rloc
