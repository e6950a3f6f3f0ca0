#include "rloc/charfn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace rloc {

// --- LinChar ----------------------------------------------------------------

LinChar trivial_char(const Subgroup& H, int64_t emod) {
  LinChar c;
  c.H = &H;
  c.emod = emod;
  c.expo.assign(H.idx.size(), 0);
  return c;
}

LinChar lin_mul(const LinChar& a, const LinChar& b) {
  check(a.H->idx == b.H->idx && a.emod == b.emod, "linchar: domain mismatch");
  LinChar c = a;
  for (size_t i = 0; i < c.expo.size(); ++i)
    c.expo[i] = (c.expo[i] + b.expo[i]) % c.emod;
  return c;
}

LinChar lin_inv(const LinChar& a) {
  LinChar c = a;
  for (auto& e : c.expo) e = (a.emod - e) % a.emod;
  return c;
}

LinChar lin_conjugate(const LinChar& a, uint32_t g, const Subgroup& Hg) {
  const Group& G = *a.H->G;
  LinChar c;
  c.H = &Hg;
  c.emod = a.emod;
  c.expo.resize(Hg.idx.size());
  uint32_t gi = G.inv(g);
  for (size_t p = 0; p < Hg.idx.size(); ++p)
    c.expo[p] = a.exp_at(G.mul(G.mul(g, Hg.idx[p]), gi));
  return c;
}

LinChar lin_restrict(const LinChar& a, const Subgroup& K) {
  LinChar c;
  c.H = &K;
  c.emod = a.emod;
  c.expo.resize(K.idx.size());
  for (size_t p = 0; p < K.idx.size(); ++p) c.expo[p] = a.exp_at(K.idx[p]);
  return c;
}

void verify_linchar(const LinChar& c) {
  const Subgroup& H = *c.H;
  const Group& G = *H.G;
  check(c.exp_at(G.id()) == 0, "linchar: nontrivial at identity");
  for (uint32_t g : H.gens) {
    int64_t eg = c.exp_at(g);
    for (uint32_t h : H.idx)
      check(c.exp_at(G.mul(g, h)) == (eg + c.exp_at(h)) % c.emod,
            "linchar: not a homomorphism");
  }
}

// --- generic chain extension over an abelian quotient -----------------------

namespace {

struct ChainStep {
  int64_t k = 1;        // order of the new generator in the quotient
  uint32_t xk_pos = 0;  // position of x^k (already assigned)
  // (target, source, power): value(target) = value(source) + power * alpha
  std::vector<std::array<uint32_t, 3>> assigns;
};

// enumerate all extensions of a partial character along a chain of cyclic
// steps; mul acts on positions 0..n-1
std::vector<std::vector<int64_t>> abelian_extensions(
    uint32_t n, const std::function<uint32_t(uint32_t, uint32_t)>& mul,
    const std::vector<uint32_t>& base_members,
    const std::vector<int64_t>& base_expo, int64_t E) {
  std::vector<bool> in(n, false);
  std::vector<uint32_t> members = base_members;
  std::vector<int64_t> expo(n, 0);
  for (size_t i = 0; i < base_members.size(); ++i) {
    in[base_members[i]] = true;
    expo[base_members[i]] = base_expo[i];
  }

  std::vector<ChainStep> chain;
  for (uint32_t pos = 0; pos < n; ++pos) {
    if (in[pos]) continue;
    ChainStep st;
    // powers of x until we fall into the current subgroup
    std::vector<uint32_t> pw{pos};
    while (!in[pw.back()]) pw.push_back(mul(pw.back(), pos));
    st.k = (int64_t)pw.size();  // pw = x^1 .. x^k with x^k inside
    st.xk_pos = pw.back();
    check(E % st.k == 0, "extend: cyclic step does not divide the modulus");
    size_t old_count = members.size();
    for (int64_t j = 1; j < st.k; ++j) {
      uint32_t xj = pw[(size_t)j - 1];
      for (size_t s = 0; s < old_count; ++s) {
        uint32_t y = mul(members[s], xj);
        check(!in[y], "extend: coset overlap");
        in[y] = true;
        members.push_back(y);
        st.assigns.push_back({y, members[s], (uint32_t)j});
      }
    }
    chain.push_back(std::move(st));
  }

  std::vector<std::vector<int64_t>> out;
  std::function<void(size_t)> dfs = [&](size_t step) {
    if (step == chain.size()) {
      out.push_back(expo);
      return;
    }
    const ChainStep& st = chain[step];
    int64_t m = ((expo[st.xk_pos] % E) + E) % E;
    if (m % std::gcd(st.k, E) != 0) return;  // no extension on this branch
    for (int64_t t = 0; t < st.k; ++t) {
      int64_t alpha = (m / st.k + t * (E / st.k)) % E;
      for (auto& [tgt, src, j] : st.assigns)
        expo[tgt] = (expo[src] + (int64_t)j * alpha) % E;
      dfs(step + 1);
    }
  };
  dfs(0);
  return out;
}

}  // namespace

std::vector<LinChar> extend_all(const LinChar& base, const Subgroup& Hbig) {
  const Group& G = *Hbig.G;
  const Subgroup& Hsub = *base.H;
  std::vector<uint32_t> base_members;
  base_members.reserve(Hsub.idx.size());
  for (uint32_t g : Hsub.idx) {
    int32_t p = Hbig.position(g);
    check(p >= 0, "extend: base domain not inside target");
    base_members.push_back((uint32_t)p);
  }
  auto mul = [&](uint32_t a, uint32_t b) {
    int32_t p = Hbig.position(G.mul(Hbig.idx[a], Hbig.idx[b]));
    check(p >= 0, "extend: product escaped target subgroup");
    return (uint32_t)p;
  };
  auto raw = abelian_extensions((uint32_t)Hbig.idx.size(), mul, base_members,
                                base.expo, base.emod);
  std::vector<LinChar> out;
  for (auto& expo : raw) {
    LinChar c;
    c.H = &Hbig;
    c.emod = base.emod;
    c.expo = std::move(expo);
    verify_linchar(c);
    out.push_back(std::move(c));
  }
  return out;
}

int64_t UnitChar::exp_of(Scalar u) const {
  // units are sorted by encoding
  std::vector<Scalar> us = R.units();
  auto it = std::lower_bound(
      us.begin(), us.end(), u,
      [&](const Scalar& x, const Scalar& y) { return R.enc(x) < R.enc(y); });
  check(it != us.end() && *it == u, "unitchar: not a unit");
  return expo[(size_t)(it - us.begin())];
}

std::vector<UnitChar> unit_duals(const RingSpec& R, int64_t emod) {
  std::vector<Scalar> us = R.units();  // sorted by encoding already
  std::vector<int64_t> encs;
  for (Scalar u : us) encs.push_back(R.enc(u));
  auto pos_of = [&](Scalar u) {
    auto it = std::lower_bound(encs.begin(), encs.end(), R.enc(u));
    check(it != encs.end() && *it == R.enc(u), "unit_duals: escaped units");
    return (uint32_t)(it - encs.begin());
  };
  auto mul = [&](uint32_t a, uint32_t b) { return pos_of(R.mul(us[a], us[b])); };
  auto raw = abelian_extensions((uint32_t)us.size(), mul, {pos_of(R.one())},
                                {0}, emod);
  std::vector<UnitChar> out;
  for (auto& expo : raw) {
    UnitChar c{R, emod, std::move(expo)};
    out.push_back(std::move(c));
  }
  check(out.size() == us.size(), "unit_duals: dual size mismatch");
  return out;
}

// --- class functions ---------------------------------------------------------

int64_t ClassFunction::degree() const {
  int64_t d = 0;
  check(v[(size_t)ct->class_of[G->id()]].as_integer(&d),
        "classfn: non-integral degree");
  return d;
}

ClassFunction cf_make(const ClassTable& ct, const Group& G,
                      std::vector<Cyclotomic> vals, std::string label) {
  check((int32_t)vals.size() == ct.num_classes(), "classfn: size mismatch");
  return ClassFunction{&ct, &G, std::move(vals), std::move(label)};
}

ClassFunction cf_tensor(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction c = a;
  c.label = a.label + "*" + b.label;
  for (size_t i = 0; i < c.v.size(); ++i) c.v[i] *= b.v[i];
  return c;
}

ClassFunction cf_dual(const ClassFunction& a) {
  ClassFunction c = a;
  c.label = a.label + "^";
  for (int32_t i = 0; i < a.ct->num_classes(); ++i)
    c.v[(size_t)i] = a.v[(size_t)a.ct->inverse_class(i)];
  return c;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction c = a;
  for (size_t i = 0; i < c.v.size(); ++i) c.v[i] += b.v[i];
  return c;
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction c = a;
  for (size_t i = 0; i < c.v.size(); ++i) c.v[i] -= b.v[i];
  return c;
}

ClassFunction cf_scale(const ClassFunction& a, int64_t n) {
  ClassFunction c = a;
  for (size_t i = 0; i < c.v.size(); ++i) c.v[i] = c.v[i].scaled(n);
  return c;
}

ClassFunction cf_twist(const ClassFunction& a, const UnitChar& chi) {
  ClassFunction c = a;
  c.label = a.label + "!twist";
  for (int32_t i = 0; i < a.ct->num_classes(); ++i) {
    Mat2 m = a.G->mat(a.ct->reps[(size_t)i]);
    c.v[(size_t)i] *= chi.value(mdet(a.G->R, m));
  }
  return c;
}

int64_t inner_product(const ClassFunction& a, const ClassFunction& b) {
  check(a.ct == b.ct, "inner_product: different class tables");
  Cyclotomic s = Cyclotomic::zero();
  for (int32_t i = 0; i < a.ct->num_classes(); ++i)
    s += (a.v[(size_t)i] * b.v[(size_t)i].conj()).scaled(a.ct->sizes[(size_t)i]);
  int64_t val = 0;
  check(s.divided(a.ct->order()).as_integer(&val),
        "inner_product: not a rational integer multiple of |G|");
  return val;
}

int64_t ip_subgroup(const Subgroup& H, const std::vector<Cyclotomic>& a,
                    const std::vector<Cyclotomic>& b) {
  check(a.size() == H.idx.size() && b.size() == H.idx.size(),
        "ip_subgroup: size mismatch");
  Cyclotomic s = Cyclotomic::zero();
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i].conj();
  int64_t val = 0;
  check(s.divided((int64_t)H.idx.size()).as_integer(&val),
        "ip_subgroup: not integral");
  return val;
}

ClassFunction induce_lin(const ClassTable& ct, const Group& G,
                         const LinChar& phi, std::string label) {
  const Subgroup& H = *phi.H;
  int64_t E = phi.emod;
  int32_t k = ct.num_classes();
  std::vector<std::vector<int64_t>> counts((size_t)k);
  for (size_t p = 0; p < H.idx.size(); ++p) {
    int32_t c = ct.class_of[H.idx[p]];
    if (counts[(size_t)c].empty()) counts[(size_t)c].assign((size_t)E, 0);
    counts[(size_t)c][(size_t)phi.expo[p]]++;
  }
  std::vector<Cyclotomic> vals((size_t)k);
  int64_t n = ct.order();
  for (int32_t c = 0; c < k; ++c) {
    if (counts[(size_t)c].empty()) {
      vals[(size_t)c] = Cyclotomic::zero();
      continue;
    }
    std::vector<std::pair<int64_t, int64_t>> raw;
    for (int64_t j = 0; j < E; ++j)
      if (counts[(size_t)c][(size_t)j] != 0)
        raw.push_back({j, counts[(size_t)c][(size_t)j]});
    Cyclotomic acc = Cyclotomic::from_raw(E, raw);
    // chi(g_c) = acc * |C_G(g_c)| / |H|
    vals[(size_t)c] =
        acc.scaled(n / ct.sizes[(size_t)c]).divided((int64_t)H.idx.size());
  }
  return cf_make(ct, G, std::move(vals), std::move(label));
}

ClassFunction induce_table(const ClassTable& ct, const Group& G,
                           const Subgroup& H,
                           const std::vector<Cyclotomic>& vals,
                           std::string label) {
  check(vals.size() == H.idx.size(), "induce_table: size mismatch");
  int32_t k = ct.num_classes();
  std::vector<Cyclotomic> acc((size_t)k);
  for (size_t p = 0; p < H.idx.size(); ++p)
    acc[(size_t)ct.class_of[H.idx[p]]] += vals[p];
  int64_t n = ct.order();
  std::vector<Cyclotomic> out((size_t)k);
  for (int32_t c = 0; c < k; ++c)
    out[(size_t)c] =
        acc[(size_t)c].scaled(n / ct.sizes[(size_t)c]).divided((int64_t)H.idx.size());
  return cf_make(ct, G, std::move(out), std::move(label));
}

std::vector<Cyclotomic> restrict_to(const ClassFunction& a, const Subgroup& H) {
  std::vector<Cyclotomic> out;
  out.reserve(H.idx.size());
  for (uint32_t g : H.idx) out.push_back(a.at_elem(g));
  return out;
}

// --- residue views -----------------------------------------------------------

static bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModRView ModRView::make(int64_t e, uint64_t min_r) {
  uint64_t r = (uint64_t)e + 1;
  while (r < min_r || !is_prime_u64(r) || (r - 1) % (uint64_t)e != 0)
    r += (uint64_t)e;
  // factor r-1 and find a primitive root
  std::vector<uint64_t> primes;
  uint64_t m = r - 1;
  for (uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  auto pw = [&](uint64_t b, uint64_t ex) {
    uint64_t acc = 1;
    b %= r;
    while (ex) {
      if (ex & 1) acc = (__uint128_t)acc * b % r;
      b = (__uint128_t)b * b % r;
      ex >>= 1;
    }
    return acc;
  };
  uint64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (uint64_t q : primes)
      if (pw(g, (r - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  ModRView mv;
  mv.r = r;
  mv.e = e;
  mv.omega = pw(g, (r - 1) / (uint64_t)e);
  return mv;
}

uint64_t ModRView::inv(uint64_t a) const {
  uint64_t acc = 1, b = a % r, ex = r - 2;
  while (ex) {
    if (ex & 1) acc = (__uint128_t)acc * b % r;
    b = (__uint128_t)b * b % r;
    ex >>= 1;
  }
  return acc;
}

std::vector<uint64_t> cf_modr(const ClassFunction& a, const ModRView& mv) {
  std::vector<uint64_t> out;
  out.reserve(a.v.size());
  for (const Cyclotomic& c : a.v) {
    check(mv.e % c.order() == 0, "cf_modr: order does not divide view order");
    out.push_back(c.lifted(mv.e).eval_mod(mv.r, mv.omega));
  }
  return out;
}

int64_t triple_multiplicity(const ClassTable& ct, const ModRView& mv,
                            const std::vector<uint64_t>& a,
                            const std::vector<uint64_t>& b,
                            const std::vector<uint64_t>& c_conj,
                            const std::vector<uint64_t>& weights) {
  uint64_t r = mv.r;
  check((uint64_t)ct.order() % r != 0, "triple_multiplicity: r divides |G|");
  uint64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t t = (__uint128_t)a[i] * b[i] % r;
    t = (__uint128_t)t * c_conj[i] % r;
    s = (s + (__uint128_t)t * weights[i]) % r;
  }
  uint64_t m = (__uint128_t)s * mv.inv((uint64_t)(ct.order() % (int64_t)r)) % r;
  // genuine character multiplicities are far below r; reject wrap-around
  check(m < r / 2, "triple_multiplicity: residue out of certified range");
  return (int64_t)m;
}

}  // namespace rloc
