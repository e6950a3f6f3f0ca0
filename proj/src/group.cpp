#include "rloc/group.hpp"

#include <algorithm>
#include <queue>

namespace rloc {

std::string GroupSpec::name() const {
  return (kind == Kind::GL ? std::string("gl2_") : std::string("gu2_")) +
         std::to_string(p) + "_" + std::to_string(ell);
}

int64_t GroupSpec::expected_order() const {
  int64_t q = p;
  int64_t level1 = kind == Kind::GL ? (q * q - 1) * (q * q - q)
                                    : q * (q - 1) * (q + 1) * (q + 1);
  int64_t k = 1;
  for (int i = 1; i < ell; ++i) k *= q * q * q * q;  // kernel has q^4 per level
  return level1 * k;
}

bool is_member(const GroupSpec& spec, const RingSpec& R, const Mat2& m) {
  if (spec.kind == Kind::GL) return R.is_unit(mdet(R, m));
  return mmul(R, mstar(R, m), m) == mident(R);
}

bool is_lie_member(const GroupSpec& spec, const RingSpec& R, const Mat2& m) {
  if (spec.kind == Kind::GL) return true;
  return madd(R, m, mstar(R, m)) == mzero(R);
}

std::vector<Mat2> lie_algebra(const GroupSpec& spec, const RingSpec& R) {
  std::vector<Mat2> out;
  if (spec.kind == Kind::GL) {
    uint64_t n = (uint64_t)R.card();
    for (uint64_t v = 0; v < n * n * n * n; ++v) out.push_back(mdec(R, v));
  } else {
    // anti-hermitian: [[x, theta y], [theta z, -x°]]
    for (Scalar x : R.all())
      for (int64_t y = 0; y < R.pl; ++y)
        for (int64_t z = 0; z < R.pl; ++z)
          out.push_back(Mat2{x, R.mul(R.theta(), R.of(y)),
                             R.mul(R.theta(), R.of(z)), R.neg(R.conj(x))});
  }
  return out;
}

int32_t Group::index_of(uint64_t enc) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), enc);
  if (it == elems.end() || *it != enc) return -1;
  return (int32_t)(it - elems.begin());
}

uint32_t Group::mul(uint32_t i, uint32_t j) const {
  int32_t k = index_of(menc(R, mmul(R, mat(i), mat(j))));
  check(k >= 0, "group: product escaped the group");
  return (uint32_t)k;
}

int64_t Group::element_order(uint32_t i) const {
  int64_t n = 1;
  uint32_t x = i;
  while (x != id_) {
    x = mul(x, i);
    ++n;
  }
  return n;
}

namespace {

// closure of a generating set under right multiplication
std::vector<uint32_t> close_gens(const Group& G,
                                 const std::vector<uint32_t>& gens) {
  std::vector<bool> seen(G.elems.size(), false);
  std::vector<uint32_t> out{G.id()};
  seen[G.id()] = true;
  for (size_t h = 0; h < out.size(); ++h)
    for (uint32_t g : gens) {
      uint32_t y = G.mul(out[h], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint32_t> greedy_gens(const Group& G,
                                  const std::vector<uint32_t>& universe) {
  std::vector<uint32_t> gens;
  std::vector<uint32_t> clo{G.id()};
  for (uint32_t e : universe) {
    if (std::binary_search(clo.begin(), clo.end(), e)) continue;
    gens.push_back(e);
    clo = close_gens(G, gens);
    // keep only closure elements inside the universe ordering; closure of
    // subgroup generators stays within the subgroup
    if (clo.size() == universe.size()) break;
  }
  return gens;
}

}  // namespace

Group Group::enumerate(const GroupSpec& spec, int64_t budget) {
  check(spec.expected_order() <= budget, "group: order exceeds budget");
  Group G;
  G.spec = spec;
  G.R = spec.ring();

  // level 1 by brute force
  RingSpec R1 = G.R.at_level(1);
  std::vector<uint64_t> cur;
  {
    uint64_t n = (uint64_t)R1.card();
    for (uint64_t v = 0; v < n * n * n * n; ++v) {
      Mat2 m = mdec(R1, v);
      if (is_member(spec, R1, m)) cur.push_back(v);
    }
  }

  // lift one level at a time; fibers are cosets of the level kernel
  for (int lev = 2; lev <= spec.ell; ++lev) {
    RingSpec Ri = G.R.at_level(lev);
    RingSpec Rprev = G.R.at_level(lev - 1);
    int64_t pk = RingSpec::ipow(spec.p, lev - 1);
    std::vector<Mat2> kerdir = lie_algebra(spec, Ri.at_level(1));
    std::vector<uint64_t> nxt;
    nxt.reserve(cur.size() * kerdir.size());
    Scalar half = Ri.inv(Ri.of(2));
    for (uint64_t v : cur) {
      Mat2 g0 = mdec(Rprev, v);
      Mat2 g{Ri.make(g0.a.a, g0.a.b), Ri.make(g0.b.a, g0.b.b),
             Ri.make(g0.c.a, g0.c.b), Ri.make(g0.d.a, g0.d.b)};
      if (spec.kind == Kind::GU) {
        // one Hensel step: g <- g (I - pi^{lev-1} E'/2), E = g* g - I
        Mat2 E = msub(Ri, mmul(Ri, mstar(Ri, g), g), mident(Ri));
        auto divp = [&](Scalar s) {
          check(s.a % pk == 0 && s.b % pk == 0, "group: lift defect");
          return Ri.make(s.a / pk, s.b / pk);
        };
        Mat2 Y{Ri.mul(half, Ri.neg(divp(E.a))), Ri.mul(half, Ri.neg(divp(E.b))),
               Ri.mul(half, Ri.neg(divp(E.c))), Ri.mul(half, Ri.neg(divp(E.d)))};
        Mat2 corr = madd(Ri, mident(Ri), mscale(Ri, Ri.of(pk), Y));
        g = mmul(Ri, g, corr);
        check(is_member(spec, Ri, g), "group: Hensel lift failed");
      }
      for (const Mat2& Z : kerdir) {
        Mat2 zi{Ri.make(Z.a.a, Z.a.b), Ri.make(Z.b.a, Z.b.b),
                Ri.make(Z.c.a, Z.c.b), Ri.make(Z.d.a, Z.d.b)};
        Mat2 k = madd(Ri, mident(Ri), mscale(Ri, Ri.of(pk), zi));
        nxt.push_back(menc(Ri, mmul(Ri, g, k)));
      }
    }
    std::sort(nxt.begin(), nxt.end());
    nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
    cur = std::move(nxt);
  }

  std::sort(cur.begin(), cur.end());
  G.elems = std::move(cur);
  check((int64_t)G.elems.size() == spec.expected_order(),
        "group: enumeration size mismatch for " + spec.name());

  int32_t idi = G.index_of(menc(G.R, mident(G.R)));
  check(idi >= 0, "group: identity missing");
  G.id_ = (uint32_t)idi;

  G.inv_idx.resize(G.elems.size());
  for (uint32_t i = 0; i < G.elems.size(); ++i) {
    int32_t j = G.index_of(menc(G.R, minv(G.R, G.mat(i))));
    check(j >= 0, "group: inverse missing");
    G.inv_idx[i] = (uint32_t)j;
  }

  std::vector<uint32_t> universe(G.elems.size());
  for (uint32_t i = 0; i < universe.size(); ++i) universe[i] = i;
  G.gens = greedy_gens(G, universe);
  check(close_gens(G, G.gens).size() == G.elems.size(),
        "group: generator closure mismatch");
  return G;
}

// --- Subgroup -------------------------------------------------------------

bool Subgroup::contains(uint32_t i) const {
  return std::binary_search(idx.begin(), idx.end(), i);
}

int32_t Subgroup::position(uint32_t i) const {
  auto it = std::lower_bound(idx.begin(), idx.end(), i);
  if (it == idx.end() || *it != i) return -1;
  return (int32_t)(it - idx.begin());
}

Subgroup Subgroup::whole(const Group& G) {
  Subgroup H;
  H.G = &G;
  H.idx.resize(G.elems.size());
  for (uint32_t i = 0; i < H.idx.size(); ++i) H.idx[i] = i;
  H.gens = G.gens;
  return H;
}

Subgroup Subgroup::from_indices(const Group& G, std::vector<uint32_t> idx) {
  Subgroup H;
  H.G = &G;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  H.idx = std::move(idx);
  check(!H.idx.empty() && H.contains(G.id()), "subgroup: missing identity");
  // greedy generating set within the subgroup
  std::vector<uint32_t> clo{G.id()};
  for (uint32_t e : H.idx) {
    if (std::binary_search(clo.begin(), clo.end(), e)) continue;
    H.gens.push_back(e);
    clo = close_gens(G, H.gens);
    if (clo.size() == H.idx.size()) break;
  }
  check(clo.size() == H.idx.size(), "subgroup: not closed under products");
  return H;
}

Subgroup Subgroup::closure(const Group& G, const std::vector<uint32_t>& gens) {
  Subgroup H;
  H.G = &G;
  H.idx = close_gens(G, gens);
  H.gens = gens;
  return H;
}

Subgroup Subgroup::product(const Subgroup& A, const Subgroup& B) {
  check(A.G == B.G, "subgroup: product across groups");
  std::vector<uint32_t> out;
  out.reserve(A.idx.size() * B.idx.size());
  for (uint32_t a : A.idx)
    for (uint32_t b : B.idx) out.push_back(A.G->mul(a, b));
  return from_indices(*A.G, std::move(out));
}

Subgroup Subgroup::intersect(const Subgroup& A, const Subgroup& B) {
  check(A.G == B.G, "subgroup: intersect across groups");
  std::vector<uint32_t> out;
  std::set_intersection(A.idx.begin(), A.idx.end(), B.idx.begin(), B.idx.end(),
                        std::back_inserter(out));
  return from_indices(*A.G, std::move(out));
}

Subgroup Subgroup::conjugated(uint32_t g) const {
  std::vector<uint32_t> out;
  out.reserve(idx.size());
  uint32_t gi = G->inv(g);
  for (uint32_t h : idx) out.push_back(G->mul(G->mul(gi, h), g));
  return from_indices(*G, std::move(out));
}

// --- named subgroups -------------------------------------------------------

static Subgroup filter_group(const Group& G, auto&& pred) {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < G.elems.size(); ++i)
    if (pred(G.mat(i))) out.push_back(i);
  return Subgroup::from_indices(G, std::move(out));
}

Subgroup center(const Group& G) {
  const RingSpec& R = G.R;
  return filter_group(G, [&](const Mat2& m) {
    return m.b == R.zero() && m.c == R.zero() && m.a == m.d;
  });
}

Subgroup borel(const Group& G) {
  const RingSpec& R = G.R;
  return filter_group(G, [&](const Mat2& m) { return m.c == R.zero(); });
}

Subgroup torus(const Group& G) {
  const RingSpec& R = G.R;
  return filter_group(
      G, [&](const Mat2& m) { return m.b == R.zero() && m.c == R.zero(); });
}

Subgroup unipotent(const Group& G) {
  const RingSpec& R = G.R;
  return filter_group(G, [&](const Mat2& m) {
    return m.a == R.one() && m.d == R.one() && m.c == R.zero();
  });
}

Subgroup congruence_kernel(const Group& G, int i) {
  const RingSpec& R = G.R;
  Mat2 I = mident(R);
  return filter_group(G, [&](const Mat2& m) {
    Mat2 dlt = msub(R, m, I);
    return R.valuation(dlt.a) >= i && R.valuation(dlt.b) >= i &&
           R.valuation(dlt.c) >= i && R.valuation(dlt.d) >= i;
  });
}

Subgroup centralizer_of(const Group& G, const Mat2& A) {
  const RingSpec& R = G.R;
  return filter_group(G, [&](const Mat2& m) {
    return mmul(R, m, A) == mmul(R, A, m);
  });
}

Subgroup zt_subgroup(const Group& G, int t) {
  const RingSpec& R = G.R;
  return filter_group(G, [&](const Mat2& m) {
    return m.b == R.zero() && m.c == R.zero() &&
           R.valuation(R.sub(m.d, m.a)) >= t;
  });
}

Subgroup sns_n_subgroup(const Group& G) {
  const RingSpec& R = G.R;
  int l1 = G.spec.ell / 2, l2 = G.spec.ell - l1;
  Mat2 I = mident(R);
  return filter_group(G, [&](const Mat2& m) {
    Mat2 dlt = msub(R, m, I);
    return R.valuation(dlt.a) >= l1 && R.valuation(dlt.d) >= l1 &&
           R.valuation(dlt.c) >= l1 && R.valuation(dlt.b) >= l2;
  });
}

DoubleCosets double_cosets(const Subgroup& H1, const Subgroup& H2) {
  const Group& G = *H1.G;
  check(H1.G == H2.G, "double_cosets: different parent groups");
  DoubleCosets dc;
  dc.coset_of.assign(G.elems.size(), -1);
  for (uint32_t e = 0; e < G.elems.size(); ++e) {
    if (dc.coset_of[e] >= 0) continue;
    int32_t cid = (int32_t)dc.reps.size();
    dc.reps.push_back(e);
    std::vector<uint32_t> q{e};
    dc.coset_of[e] = cid;
    for (size_t h = 0; h < q.size(); ++h) {
      for (uint32_t g : H1.gens) {
        uint32_t y = G.mul(g, q[h]);
        if (dc.coset_of[y] < 0) {
          dc.coset_of[y] = cid;
          q.push_back(y);
        }
      }
      for (uint32_t g : H2.gens) {
        uint32_t y = G.mul(q[h], g);
        if (dc.coset_of[y] < 0) {
          dc.coset_of[y] = cid;
          q.push_back(y);
        }
      }
    }
    dc.sizes.push_back((int64_t)q.size());
  }
  return dc;
}

}  // namespace rloc
