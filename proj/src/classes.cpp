#include "rloc/classes.hpp"

#include <algorithm>
#include <numeric>

namespace rloc {

const char* mat_type_name(MatType t) {
  switch (t) {
    case MatType::NREG: return "nreg";
    case MatType::SS: return "ss";
    case MatType::SNS: return "sns";
    case MatType::CUS: return "cus";
  }
  return "?";
}

int64_t ClassTable::order() const {
  return std::accumulate(sizes.begin(), sizes.end(), (int64_t)0);
}

int32_t ClassTable::power_class(int32_t i, int64_t t) const {
  int64_t n = rep_order[(size_t)i];
  int64_t tt = ((t % n) + n) % n;
  uint32_t x = G->id();
  for (int64_t k = 0; k < tt; ++k) x = G->mul(x, reps[(size_t)i]);
  return class_of[x];
}

ClassTable ClassTable::build(const IGroup& G, const std::vector<uint32_t>& gens0) {
  ClassTable ct;
  ct.G = &G;
  uint32_t n = G.size();
  ct.class_of.assign(n, -1);
  std::vector<uint32_t> gens = gens0;
  if (gens.empty()) {  // conjugate by everything
    gens.resize(n);
    for (uint32_t i = 0; i < n; ++i) gens[i] = i;
  }
  std::vector<uint32_t> ginv(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) ginv[k] = G.inv(gens[k]);
  for (uint32_t e = 0; e < n; ++e) {
    if (ct.class_of[e] >= 0) continue;
    int32_t cid = (int32_t)ct.reps.size();
    ct.reps.push_back(e);
    std::vector<uint32_t> q{e};
    ct.class_of[e] = cid;
    for (size_t h = 0; h < q.size(); ++h)
      for (size_t k = 0; k < gens.size(); ++k) {
        uint32_t y = G.mul(G.mul(gens[k], q[h]), ginv[k]);
        if (ct.class_of[y] < 0) {
          ct.class_of[y] = cid;
          q.push_back(y);
        }
      }
    ct.sizes.push_back((int64_t)q.size());
    std::sort(q.begin(), q.end());
    ct.members.push_back(std::move(q));
  }
  ct.rep_order.resize(ct.reps.size());
  ct.exponent = 1;
  for (size_t i = 0; i < ct.reps.size(); ++i) {
    int64_t o = 1;
    uint32_t x = ct.reps[i];
    while (x != G.id()) {
      x = G.mul(x, ct.reps[i]);
      ++o;
    }
    ct.rep_order[i] = o;
    ct.exponent = std::lcm(ct.exponent, o);
  }
  return ct;
}

QuotientGroup QuotientGroup::build(const Subgroup& H, const Subgroup& N) {
  const Group& G = *H.G;
  QuotientGroup qg;
  uint32_t nh = (uint32_t)H.idx.size();
  qg.coset_of.assign(nh, UINT32_MAX);
  for (uint32_t pos = 0; pos < nh; ++pos) {
    if (qg.coset_of[pos] != UINT32_MAX) continue;
    uint32_t cid = (uint32_t)qg.coset_reps.size();
    qg.coset_reps.push_back(pos);
    for (uint32_t npos = 0; npos < N.idx.size(); ++npos) {
      uint32_t y = G.mul(H.idx[pos], N.idx[npos]);
      int32_t ypos = H.position(y);
      check(ypos >= 0, "quotient: N does not sit inside H");
      check(qg.coset_of[(uint32_t)ypos] == UINT32_MAX ||
                qg.coset_of[(uint32_t)ypos] == cid,
            "quotient: coset clash");
      qg.coset_of[(uint32_t)ypos] = cid;
    }
  }
  uint32_t m = (uint32_t)qg.coset_reps.size();
  check((size_t)m * N.idx.size() == H.idx.size(), "quotient: index mismatch");
  qg.Q.n = m;
  qg.Q.table.resize((size_t)m * m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j) {
      uint32_t prod = G.mul(H.idx[qg.coset_reps[i]], H.idx[qg.coset_reps[j]]);
      int32_t pos = H.position(prod);
      check(pos >= 0, "quotient: product escaped H");
      qg.Q.table[(size_t)i * m + j] = qg.coset_of[(uint32_t)pos];
    }
  qg.Q.ident = qg.coset_of[(uint32_t)H.position(G.id())];
  qg.Q.invs.resize(m);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      if (qg.Q.table[(size_t)i * m + j] == qg.Q.ident) {
        qg.Q.invs[i] = j;
        break;
      }
  return qg;
}

MatType type_of_matrix(const GroupSpec& spec, const RingSpec& R, const Mat2& A) {
  RingSpec R1 = R.at_level(1);
  Mat2 a = mproject(R, A, 1);
  if (a.b == R1.zero() && a.c == R1.zero() && a.a == a.d) return MatType::NREG;
  Scalar tr = mtr(R1, a), det = mdet(R1, a);
  if (spec.kind == Kind::GL) {
    Scalar disc = R1.sub(R1.mul(tr, tr), R1.mul(R1.of(4), det));
    if (disc == R1.zero()) return MatType::SNS;
    return R1.is_square(disc) ? MatType::SS : MatType::CUS;
  }
  // GU: find the eigenvalues over the residue field F_{q^2}
  std::vector<Scalar> roots;
  for (Scalar r : R1.all()) {
    // r^2 - tr r + det = 0
    if (R1.add(R1.sub(R1.mul(r, r), R1.mul(tr, r)), det) == R1.zero())
      roots.push_back(r);
  }
  if (roots.size() == 1) return MatType::SNS;
  check(roots.size() == 2, "type: eigenvalues escaped the quadratic extension");
  bool anti0 = R1.trace_q(roots[0]) == R1.zero();
  bool anti1 = R1.trace_q(roots[1]) == R1.zero();
  return (anti0 && anti1) ? MatType::CUS : MatType::SS;
}

bool is_regular_matrix(const RingSpec& R, const Mat2& A) {
  RingSpec R1 = R.at_level(1);
  Mat2 a = mproject(R, A, 1);
  return !(a.b == R1.zero() && a.c == R1.zero() && a.a == a.d);
}

int32_t AdOrbits::orbit_of_mat(const Mat2& m) const {
  uint64_t e = menc(R, m);
  auto it = std::lower_bound(encs.begin(), encs.end(), e);
  check(it != encs.end() && *it == e, "ad_orbits: element not in Lie algebra");
  return orbit_of[(size_t)(it - encs.begin())];
}

AdOrbits ad_orbits(const GroupSpec& spec, int level) {
  AdOrbits ao;
  ao.spec = spec;
  ao.level = level;
  ao.R = spec.ring().at_level(level);

  std::vector<Mat2> lie = lie_algebra(spec, ao.R);
  ao.encs.reserve(lie.size());
  for (const Mat2& m : lie) ao.encs.push_back(menc(ao.R, m));
  std::sort(ao.encs.begin(), ao.encs.end());

  // the adjoint action of G(o_l) factors through G(o_level)
  Group Gi = Group::enumerate(spec.at_level(level));
  std::vector<Mat2> g, gi;
  for (uint32_t k : Gi.gens) {
    g.push_back(Gi.mat(k));
    gi.push_back(minv(ao.R, Gi.mat(k)));
  }

  auto pos_of = [&](uint64_t e) {
    auto it = std::lower_bound(ao.encs.begin(), ao.encs.end(), e);
    check(it != ao.encs.end() && *it == e, "ad_orbits: escaped Lie algebra");
    return (uint32_t)(it - ao.encs.begin());
  };

  ao.orbit_of.assign(ao.encs.size(), -1);
  for (uint32_t e = 0; e < ao.encs.size(); ++e) {
    if (ao.orbit_of[e] >= 0) continue;
    int32_t oid = (int32_t)ao.reps.size();
    ao.reps.push_back(e);
    std::vector<uint32_t> q{e};
    ao.orbit_of[e] = oid;
    for (size_t h = 0; h < q.size(); ++h) {
      Mat2 x = mdec(ao.R, ao.encs[q[h]]);
      for (size_t k = 0; k < g.size(); ++k) {
        uint32_t y = pos_of(menc(ao.R, mmul(ao.R, mmul(ao.R, g[k], x), gi[k])));
        if (ao.orbit_of[y] < 0) {
          ao.orbit_of[y] = oid;
          q.push_back(y);
        }
      }
    }
    ao.sizes.push_back((int64_t)q.size());
    ao.types.push_back(type_of_matrix(spec, ao.R, mdec(ao.R, ao.encs[e])));
  }
  return ao;
}

}  // namespace rloc
