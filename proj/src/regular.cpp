#include "rloc/regular.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rloc {

int64_t psi_exponent(const RingSpec& R, int64_t emod, int i, Scalar x) {
  check(emod % R.pl == 0, "psi: additive order does not divide the modulus");
  int64_t pi = 1;
  for (int t = 0; t < i; ++t) pi *= R.p;
  int64_t hat = (x.a + x.b) % R.pl;  // b = 0 on the base ring
  int64_t e = (hat * pi) % R.pl;
  return e * (emod / R.pl);
}

Mat2 lift_mat(const RingSpec& to, const Mat2& A) {
  auto lift = [&](Scalar s) { return to.make(s.a, s.b); };
  return Mat2{lift(A.a), lift(A.b), lift(A.c), lift(A.d)};
}

LinChar psi_char(const Group& G, const Subgroup& K, int i, const Mat2& Atilde,
                 int64_t emod) {
  const RingSpec& R = G.R;
  int64_t pi = 1;
  for (int t = 0; t < i; ++t) pi *= R.p;
  LinChar c;
  c.H = &K;
  c.emod = emod;
  c.expo.resize(K.idx.size());
  for (size_t p = 0; p < K.idx.size(); ++p) {
    Mat2 g = G.mat(K.idx[p]);
    Mat2 D = msub(R, g, mident(R));
    auto div = [&](Scalar s) {
      check(s.a % pi == 0 && s.b % pi == 0, "psi: element outside the kernel");
      return Scalar{s.a / pi, s.b / pi};
    };
    Mat2 B{div(D.a), div(D.b), div(D.c), div(D.d)};
    c.expo[p] = psi_exponent(R, emod, i, mtr(R, mmul(R, Atilde, B)));
  }
  verify_linchar(c);
  return c;
}

Cyclotomic StabFamily::value(size_t row, uint32_t g) const {
  int32_t p = S.position(g);
  check(p >= 0, "family: element outside the stabilizer");
  return rows[row][(size_t)ctQ.class_of[Q.coset_of[(size_t)p]]];
}

std::unique_ptr<StabFamily> stab_family(const Group& G, int64_t emod,
                                        const Mat2& Abar) {
  int l = G.spec.ell;
  check(l >= 2, "family: needs level at least two");
  int l1 = (l + 1) / 2, l2 = l / 2;
  auto fam = std::make_unique<StabFamily>();
  fam->Atilde = lift_mat(G.R, Abar);
  fam->type = type_of_matrix(G.spec, G.R, fam->Atilde);
  check(fam->type != MatType::NREG, "family: representative is not regular");
  fam->K = congruence_kernel(G, l1);
  fam->psi = psi_char(G, fam->K, l1, fam->Atilde, emod);
  fam->psi.H = &fam->K;
  fam->S = Subgroup::product(centralizer_of(G, fam->Atilde),
                             congruence_kernel(G, l2));
  std::vector<uint32_t> kerv;
  for (size_t p = 0; p < fam->K.idx.size(); ++p)
    if (fam->psi.expo[p] == 0) kerv.push_back(fam->K.idx[p]);
  fam->kerpsi = Subgroup::from_indices(G, std::move(kerv));
  fam->Q = QuotientGroup::build(fam->S, fam->kerpsi);
  std::vector<uint32_t> gensQ;
  for (uint32_t g : fam->S.gens)
    gensQ.push_back(fam->Q.coset_of[(size_t)fam->S.position(g)]);
  fam->ctQ = ClassTable::build(fam->Q.Q, gensQ);
  CharTable tab = character_table(fam->ctQ);

  // keep the rows lying above psi_A
  int64_t nk = (int64_t)fam->K.idx.size();
  for (auto& row : tab.rows) {
    Cyclotomic acc = Cyclotomic::zero();
    for (size_t p = 0; p < fam->K.idx.size(); ++p) {
      uint32_t cq = fam->Q.coset_of[(size_t)fam->S.position(fam->K.idx[p])];
      acc += row[(size_t)fam->ctQ.class_of[cq]] *
             Cyclotomic::root(emod, (emod - fam->psi.expo[p]) % emod);
    }
    int64_t m = 0;
    check(acc.divided(nk).as_integer(&m), "family: non-integral multiplicity");
    if (m > 0) fam->rows.push_back(std::move(row));
  }
  check(!fam->rows.empty(), "family: nothing above the additive character");
  return fam;
}

std::vector<ClassFunction> induce_family(const ClassTable& ct, const Group& G,
                                         const StabFamily& fam) {
  int32_t kG = ct.num_classes();
  // incidence counts between classes of G and classes of the quotient
  std::vector<std::map<int32_t, int64_t>> inc((size_t)kG);
  for (size_t p = 0; p < fam.S.idx.size(); ++p) {
    int32_t cg = ct.class_of[fam.S.idx[p]];
    int32_t cq = fam.ctQ.class_of[fam.Q.coset_of[p]];
    inc[(size_t)cg][cq]++;
  }
  int64_t n = ct.order(), h = (int64_t)fam.S.idx.size();
  std::vector<ClassFunction> out;
  for (size_t r = 0; r < fam.rows.size(); ++r) {
    std::vector<Cyclotomic> vals((size_t)kG);
    for (int32_t c = 0; c < kG; ++c) {
      Cyclotomic acc = Cyclotomic::zero();
      for (auto& [cq, cnt] : inc[(size_t)c])
        acc += fam.rows[r][(size_t)cq].scaled(cnt);
      vals[(size_t)c] = acc.scaled(n / ct.sizes[(size_t)c]).divided(h);
    }
    out.push_back(cf_make(ct, G, std::move(vals),
                          "fam" + std::to_string(r)));
  }
  return out;
}

namespace {

// residue fingerprints used for fast distinctness and norm checks
struct Fingerprints {
  ModRView mv;
  std::vector<size_t> invc;
  std::vector<uint64_t> w;
  Fingerprints(const ClassTable& ct, uint64_t min_r) {
    mv = ModRView::make(ct.exponent, min_r);
    while ((uint64_t)ct.order() % mv.r == 0)
      mv = ModRView::make(ct.exponent, mv.r + 1);
    invc.resize((size_t)ct.num_classes());
    w.resize(invc.size());
    for (size_t j = 0; j < invc.size(); ++j) {
      invc[j] = (size_t)ct.inverse_class((int32_t)j);
      w[j] = (uint64_t)(ct.sizes[j] % (int64_t)mv.r);
    }
  }
  std::vector<uint64_t> row(const ClassFunction& a) const { return cf_modr(a, mv); }
  // <a,a> mod r
  uint64_t norm(const ClassTable& ct, const std::vector<uint64_t>& v) const {
    uint64_t s = 0;
    for (size_t j = 0; j < v.size(); ++j)
      s = (s + (__uint128_t)((__uint128_t)v[j] * v[invc[j]] % mv.r) * w[j]) % mv.r;
    return (uint64_t)((__uint128_t)s * mv.inv((uint64_t)(ct.order() % (int64_t)mv.r)) % mv.r);
  }
};

}  // namespace

RegularSet regular_characters(const Group& G, const ClassTable& ct) {
  int l = G.spec.ell;
  RegularSet out{ad_orbits(G.spec, std::max(1, l / 2)), {}};
  int64_t q = G.R.q();
  if (l == 1) {
    auto irr = irreducibles(ct, G);
    for (auto& c : irr) {
      int64_t d = c.degree();
      if (d == 1) continue;
      MatType t = d == q + 1   ? MatType::SS
                  : d == q     ? MatType::SNS
                  : d == q - 1 ? MatType::CUS
                               : MatType::NREG;
      check(t != MatType::NREG, "regular: unexpected level-one degree");
      out.chars.push_back(RegularChar{std::move(c), t, -1});
    }
    return out;
  }

  Fingerprints fp1(ct, 1u << 20), fp2(ct, fp1.mv.r + 1);
  std::set<std::vector<uint64_t>> seen;
  for (int32_t o = 0; o < (int32_t)out.orbits.reps.size(); ++o) {
    if (out.orbits.types[(size_t)o] == MatType::NREG) continue;
    auto fam = stab_family(G, ct.exponent, out.orbits.rep_mat(o));
    auto induced = induce_family(ct, G, *fam);
    for (auto& c : induced) {
      if (l == 2) {
        check(inner_product(c, c) == 1, "regular: induced not irreducible");
      } else {
        auto v1 = fp1.row(c);
        check(fp1.norm(ct, v1) == 1, "regular: induced norm residue");
        check(fp2.norm(ct, fp2.row(c)) == 1, "regular: induced norm residue");
        check(seen.insert(std::move(v1)).second, "regular: duplicate character");
      }
      out.chars.push_back(RegularChar{std::move(c), fam->type, o});
    }
  }
  if (l == 2) {
    for (size_t a = 0; a < out.chars.size(); ++a)
      for (size_t b = a + 1; b < out.chars.size(); ++b)
        check(!(out.chars[a].cf == out.chars[b].cf), "regular: duplicate character");
  }
  return out;
}

std::vector<ClassFunction> gu2_closed_form(const Group& G, const ClassTable& ct) {
  check(G.spec.kind == Kind::GU && G.spec.ell == 1, "closed form: level-one unitary only");
  const RingSpec& R = G.R;
  int64_t q = R.q(), E = ct.exponent;
  int32_t k = ct.num_classes();

  // match each class to one of the four column shapes by eigenvalues
  enum Col { CENTRAL, UNIP, DIAG, SYM };
  struct ClassParam {
    Col col;
    Scalar x, y;  // eigenvalue parameters (y unused for CENTRAL/UNIP)
  };
  std::vector<ClassParam> pr((size_t)k);
  for (int32_t c = 0; c < k; ++c) {
    Mat2 m = G.mat(ct.reps[(size_t)c]);
    std::vector<Scalar> roots;
    for (Scalar s : R.all()) {
      Scalar v = R.add(R.mul(s, s), R.add(R.neg(R.mul(mtr(R, m), s)), mdet(R, m)));
      if (v == R.zero()) roots.push_back(s);
    }
    bool scalar = m.b == R.zero() && m.c == R.zero() && m.a == m.d;
    if (scalar) {
      pr[(size_t)c] = {CENTRAL, m.a, R.zero()};
    } else if (roots.size() == 1) {
      pr[(size_t)c] = {UNIP, roots[0], R.zero()};
    } else {
      check(roots.size() == 2, "closed form: eigenvalues not split");
      bool n1 = R.norm(roots[0]) == R.one() && R.norm(roots[1]) == R.one();
      pr[(size_t)c] = {n1 ? SYM : DIAG, roots[0], roots[1]};
      if (!n1)
        check(R.mul(roots[0], R.conj(roots[1])) == R.one(),
              "closed form: split eigenvalues are not an involutive pair");
    }
  }

  auto duals = unit_duals(R, E);
  std::vector<ClassFunction> rows;
  auto push = [&](std::vector<Cyclotomic> v, const char* s) {
    ClassFunction cf = cf_make(ct, G, std::move(v), s);
    if (inner_product(cf, cf) != 1) return;
    for (auto& r : rows)
      if (r == cf) return;
    rows.push_back(std::move(cf));
  };

  for (auto& a : duals) {
    std::vector<Cyclotomic> v1((size_t)k), vq((size_t)k);
    for (int32_t c = 0; c < k; ++c) {
      auto& P = pr[(size_t)c];
      switch (P.col) {
        case CENTRAL:
          v1[(size_t)c] = a.value(R.mul(P.x, P.x));
          vq[(size_t)c] = a.value(R.mul(P.x, P.x)).scaled(q);
          break;
        case UNIP:
          v1[(size_t)c] = a.value(R.mul(P.x, P.x));
          vq[(size_t)c] = Cyclotomic::zero();
          break;
        case DIAG:
          v1[(size_t)c] = vq[(size_t)c] = a.value(R.mul(P.x, P.y));
          break;
        case SYM:
          v1[(size_t)c] = a.value(R.mul(P.x, P.y));
          vq[(size_t)c] = a.value(R.mul(P.x, P.y)).scaled(-1);
          break;
      }
    }
    push(std::move(v1), "lin");
    push(std::move(vq), "st");
  }
  for (auto& a : duals)
    for (auto& b : duals) {
      std::vector<Cyclotomic> vp((size_t)k), vm((size_t)k);
      for (int32_t c = 0; c < k; ++c) {
        auto& P = pr[(size_t)c];
        Cyclotomic ab = a.value(P.x) * b.value(P.x);
        switch (P.col) {
          case CENTRAL:
            vp[(size_t)c] = ab.scaled(q + 1);
            vm[(size_t)c] = ab.scaled(q - 1);
            break;
          case UNIP:
            vp[(size_t)c] = ab;
            vm[(size_t)c] = ab.scaled(-1);
            break;
          case DIAG:
            vp[(size_t)c] = a.value(P.x) * b.value(P.y) + a.value(P.y) * b.value(P.x);
            vm[(size_t)c] = Cyclotomic::zero();
            break;
          case SYM:
            vp[(size_t)c] = Cyclotomic::zero();
            // eigenvalues are m = x+y and n = x-y of the printed shape
            vm[(size_t)c] =
                (a.value(P.y) * b.value(P.x) + a.value(P.x) * b.value(P.y))
                    .scaled(-1);
            break;
        }
      }
      push(std::move(vp), "ps");
      push(std::move(vm), "ds");
    }
  return rows;
}

}  // namespace rloc
