#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rloc/charfn.hpp"

using namespace rloc;

namespace {

struct Ctx {
  Group G;
  MatrixGroupView view;
  ClassTable ct;
  Ctx(GroupSpec s)
      : G(Group::enumerate(s)), view(G), ct(ClassTable::build(view, G.gens)) {}
};

Ctx& gl3() {
  static Ctx c(GroupSpec{Kind::GL, 3, 1, 0});
  return c;
}

// brute-force induced value table on K: Ind_H^B phi evaluated on each
// element of K, by averaging over conjugators in K
std::vector<Cyclotomic> brute_induce(const Subgroup& K, const LinChar& phi) {
  const Group& G = *K.G;
  std::vector<Cyclotomic> out(K.idx.size(), Cyclotomic::zero());
  for (size_t p = 0; p < K.idx.size(); ++p) {
    Cyclotomic acc = Cyclotomic::zero();
    for (uint32_t x : K.idx) {
      uint32_t y = G.mul(G.mul(x, K.idx[p]), G.inv(x));
      if (phi.H->contains(y)) acc += phi.value(y);
    }
    out[p] = acc.divided((int64_t)phi.H->idx.size());
  }
  return out;
}

}  // namespace

TEST_CASE("unit duals of Z/9 and of its quadratic extension") {
  RingSpec R = RingSpec::base(3, 2);
  auto duals = unit_duals(R, 6);
  CHECK(duals.size() == 6);
  // all distinct and multiplicative
  auto us = R.units();
  for (size_t i = 0; i < duals.size(); ++i) {
    for (size_t j = i + 1; j < duals.size(); ++j) CHECK(!(duals[i] == duals[j]));
    for (Scalar a : us)
      for (Scalar b : us)
        CHECK((duals[i].value(a) * duals[i].value(b)) ==
              duals[i].value(R.mul(a, b)));
  }
  RingSpec Q = RingSpec::quad(3, 1, 2);
  CHECK(unit_duals(Q, 8).size() == 8);
}

TEST_CASE("extensions of one-dimensional characters along abelian steps") {
  Ctx& c = gl3();
  Subgroup Z = center(c.G);
  Subgroup T = torus(c.G);
  int64_t E = c.ct.exponent;

  auto all = extend_all(trivial_char(Subgroup::from_indices(c.G, {c.G.id()}), E), T);
  CHECK(all.size() == T.idx.size());  // full dual of abelian T

  // extensions of the trivial character of Z: exactly |T/Z| of them
  auto ext = extend_all(trivial_char(Z, E), T);
  CHECK(ext.size() == T.idx.size() / Z.idx.size());
  for (auto& phi : ext)
    for (uint32_t z : Z.idx) CHECK(phi.exp_at(z) == 0);

  // a nontrivial character of Z has |T/Z| extensions too
  for (auto& chi : extend_all(trivial_char(Subgroup::from_indices(c.G, {c.G.id()}), E), Z))
    CHECK(extend_all(chi, T).size() == T.idx.size() / Z.idx.size());
}

TEST_CASE("permutation character of the flag space") {
  Ctx& c = gl3();
  Subgroup B = borel(c.G);
  ClassFunction pc = induce_lin(c.ct, c.G, trivial_char(B, c.ct.exponent), "1_B^G");
  CHECK(pc.degree() == (int64_t)(c.G.elems.size() / B.idx.size()));
  // <Ind 1, Ind 1> equals the number of B double cosets
  DoubleCosets dc = double_cosets(B, B);
  CHECK(inner_product(pc, pc) == (int64_t)dc.reps.size());
  CHECK(inner_product(pc, pc) == 2);
}

TEST_CASE("Frobenius reciprocity and conjugation invariance") {
  Ctx& c = gl3();
  Subgroup T = torus(c.G);
  int64_t E = c.ct.exponent;
  auto chars = extend_all(trivial_char(Subgroup::from_indices(c.G, {c.G.id()}), E), T);
  for (auto& phi : chars) {
    ClassFunction ind = induce_lin(c.ct, c.G, phi, "ind");
    // <Ind phi, Ind phi>_G = <phi, Res Ind phi>_T
    std::vector<Cyclotomic> phiv, resv;
    for (size_t p = 0; p < T.idx.size(); ++p) phiv.push_back(phi.value(T.idx[p]));
    resv = restrict_to(ind, T);
    CHECK(inner_product(ind, ind) == ip_subgroup(T, phiv, resv));

    // inducing a conjugated character from a conjugated subgroup gives the
    // same class function
    uint32_t g = c.G.index_of(c.G.mat(7));  // arbitrary fixed element
    Subgroup Tg = T.conjugated(g);
    LinChar phig = lin_conjugate(phi, g, Tg);
    verify_linchar(phig);
    CHECK(induce_lin(c.ct, c.G, phig, "indg") == ind);
  }
}

TEST_CASE("induction in stages through the upper triangular subgroup") {
  Ctx& c = gl3();
  Subgroup B = borel(c.G);
  Subgroup T = torus(c.G);
  int64_t E = c.ct.exponent;
  auto chars = extend_all(trivial_char(Subgroup::from_indices(c.G, {c.G.id()}), E), T);
  for (auto& phi : chars) {
    std::vector<Cyclotomic> mid = brute_induce(B, phi);  // Ind_T^B phi on B
    ClassFunction two = induce_table(c.ct, c.G, B, mid, "two-step");
    CHECK(two == induce_lin(c.ct, c.G, phi, "one-step"));
  }
}

TEST_CASE("twisting by a determinant character commutes with induction") {
  Ctx& c = gl3();
  Subgroup B = borel(c.G);
  int64_t E = c.ct.exponent;
  auto duals = unit_duals(c.G.R, E);
  auto bchars = extend_all(trivial_char(unipotent(c.G), E), B);
  CHECK(bchars.size() == 4);  // B/U is the torus, (q-1)^2 characters
  const UnitChar& chi = duals[1];
  for (auto& phi : bchars) {
    // phi . (chi o det) as a character of B
    LinChar tw = phi;
    for (size_t p = 0; p < B.idx.size(); ++p) {
      Scalar d = mdet(c.G.R, c.G.mat(B.idx[p]));
      tw.expo[p] = (tw.expo[p] + chi.exp_of(d) * (E / chi.emod)) % E;
    }
    verify_linchar(tw);
    ClassFunction lhs = induce_lin(c.ct, c.G, tw, "ind-tw");
    ClassFunction rhs = cf_twist(induce_lin(c.ct, c.G, phi, "ind"),
                                 UnitChar{c.G.R, E, [&] {
                                   std::vector<int64_t> ex;
                                   for (Scalar u : c.G.R.units())
                                     ex.push_back(chi.exp_of(u) * (E / chi.emod));
                                   return ex;
                                 }()});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("residue views reproduce exact triple multiplicities") {
  Ctx& c = gl3();
  Subgroup B = borel(c.G);
  ClassFunction pc = induce_lin(c.ct, c.G, trivial_char(B, c.ct.exponent), "pc");
  ModRView mv = ModRView::make(c.ct.exponent, 1u << 20);
  CHECK((mv.r - 1) % (uint64_t)c.ct.exponent == 0);

  std::vector<uint64_t> w;
  for (int64_t s : c.ct.sizes) w.push_back((uint64_t)s % mv.r);
  auto av = cf_modr(pc, mv);
  ClassFunction pcd = cf_dual(pc);
  auto cv = cf_modr(pcd, mv);
  int64_t exact = inner_product(cf_tensor(pc, pc), pc);
  CHECK(triple_multiplicity(c.ct, mv, av, av, cv, w) == exact);
}
