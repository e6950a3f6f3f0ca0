#pragma once

// Class functions with exact cyclotomic values, one-dimensional subgroup
// characters (stored as exponents of a fixed root of unity), extension of
// 1-dim characters along abelian quotients, induction by the class-sum
// formula, and exact inner products.

#include <string>
#include <vector>

#include "rloc/classes.hpp"
#include "rloc/cyclo.hpp"

namespace rloc {

// --- 1-dimensional subgroup characters -------------------------------------

struct LinChar {
  const Subgroup* H = nullptr;
  int64_t emod = 1;            // values are zeta_emod^expo
  std::vector<int64_t> expo;   // per position in H->idx

  int64_t exp_at(uint32_t gidx) const {
    int32_t p = H->position(gidx);
    check(p >= 0, "linchar: element outside domain");
    return expo[(size_t)p];
  }
  Cyclotomic value(uint32_t gidx) const {
    return Cyclotomic::root(emod, exp_at(gidx));
  }
  bool operator==(const LinChar& o) const {
    return H->idx == o.H->idx && emod == o.emod && expo == o.expo;
  }
};

LinChar trivial_char(const Subgroup& H, int64_t emod);
LinChar lin_mul(const LinChar& a, const LinChar& b);
LinChar lin_inv(const LinChar& a);
// phi^g on g^-1 H g, phi^g(x) = phi(g x g^-1); Hg must equal H.conjugated(g)
LinChar lin_conjugate(const LinChar& a, uint32_t g, const Subgroup& Hg);
LinChar lin_restrict(const LinChar& a, const Subgroup& K);
// hard check that the exponent table defines a homomorphism
void verify_linchar(const LinChar& c);

// all 1-dim characters of Hbig extending `base`; requires Hbig/base.H abelian
std::vector<LinChar> extend_all(const LinChar& base, const Subgroup& Hbig);

// --- duals of abelian unit groups ------------------------------------------

struct UnitChar {
  RingSpec R;
  int64_t emod = 1;
  std::vector<int64_t> expo;  // per position in R.units() order

  int64_t exp_of(Scalar u) const;
  Cyclotomic value(Scalar u) const {
    return Cyclotomic::root(emod, exp_of(u));
  }
  bool operator==(const UnitChar& o) const { return expo == o.expo; }
};

// the full dual group of R^x, with values written as emod-th roots of unity
std::vector<UnitChar> unit_duals(const RingSpec& R, int64_t emod);

// --- class functions --------------------------------------------------------

struct ClassFunction {
  const ClassTable* ct = nullptr;
  const Group* G = nullptr;
  std::vector<Cyclotomic> v;  // per class
  std::string label;

  const Cyclotomic& at_class(int32_t c) const { return v[(size_t)c]; }
  const Cyclotomic& at_elem(uint32_t gidx) const {
    return v[(size_t)ct->class_of[gidx]];
  }
  int64_t degree() const;
  bool operator==(const ClassFunction& o) const { return v == o.v; }
};

ClassFunction cf_make(const ClassTable& ct, const Group& G,
                      std::vector<Cyclotomic> vals, std::string label);
ClassFunction cf_tensor(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_dual(const ClassFunction& a);
ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_scale(const ClassFunction& a, int64_t n);
// multiply by the linear character chi(det g) given as unit character
ClassFunction cf_twist(const ClassFunction& a, const UnitChar& chi);

// exact inner product; must come out a rational integer (hard error if not)
int64_t inner_product(const ClassFunction& a, const ClassFunction& b);

// inner product of two value tables on a subgroup
int64_t ip_subgroup(const Subgroup& H, const std::vector<Cyclotomic>& a,
                    const std::vector<Cyclotomic>& b);

// induction of a 1-dim character / a value table from H to G
ClassFunction induce_lin(const ClassTable& ct, const Group& G,
                         const LinChar& phi, std::string label = "");
ClassFunction induce_table(const ClassTable& ct, const Group& G,
                           const Subgroup& H,
                           const std::vector<Cyclotomic>& vals,
                           std::string label = "");

// restriction of a class function to a subgroup (per H position)
std::vector<Cyclotomic> restrict_to(const ClassFunction& a, const Subgroup& H);

// --- fast residue evaluation -------------------------------------------------

struct ModRView {
  uint64_t r = 0;      // prime, r = 1 mod e
  uint64_t omega = 0;  // fixed element of order e in F_r
  int64_t e = 1;
  static ModRView make(int64_t e, uint64_t min_r);
  uint64_t inv(uint64_t a) const;
};

std::vector<uint64_t> cf_modr(const ClassFunction& a, const ModRView& mv);
// multiplicity <a*b, c> for genuine characters a, b, c via residues;
// the result is certified against the bound max_mult < r
int64_t triple_multiplicity(const ClassTable& ct, const ModRView& mv,
                            const std::vector<uint64_t>& a,
                            const std::vector<uint64_t>& b,
                            const std::vector<uint64_t>& c_conj,
                            const std::vector<uint64_t>& weights);

}  // namespace rloc
