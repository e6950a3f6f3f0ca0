#include "rloc/dixon.hpp"

#include <algorithm>
#include <cmath>

namespace rloc {

namespace {

// dense linear algebra mod a word-sized prime
struct Fp {
  uint64_t r;
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % r; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + r - b) % r; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return (uint64_t)((__uint128_t)a * b % r);
  }
  uint64_t pow(uint64_t b, uint64_t e) const {
    uint64_t acc = 1;
    b %= r;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }
  uint64_t inv(uint64_t a) const { return pow(a, r - 2); }
};

using Vec = std::vector<uint64_t>;
using Dense = std::vector<Vec>;

// reduced row echelon form in place; returns pivot columns
std::vector<size_t> rref(const Fp& F, Dense& M) {
  std::vector<size_t> pivots;
  size_t rows = M.size();
  if (rows == 0) return pivots;
  size_t cols = M[0].size(), pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t sel = pr;
    while (sel < rows && M[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[pr], M[sel]);
    uint64_t iv = F.inv(M[pr][c]);
    for (size_t j = c; j < cols; ++j) M[pr][j] = F.mul(M[pr][j], iv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || M[i][c] == 0) continue;
      uint64_t f = M[i][c];
      for (size_t j = c; j < cols; ++j)
        M[i][j] = F.sub(M[i][j], F.mul(f, M[pr][j]));
    }
    pivots.push_back(c);
    ++pr;
  }
  M.resize(pivots.size());
  return pivots;
}

// coefficients of v in an RREF basis; hard error if v is outside the span
Vec express(const Fp& F, const Dense& B, const std::vector<size_t>& pivots,
            const Vec& v) {
  Vec c(B.size());
  Vec resid = v;
  for (size_t m = 0; m < B.size(); ++m) {
    c[m] = resid[pivots[m]];
    if (c[m] == 0) continue;
    for (size_t j = 0; j < resid.size(); ++j)
      resid[j] = F.sub(resid[j], F.mul(c[m], B[m][j]));
  }
  for (uint64_t x : resid) check(x == 0, "eigen: vector escapes invariant block");
  return c;
}

// characteristic polynomial of a square matrix (Hessenberg reduction plus
// the leading-minor recurrence); returns coefficients, low degree first
Vec char_poly(const Fp& F, Dense H) {
  size_t d = H.size();
  for (size_t c = 0; c + 2 < d; ++c) {
    size_t sel = c + 1;
    while (sel < d && H[sel][c] == 0) ++sel;
    if (sel == d) continue;
    if (sel != c + 1) {
      std::swap(H[sel], H[c + 1]);
      for (size_t i = 0; i < d; ++i) std::swap(H[i][sel], H[i][c + 1]);
    }
    uint64_t iv = F.inv(H[c + 1][c]);
    for (size_t i = c + 2; i < d; ++i) {
      if (H[i][c] == 0) continue;
      uint64_t f = F.mul(H[i][c], iv);
      for (size_t j = 0; j < d; ++j) H[i][j] = F.sub(H[i][j], F.mul(f, H[c + 1][j]));
      for (size_t j = 0; j < d; ++j) H[j][c + 1] = F.add(H[j][c + 1], F.mul(f, H[j][i]));
    }
  }
  std::vector<Vec> p(d + 1);
  p[0] = {1};
  for (size_t m = 1; m <= d; ++m) {
    // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod subdiag) p_{i-1}
    Vec pm(m + 1, 0);
    const Vec& prev = p[m - 1];
    for (size_t j = 0; j < prev.size(); ++j) {
      pm[j + 1] = F.add(pm[j + 1], prev[j]);
      pm[j] = F.sub(pm[j], F.mul(H[m - 1][m - 1], prev[j]));
    }
    uint64_t prod = 1;
    for (size_t i = m - 1; i >= 1; --i) {
      prod = F.mul(prod, H[i][i - 1]);
      uint64_t coef = F.mul(H[i - 1][m - 1], prod);
      if (coef == 0) continue;
      for (size_t j = 0; j < p[i - 1].size(); ++j)
        pm[j] = F.sub(pm[j], F.mul(coef, p[i - 1][j]));
    }
    p[m] = std::move(pm);
  }
  return p[d];
}

uint64_t poly_eval(const Fp& F, const Vec& p, uint64_t x) {
  uint64_t acc = 0;
  for (size_t j = p.size(); j-- > 0;) acc = F.add(F.mul(acc, x), p[j]);
  return acc;
}

// basis of the nullspace of M
Dense nullspace(const Fp& F, Dense M) {
  size_t d = M.size();
  auto pivots = rref(F, M);
  std::vector<bool> is_piv(d, false);
  for (size_t c : pivots) is_piv[c] = true;
  Dense out;
  for (size_t fc = 0; fc < d; ++fc) {
    if (is_piv[fc]) continue;
    Vec v(d, 0);
    v[fc] = 1;
    for (size_t m = 0; m < pivots.size(); ++m)
      v[pivots[m]] = F.sub(0, M[m][fc]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

int64_t CharTable::degree(size_t r) const {
  int64_t d = 0;
  check(rows[r][(size_t)ct->class_of[ct->G->id()]].as_integer(&d),
        "chartable: non-integral degree");
  return d;
}

CharTable character_table(const ClassTable& ct) {
  const IGroup& G = *ct.G;
  size_t k = (size_t)ct.num_classes();
  int64_t n = ct.order();
  int64_t E = ct.exponent;
  size_t idc = (size_t)ct.class_of[G.id()];

  uint64_t min_r = 2 * (uint64_t)std::ceil(std::sqrt((double)n)) + 1;
  ModRView mv = ModRView::make(E, min_r);
  while ((uint64_t)n % mv.r == 0) mv = ModRView::make(E, mv.r + 1);
  Fp F{mv.r};

  // class matrix of class i: M[j][c] = #{x in C_i : x^{-1} rep_c in C_j}
  auto class_matrix = [&](size_t i) {
    Dense M(k, Vec(k, 0));
    for (uint32_t x : ct.members[i]) {
      uint32_t xi = G.inv(x);
      for (size_t c = 0; c < k; ++c) {
        size_t j = (size_t)ct.class_of[G.mul(xi, ct.reps[c])];
        M[j][c] = F.add(M[j][c], 1);
      }
    }
    return M;
  };

  // split the space of class functions into common eigenlines
  struct Block {
    Dense basis;  // RREF rows, each of length k
    std::vector<size_t> pivots;
  };
  std::vector<Block> blocks;
  {
    Block whole;
    whole.basis.assign(k, Vec(k, 0));
    for (size_t i = 0; i < k; ++i) whole.basis[i][i] = 1;
    whole.pivots = rref(F, whole.basis);
    blocks.push_back(std::move(whole));
  }
  auto all_lines = [&] {
    for (auto& b : blocks)
      if (b.basis.size() > 1) return false;
    return true;
  };
  for (size_t i = 0; i < k && !all_lines(); ++i) {
    if (i == idc) continue;
    Dense M = class_matrix(i);
    std::vector<Block> next;
    for (auto& blk : blocks) {
      size_t d = blk.basis.size();
      if (d == 1) {
        next.push_back(std::move(blk));
        continue;
      }
      // restriction A of M to the block, in block coordinates
      Dense A(d, Vec(d, 0));
      for (size_t c = 0; c < d; ++c) {
        Vec mv2(k, 0);
        for (size_t row = 0; row < k; ++row) {
          uint64_t acc = 0;
          for (size_t col = 0; col < k; ++col)
            acc = F.add(acc, F.mul(M[row][col], blk.basis[c][col]));
          mv2[row] = acc;
        }
        Vec coords = express(F, blk.basis, blk.pivots, mv2);
        for (size_t row = 0; row < d; ++row) A[row][c] = coords[row];
      }
      Vec cp = char_poly(F, A);
      size_t split_total = 0;
      for (uint64_t lam = 0; lam < F.r; ++lam) {
        if (poly_eval(F, cp, lam) != 0) continue;
        Dense AL = A;
        for (size_t t = 0; t < d; ++t) AL[t][t] = F.sub(AL[t][t], lam);
        Dense ns = nullspace(F, AL);
        if (ns.empty()) continue;
        Block nb;
        for (auto& coords : ns) {
          Vec v(k, 0);
          for (size_t m = 0; m < d; ++m)
            for (size_t j = 0; j < k; ++j)
              v[j] = F.add(v[j], F.mul(coords[m], blk.basis[m][j]));
          nb.basis.push_back(std::move(v));
        }
        split_total += nb.basis.size();
        nb.pivots = rref(F, nb.basis);
        next.push_back(std::move(nb));
      }
      check(split_total == d, "eigen: block did not split semisimply");
    }
    blocks = std::move(next);
  }
  check(all_lines(), "eigen: class matrices failed to separate characters");
  check(blocks.size() == k, "eigen: wrong number of eigenlines");

  // per line: recover chi mod r, then lift exactly via power maps
  std::vector<uint64_t> csz(k);
  for (size_t j = 0; j < k; ++j) csz[j] = (uint64_t)(ct.sizes[j] % (int64_t)F.r);
  std::vector<size_t> invc(k);
  for (size_t j = 0; j < k; ++j) invc[j] = (size_t)ct.inverse_class((int32_t)j);

  CharTable tab;
  tab.ct = &ct;
  std::vector<std::vector<uint64_t>> residue_rows;
  for (auto& blk : blocks) {
    Vec w = blk.basis[0];
    check(w[idc] != 0, "eigen: eigenline vanishes at the identity");
    uint64_t sc = F.inv(w[idc]);
    for (auto& x : w) x = F.mul(x, sc);
    uint64_t s = 0;
    for (size_t j = 0; j < k; ++j)
      s = F.add(s, F.mul(F.mul(w[j], w[invc[j]]), F.inv(csz[j])));
    uint64_t d2 = F.mul((uint64_t)(n % (int64_t)F.r), F.inv(s));
    uint64_t deg = 0;
    for (uint64_t t = 1; 2 * t < F.r; ++t)
      if (F.mul(t, t) == d2) {
        deg = t;
        break;
      }
    check(deg != 0, "eigen: degree is not a small square root");
    std::vector<uint64_t> chi(k);
    for (size_t j = 0; j < k; ++j) chi[j] = F.mul(F.mul(deg, w[j]), F.inv(csz[j]));

    std::vector<Cyclotomic> row(k);
    for (size_t j = 0; j < k; ++j) {
      int64_t nj = ct.rep_order[j];
      check(E % nj == 0, "chartable: element order outside exponent");
      uint64_t wj = F.pow(mv.omega, (uint64_t)(E / nj));
      std::vector<uint64_t> vals((size_t)nj);
      for (int64_t t = 0; t < nj; ++t)
        vals[(size_t)t] = chi[(size_t)ct.power_class((int32_t)j, t)];
      uint64_t ninv = F.inv((uint64_t)nj % F.r);
      std::vector<std::pair<int64_t, int64_t>> raw;
      for (int64_t e = 0; e < nj; ++e) {
        uint64_t m = 0;
        for (int64_t t = 0; t < nj; ++t)
          m = F.add(m, F.mul(vals[(size_t)t],
                             F.pow(wj, (uint64_t)(((nj - e) * t) % nj))));
        m = F.mul(m, ninv);
        // multiplicities of roots of unity are small integers
        int64_t ml = (2 * m < F.r) ? (int64_t)m : (int64_t)m - (int64_t)F.r;
        if (ml != 0) raw.push_back({e * (E / nj), ml});
      }
      row[j] = Cyclotomic::from_raw(E, raw);
      check(row[j].lifted(E).eval_mod(F.r, mv.omega) == chi[j],
            "chartable: lift does not match residue");
    }
    tab.rows.push_back(std::move(row));
    residue_rows.push_back(std::move(chi));
  }

  // deterministic order
  {
    std::vector<size_t> perm(k);
    for (size_t i = 0; i < k; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
      if (residue_rows[a][idc] != residue_rows[b][idc])
        return residue_rows[a][idc] < residue_rows[b][idc];
      return residue_rows[a] < residue_rows[b];
    });
    std::vector<std::vector<Cyclotomic>> rows2;
    std::vector<std::vector<uint64_t>> res2;
    for (size_t i : perm) {
      rows2.push_back(std::move(tab.rows[i]));
      res2.push_back(std::move(residue_rows[i]));
    }
    tab.rows = std::move(rows2);
    residue_rows = std::move(res2);
  }

  // certification
  int64_t degsum = 0;
  for (size_t a = 0; a < k; ++a) {
    Cyclotomic s = Cyclotomic::zero();
    for (size_t j = 0; j < k; ++j)
      s += (tab.rows[a][j] * tab.rows[a][j].conj()).scaled(ct.sizes[j]);
    int64_t norm = 0;
    check(s.as_integer(&norm) && norm == n, "chartable: row norm is not |G|");
    int64_t d = tab.degree(a);
    check(d >= 1, "chartable: nonpositive degree");
    degsum += d * d;
  }
  check(degsum == n, "chartable: degree squares do not sum to |G|");
  if (n <= 5000) {
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a + 1; b < k; ++b) {
        Cyclotomic s = Cyclotomic::zero();
        for (size_t j = 0; j < k; ++j)
          s += (tab.rows[a][j] * tab.rows[b][invc[j]]).scaled(ct.sizes[j]);
        int64_t z = 1;
        check(s.as_integer(&z) && z == 0, "chartable: rows not orthogonal");
      }
  } else {
    // residue certification with two independent primes
    for (int round = 0; round < 2; ++round) {
      ModRView m2 = ModRView::make(E, F.r + 1 + (uint64_t)round * 1000);
      while ((uint64_t)n % m2.r == 0) m2 = ModRView::make(E, m2.r + 1);
      Fp F2{m2.r};
      std::vector<std::vector<uint64_t>> rr(k, std::vector<uint64_t>(k));
      for (size_t a = 0; a < k; ++a)
        for (size_t j = 0; j < k; ++j)
          rr[a][j] = tab.rows[a][j].lifted(E).eval_mod(m2.r, m2.omega);
      std::vector<uint64_t> cz(k);
      for (size_t j = 0; j < k; ++j) cz[j] = (uint64_t)(ct.sizes[j] % (int64_t)m2.r);
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) {
          uint64_t s = 0;
          for (size_t j = 0; j < k; ++j)
            s = F2.add(s, F2.mul(F2.mul(rr[a][j], rr[b][invc[j]]), cz[j]));
          check(s == 0, "chartable: rows not orthogonal (residue)");
        }
    }
  }
  return tab;
}

std::vector<ClassFunction> irreducibles(const ClassTable& ct, const Group& G) {
  CharTable tab = character_table(ct);
  std::vector<ClassFunction> out;
  for (size_t i = 0; i < tab.rows.size(); ++i)
    out.push_back(cf_make(ct, G, std::move(tab.rows[i]),
                          "irr" + std::to_string(i)));
  return out;
}

}  // namespace rloc
