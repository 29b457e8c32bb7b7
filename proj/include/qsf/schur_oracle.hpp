#pragma once

// Brute-force cross-checks for the Schur composition rule: enumeration of
// canonical classes over a common superspace and a group-average oracle that
// goes through the based matrix-unit algebra instead of the closed formula.

#include "qsf/based_algebra.hpp"
#include "qsf/schur.hpp"
#include "qsf/sympow.hpp"

#include <set>
#include <vector>

namespace qsf {

/// All canonical single-term classes over a superspace of dimension dim with
/// the given basis parities: every n-tuple of elementary maps, canonicalized,
/// duplicates and zero classes dropped.
inline std::vector<ElemTuple> schur_all_classes(unsigned dim, const std::vector<unsigned>& par,
                                                const std::vector<unsigned>& m, unsigned n) {
  const unsigned M = multi_modulus(m);
  const unsigned D = dim * M;
  PermGroup Sn = symmetric_group(n);
  std::set<ElemTuple> seen;
  std::vector<unsigned> odo(2 * n, 0);
  while (true) {
    ElemTuple tup(n);
    for (unsigned i = 0; i < n; ++i) {
      unsigned lo = odo[2 * i], hi = odo[2 * i + 1];
      tup[i] = ElemTrans{lo / M, mi_decode(lo % M, m), hi / M, mi_decode(hi % M, m),
                         par[lo / M], par[hi / M]};
    }
    auto [rep, sg] = schur_canonicalize(tup, m, Sn);
    if (sg != 0) seen.insert(rep);
    size_t j = 0;
    while (j < 2 * n && ++odo[j] == D) odo[j++] = 0;
    if (j == 2 * n) break;
  }
  return {seen.begin(), seen.end()};
}

/// Brute-force composition when V = W = Z: encode elementary maps as matrix
/// units of size dim*M, enumerate the full group Z_M^n x| S_n acting on the
/// second factor (per-slot shifts plus place permutations with the graded
/// permutation sign), compose slotwise through the based matrix-unit algebra,
/// average, and canonicalize.
inline SchurClass schur_compose_oracle(const SchurClass& F, const SchurClass& G,
                                       const std::vector<unsigned>& m, unsigned dim,
                                       const std::vector<unsigned>& par) {
  const unsigned M = multi_modulus(m);
  const unsigned D = dim * M;
  const size_t n = F.terms.begin()->first.size();
  BasedAlgebra B = matrix_unit_algebra(D);
  B.parity.resize((size_t)D * D, 0);
  for (unsigned i = 0; i < D; ++i)
    for (unsigned j = 0; j < D; ++j) B.parity[i * D + j] = (par[i / M] + par[j / M]) & 1u;
  PermGroup Sn = symmetric_group((unsigned)n);

  auto encode = [&](const ElemTrans& e) {
    unsigned row = e.t * M + mi_encode(e.u, m);
    unsigned col = e.r * M + mi_encode(e.s, m);
    return row * D + col;
  };
  auto decode = [&](unsigned lab) {
    unsigned row = lab / D, col = lab % D;
    return ElemTrans{col / M, mi_decode(col % M, m), row / M, mi_decode(row % M, m),
                     par[col / M], par[row / M]};
  };
  auto shift_label = [&](unsigned lab, unsigned c) {
    ElemTrans e = decode(lab);
    MultiIdx cv = mi_decode(c, m);
    e.s = mi_add(e.s, cv, m);
    e.u = mi_add(e.u, cv, m);
    return encode(e);
  };

  Int divisor = factorial((unsigned)n);
  for (size_t i = 0; i < n; ++i) divisor *= M;

  detail::RawElement acc;
  for (const auto& [ft, cf] : F.terms) {
    for (const auto& [gt, cg] : G.terms) {
      LabelTuple flab(n), glab(n);
      std::vector<unsigned> fpar(n), gpar(n);
      for (size_t i = 0; i < n; ++i) {
        flab[i] = encode(ft[i]);
        glab[i] = encode(gt[i]);
        fpar[i] = ft[i].parity();
        gpar[i] = gt[i].parity();
      }
      std::vector<unsigned> codo(n, 0);
      while (true) {
        LabelTuple gshift(n);
        for (size_t i = 0; i < n; ++i) gshift[i] = shift_label(glab[i], codo[i]);
        for (const Perm& sigma : Sn.elements) {
          int psign = koszul_perm_sign(gpar, sigma);
          LabelTuple gmoved = sigma.act(gshift);
          // compose "F then moved G" slotwise: the matrix-unit product takes
          // the later map on the left, the reordering sign keeps the F block
          // on the left as written.
          int isign =
              koszul_interleave_sign(fpar, sigma.act(gpar), Perm::identity((unsigned)n));
          LabelTuple comp(n);
          bool ok = true;
          for (size_t i = 0; i < n && ok; ++i) {
            const auto& prod = B.mul(gmoved[i], flab[i]);
            if (prod.empty()) ok = false;
            else comp[i] = prod.front().first;
          }
          if (!ok) continue;
          HPoly c = cf * cg;
          if (psign * isign < 0) c = -c;
          detail::raw_add(acc, comp, c.div_nat(divisor));
        }
        size_t j = 0;
        while (j < n && ++codo[j] == M) codo[j++] = 0;
        if (j == n) break;
      }
    }
  }
  SchurClass out;
  for (const auto& [lab, c] : acc) {
    ElemTuple tup(n);
    for (size_t i = 0; i < n; ++i) tup[i] = decode(lab[i]);
    auto [rep, sg] = schur_canonicalize(tup, m, Sn);
    if (sg == 0) continue;
    out.add(rep, sg < 0 ? -c : c);
  }
  return out;
}

}  // namespace qsf
