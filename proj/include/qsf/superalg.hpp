#pragma once

// Exterior and Clifford algebras on generators th1..thm, Koszul signs by
// explicit transposition counting, and the closed product of symmetric odd
// functions.

#include "qsf/based_algebra.hpp"
#include "qsf/sympow.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace qsf {

/// Basis monomial theta_I of the exterior or Clifford algebra: bitset over
/// generators (bit i = generator i+1).
using ExtMono = uint32_t;

inline unsigned ext_parity(ExtMono I) { return std::popcount(I) & 1u; }

/// theta_I theta_J = c(I,J) theta_{I union J}, c = (-1)^{#{i in I, j in J, i > j}},
/// zero (sign 0) when the supports meet.
inline std::pair<int, ExtMono> ext_product(ExtMono I, ExtMono J) {
  if (I & J) return {0, 0};
  int sign = 1;
  for (unsigned j = 0; j < 32; ++j)
    if (J & (ExtMono(1) << j))
      if (std::popcount(I >> (j + 1)) & 1) sign = -sign;
  return {sign, I | J};
}

/// Clifford product with relations th_i th_j + th_j th_i = 2 delta_ij:
/// rewrite the concatenated generator word, swapping (sign -1) and
/// cancelling equal neighbours (th_i^2 = 1).
inline std::pair<int, ExtMono> clifford_product(ExtMono I, ExtMono J) {
  std::vector<unsigned> word;
  for (unsigned i = 0; i < 32; ++i)
    if (I & (ExtMono(1) << i)) word.push_back(i);
  for (unsigned i = 0; i < 32; ++i)
    if (J & (ExtMono(1) << i)) word.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) {
        word.erase(word.begin() + i, word.begin() + i + 2);
        changed = true;
        break;
      }
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  ExtMono out = 0;
  for (unsigned g : word) out |= ExtMono(1) << g;
  return {sign, out};
}

namespace detail {

inline BasedAlgebra blade_algebra(unsigned m, bool clifford) {
  BasedAlgebra A;
  A.dim = 1u << m;
  A.unit = 0;
  A.parity.resize(A.dim);
  for (unsigned I = 0; I < A.dim; ++I) A.parity[I] = ext_parity(I);
  A.table.resize((size_t)A.dim * A.dim);
  for (unsigned I = 0; I < A.dim; ++I)
    for (unsigned J = 0; J < A.dim; ++J) {
      auto [s, K] = clifford ? clifford_product(I, J) : ext_product(I, J);
      if (s != 0) A.set(I, J, {{K, HPoly(GaussRat(Rat(s)))}});
    }
  return A;
}

}  // namespace detail

/// Exterior algebra on m generators as a based superalgebra (labels are
/// support bitsets).
inline BasedAlgebra exterior_algebra(unsigned m) { return detail::blade_algebra(m, false); }

/// Clifford algebra C(m); same basis, th_i^2 = 1. Still Z_2-graded.
inline BasedAlgebra clifford_algebra(unsigned m) { return detail::blade_algebra(m, true); }

/// Closed product of symmetric odd functions:
/// class(I) class(J) = (1/n!) sum_sigma sgn(I,J,sigma) prod_k c(I_k, J_{sigma^{-1}(k)})
///                     class(I_k union J_{sigma^{-1}(k)}).
/// Results are SymElements over the exterior based algebra's labels.
inline SymElement odd_sym_product(const std::vector<ExtMono>& Itup,
                                  const std::vector<ExtMono>& Jtup, unsigned m) {
  const unsigned n = (unsigned)Itup.size();
  if (Jtup.size() != n) throw std::invalid_argument("odd_sym_product: length mismatch");
  BasedAlgebra ext = exterior_algebra(m);
  PermGroup Sn = symmetric_group(n);
  std::vector<unsigned> ip(n), jp(n);
  for (unsigned k = 0; k < n; ++k) {
    ip[k] = ext_parity(Itup[k]);
    jp[k] = ext_parity(Jtup[k]);
  }
  SymElement out;
  for (const Perm& sigma : Sn.elements) {
    int sign = koszul_interleave_sign(ip, jp, sigma);
    LabelTuple tup(n);
    bool zero = false;
    Perm sinv = sigma.inverse();
    for (unsigned k = 0; k < n; ++k) {
      auto [s, K] = ext_product(Itup[k], Jtup[(unsigned)sinv.images[k]]);
      if (s == 0) {
        zero = true;
        break;
      }
      sign *= s;
      tup[k] = K;
    }
    if (zero) continue;
    auto [rep, csign] = canonicalize(tup, Sn, ext);
    if (csign == 0) continue;
    HPoly c = HPoly(GaussRat(Rat(sign * csign))).div_nat(Int((long)Sn.order()));
    out.add(rep, c);
  }
  return out;
}

}  // namespace qsf
