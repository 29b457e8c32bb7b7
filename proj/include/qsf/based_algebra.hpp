#pragma once

// Finite-dimensional (super)algebras given by basis labels and structure
// constants. The generic input of the Polya product and of the brute-force
// symmetrization oracle.

#include "qsf/coeff.hpp"
#include "qsf/weyl.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qsf {

/// e_s e_t = sum_k c(k,s,t) e_k with HPoly-valued structure constants.
/// unit < 0 means the algebra has no basis unit (matrix units).
struct BasedAlgebra {
  unsigned dim = 0;
  int unit = -1;
  std::vector<unsigned> parity;  // 0/1 per label; empty = all even
  std::vector<std::vector<std::pair<unsigned, HPoly>>> table;  // [s*dim+t]

  const std::vector<std::pair<unsigned, HPoly>>& mul(unsigned s, unsigned t) const {
    return table[(size_t)s * dim + t];
  }

  unsigned label_parity(unsigned s) const { return parity.empty() ? 0 : parity[s]; }

  void set(unsigned s, unsigned t, std::vector<std::pair<unsigned, HPoly>> terms) {
    table[(size_t)s * dim + t] = std::move(terms);
  }
};

namespace detail {

inline bool nf_equal(const std::vector<std::pair<unsigned, HPoly>>& a,
                     const std::vector<std::pair<unsigned, HPoly>>& b, unsigned dim) {
  std::vector<HPoly> va(dim), vb(dim);
  for (const auto& [k, c] : a) va[k] = va[k] + c;
  for (const auto& [k, c] : b) vb[k] = vb[k] + c;
  for (unsigned k = 0; k < dim; ++k)
    if (!(va[k] == vb[k])) return false;
  return true;
}

}  // namespace detail

/// Checks unit laws (when a basis unit exists) and, for dim <= 12,
/// associativity of all triples. Throws on violation.
inline void check_algebra(const BasedAlgebra& A) {
  if (A.table.size() != (size_t)A.dim * A.dim)
    throw std::invalid_argument("check_algebra: table size mismatch");
  if (A.unit >= 0) {
    for (unsigned s = 0; s < A.dim; ++s) {
      std::vector<std::pair<unsigned, HPoly>> just_s = {{s, HPoly::one()}};
      if (!detail::nf_equal(A.mul((unsigned)A.unit, s), just_s, A.dim) ||
          !detail::nf_equal(A.mul(s, (unsigned)A.unit), just_s, A.dim))
        throw std::logic_error("check_algebra: unit law fails");
    }
  }
  if (A.dim > 12) return;
  auto apply_right = [&](const std::vector<std::pair<unsigned, HPoly>>& v, unsigned u) {
    std::vector<std::pair<unsigned, HPoly>> out;
    for (const auto& [k, c] : v)
      for (const auto& [k2, c2] : A.mul(k, u)) out.emplace_back(k2, c * c2);
    return out;
  };
  auto apply_left = [&](unsigned s, const std::vector<std::pair<unsigned, HPoly>>& v) {
    std::vector<std::pair<unsigned, HPoly>> out;
    for (const auto& [k, c] : v)
      for (const auto& [k2, c2] : A.mul(s, k)) out.emplace_back(k2, c * c2);
    return out;
  };
  for (unsigned s = 0; s < A.dim; ++s)
    for (unsigned t = 0; t < A.dim; ++t)
      for (unsigned u = 0; u < A.dim; ++u)
        if (!detail::nf_equal(apply_right(A.mul(s, t), u), apply_left(s, A.mul(t, u)), A.dim))
          throw std::logic_error("check_algebra: associativity fails");
}

/// C[x]/(x^d): labels 0..d-1 are x^s.
inline BasedAlgebra truncated_poly_algebra(unsigned d) {
  BasedAlgebra A;
  A.dim = d;
  A.unit = 0;
  A.table.resize((size_t)d * d);
  for (unsigned s = 0; s < d; ++s)
    for (unsigned t = 0; t < d; ++t)
      if (s + t < d) A.set(s, t, {{s + t, HPoly::one()}});
  return A;
}

/// The two-element Boolean algebra {0, 1} with product s|t; its n-th
/// symmetric power has classes indexed by subset cardinality.
inline BasedAlgebra boolean_algebra() {
  BasedAlgebra A;
  A.dim = 2;
  A.unit = 0;
  A.table.resize(4);
  for (unsigned s = 0; s < 2; ++s)
    for (unsigned t = 0; t < 2; ++t) A.set(s, t, {{s | t, HPoly::one()}});
  return A;
}

/// Matrix units of Mat(d): label i*d+j is E_ij, E_ij E_kl = [j==k] E_il.
/// No basis unit (the identity is a sum of labels).
inline BasedAlgebra matrix_unit_algebra(unsigned d) {
  BasedAlgebra A;
  A.dim = d * d;
  A.table.resize((size_t)A.dim * A.dim);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      for (unsigned k = 0; k < d; ++k)
        for (unsigned l = 0; l < d; ++l)
          if (j == k) A.set(i * d + j, k * d + l, {{i * d + l, HPoly::one()}});
  return A;
}

/// Weyl-type algebra on monomials x^a y^b with a < dx, b < dy and relation
/// y x = x y + lam*hbar, encoded by the reordering expansion. Monomials
/// leaving the exponent box are dropped, so products near the boundary are
/// truncations of the true Weyl product; tests keep degrees in range.
/// lam = 1 gives W; lam = -2i gives the complex form z zbar - zbar z = 2i hbar.
inline BasedAlgebra truncated_weyl_algebra(unsigned dx, unsigned dy, GaussRat lam = GaussRat(1)) {
  BasedAlgebra A;
  A.dim = dx * dy;
  A.unit = 0;
  A.table.resize((size_t)A.dim * A.dim);
  auto label = [&](unsigned a, unsigned b) { return a * dy + b; };
  for (unsigned a1 = 0; a1 < dx; ++a1)
    for (unsigned b1 = 0; b1 < dy; ++b1)
      for (unsigned a2 = 0; a2 < dx; ++a2)
        for (unsigned b2 = 0; b2 < dy; ++b2) {
          std::vector<std::pair<unsigned, HPoly>> terms;
          GaussRat lam_k(1);
          for (unsigned k = 0; k <= std::min(b1, a2); ++k) {
            unsigned a = a1 + a2 - k, b = b1 + b2 - k;
            if (a < dx && b < dy) {
              GaussRat c = lam_k * GaussRat(Rat(binomial(b1, k) * falling(a2, k)));
              terms.emplace_back(label(a, b), HPoly::hbar(k, c));
            }
            lam_k = lam_k * lam;
          }
          A.set(label(a1, b1), label(a2, b2), std::move(terms));
        }
  return A;
}

/// M-Weyl variant: y x = x y + x^2 hbar, exponent shape (a1+a2+k, b1+b2-k).
inline BasedAlgebra truncated_mweyl_algebra(unsigned dx, unsigned dy) {
  BasedAlgebra A;
  A.dim = dx * dy;
  A.unit = 0;
  A.table.resize((size_t)A.dim * A.dim);
  auto label = [&](unsigned a, unsigned b) { return a * dy + b; };
  for (unsigned a1 = 0; a1 < dx; ++a1)
    for (unsigned b1 = 0; b1 < dy; ++b1)
      for (unsigned a2 = 0; a2 < dx; ++a2)
        for (unsigned b2 = 0; b2 < dy; ++b2) {
          std::vector<std::pair<unsigned, HPoly>> terms;
          for (unsigned k = 0; k <= b1; ++k) {
            unsigned a = a1 + a2 + k, b = b1 + b2 - k;
            if (a < dx && b < dy) {
              Int c = binomial(b1, k) * rising(a2, k);
              if (c != 0) terms.emplace_back(label(a, b), HPoly::hbar(k, GaussRat(Rat(c))));
            }
          }
          A.set(label(a1, b1), label(a2, b2), std::move(terms));
        }
  return A;
}

}  // namespace qsf
