#pragma once

// Bridges between ExpMatrix classes and based-algebra label tuples, plus the
// dihedral-wreath brute-force product. The dihedral reflection is the single
// global involution z <-> zbar combined with hbar -> -hbar; on normal-ordered
// labels it acts as the letterwise re-expansion Lambda applied in every slot,
// with the hbar-parity of the coefficient flipped.

#include "qsf/qsym.hpp"
#include "qsf/sympow.hpp"

#include <stdexcept>

namespace qsf {

/// Label encoding for a one-variable Weyl pair (a,b) with b < dy: a*dy + b.
inline unsigned weyl_label(unsigned a, unsigned b, unsigned dy) { return a * dy + b; }

inline LabelTuple expmatrix_to_tuple(const ExpMatrix& A, unsigned dy) {
  if (A.m() != 1) throw std::invalid_argument("expmatrix_to_tuple: expect m = 1");
  LabelTuple t;
  for (const auto& r : A.rows) t.push_back(weyl_label(r.a[0], r.b[0], dy));
  return t;
}

inline ExpMatrix tuple_to_expmatrix(const LabelTuple& t, unsigned dy) {
  ExpMatrix A;
  for (unsigned l : t) A.rows.push_back(ExpRow{{l / dy}, {l % dy}});
  return A;
}

inline QSymElement sym_to_qsym(const SymElement& e, unsigned dy) {
  QSymElement out;
  for (const auto& [t, c] : e.terms) out.add(tuple_to_expmatrix(t, dy).sorted(), c);
  return out;
}

inline SymElement qsym_to_sym(const QSymElement& e, unsigned dy) {
  SymElement out;
  for (const auto& [t, c] : e.terms) out.add(expmatrix_to_tuple(t, dy), c);
  return out;
}

// ---------------------------------------------------------------------------
// Dihedral-wreath oracle

namespace detail {

/// Letterwise reflection of a normal-ordered monomial z^c zbar^d: the word
/// becomes zbar^c z^d, re-expanded into normal order inside the complex Weyl
/// algebra (z zbar - zbar z = -2i hbar).
inline RawElement reflect_label_linear(unsigned label, unsigned dy) {
  unsigned c = label / dy, d = label % dy;
  RawElement out;
  GaussRat m2i = GaussRat(Rat(0), Rat(-2));
  GaussRat scale(1);
  for (unsigned k = 0; k <= std::min(c, d); ++k) {
    Int num = binomial(c, k) * falling(d, k);
    raw_add(out, {weyl_label(d - k, c - k, dy)}, HPoly::hbar(k, GaussRat(Rat(num)) * scale));
    scale *= m2i;
  }
  return out;
}

}  // namespace detail

/// The global reflection applied to a tensor element: Lambda in every slot,
/// hbar-parity flip on the coefficient. An involutive algebra automorphism of
/// the slotwise complex Weyl product.
inline SymElement dihedral_reflect(const SymElement& x, unsigned dy) {
  SymElement out;
  for (const auto& [t, c] : x.terms) {
    std::vector<std::pair<LabelTuple, HPoly>> partial;
    partial.emplace_back(LabelTuple{}, hflip(c));
    for (unsigned l : t) {
      detail::RawElement refl = detail::reflect_label_linear(l, dy);
      std::vector<std::pair<LabelTuple, HPoly>> next;
      for (const auto& [pref, pc] : partial)
        for (const auto& [rt, rc] : refl) {
          LabelTuple e = pref;
          e.push_back(rt[0]);
          next.emplace_back(std::move(e), pc * rc);
        }
      partial = std::move(next);
    }
    for (auto& [tup, cc] : partial) out.add(tup, cc);
  }
  return out;
}

/// Brute-force dihedral product: the average of a * g(c) over the honest
/// automorphism group generated by per-slot rotations, slot permutations and
/// the single global reflection — (1/2)[zm-oracle(a, c) + zm-oracle(a, Rc)].
inline SymElement dihedral_oracle(const ExpMatrix& A, const ExpMatrix& C, unsigned m_cyc,
                                  const BasedAlgebra& alg, unsigned dy) {
  const unsigned n = A.n();
  WreathAction act;
  act.K = symmetric_group(n);
  act.modulus = m_cyc;
  act.weight.resize(alg.dim);
  for (unsigned l = 0; l < alg.dim; ++l)
    act.weight[l] = (long)(l % dy) - (long)(l / dy);
  SymElement a = SymElement::basis(expmatrix_to_tuple(A, dy));
  SymElement c = SymElement::basis(expmatrix_to_tuple(C, dy));
  SymElement straight = oracle_product({a, c}, act, alg);
  SymElement reflected = oracle_product({a, dihedral_reflect(c, dy)}, act, alg);
  SymElement out;
  for (const auto& [t, cc] : straight.terms) out.add(t, cc.div_nat(2));
  for (const auto& [t, cc] : reflected.terms) out.add(t, cc.div_nat(2));
  return out;
}

}  // namespace qsf
