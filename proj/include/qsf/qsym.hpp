#pragma once

// Quantum symmetric functions: star products on classes of exponent
// matrices for types A/B/D, the cyclic-wreath and dihedral-wreath variants,
// and the multi-factor products in Sym^n of the Weyl and M-Weyl algebras.

#include "qsf/coeff.hpp"
#include "qsf/perm.hpp"
#include "qsf/weyl.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qsf {

/// One tensor slot: exponent vectors of the x/z variables and the y/zbar
/// variables, each of length m.
struct ExpRow {
  std::vector<unsigned> a, b;

  friend bool operator<(const ExpRow& l, const ExpRow& r) {
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  }
  friend bool operator==(const ExpRow& l, const ExpRow& r) { return l.a == r.a && l.b == r.b; }

  unsigned total() const {
    unsigned s = 0;
    for (unsigned v : a) s += v;
    for (unsigned v : b) s += v;
    return s;
  }
};

/// Monomial of Sym^n: n rows of exponent pairs. Canonical form sorts rows.
struct ExpMatrix {
  std::vector<ExpRow> rows;

  unsigned n() const { return (unsigned)rows.size(); }
  unsigned m() const { return rows.empty() ? 0 : (unsigned)rows[0].a.size(); }

  ExpMatrix sorted() const {
    ExpMatrix r = *this;
    std::sort(r.rows.begin(), r.rows.end());
    return r;
  }

  friend bool operator<(const ExpMatrix& l, const ExpMatrix& r) { return l.rows < r.rows; }
  friend bool operator==(const ExpMatrix& l, const ExpMatrix& r) { return l.rows == r.rows; }
};

/// Builds an ExpMatrix from flat row data: per row, m x-exponents then m
/// y-exponents.
inline ExpMatrix make_expmatrix(const std::vector<std::vector<unsigned>>& flat, unsigned m) {
  ExpMatrix A;
  for (const auto& row : flat) {
    if (row.size() != 2 * m) throw std::invalid_argument("make_expmatrix: row length");
    ExpRow r;
    r.a.assign(row.begin(), row.begin() + m);
    r.b.assign(row.begin() + m, row.end());
    A.rows.push_back(std::move(r));
  }
  return A;
}

struct QSymElement {
  std::map<ExpMatrix, HPoly> terms;

  void add(const ExpMatrix& rep, const HPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(rep);
    if (it == terms.end()) {
      terms.emplace(rep, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  static QSymElement basis(const ExpMatrix& A) {
    QSymElement e;
    e.terms.emplace(A.sorted(), HPoly::one());
    return e;
  }

  /// hbar^0 part.
  QSymElement classical() const {
    QSymElement r;
    for (const auto& [t, c] : terms) {
      GaussRat c0 = c.coeff(0);
      if (!c0.is_zero()) r.add(t, HPoly(c0));
    }
    return r;
  }

  friend bool operator==(const QSymElement& x, const QSymElement& y) {
    return x.terms == y.terms;
  }
  QSymElement operator-(const QSymElement& o) const {
    QSymElement r = *this;
    for (const auto& [t, c] : o.terms) r.add(t, -c);
    return r;
  }
};

enum class StarFamily { A, B, D };

/// Family B admits rows of even total degree; family D admits matrices whose
/// rows all share one total-degree parity.
inline bool star_admissible(const ExpMatrix& A, StarFamily f) {
  if (f == StarFamily::A) return true;
  if (f == StarFamily::B) {
    for (const auto& r : A.rows)
      if (r.total() % 2 != 0) return false;
    return true;
  }
  bool all_even = true, all_odd = true;
  for (const auto& r : A.rows) {
    if (r.total() % 2 == 0) all_odd = false;
    else all_even = false;
  }
  return all_even || all_odd;
}

/// Cyclic-wreath admissibility: b - a = 0 mod m componentwise in every row.
inline bool zm_admissible(const ExpMatrix& A, unsigned m_cyc) {
  for (const auto& r : A.rows)
    for (size_t q = 0; q < r.a.size(); ++q)
      if (((long)r.b[q] - (long)r.a[q]) % (long)m_cyc != 0) return false;
  return true;
}

namespace detail {

/// Shared sigma/I sum. Per slot j, with source row s = sigma^{-1}(j) of C:
/// binomial base, falling-factorial base, and the exponent increment are
/// chosen by the caller; contraction_scale^{|I|} hbar^{|I|} weights each
/// term; divisor is the overall rational prefactor denominator.
struct StarTermSpec {
  std::vector<unsigned> binom, fall, add_a, add_b;
  bool mweyl_shape = false;  // result exponent (a + add_a + I, b + add_b - I)
  bool rising = false;       // rising instead of falling factorials
};

inline void star_sigma_accumulate(QSymElement& out, const ExpMatrix& A,
                                  const std::vector<StarTermSpec>& slots,
                                  const GaussRat& contraction_scale, const Int& divisor) {
  const unsigned n = A.n(), m = A.m();
  // enumerate I over all slots/columns
  struct Cell {
    unsigned j, q, max;
  };
  std::vector<Cell> cells;
  for (unsigned j = 0; j < n; ++j)
    for (unsigned q = 0; q < m; ++q) {
      unsigned cap = slots[j].binom[q];
      if (!slots[j].rising) cap = std::min(cap, slots[j].fall[q]);
      cells.push_back({j, q, cap});
    }
  std::vector<unsigned> I(cells.size(), 0);
  auto emit = [&]() {
    Int coeff = 1;
    unsigned total = 0;
    std::vector<std::vector<unsigned>> Imat(n, std::vector<unsigned>(m, 0));
    for (size_t t = 0; t < cells.size(); ++t) {
      const auto& cl = cells[t];
      unsigned v = I[t];
      Imat[cl.j][cl.q] = v;
      total += v;
      coeff *= binomial(slots[cl.j].binom[cl.q], v);
      coeff *= slots[cl.j].rising ? rising(slots[cl.j].fall[cl.q], v)
                                  : falling(slots[cl.j].fall[cl.q], v);
      if (coeff == 0) return;
    }
    ExpMatrix R;
    R.rows.resize(n);
    for (unsigned j = 0; j < n; ++j) {
      ExpRow r;
      r.a.resize(m);
      r.b.resize(m);
      for (unsigned q = 0; q < m; ++q) {
        unsigned v = Imat[j][q];
        if (slots[j].mweyl_shape) {
          r.a[q] = A.rows[j].a[q] + slots[j].add_a[q] + v;
          r.b[q] = A.rows[j].b[q] + slots[j].add_b[q] - v;
        } else {
          r.a[q] = A.rows[j].a[q] + slots[j].add_a[q] - v;
          r.b[q] = A.rows[j].b[q] + slots[j].add_b[q] - v;
        }
      }
      R.rows[j] = std::move(r);
    }
    GaussRat scale{Rat(coeff)};
    for (unsigned t = 0; t < total; ++t) scale *= contraction_scale;
    out.add(R.sorted(), HPoly::hbar(total, scale).div_nat(divisor));
  };
  // odometer over I
  while (true) {
    emit();
    size_t t = 0;
    while (t < cells.size() && I[t] == cells[t].max) I[t++] = 0;
    if (t == cells.size()) break;
    ++I[t];
  }
}

inline Int sn_factorial(unsigned n) { return factorial(n); }

}  // namespace detail

/// Type A star product of two monomial classes:
/// (1/n!) sum_{I,sigma} C(b,I) (sigma(c))_I class(A + sigma(C) - (I,I)) hbar^|I|.
/// contraction_scale generalizes to the complex form (-2i per contraction).
inline QSymElement qsym_star_A_scaled(const ExpMatrix& A, const ExpMatrix& C,
                                      const GaussRat& contraction_scale) {
  if (A.n() != C.n() || A.m() != C.m())
    throw std::invalid_argument("qsym_star: dimension mismatch");
  const unsigned n = A.n();
  QSymElement out;
  PermGroup Sn = symmetric_group(n);
  for (const Perm& sigma : Sn.elements) {
    Perm sinv = sigma.inverse();
    std::vector<detail::StarTermSpec> slots(n);
    for (unsigned j = 0; j < n; ++j) {
      const ExpRow& src = C.rows[(unsigned)sinv.images[j]];
      slots[j].binom = A.rows[j].b;
      slots[j].fall = src.a;
      slots[j].add_a = src.a;
      slots[j].add_b = src.b;
    }
    detail::star_sigma_accumulate(out, A, slots, contraction_scale,
                                  detail::sn_factorial(n));
  }
  return out;
}

inline QSymElement qsym_star_A(const ExpMatrix& A, const ExpMatrix& C) {
  return qsym_star_A_scaled(A, C, GaussRat(1));
}

/// Types B and D: precondition-checked pass-throughs to the type A formula.
inline QSymElement qsym_star_BD(const ExpMatrix& A, const ExpMatrix& C, StarFamily f) {
  if (!star_admissible(A, f) || !star_admissible(C, f))
    throw std::domain_error("qsym_star_BD: parity precondition violated");
  return qsym_star_A(A, C);
}

/// Z_m-wreath star: type A shape with (-2i)^{|I|} contraction weights and the
/// congruence precondition b - a = 0 mod m per row.
inline QSymElement wreath_zm_star(const ExpMatrix& A, const ExpMatrix& C, unsigned m_cyc) {
  if (m_cyc == 0) throw std::invalid_argument("wreath_zm_star: modulus");
  if (!zm_admissible(A, m_cyc) || !zm_admissible(C, m_cyc))
    throw std::domain_error("wreath_zm_star: congruence precondition violated");
  GaussRat m2i = GaussRat(Rat(0), Rat(-2));
  return qsym_star_A_scaled(A, C, m2i);
}

/// Flips the sign of odd hbar-degrees: the coefficient image under the
/// hbar -> -hbar twist that makes the global reflection an algebra
/// automorphism of the complex Weyl algebra.
inline HPoly hflip(const HPoly& p) {
  HPoly r;
  for (const auto& [deg, c] : p.coeffs) r.add_term(deg, deg % 2 ? -c : c);
  return r;
}

/// Dihedral-wreath star, split into its two families: rotation family (type A
/// shape) and reflection family with binomial base b + sigma(c), falling base
/// sigma(d) and the z/zbar exponents of C swapped; both weighted 1/(2 n!) and
/// (-2i)^{|I|}. The reflection is the single global involution z <-> zbar,
/// hbar -> -hbar (per-slot reflections do not act on a tensor power sharing
/// one hbar), so elements combine C[[hbar^2]]-bilinearly: the reflection
/// family of x * y carries hflip of y's coefficient. dihedral_star_element
/// implements that extension; on monomial classes both parts have scalar
/// coefficients and dihedral_star is their plain sum.
inline std::pair<QSymElement, QSymElement> dihedral_star_parts(const ExpMatrix& A,
                                                               const ExpMatrix& C,
                                                               unsigned m_cyc) {
  if (m_cyc == 0) throw std::invalid_argument("dihedral_star: modulus");
  if (!zm_admissible(A, m_cyc) || !zm_admissible(C, m_cyc))
    throw std::domain_error("dihedral_star: congruence precondition violated");
  const unsigned n = A.n(), m = A.m();
  if (C.n() != n || C.m() != m) throw std::invalid_argument("dihedral_star: dimensions");
  GaussRat m2i = GaussRat(Rat(0), Rat(-2));
  QSymElement rot_out, refl_out;
  PermGroup Sn = symmetric_group(n);
  Int divisor = detail::sn_factorial(n) * 2;
  for (const Perm& sigma : Sn.elements) {
    Perm sinv = sigma.inverse();
    std::vector<detail::StarTermSpec> rot(n), refl(n);
    for (unsigned j = 0; j < n; ++j) {
      const ExpRow& src = C.rows[(unsigned)sinv.images[j]];
      rot[j].binom = A.rows[j].b;
      rot[j].fall = src.a;
      rot[j].add_a = src.a;
      rot[j].add_b = src.b;
      refl[j].binom.resize(m);
      for (unsigned q = 0; q < m; ++q) refl[j].binom[q] = A.rows[j].b[q] + src.a[q];
      refl[j].fall = src.b;
      refl[j].add_a = src.b;
      refl[j].add_b = src.a;
    }
    detail::star_sigma_accumulate(rot_out, A, rot, m2i, divisor);
    detail::star_sigma_accumulate(refl_out, A, refl, m2i, divisor);
  }
  return {std::move(rot_out), std::move(refl_out)};
}

inline QSymElement dihedral_star(const ExpMatrix& A, const ExpMatrix& C, unsigned m_cyc) {
  auto [rot, refl] = dihedral_star_parts(A, C, m_cyc);
  for (const auto& [t, c] : refl.terms) rot.add(t, c);
  return rot;
}

/// Extension of the dihedral star to elements: hbar-linear in the first
/// factor, hbar-parity-twisted in the second (the reflection family sees the
/// second coefficient through hflip). This is the extension under which the
/// product is associative on the nose.
inline QSymElement dihedral_star_element(const QSymElement& X, const QSymElement& Y,
                                         unsigned m_cyc) {
  QSymElement out;
  for (const auto& [ta, ca] : X.terms)
    for (const auto& [tb, cb] : Y.terms) {
      auto [rot, refl] = dihedral_star_parts(ta, tb, m_cyc);
      for (const auto& [t, c] : rot.terms) out.add(t, ca * cb * c);
      HPoly cbf = hflip(cb);
      for (const auto& [t, c] : refl.terms) out.add(t, ca * cbf * c);
    }
  return out;
}

/// Classical product (hbar = 0): (1/n!) sum_sigma class(A + sigma(B)), with
/// family parity preconditions.
inline QSymElement classical_sym_product(const ExpMatrix& A, const ExpMatrix& B, StarFamily f) {
  if (!star_admissible(A, f) || !star_admissible(B, f))
    throw std::domain_error("classical_sym_product: parity precondition violated");
  if (A.n() != B.n() || A.m() != B.m())
    throw std::invalid_argument("classical_sym_product: dimension mismatch");
  const unsigned n = A.n(), m = A.m();
  QSymElement out;
  PermGroup Sn = symmetric_group(n);
  for (const Perm& sigma : Sn.elements) {
    Perm sinv = sigma.inverse();
    ExpMatrix R;
    R.rows.resize(n);
    for (unsigned j = 0; j < n; ++j) {
      const ExpRow& src = B.rows[(unsigned)sinv.images[j]];
      ExpRow r;
      r.a.resize(m);
      r.b.resize(m);
      for (unsigned q = 0; q < m; ++q) {
        r.a[q] = A.rows[j].a[q] + src.a[q];
        r.b[q] = A.rows[j].b[q] + src.b[q];
      }
      R.rows[j] = std::move(r);
    }
    out.add(R.sorted(), HPoly::one().div_nat(detail::sn_factorial(n)));
  }
  return out;
}

/// Bilinear extension of a binary star to QSymElements.
template <class Star>
inline QSymElement star_bilinear(const QSymElement& X, const QSymElement& Y, Star&& star) {
  QSymElement out;
  for (const auto& [ta, ca] : X.terms)
    for (const auto& [tb, cb] : Y.terms) {
      QSymElement p = star(ta, tb);
      for (const auto& [t, c] : p.terms) out.add(t, ca * cb * c);
    }
  return out;
}

namespace detail {

/// Enumerates (sigma_2,...,sigma_M) and hands each tuple to fn.
template <class Fn>
inline void for_each_sigma_tuple(const PermGroup& Sn, unsigned count, Fn&& fn) {
  std::vector<const Perm*> tup(count);
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == count) {
      fn(tup);
      return;
    }
    for (const Perm& s : Sn.elements) {
      tup[i] = &s;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace detail

/// Direct multi-factor product in Sym^n(W) (single variable per slot):
/// (1/n!^{M-1}) over sigma-tuples, per slot the normal-coordinate expansion
/// of the collected word. mweyl switches to the M-Weyl coordinates.
inline QSymElement symweyl_multiproduct_direct(const std::vector<ExpMatrix>& factors,
                                               bool mweyl = false) {
  if (factors.empty()) throw std::invalid_argument("symweyl_multiproduct: no factors");
  const unsigned n = factors[0].n();
  for (const auto& f : factors)
    if (f.n() != n || f.m() != 1)
      throw std::invalid_argument("symweyl_multiproduct: expect m = 1 factors");
  const unsigned M = (unsigned)factors.size();
  PermGroup Sn = symmetric_group(n);
  QSymElement out;
  Int divisor = 1;
  for (unsigned i = 1; i < M; ++i) divisor *= detail::sn_factorial(n);
  detail::for_each_sigma_tuple(Sn, M - 1, [&](const std::vector<const Perm*>& sig) {
    // slot words
    std::vector<WeylWord> words(n);
    for (unsigned j = 0; j < n; ++j)
      words[j].push_back({factors[0].rows[j].a[0], factors[0].rows[j].b[0]});
    for (unsigned i = 1; i < M; ++i) {
      Perm sinv = sig[i - 1]->inverse();
      for (unsigned j = 0; j < n; ++j) {
        const ExpRow& r = factors[i].rows[(unsigned)sinv.images[j]];
        words[j].push_back({r.a[0], r.b[0]});
      }
    }
    // per-slot k sums
    std::vector<unsigned> k(n, 0), kmax(n);
    for (unsigned j = 0; j < n; ++j) {
      unsigned ta = word_total_a(words[j]), tb = word_total_b(words[j]);
      kmax[j] = mweyl ? tb : std::min(ta, tb);
    }
    std::vector<unsigned> cur(n, 0);
    while (true) {
      Int coeff = 1;
      unsigned total = 0;
      for (unsigned j = 0; j < n && coeff != 0; ++j) {
        coeff *= mweyl ? mweyl_coords_closed(words[j], cur[j])
                       : normal_coords_closed(words[j], cur[j]);
        total += cur[j];
      }
      if (coeff != 0) {
        ExpMatrix R;
        R.rows.resize(n);
        for (unsigned j = 0; j < n; ++j) {
          unsigned ta = word_total_a(words[j]), tb = word_total_b(words[j]);
          ExpRow r;
          r.a = {mweyl ? ta + cur[j] : ta - cur[j]};
          r.b = {tb - cur[j]};
          R.rows[j] = std::move(r);
        }
        out.add(R.sorted(), HPoly::hbar(total, GaussRat(Rat(coeff))).div_nat(divisor));
      }
      unsigned j = 0;
      while (j < n && cur[j] == kmax[j]) cur[j++] = 0;
      if (j == n) break;
      ++cur[j];
    }
  });
  return out;
}

/// M-Weyl binary star on single-variable classes: rising factorials and the
/// exponent shape (a + c + I, b + d - I).
inline QSymElement mqsym_star(const ExpMatrix& A, const ExpMatrix& C) {
  if (A.n() != C.n() || A.m() != 1 || C.m() != 1)
    throw std::invalid_argument("mqsym_star: expect m = 1");
  const unsigned n = A.n();
  QSymElement out;
  PermGroup Sn = symmetric_group(n);
  for (const Perm& sigma : Sn.elements) {
    Perm sinv = sigma.inverse();
    std::vector<detail::StarTermSpec> slots(n);
    for (unsigned j = 0; j < n; ++j) {
      const ExpRow& src = C.rows[(unsigned)sinv.images[j]];
      slots[j].binom = A.rows[j].b;
      slots[j].fall = src.a;
      slots[j].add_a = src.a;
      slots[j].add_b = src.b;
      slots[j].mweyl_shape = true;
      slots[j].rising = true;
    }
    detail::star_sigma_accumulate(out, A, slots, GaussRat(1), detail::sn_factorial(n));
  }
  return out;
}

/// Iterated-binary path of the multiproduct; must agree with the direct path.
inline QSymElement symweyl_multiproduct_binary(const std::vector<ExpMatrix>& factors,
                                               bool mweyl = false) {
  if (factors.empty()) throw std::invalid_argument("symweyl_multiproduct: no factors");
  QSymElement acc = QSymElement::basis(factors[0]);
  for (size_t i = 1; i < factors.size(); ++i) {
    QSymElement rhs = QSymElement::basis(factors[i]);
    acc = star_bilinear(acc, rhs, [&](const ExpMatrix& X, const ExpMatrix& Y) {
      return mweyl ? mqsym_star(X, Y) : qsym_star_A(X, Y);
    });
  }
  return acc;
}

}  // namespace qsf
