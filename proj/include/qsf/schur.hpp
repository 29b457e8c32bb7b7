#pragma once

// Schur categories: coinvariant classes of tensor words in elementary linear
// transformations under Z_m^n x| S_n, their closed composition rule, and the
// truncated gl(infinity) matrix model of the Weyl algebra.

#include "qsf/coeff.hpp"
#include "qsf/combinat.hpp"
#include "qsf/perm.hpp"
#include "qsf/sympow.hpp"
#include "qsf/weyl.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qsf {

/// Multi-index in Z_{m_1} x ... x Z_{m_k}.
using MultiIdx = std::vector<unsigned>;

inline unsigned multi_modulus(const std::vector<unsigned>& m) {
  unsigned M = 1;
  for (unsigned q : m) {
    if (q == 0) throw std::invalid_argument("multi_modulus: zero modulus");
    M *= q;
  }
  return M;
}

inline MultiIdx mi_reduce(MultiIdx v, const std::vector<unsigned>& m) {
  if (v.size() != m.size()) throw std::invalid_argument("mi_reduce: rank mismatch");
  for (size_t q = 0; q < v.size(); ++q) v[q] %= m[q];
  return v;
}

inline MultiIdx mi_add(const MultiIdx& a, const MultiIdx& b, const std::vector<unsigned>& m) {
  MultiIdx r(m.size());
  for (size_t q = 0; q < m.size(); ++q) r[q] = (a[q] + b[q]) % m[q];
  return r;
}

inline MultiIdx mi_sub(const MultiIdx& a, const MultiIdx& b, const std::vector<unsigned>& m) {
  MultiIdx r(m.size());
  for (size_t q = 0; q < m.size(); ++q) r[q] = (a[q] + m[q] - b[q] % m[q]) % m[q];
  return r;
}

/// Mixed-radix encoding of a multi-index, most significant component first.
inline unsigned mi_encode(const MultiIdx& v, const std::vector<unsigned>& m) {
  unsigned code = 0;
  for (size_t q = 0; q < m.size(); ++q) code = code * m[q] + v[q] % m[q];
  return code;
}

inline MultiIdx mi_decode(unsigned code, const std::vector<unsigned>& m) {
  MultiIdx v(m.size());
  for (size_t q = m.size(); q-- > 0;) {
    v[q] = code % m[q];
    code /= m[q];
  }
  return v;
}

/// Elementary linear transformation E_{r s}^{t u}: v_{(r,s)} -> v_{(t,u)},
/// with source index r, target index t, multi-indices s, u in Z_m, and the
/// Z_2-parities of the source and target basis vectors.
struct ElemTrans {
  unsigned r = 0;
  MultiIdx s;
  unsigned t = 0;
  MultiIdx u;
  unsigned pr = 0, pt = 0;

  unsigned parity() const { return (pr + pt) & 1u; }

  friend bool operator<(const ElemTrans& a, const ElemTrans& b) {
    return std::tie(a.r, a.s, a.t, a.u, a.pr, a.pt) < std::tie(b.r, b.s, b.t, b.u, b.pr, b.pt);
  }
  friend bool operator==(const ElemTrans& a, const ElemTrans& b) {
    return std::tie(a.r, a.s, a.t, a.u, a.pr, a.pt) == std::tie(b.r, b.s, b.t, b.u, b.pr, b.pt);
  }
};

using ElemTuple = std::vector<ElemTrans>;

/// A morphism of the Schur category: canonical tuple representatives with
/// HPoly coefficients, exactly as SymElement but over ElemTrans labels.
struct SchurClass {
  std::map<ElemTuple, HPoly> terms;

  void add(const ElemTuple& rep, const HPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(rep);
    if (it == terms.end()) {
      terms.emplace(rep, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  static SchurClass basis(ElemTuple rep) {
    SchurClass e;
    e.terms.emplace(std::move(rep), HPoly::one());
    return e;
  }

  friend bool operator==(const SchurClass& a, const SchurClass& b) {
    return a.terms == b.terms;
  }

  SchurClass operator-(const SchurClass& o) const {
    SchurClass r = *this;
    for (const auto& [t, c] : o.terms) r.add(t, -c);
    return r;
  }
};

/// Minimal orbit representative under Z_m^n x| S_n with the Koszul sign of
/// the slot permutation. The cyclic part is normalized analytically: each
/// slot is shifted so that its lower multi-index is zero. Sign 0 marks a
/// self-negative (hence zero) class.
inline std::pair<ElemTuple, int> schur_canonicalize(const ElemTuple& tup,
                                                    const std::vector<unsigned>& m,
                                                    const PermGroup& Sn) {
  if (tup.size() != Sn.n) throw std::invalid_argument("schur_canonicalize: degree mismatch");
  ElemTuple base = tup;
  std::vector<unsigned> par(tup.size());
  for (size_t i = 0; i < base.size(); ++i) {
    base[i].u = mi_sub(base[i].u, base[i].s, m);
    base[i].s.assign(m.size(), 0);
    par[i] = base[i].parity();
  }
  ElemTuple best;
  int best_sign = 0;
  bool killed = false, first = true;
  for (const Perm& k : Sn.elements) {
    ElemTuple img = k.act(base);
    int sg = koszul_perm_sign(par, k);
    if (first || img < best) {
      best = img;
      best_sign = sg;
      first = false;
      killed = false;
    } else if (img == best && sg != best_sign) {
      killed = true;
    }
  }
  if (killed) return {best, 0};
  return {best, best_sign};
}

/// Composition Mor(V,W) (x) Mor(W,Z) -> Mor(V,Z):
///   (1 / (M^n n!)) sum over sigma matching the upper basis indices of F
///   with the lower basis indices of G, with the Koszul sign of the graded
///   reordering; the Z_m average collapses to the unique per-slot shift that
///   matches the multi-indices, so each matching sigma contributes exactly
///   one composed tuple with its upper multi-index shifted by u_F - s_G.
inline SchurClass schur_compose(const SchurClass& F, const SchurClass& G,
                                const std::vector<unsigned>& m, unsigned dimW) {
  if (F.terms.empty() || G.terms.empty()) return SchurClass{};
  const size_t n = F.terms.begin()->first.size();
  if (G.terms.begin()->first.size() != n)
    throw std::invalid_argument("schur_compose: tensor degree mismatch");
  const unsigned M = multi_modulus(m);
  Int divisor = factorial((unsigned)n);
  for (size_t i = 0; i < n; ++i) divisor *= M;
  PermGroup Sn = symmetric_group((unsigned)n);

  SchurClass out;
  for (const auto& [ft, cf] : F.terms) {
    for (const ElemTrans& e : ft)
      if (e.t >= dimW) throw std::domain_error("schur_compose: middle dimension mismatch");
    std::vector<unsigned> fpar(n);
    for (size_t i = 0; i < n; ++i) fpar[i] = ft[i].parity();
    for (const auto& [gt, cg] : G.terms) {
      for (const ElemTrans& e : gt)
        if (e.r >= dimW) throw std::domain_error("schur_compose: middle dimension mismatch");
      std::vector<unsigned> gpar(n);
      for (size_t i = 0; i < n; ++i) gpar[i] = gt[i].parity();
      for (const Perm& sigma : Sn.elements) {
        ElemTuple gp = sigma.act(gt);
        bool match = true;
        for (size_t a = 0; a < n && match; ++a)
          match = (ft[a].t == gp[a].r && ft[a].pt == gp[a].pr);
        if (!match) continue;
        int sign = koszul_perm_sign(gpar, sigma) *
                   koszul_interleave_sign(fpar, sigma.act(gpar), Perm::identity((unsigned)n));
        ElemTuple comp(n);
        for (size_t a = 0; a < n; ++a) {
          comp[a].r = ft[a].r;
          comp[a].s = ft[a].s;
          comp[a].pr = ft[a].pr;
          comp[a].t = gp[a].t;
          comp[a].u = mi_add(gp[a].u, mi_sub(ft[a].u, gp[a].s, m), m);
          comp[a].pt = gp[a].pt;
        }
        auto [rep, csign] = schur_canonicalize(comp, m, Sn);
        if (csign == 0) continue;
        HPoly c = cf * cg;
        if (sign * csign < 0) c = -c;
        out.add(rep, c.div_nat(divisor));
      }
    }
  }
  return out;
}

/// Class of the n-fold tensor power of the identity of V^{(+) Z_m}: the sum
/// of all tuples of diagonal elementary maps E_{r s}^{r s}. Two-sided unit
/// for schur_compose.
inline SchurClass schur_identity(unsigned dim, const std::vector<unsigned>& par,
                                 const std::vector<unsigned>& m, unsigned n) {
  const unsigned M = multi_modulus(m);
  const unsigned D = dim * M;
  PermGroup Sn = symmetric_group(n);
  SchurClass out;
  std::vector<unsigned> odo(n, 0);
  while (true) {
    ElemTuple tup(n);
    for (unsigned i = 0; i < n; ++i) {
      unsigned r = odo[i] / M;
      MultiIdx s = mi_decode(odo[i] % M, m);
      unsigned p = par.empty() ? 0 : par[r];
      tup[i] = ElemTrans{r, s, r, s, p, p};
    }
    auto [rep, sg] = schur_canonicalize(tup, m, Sn);
    if (sg != 0) out.add(rep, sg < 0 ? -HPoly::one() : HPoly::one());
    size_t j = 0;
    while (j < n && ++odo[j] == D) odo[j++] = 0;
    if (j == n) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truncated gl(infinity)

/// N x N truncation window of a gl(infinity) matrix. The ambient algebra
/// consists of matrices whose (i,j) entry for i < j has hbar-order >= j - i;
/// products are exact on an explicit index margin reported by the callers.
struct GlInfTrunc {
  unsigned N = 0;
  std::vector<HPoly> a;  // row-major, N*N

  explicit GlInfTrunc(unsigned size = 0) : N(size), a((size_t)size * size) {}

  HPoly& at(unsigned i, unsigned j) { return a[(size_t)i * N + j]; }
  const HPoly& at(unsigned i, unsigned j) const { return a[(size_t)i * N + j]; }

  static GlInfTrunc identity(unsigned size) {
    GlInfTrunc I(size);
    for (unsigned i = 0; i < size; ++i) I.at(i, i) = HPoly::one();
    return I;
  }

  friend GlInfTrunc operator*(const GlInfTrunc& x, const GlInfTrunc& y) {
    if (x.N != y.N) throw std::invalid_argument("GlInfTrunc: size mismatch");
    GlInfTrunc r(x.N);
    for (unsigned i = 0; i < x.N; ++i)
      for (unsigned k = 0; k < x.N; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (unsigned j = 0; j < x.N; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }

  friend GlInfTrunc operator+(const GlInfTrunc& x, const GlInfTrunc& y) {
    if (x.N != y.N) throw std::invalid_argument("GlInfTrunc: size mismatch");
    GlInfTrunc r(x.N);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }

  friend bool operator==(const GlInfTrunc& x, const GlInfTrunc& y) {
    return x.N == y.N && x.a == y.a;
  }
};

/// Filtration membership: every monomial of the (i,j) entry with i < j has
/// hbar-degree >= j - i.
inline bool glinf_filtration_ok(const GlInfTrunc& X) {
  for (unsigned i = 0; i < X.N; ++i)
    for (unsigned j = i + 1; j < X.N; ++j)
      for (const auto& [deg, c] : X.at(i, j).coeffs)
        if (!c.is_zero() && deg < j - i) return false;
  return true;
}

/// Equality of the leading bound x bound submatrices.
inline bool glinf_equal_upto(const GlInfTrunc& x, const GlInfTrunc& y, unsigned bound) {
  if (bound > x.N || bound > y.N) throw std::invalid_argument("glinf_equal_upto: bound too large");
  for (unsigned i = 0; i < bound; ++i)
    for (unsigned j = 0; j < bound; ++j)
      if (!(x.at(i, j) == y.at(i, j))) return false;
  return true;
}

/// Basis matrix E_{a,b}: entries ((b+k)!/k!) hbar^b at positions (a,b)+(k,k).
inline GlInfTrunc elem_matrix(unsigned a, unsigned b, unsigned N) {
  if (a >= N || b >= N) throw std::invalid_argument("elem_matrix: index out of range");
  GlInfTrunc E(N);
  for (unsigned k = 0; a + k < N && b + k < N; ++k)
    E.at(a + k, b + k) = HPoly::hbar(b, GaussRat(Rat(falling(Int(b) + k, b))));
  return E;
}

/// Matrix image of a Weyl word under x -> E_{1,0}, y -> E_{0,1}. The result
/// agrees with the untruncated product exactly on indices below
/// weyl_to_glinf_margin(w, N); the margin must be positive.
inline unsigned weyl_to_glinf_margin(const WeylWord& w, unsigned N) {
  unsigned ydeg = 0;
  for (const WeylFactor& f : w) ydeg += f.b;
  return ydeg >= N ? 0 : N - ydeg;
}

inline GlInfTrunc weyl_to_glinf(const WeylWord& w, unsigned N) {
  if (weyl_to_glinf_margin(w, N) == 0)
    throw std::domain_error("weyl_to_glinf: truncation margin exhausted");
  GlInfTrunc X = elem_matrix(1, 0, N), Y = elem_matrix(0, 1, N);
  GlInfTrunc R = GlInfTrunc::identity(N);
  for (const WeylFactor& f : w) {
    for (unsigned i = 0; i < f.a; ++i) R = R * X;
    for (unsigned i = 0; i < f.b; ++i) R = R * Y;
  }
  return R;
}

/// Matrix realization of a normal form: sum of c hbar^h E_{x,y}.
inline GlInfTrunc normal_form_to_glinf(const WeylNormalForm& nf, unsigned N) {
  GlInfTrunc R(N);
  for (const auto& [key, c] : nf) {
    if (key.x >= N || key.y >= N) continue;
    GlInfTrunc E = elem_matrix(key.x, key.y, N);
    for (auto& entry : E.a)
      if (!entry.is_zero()) {
        HPoly shifted;
        for (const auto& [deg, cc] : entry.coeffs) shifted.add_term(deg + key.h, cc * GaussRat(Rat(c)));
        entry = shifted;
      }
    R = R + E;
  }
  return R;
}

}  // namespace qsf
