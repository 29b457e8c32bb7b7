#pragma once

// Coinvariant symmetric powers of based algebras: canonical orbit
// representatives, the averaged closed product, and the brute-force
// symmetrization oracle (including diagonal cyclic/dihedral actions with
// analytic character averaging).

#include "qsf/based_algebra.hpp"
#include "qsf/perm.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qsf {

using LabelTuple = std::vector<unsigned>;

/// Element of the n-th coinvariant power: canonical representative -> HPoly.
struct SymElement {
  std::map<LabelTuple, HPoly> terms;

  void add(const LabelTuple& rep, const HPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(rep);
    if (it == terms.end()) {
      terms.emplace(rep, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  static SymElement basis(LabelTuple rep) {
    SymElement e;
    e.terms.emplace(std::move(rep), HPoly::one());
    return e;
  }

  friend bool operator==(const SymElement& a, const SymElement& b) {
    return a.terms == b.terms;
  }

  SymElement operator-(const SymElement& o) const {
    SymElement r = *this;
    for (const auto& [t, c] : o.terms) r.add(t, -c);
    return r;
  }
};

/// Sign of permuting graded tensor factors: factor i moves to slot sigma(i).
/// One transposition of two odd factors contributes -1; the count is the
/// number of inversions of sigma restricted to odd positions.
inline int koszul_perm_sign(const std::vector<unsigned>& par, const Perm& sigma) {
  int sign = 1;
  for (size_t i = 0; i < par.size(); ++i)
    for (size_t j = i + 1; j < par.size(); ++j)
      if (par[i] && par[j] && sigma.images[i] > sigma.images[j]) sign = -sign;
  return sign;
}

/// Sign of reordering a_1..a_n b_1..b_n into a_1 b_{sigma^{-1}(1)} a_2
/// b_{sigma^{-1}(2)} ... : each b factor crosses the a factors after its
/// target slot and the b factors that end up before it.
inline int koszul_interleave_sign(const std::vector<unsigned>& apar,
                                  const std::vector<unsigned>& bpar, const Perm& sigma) {
  const size_t n = apar.size();
  if (bpar.size() != n || sigma.degree() != n)
    throw std::invalid_argument("koszul_interleave_sign: length mismatch");
  // Build the target order of the 2n factors and count odd inversions
  // against the source order (a's then b's).
  std::vector<size_t> order;  // source indices: a_i = i, b_i = n + i
  order.reserve(2 * n);
  for (size_t j = 0; j < n; ++j) {
    order.push_back(j);
    order.push_back(n + (size_t)sigma.inverse().images[j]);
  }
  auto parity_of = [&](size_t src) { return src < n ? apar[src] : bpar[src - n]; };
  int sign = 1;
  for (size_t u = 0; u < order.size(); ++u)
    for (size_t v = u + 1; v < order.size(); ++v)
      if (order[u] > order[v] && parity_of(order[u]) && parity_of(order[v])) sign = -sign;
  return sign;
}

/// Minimal orbit representative under the place action of K, with the Koszul
/// sign of the graded reordering. Returns sign 0 when the class is its own
/// negative (hence zero).
inline std::pair<LabelTuple, int> canonicalize(const LabelTuple& t, const PermGroup& K,
                                               const BasedAlgebra& alg) {
  if (t.size() != K.n) throw std::invalid_argument("canonicalize: degree mismatch");
  std::vector<unsigned> par(t.size());
  bool graded = !alg.parity.empty();
  for (size_t i = 0; i < t.size(); ++i) par[i] = alg.label_parity(t[i]);
  LabelTuple best;
  int best_sign = 0;
  bool killed = false;
  bool first = true;
  for (const Perm& k : K.elements) {
    LabelTuple img = k.act(t);
    int s = graded ? koszul_perm_sign(par, k) : 1;
    if (first || img < best) {
      best = img;
      best_sign = s;
      first = false;
      killed = false;
    } else if (img == best && s != best_sign) {
      killed = true;
    }
  }
  if (killed) return {best, 0};
  return {best, best_sign};
}

namespace detail {

/// Raw (uncanonicalized) tensor element.
using RawElement = std::map<LabelTuple, HPoly>;

inline void raw_add(RawElement& r, const LabelTuple& t, const HPoly& c) {
  if (c.is_zero()) return;
  auto it = r.find(t);
  if (it == r.end()) {
    r.emplace(t, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) r.erase(it);
  }
}

/// Slotwise product of two raw tensors over the based algebra, with the
/// Koszul interleave sign for moving the right-hand factors into place.
inline RawElement raw_slotwise_mul(const RawElement& x, const RawElement& y,
                                   const BasedAlgebra& alg, const Perm& sigma_for_sign) {
  bool graded = !alg.parity.empty();
  RawElement out;
  for (const auto& [ta, ca] : x)
    for (const auto& [tb, cb] : y) {
      int sign = 1;
      if (graded) {
        std::vector<unsigned> ap(ta.size()), bp(tb.size());
        for (size_t i = 0; i < ta.size(); ++i) ap[i] = alg.label_parity(ta[i]);
        for (size_t i = 0; i < tb.size(); ++i) bp[i] = alg.label_parity(tb[i]);
        sign = koszul_interleave_sign(ap, bp, sigma_for_sign);
      }
      // cartesian expansion of per-slot structure constants
      std::vector<std::pair<LabelTuple, HPoly>> partial;
      HPoly base = ca * cb;
      if (sign < 0) base = -base;
      partial.emplace_back(LabelTuple{}, base);
      for (size_t j = 0; j < ta.size(); ++j) {
        std::vector<std::pair<LabelTuple, HPoly>> next;
        for (const auto& [pref, pc] : partial)
          for (const auto& [lab, sc] : alg.mul(ta[j], tb[j])) {
            LabelTuple ext = pref;
            ext.push_back(lab);
            next.emplace_back(std::move(ext), pc * sc);
          }
        partial = std::move(next);
      }
      for (auto& [tup, c] : partial) raw_add(out, tup, c);
    }
  return out;
}

}  // namespace detail

/// Product of m coinvariant classes over (A^{tensor n})_K: the averaged
/// formula with exact 1/#K^{m-1} prefactor, folded two factors at a time.
inline SymElement polya_product(const std::vector<SymElement>& factors, const PermGroup& K,
                                const BasedAlgebra& alg) {
  if (factors.empty()) throw std::invalid_argument("polya_product: no factors");
  bool graded = !alg.parity.empty();
  SymElement acc = factors[0];
  for (size_t fi = 1; fi < factors.size(); ++fi) {
    SymElement next;
    for (const auto& [ta, ca] : acc.terms)
      for (const auto& [tb, cb] : factors[fi].terms) {
        for (const Perm& sigma : K.elements) {
          detail::RawElement left, right;
          left.emplace(ta, HPoly::one());
          right.emplace(sigma.act(tb), HPoly::one());
          int psign = graded ? koszul_perm_sign([&] {
            std::vector<unsigned> bp(tb.size());
            for (size_t i = 0; i < tb.size(); ++i) bp[i] = alg.label_parity(tb[i]);
            return bp;
          }(), sigma)
                             : 1;
          auto prod = detail::raw_slotwise_mul(left, right, alg, Perm::identity(K.n));
          for (const auto& [tup, c] : prod) {
            auto [rep, csign] = canonicalize(tup, K, alg);
            if (csign == 0) continue;
            HPoly term = (ca * cb * c).div_nat(Int((long)K.order()));
            if (psign * csign < 0) term = -term;
            next.add(rep, term);
          }
        }
      }
    acc = next;
  }
  // re-canonicalize the first factor's reps in case they were not canonical
  if (factors.size() == 1) {
    SymElement out;
    for (const auto& [t, c] : acc.terms) {
      auto [rep, s] = canonicalize(t, K, alg);
      if (s == 0) continue;
      out.add(rep, s < 0 ? -c : c);
    }
    return out;
  }
  return acc;
}

/// Diagonal wreath action descriptor for the oracle: a cyclic Z_m character
/// action per slot (weights per label, averaged analytically as divisibility
/// indicators), an optional reflection coset (dihedral), and an optional
/// coupled-parity mode (type D Weyl group: the even-sign subgroup of Z_2^n).
struct WreathAction {
  PermGroup K;
  unsigned modulus = 1;
  std::vector<long> weight;            // per label; empty = all zero
  bool reflection = false;
  std::vector<unsigned> reflect_label;  // label involution, required if reflection
  bool same_parity_coupling = false;    // overrides modulus handling

  long w(unsigned label) const { return weight.empty() ? 0 : weight[label]; }
};

namespace detail {

inline bool admissible_tuple(const LabelTuple& t, const WreathAction& act) {
  if (act.same_parity_coupling) {
    bool all_even = true, all_odd = true;
    for (unsigned l : t) {
      if (act.w(l) % 2 == 0) all_odd = false;
      else all_even = false;
    }
    return all_even || all_odd;
  }
  for (unsigned l : t)
    if (act.w(l) % (long)act.modulus != 0) return false;
  return true;
}

/// Average of a raw tensor over the diagonal (non-permutation) part of the
/// wreath group, computed analytically. Divisibility indicators carry no
/// normalization residue; the dihedral coset average contributes 1/2 each.
inline RawElement diagonal_average(const RawElement& x, const WreathAction& act) {
  RawElement out;
  for (const auto& [t, c] : x) {
    if (act.same_parity_coupling) {
      if (admissible_tuple(t, act)) raw_add(out, t, c);
      continue;
    }
    if (!act.reflection) {
      if (admissible_tuple(t, act)) raw_add(out, t, c);
      continue;
    }
    // each slot independently: 1/2([m|w(l)] l + [m|w(tau l)] tau l)
    std::vector<std::pair<LabelTuple, HPoly>> partial;
    partial.emplace_back(LabelTuple{}, c);
    for (unsigned l : t) {
      std::vector<std::pair<LabelTuple, HPoly>> next;
      unsigned tl = act.reflect_label[l];
      for (const auto& [pref, pc] : partial) {
        if (act.w(l) % (long)act.modulus == 0) {
          LabelTuple e = pref;
          e.push_back(l);
          next.emplace_back(std::move(e), pc.div_nat(2));
        }
        if (act.w(tl) % (long)act.modulus == 0) {
          LabelTuple e = pref;
          e.push_back(tl);
          next.emplace_back(std::move(e), pc.div_nat(2));
        }
      }
      partial = std::move(next);
    }
    for (auto& [tup, cc] : partial) raw_add(out, tup, cc);
  }
  return out;
}

}  // namespace detail

/// Canonical representative under K together with the reflection part of the
/// wreath action; inadmissible tuples are the zero class.
inline std::pair<LabelTuple, int> wreath_canonicalize(const LabelTuple& t,
                                                      const WreathAction& act,
                                                      const BasedAlgebra& alg) {
  if (!detail::admissible_tuple(t, act)) return {t, 0};
  if (!act.reflection) return canonicalize(t, act.K, alg);
  LabelTuple best;
  bool first = true;
  for (const Perm& k : act.K.elements) {
    LabelTuple img = k.act(t);
    // all 2^n slotwise reflections
    const size_t n = img.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
      LabelTuple v = img;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t(1) << i)) v[i] = act.reflect_label[v[i]];
      if (!detail::admissible_tuple(v, act)) continue;
      if (first || v < best) {
        best = v;
        first = false;
      }
    }
  }
  return {best, 1};
}

/// Brute-force product: expand representatives, average every factor after
/// the first over the full wreath group (diagonal part analytic, permutation
/// part enumerated), multiply slotwise, canonicalize at the end.
inline SymElement oracle_product(const std::vector<SymElement>& factors, const WreathAction& act,
                                 const BasedAlgebra& alg) {
  if (factors.empty()) throw std::invalid_argument("oracle_product: no factors");
  bool graded = !alg.parity.empty();
  detail::RawElement acc;
  for (const auto& [t, c] : factors[0].terms) detail::raw_add(acc, t, c);
  for (size_t fi = 1; fi < factors.size(); ++fi) {
    detail::RawElement rhs;
    for (const auto& [t, c] : factors[fi].terms) detail::raw_add(rhs, t, c);
    rhs = detail::diagonal_average(rhs, act);
    detail::RawElement next;
    for (const Perm& sigma : act.K.elements) {
      detail::RawElement moved;
      for (const auto& [t, c] : rhs) {
        HPoly cc = c;
        if (graded) {
          std::vector<unsigned> bp(t.size());
          for (size_t i = 0; i < t.size(); ++i) bp[i] = alg.label_parity(t[i]);
          if (koszul_perm_sign(bp, sigma) < 0) cc = -cc;
        }
        detail::raw_add(moved, sigma.act(t), cc);
      }
      auto prod = detail::raw_slotwise_mul(acc, moved, alg, Perm::identity(act.K.n));
      for (const auto& [t, c] : prod)
        detail::raw_add(next, t, c.div_nat(Int((long)act.K.order())));
    }
    acc = std::move(next);
  }
  SymElement out;
  for (const auto& [t, c] : acc) {
    auto [rep, s] = wreath_canonicalize(t, act, alg);
    if (s == 0) continue;
    out.add(rep, s < 0 ? -c : c);
  }
  return out;
}

/// Plain S_n / subgroup action with no diagonal part.
inline WreathAction plain_action(PermGroup K) {
  WreathAction a;
  a.K = std::move(K);
  return a;
}

// ---------------------------------------------------------------------------
// Symmetric Boolean algebra

/// [a][b] = (1/C(n,b)) sum_k C(a, b-k) C(n-a, k) [a+k], k = 0..min(b, n-a).
inline std::map<unsigned, Rat> boolean_product(unsigned a, unsigned b, unsigned n) {
  if (a > n || b > n) throw std::invalid_argument("boolean_product: class out of range");
  std::map<unsigned, Rat> out;
  Rat denom(binomial(n, b));
  for (unsigned k = 0; k <= std::min(b, n - a); ++k) {
    Int c = binomial(a, b - k) * binomial(n - a, k);
    if (c != 0) out[a + k] += Rat(c) / denom;
  }
  return out;
}

/// Direct definition: (1/n!) sum_sigma [A union sigma(B)] over explicit
/// subsets with |A| = a, |B| = b.
inline std::map<unsigned, Rat> boolean_product_oracle(unsigned a, unsigned b, unsigned n) {
  if (a > n || b > n) throw std::invalid_argument("boolean_product: class out of range");
  PermGroup S = symmetric_group(n);
  std::vector<bool> A(n, false), B(n, false);
  for (unsigned i = 0; i < a; ++i) A[i] = true;
  for (unsigned i = 0; i < b; ++i) B[i] = true;
  std::map<unsigned, Rat> out;
  Rat inv = Rat(1) / Rat((long)S.order());
  for (const Perm& s : S.elements) {
    unsigned card = 0;
    for (unsigned i = 0; i < n; ++i)
      if (A[i] || B[s.inverse().images[i]]) ++card;
    out[card] += inv;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace qsf
