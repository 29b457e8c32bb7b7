#pragma once

// One-variable Weyl algebra W = <x,y>/(yx - xy - h) and M-Weyl algebra
// MW = <x,y>/(yx - xy - x^2 h). The iterative rewriting evaluator
// (normal_order) is the single source of truth; the closed-formula,
// pairing-count and flow-count routes are validated against it.

#include "qsf/combinat.hpp"

#include <array>
#include <map>
#include <tuple>
#include <vector>

namespace qsf {

/// One factor x^a y^b of a word.
struct WeylFactor {
  unsigned a = 0;
  unsigned b = 0;
};

using WeylWord = std::vector<WeylFactor>;

/// Key (x-exponent, y-exponent, hbar-degree). Normal forms of W words live on
/// keys (|a|-k, |b|-k, k); MW words on (|a|+k, |b|-k, k).
struct NormalKey {
  unsigned x = 0, y = 0, h = 0;
  friend bool operator<(const NormalKey& l, const NormalKey& r) {
    return std::tie(l.x, l.y, l.h) < std::tie(r.x, r.y, r.h);
  }
  friend bool operator==(const NormalKey& l, const NormalKey& r) {
    return l.x == r.x && l.y == r.y && l.h == r.h;
  }
};

using WeylNormalForm = std::map<NormalKey, Int>;

inline void nf_add(WeylNormalForm& nf, const NormalKey& k, const Int& c) {
  if (c == 0) return;
  auto it = nf.find(k);
  if (it == nf.end()) {
    nf.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) nf.erase(it);
  }
}

/// y^b x^a = sum_k C(b,k)(a)_k x^{a-k} y^{b-k} h^k.
inline WeylNormalForm reorder_yx(unsigned b, unsigned a) {
  WeylNormalForm nf;
  for (unsigned k = 0; k <= std::min(a, b); ++k)
    nf_add(nf, {a - k, b - k, k}, binomial(b, k) * falling(a, k));
  return nf;
}

/// Multiplies a normal form on the right by x^a y^b, staying normal.
inline WeylNormalForm nf_mul_factor(const WeylNormalForm& nf, unsigned a, unsigned b) {
  WeylNormalForm out;
  for (const auto& [key, c] : nf) {
    for (unsigned k = 0; k <= std::min(a, key.y); ++k) {
      Int coeff = c * binomial(key.y, k) * falling(a, k);
      nf_add(out, {key.x + a - k, key.y - k + b, key.h + k}, coeff);
    }
  }
  return out;
}

/// Normal form of prod_i x^{a_i} y^{b_i}. Reference evaluator for N(A,k).
inline WeylNormalForm normal_order(const WeylWord& w) {
  WeylNormalForm nf;
  nf.emplace(NormalKey{}, 1);
  for (const WeylFactor& f : w) nf = nf_mul_factor(nf, f.a, f.b);
  return nf;
}

inline unsigned word_total_a(const WeylWord& w) {
  unsigned s = 0;
  for (const auto& f : w) s += f.a;
  return s;
}
inline unsigned word_total_b(const WeylWord& w) {
  unsigned s = 0;
  for (const auto& f : w) s += f.b;
  return s;
}

/// N(A,k) read off the rewriting evaluator.
inline Int normal_coords_ref(const WeylWord& A, unsigned k) {
  unsigned ta = word_total_a(A), tb = word_total_b(A);
  if (k > std::min(ta, tb)) return 0;
  auto nf = normal_order(A);
  auto it = nf.find({ta - k, tb - k, k});
  return it == nf.end() ? Int(0) : it->second;
}

/// Closed formula: N(A,k) = sum_{p in N^{n-1}, |p|=k}
///   prod_i C(b_i,p_i) * prod_{i=1}^{n-1} (|a_{>i}| - |p_{>i}|)_{p_i}.
/// p_i counts contractions consumed from y-block i; the last y-block cannot
/// contract with any later x-block.
inline Int normal_coords_closed(const WeylWord& A, unsigned k) {
  const unsigned n = (unsigned)A.size();
  if (n == 0) return k == 0 ? 1 : 0;
  if (k > std::min(word_total_a(A), word_total_b(A))) return 0;
  std::vector<unsigned> suffix_a(n + 1, 0);
  for (int i = (int)n - 1; i >= 0; --i) suffix_a[i] = suffix_a[i + 1] + A[i].a;
  Int total = 0;
  for_each_composition(k, n - 1, [&](const std::vector<unsigned>& p) {
    Int term = 1;
    unsigned psuf = 0;  // |p_{>i}| built from the right
    std::vector<unsigned> psuffix(n, 0);
    for (int i = (int)n - 2; i >= 0; --i) {
      psuffix[i] = psuf;
      psuf += p[i];
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
      term *= binomial(A[i].b, p[i]);
      if (term == 0) break;
      Int avail = Int(suffix_a[i + 1]) - Int(psuffix[i]);
      term *= falling(avail, p[i]);
      if (term == 0) break;
    }
    total += term;
  });
  return total;
}

namespace detail {

struct BlockElems {
  // flattened element list: element e has block block_of[e]
  std::vector<unsigned> block_of;
};

inline BlockElems make_blocks(const WeylWord& A, bool use_a) {
  BlockElems be;
  for (unsigned i = 0; i < A.size(); ++i) {
    unsigned cnt = use_a ? A[i].a : A[i].b;
    for (unsigned c = 0; c < cnt; ++c) be.block_of.push_back(i);
  }
  return be;
}

}  // namespace detail

/// Pairing count: injective partial maps of size k from E = union E_i
/// (|E_i| = a_i) to F = union F_j (|F_j| = b_j) with every pair in
/// E_i x F_j satisfying i > j. Direct backtracking enumeration.
inline Int normal_coords_pairings(const WeylWord& A, unsigned k, Budget budget = Budget()) {
  auto E = detail::make_blocks(A, true);
  auto F = detail::make_blocks(A, false);
  const size_t ne = E.block_of.size(), nf = F.block_of.size();
  if (k > std::min(ne, nf)) return 0;
  Int count = 0;
  std::vector<bool> used_f(nf, false);
  // Process E elements in order; each is skipped or mapped to an unused
  // admissible F element.
  std::function<void(size_t, unsigned)> rec = [&](size_t e, unsigned left) {
    budget.tick();
    if (left == 0) {
      count += 1;
      return;
    }
    if (e >= ne || ne - e < left) return;
    rec(e + 1, left);  // e unmatched
    for (size_t f = 0; f < nf; ++f) {
      if (used_f[f]) continue;
      if (E.block_of[e] <= F.block_of[f]) continue;
      used_f[f] = true;
      rec(e + 1, left - 1);
      used_f[f] = false;
    }
  };
  rec(0, k);
  return count;
}

/// Flow-matrix formula: N(A,c) as a sum over integer matrices (c_{ij}),
/// i > j, sum c_{ij} = c, where c_{ij} counts contractions between x-block i
/// and y-block j. Row/column factors: C(a_i, r_i) r_i! * C(b_j, s_j) s_j!
/// divided by prod c_{ij}!.
inline Int normal_coords_flows(const WeylWord& A, unsigned c) {
  const unsigned n = (unsigned)A.size();
  if (n == 0) return c == 0 ? 1 : 0;
  // cells (i,j) with i > j, i in [2..n], j in [1..i-1] (1-based)
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = 0; j < i; ++j) cells.emplace_back(i, j);
  Int total = 0;
  std::vector<unsigned> val(cells.size(), 0);
  std::function<void(size_t, unsigned)> rec = [&](size_t idx, unsigned left) {
    if (idx == cells.size()) {
      if (left != 0) return;
      std::vector<unsigned> row(n, 0), col(n, 0);
      for (size_t t = 0; t < cells.size(); ++t) {
        row[cells[t].first] += val[t];
        col[cells[t].second] += val[t];
      }
      Int term = 1;
      for (unsigned i = 0; i < n; ++i) {
        term *= binomial(A[i].a, row[i]) * factorial(row[i]);
        term *= binomial(A[i].b, col[i]) * factorial(col[i]);
      }
      if (term == 0) return;
      for (unsigned v : val) term /= factorial(v);
      total += term;
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      val[idx] = v;
      rec(idx + 1, left - v);
    }
    val[idx] = 0;
  };
  rec(0, c);
  return total;
}

// ---------------------------------------------------------------------------
// M-Weyl algebra

/// y^b x^a = sum_k C(b,k) a^(k) x^{a+k} y^{b-k} h^k.
inline WeylNormalForm mweyl_reorder(unsigned b, unsigned a) {
  WeylNormalForm nf;
  for (unsigned k = 0; k <= b; ++k)
    nf_add(nf, {a + k, b - k, k}, binomial(b, k) * rising(a, k));
  return nf;
}

inline WeylNormalForm mweyl_nf_mul_factor(const WeylNormalForm& nf, unsigned a, unsigned b) {
  WeylNormalForm out;
  for (const auto& [key, c] : nf) {
    for (unsigned k = 0; k <= key.y; ++k) {
      Int coeff = c * binomial(key.y, k) * rising(a, k);
      if (coeff == 0) continue;
      nf_add(out, {key.x + a + k, key.y - k + b, key.h + k}, coeff);
    }
  }
  return out;
}

inline WeylNormalForm mweyl_normal_order(const WeylWord& w) {
  WeylNormalForm nf;
  nf.emplace(NormalKey{}, 1);
  for (const WeylFactor& f : w) nf = mweyl_nf_mul_factor(nf, f.a, f.b);
  return nf;
}

inline Int mweyl_coords_ref(const WeylWord& A, unsigned k) {
  unsigned ta = word_total_a(A), tb = word_total_b(A);
  if (k > tb) return 0;
  auto nf = mweyl_normal_order(A);
  auto it = nf.find({ta + k, tb - k, k});
  return it == nf.end() ? Int(0) : it->second;
}

/// Closed formula with rising factorials:
/// N_M(A,k) = sum_{p} prod_i C(b_i,p_i) prod_{i=1}^{n-1} (|a_{>i}|+|p_{>i}|)^(p_i).
inline Int mweyl_coords_closed(const WeylWord& A, unsigned k) {
  const unsigned n = (unsigned)A.size();
  if (n == 0) return k == 0 ? 1 : 0;
  if (k > word_total_b(A)) return 0;
  std::vector<unsigned> suffix_a(n + 1, 0);
  for (int i = (int)n - 1; i >= 0; --i) suffix_a[i] = suffix_a[i + 1] + A[i].a;
  Int total = 0;
  for_each_composition(k, n - 1, [&](const std::vector<unsigned>& p) {
    Int term = 1;
    std::vector<unsigned> psuffix(n, 0);
    unsigned psuf = 0;
    for (int i = (int)n - 2; i >= 0; --i) {
      psuffix[i] = psuf;
      psuf += p[i];
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
      term *= binomial(A[i].b, p[i]);
      if (term == 0) break;
      term *= rising(Int(suffix_a[i + 1]) + Int(psuffix[i]), p[i]);
    }
    total += term;
  });
  return total;
}

/// Function count for N_M: each y-letter in block j is either free or
/// inserted at some position of the ordered image list of an x-letter in a
/// later block. Enumerates (assignment, insertion position) pairs.
inline Int mweyl_coords_functions(const WeylWord& A, unsigned k, Budget budget = Budget()) {
  // F-letters (images' domain) have sizes a_i, E-letters sizes b_i.
  auto F = detail::make_blocks(A, true);   // block sizes a_i
  auto E = detail::make_blocks(A, false);  // block sizes b_i
  const size_t ne = E.block_of.size(), nfl = F.block_of.size();
  if (k > ne) return 0;
  std::vector<unsigned> list_len(nfl, 0);
  Int count = 0;
  std::function<void(size_t, unsigned)> rec = [&](size_t e, unsigned left) {
    budget.tick();
    if (left == 0) {
      count += 1;
      return;
    }
    if (e >= ne || ne - e < left) return;
    rec(e + 1, left);  // y-letter e stays free
    for (size_t f = 0; f < nfl; ++f) {
      // condition: y in E_j may attach to x in F_i only when i > j
      if (F.block_of[f] <= E.block_of[e]) continue;
      for (unsigned pos = 0; pos <= list_len[f]; ++pos) {
        ++list_len[f];
        rec(e + 1, left - 1);
        --list_len[f];
      }
    }
  };
  rec(0, k);
  return count;
}

}  // namespace qsf
