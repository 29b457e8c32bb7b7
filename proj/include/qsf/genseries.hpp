#pragma once

// Truncated formal power series check of the exponential generating series
// for Weyl normal coordinates:
//   N = exp( sum_{i>j} u s_i t_j + sum_i t_i + sum_j s_j )
// with s tracking x-exponents and t tracking y-exponents. Each contraction
// joins an x-letter of block i to a y-letter of block j with i > j.

#include "qsf/weyl.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qsf {

namespace detail {

// monomial: exponents of s_1..s_n, t_1..t_n, u  (length 2n+1)
using SeriesMono = std::vector<unsigned>;
using Series = std::map<SeriesMono, Rat>;

struct SeriesBounds {
  unsigned n, amax, bmax, cmax;
  bool admissible(const SeriesMono& m) const {
    for (unsigned i = 0; i < n; ++i)
      if (m[i] > amax) return false;
    for (unsigned i = 0; i < n; ++i)
      if (m[n + i] > bmax) return false;
    return m[2 * n] <= cmax;
  }
};

inline Series series_mul(const Series& p, const Series& q, const SeriesBounds& B) {
  Series r;
  for (const auto& [mp, cp] : p)
    for (const auto& [mq, cq] : q) {
      SeriesMono m(mp.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = mp[i] + mq[i];
      if (!B.admissible(m)) continue;
      Rat& slot = r[m];
      slot += cp * cq;
      if (slot == 0) r.erase(m);
    }
  return r;
}

}  // namespace detail

struct GenSeriesMismatch {
  std::vector<unsigned> a, b;
  unsigned c;
  Rat expected;   // a! b! * series coefficient
  Int reference;  // N(A,c) from the rewriting evaluator
};

/// Expands the exponential truncated to the given coordinatewise bounds and
/// compares every coefficient against the rewriting evaluator. Returns the
/// list of mismatches (expected empty).
inline std::vector<GenSeriesMismatch> genseries_check(unsigned n, unsigned amax, unsigned bmax,
                                                      unsigned cmax) {
  using detail::Series;
  using detail::SeriesMono;
  detail::SeriesBounds B{n, amax, bmax, cmax};
  const size_t width = 2 * (size_t)n + 1;

  Series arg;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < i; ++j) {
      SeriesMono m(width, 0);
      m[i] = 1;      // s_i, x block i
      m[n + j] = 1;  // t_j, y block j
      m[2 * n] = 1;  // u
      arg[m] = 1;
    }
  for (unsigned i = 0; i < n; ++i) {
    SeriesMono m(width, 0);
    m[n + i] = 1;
    arg[m] += 1;
  }
  for (unsigned j = 0; j < n; ++j) {
    SeriesMono m(width, 0);
    m[j] = 1;
    arg[m] += 1;
  }

  Series result, power;
  result[SeriesMono(width, 0)] = 1;
  power[SeriesMono(width, 0)] = 1;
  unsigned max_total = n * amax + n * bmax + cmax;
  for (unsigned r = 1; r <= max_total && !power.empty(); ++r) {
    power = detail::series_mul(power, arg, B);
    Series scaled = power;
    Rat inv_rfact = Rat(1) / Rat(factorial(r));
    for (auto& [m, c] : scaled) c *= inv_rfact;
    for (const auto& [m, c] : scaled) {
      Rat& slot = result[m];
      slot += c;
      if (slot == 0) result.erase(m);
    }
    // keep power scaled as arg^r (unscaled); scaling applied per step above
  }

  std::vector<GenSeriesMismatch> bad;
  std::vector<unsigned> a(n, 0), b(n, 0);
  std::function<void(unsigned)> loop_b;
  std::function<void(unsigned)> loop_a = [&](unsigned idx) {
    if (idx == n) {
      loop_b(0);
      return;
    }
    for (unsigned v = 0; v <= amax; ++v) {
      a[idx] = v;
      loop_a(idx + 1);
    }
  };
  loop_b = [&](unsigned idx) {
    if (idx == n) {
      WeylWord A(n);
      for (unsigned i = 0; i < n; ++i) A[i] = {a[i], b[i]};
      Int afact = 1, bfact = 1;
      for (unsigned i = 0; i < n; ++i) afact *= factorial(a[i]);
      for (unsigned i = 0; i < n; ++i) bfact *= factorial(b[i]);
      for (unsigned c = 0; c <= cmax; ++c) {
        SeriesMono m(width, 0);
        for (unsigned i = 0; i < n; ++i) m[i] = a[i];
        for (unsigned i = 0; i < n; ++i) m[n + i] = b[i];
        m[2 * n] = c;
        auto it = result.find(m);
        Rat coeff = it == result.end() ? Rat(0) : it->second;
        Rat expected = coeff * Rat(afact) * Rat(bfact);
        Int ref = normal_coords_ref(A, c);
        if (expected != Rat(ref)) bad.push_back({a, b, c, expected, ref});
      }
      return;
    }
    for (unsigned v = 0; v <= bmax; ++v) {
      b[idx] = v;
      loop_b(idx + 1);
    }
  };
  loop_a(0);
  return bad;
}

}  // namespace qsf
