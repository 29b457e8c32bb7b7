#pragma once

// Small exact-combinatorics helpers shared across modules.

#include "qsf/coeff.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qsf {

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(const Int& n, unsigned k) {
  if (n >= 0 && Int(k) > n) return 0;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// Falling factorial (m)_k = m(m-1)...(m-k+1).
inline Int falling(const Int& m, unsigned k) {
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) r *= m - i;
  return r;
}

/// Rising factorial m^(k) = m(m+1)...(m+k-1).
inline Int rising(const Int& m, unsigned k) {
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) r *= m + i;
  return r;
}

/// Enumerates all p in N^parts with |p| = total.
inline void for_each_composition(unsigned total, unsigned parts,
                                 const std::function<void(const std::vector<unsigned>&)>& fn) {
  if (parts == 0) {
    if (total == 0) fn({});
    return;
  }
  std::vector<unsigned> p(parts, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned left) {
    if (idx + 1 == parts) {
      p[idx] = left;
      fn(p);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      p[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, total);
}

/// Work budget for brute-force enumerations. Exceeding it throws; enumeration
/// results are never silently truncated.
struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;
  explicit Budget(std::uint64_t lim = 10'000'000) : limit(lim) {}
  void tick(std::uint64_t n = 1) {
    used += n;
    if (used > limit) throw std::runtime_error("enumeration budget exceeded");
  }
};

}  // namespace qsf
