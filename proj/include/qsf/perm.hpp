#pragma once

// Finite permutation groups: enumeration from generators, cycle types,
// cycle index polynomials and symmetric-power dimension counts.

#include "qsf/combinat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsf {

/// Permutation of {0..n-1} stored as an image sequence.
struct Perm {
  std::vector<int> images;

  Perm() = default;
  explicit Perm(std::vector<int> im) : images(std::move(im)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 0 || v >= (int)images.size() || seen[v])
        throw std::invalid_argument("Perm: image sequence is not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(unsigned n) {
    std::vector<int> im(n);
    for (unsigned i = 0; i < n; ++i) im[i] = (int)i;
    return Perm(std::move(im));
  }

  unsigned degree() const { return (unsigned)images.size(); }
  int operator()(int i) const { return images[i]; }

  /// (p*q)(i) = p(q(i))
  friend Perm operator*(const Perm& p, const Perm& q) {
    std::vector<int> im(p.images.size());
    for (size_t i = 0; i < im.size(); ++i) im[i] = p.images[q.images[i]];
    Perm r;
    r.images = std::move(im);
    return r;
  }

  Perm inverse() const {
    std::vector<int> im(images.size());
    for (size_t i = 0; i < images.size(); ++i) im[images[i]] = (int)i;
    Perm r;
    r.images = std::move(im);
    return r;
  }

  bool is_identity() const {
    for (size_t i = 0; i < images.size(); ++i)
      if (images[i] != (int)i) return false;
    return true;
  }

  /// Number of cycles of each length; entry [s-1] counts s-cycles.
  std::vector<unsigned> cycle_type() const {
    std::vector<unsigned> counts(images.size(), 0);
    std::vector<bool> seen(images.size(), false);
    for (size_t i = 0; i < images.size(); ++i) {
      if (seen[i]) continue;
      unsigned len = 0;
      int j = (int)i;
      while (!seen[j]) {
        seen[j] = true;
        j = images[j];
        ++len;
      }
      ++counts[len - 1];
    }
    return counts;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.images == b.images; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images < b.images; }

  /// Applies the place action t -> (t_{p^{-1}(1)},...,t_{p^{-1}(n)}).
  template <class T>
  std::vector<T> act(const std::vector<T>& t) const {
    std::vector<T> r(t.size());
    for (size_t i = 0; i < t.size(); ++i) r[images[i]] = t[i];
    return r;
  }
};

/// Parses products of disjoint cycles in 1-based notation, e.g. "(1 2)(3 4)".
/// Fixed points may be omitted.
inline Perm parse_cycles(const std::string& text, unsigned n) {
  std::vector<int> im(n);
  for (unsigned i = 0; i < n; ++i) im[i] = (int)i;
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos; };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit((unsigned char)text[pos]))
        throw std::invalid_argument("cycle notation: expected number");
      int v = 0;
      while (pos < text.size() && isdigit((unsigned char)text[pos]))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > (int)n) throw std::invalid_argument("cycle notation: point out of range");
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
    }
    if (pos >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
    ++pos;  // ')'
    for (size_t i = 0; i + 1 < cyc.size(); ++i) im[cyc[i]] = cyc[i + 1];
    if (!cyc.empty()) im[cyc.back()] = cyc.front();
    skip_ws();
  }
  return Perm(std::move(im));
}

/// An explicitly enumerated subgroup of S_n, elements sorted lexicographically.
struct PermGroup {
  unsigned n = 0;
  std::vector<Perm> elements;

  size_t order() const { return elements.size(); }
};

/// Breadth-first closure of a generator set.
inline PermGroup enumerate_group(unsigned n, const std::vector<Perm>& gens) {
  for (const Perm& g : gens)
    if (g.degree() != n) throw std::invalid_argument("enumerate_group: generator degree mismatch");
  std::set<Perm> seen;
  std::vector<Perm> frontier;
  seen.insert(Perm::identity(n));
  frontier.push_back(Perm::identity(n));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& h : frontier)
      for (const Perm& g : gens) {
        Perm p = g * h;
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  PermGroup K;
  K.n = n;
  K.elements.assign(seen.begin(), seen.end());
  return K;
}

inline PermGroup symmetric_group(unsigned n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<int> t(n);
    for (unsigned i = 0; i < n; ++i) t[i] = (int)i;
    std::swap(t[0], t[1]);
    gens.emplace_back(t);
    std::vector<int> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = (int)((i + 1) % n);
    gens.emplace_back(c);
  }
  return enumerate_group(n, gens);
}

inline PermGroup trivial_group(unsigned n) { return enumerate_group(n, {}); }

/// Cycle index polynomial: map from (b_1,...,b_n) cycle-count vectors to
/// rational coefficients. Sums to 1.
using CycleIndex = std::map<std::vector<unsigned>, Rat>;

inline CycleIndex cycle_index(const PermGroup& K) {
  CycleIndex P;
  Rat inv = Rat(1) / Rat((long)K.order());
  for (const Perm& k : K.elements) P[k.cycle_type()] += inv;
  return P;
}

/// dim((A^{tensor n})_K) = P_K(dim A,...,dim A).
inline Int sym_dimension(unsigned dimA, const PermGroup& K) {
  Rat total = 0;
  for (const Perm& k : K.elements) {
    auto ct = k.cycle_type();
    Int term = 1;
    for (unsigned s = 0; s < ct.size(); ++s)
      for (unsigned c = 0; c < ct[s]; ++c) term *= dimA;
    total += Rat(term);
  }
  total /= Rat((long)K.order());
  if (denominator(total) != 1)
    throw std::logic_error("sym_dimension: non-integral cycle index evaluation");
  return numerator(total);
}

/// Parses the CLI group grammar: "Sn", "trivial", or gens:"(1 2),(1 2 3)".
inline PermGroup parse_group(const std::string& spec, unsigned n) {
  if (spec == "trivial") return trivial_group(n);
  if (spec.size() >= 2 && (spec[0] == 'S' || spec[0] == 's')) {
    unsigned deg = (unsigned)std::stoul(spec.substr(1));
    if (deg != n) throw std::invalid_argument("group spec degree disagrees with --n");
    return symmetric_group(n);
  }
  const std::string key = "gens:";
  if (spec.rfind(key, 0) == 0) {
    std::string body = spec.substr(key.size());
    if (body.size() >= 2 && body.front() == '"' && body.back() == '"')
      body = body.substr(1, body.size() - 2);
    std::vector<Perm> gens;
    size_t pos = 0;
    while (pos < body.size()) {
      size_t next = pos;
      int depth = 0;
      while (next < body.size() && !(body[next] == ',' && depth == 0)) {
        if (body[next] == '(') ++depth;
        if (body[next] == ')') --depth;
        ++next;
      }
      std::string piece = body.substr(pos, next - pos);
      if (piece.find('(') != std::string::npos) gens.push_back(parse_cycles(piece, n));
      pos = next + (next < body.size() ? 1 : 0);
    }
    return enumerate_group(n, gens);
  }
  throw std::invalid_argument("unrecognized group spec: " + spec);
}

}  // namespace qsf
