#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/genseries.hpp"
#include "qsf/weyl.hpp"

#include <random>

using namespace qsf;

static std::vector<WeylWord> small_words(unsigned n, unsigned emax) {
  // all words of n factors with exponents in [0, emax]
  std::vector<WeylWord> out;
  std::vector<unsigned> exps(2 * n, 0);
  while (true) {
    WeylWord w(n);
    for (unsigned i = 0; i < n; ++i) w[i] = {exps[2 * i], exps[2 * i + 1]};
    out.push_back(w);
    size_t i = 0;
    while (i < exps.size() && exps[i] == emax) exps[i++] = 0;
    if (i == exps.size()) break;
    ++exps[i];
  }
  return out;
}

TEST_CASE("yx reordering base cases") {
  auto nf = reorder_yx(1, 1);  // y x = x y + h
  CHECK(nf.size() == 2);
  CHECK(nf.at({1, 1, 0}) == 1);
  CHECK(nf.at({0, 0, 1}) == 1);

  nf = reorder_yx(2, 2);  // y^2 x^2 = x^2 y^2 + 4 x y h + 2 h^2
  CHECK(nf.at({2, 2, 0}) == 1);
  CHECK(nf.at({1, 1, 1}) == 4);
  CHECK(nf.at({0, 0, 2}) == 2);

  nf = reorder_yx(3, 1);  // y^3 x = x y^3 + 3 y^2 h
  CHECK(nf.at({1, 3, 0}) == 1);
  CHECK(nf.at({0, 2, 1}) == 3);
}

TEST_CASE("normal_order agrees with factor-by-factor reordering") {
  // (x y)(x y) = x^2 y^2 + x y h
  auto nf = normal_order({{1, 1}, {1, 1}});
  CHECK(nf.at({2, 2, 0}) == 1);
  CHECK(nf.at({1, 1, 1}) == 1);
  // empty word is the unit
  nf = normal_order({});
  CHECK(nf.size() == 1);
  CHECK(nf.at({0, 0, 0}) == 1);
}

TEST_CASE("all four Weyl routes agree on small words") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& w : small_words(n, n == 3 ? 2 : 3)) {
      unsigned kmax = std::min(word_total_a(w), word_total_b(w));
      for (unsigned k = 0; k <= kmax; ++k) {
        Int ref = normal_coords_ref(w, k);
        CHECK(normal_coords_closed(w, k) == ref);
        CHECK(normal_coords_pairings(w, k) == ref);
        CHECK(normal_coords_flows(w, k) == ref);
      }
    }
  }
}

TEST_CASE("routes agree on random larger words") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = 2 + rng() % 3;
    WeylWord w(n);
    for (auto& f : w) f = {unsigned(rng() % 4), unsigned(rng() % 4)};
    unsigned kmax = std::min(word_total_a(w), word_total_b(w));
    for (unsigned k = 0; k <= kmax; ++k) {
      Int ref = normal_coords_ref(w, k);
      CHECK(normal_coords_closed(w, k) == ref);
      CHECK(normal_coords_flows(w, k) == ref);
    }
  }
}

TEST_CASE("falling factorial identity in t") {
  // prod_i (t + |a_{>i}| - |b_{>i}|)_{b_i} = sum_k N(A,k) (t)_{|b|-k}
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned n = 1 + rng() % 3;
    WeylWord w(n);
    for (auto& f : w) f = {unsigned(rng() % 3), unsigned(rng() % 3)};
    unsigned tb = word_total_b(w);
    std::vector<unsigned> suf_a(n + 1, 0), suf_b(n + 1, 0);
    for (int i = (int)n - 1; i >= 0; --i) {
      suf_a[i] = suf_a[i + 1] + w[i].a;
      suf_b[i] = suf_b[i + 1] + w[i].b;
    }
    for (int t = -3; t <= (int)tb + 3; ++t) {
      Int lhs = 1;
      for (unsigned i = 0; i < n; ++i)
        lhs *= falling(Int(t) + suf_a[i + 1] - suf_b[i + 1], w[i].b);
      Int rhs = 0;
      for (unsigned k = 0; k <= std::min(word_total_a(w), tb); ++k)
        rhs += normal_coords_ref(w, k) * falling(Int(t), tb - k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("generating series matches the rewriting evaluator") {
  CHECK(genseries_check(1, 3, 3, 3).empty());
  CHECK(genseries_check(2, 2, 2, 3).empty());
  CHECK(genseries_check(3, 1, 1, 2).empty());
}

TEST_CASE("M-Weyl reordering base cases") {
  auto nf = mweyl_reorder(1, 1);  // y x = x y + x^2 h
  CHECK(nf.at({1, 1, 0}) == 1);
  CHECK(nf.at({2, 0, 1}) == 1);

  nf = mweyl_reorder(2, 1);  // y^2 x = x y^2 + 2 x^2 y h + 2 x^3 h^2
  CHECK(nf.at({1, 2, 0}) == 1);
  CHECK(nf.at({2, 1, 1}) == 2);
  CHECK(nf.at({3, 0, 2}) == 2);

  nf = mweyl_reorder(1, 2);  // y x^2 = x^2 y + 2 x^3 h
  CHECK(nf.at({2, 1, 0}) == 1);
  CHECK(nf.at({3, 0, 1}) == 2);
}

TEST_CASE("M-Weyl routes agree on small words") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& w : small_words(n, 2)) {
      for (unsigned k = 0; k <= word_total_b(w); ++k) {
        Int ref = mweyl_coords_ref(w, k);
        CHECK(mweyl_coords_closed(w, k) == ref);
        CHECK(mweyl_coords_functions(w, k) == ref);
      }
    }
  }
}

TEST_CASE("M-Weyl falling factorial identity in t") {
  // prod_i (t - |a_{>i}| - |b_{>i}|)_{b_i} = sum_k (-1)^k N_M(A,k) (t)_{|b|-k}
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned n = 1 + rng() % 3;
    WeylWord w(n);
    for (auto& f : w) f = {unsigned(rng() % 3), unsigned(rng() % 3)};
    unsigned tb = word_total_b(w);
    std::vector<unsigned> suf_a(n + 1, 0), suf_b(n + 1, 0);
    for (int i = (int)n - 1; i >= 0; --i) {
      suf_a[i] = suf_a[i + 1] + w[i].a;
      suf_b[i] = suf_b[i + 1] + w[i].b;
    }
    for (int t = -3; t <= (int)tb + 3; ++t) {
      Int lhs = 1;
      for (unsigned i = 0; i < n; ++i)
        lhs *= falling(Int(t) - suf_a[i + 1] - suf_b[i + 1], w[i].b);
      Int rhs = 0;
      for (unsigned k = 0; k <= tb; ++k) {
        Int term = mweyl_coords_ref(w, k) * falling(Int(t), tb - k);
        rhs += (k % 2 == 0) ? term : -term;
      }
      CHECK(lhs == rhs);
    }
  }
}
