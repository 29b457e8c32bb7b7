#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/superalg.hpp"
#include "qsf/sympow.hpp"

#include <random>

using namespace qsf;

static std::vector<PermGroup> subgroups_of_s3() {
  return {trivial_group(3),
          enumerate_group(3, {parse_cycles("(1 2)", 3)}),
          enumerate_group(3, {parse_cycles("(1 3)", 3)}),
          enumerate_group(3, {parse_cycles("(2 3)", 3)}),
          enumerate_group(3, {parse_cycles("(1 2 3)", 3)}),
          symmetric_group(3)};
}

static std::vector<LabelTuple> all_tuples(unsigned dim, unsigned n) {
  std::vector<LabelTuple> out;
  LabelTuple t(n, 0);
  while (true) {
    out.push_back(t);
    size_t i = 0;
    while (i < n && t[i] + 1 == dim) t[i++] = 0;
    if (i == n) break;
    ++t[i];
  }
  return out;
}

TEST_CASE("canonicalize basics") {
  auto poly = truncated_poly_algebra(4);
  auto [rep, s] = canonicalize({3, 1, 2}, symmetric_group(3), poly);
  CHECK(rep == LabelTuple{1, 2, 3});
  CHECK(s == 1);

  auto [rep2, s2] = canonicalize({2, 1}, trivial_group(2), poly);
  CHECK(rep2 == LabelTuple{2, 1});
  CHECK(s2 == 1);

  auto ext = exterior_algebra(1);
  auto [rep3, s3] = canonicalize({1, 1}, symmetric_group(2), ext);
  CHECK(s3 == 0);
}

TEST_CASE("polya product with trivial group is slotwise") {
  auto poly = truncated_poly_algebra(6);
  auto r = polya_product({SymElement::basis({1, 2}), SymElement::basis({2, 1})},
                         trivial_group(2), poly);
  CHECK(r.terms.size() == 1);
  CHECK(r.terms.at({3, 3}) == HPoly::one());
}

TEST_CASE("polya product S2 polynomial example") {
  // class(x^a ox x^b) class(x^c ox x^d) = 1/2 class(x^{a+c} ox x^{b+d})
  //                                     + 1/2 class(x^{a+d} ox x^{b+c})
  auto poly = truncated_poly_algebra(8);
  auto r = polya_product({SymElement::basis({1, 0}), SymElement::basis({2, 1})},
                         symmetric_group(2), poly);
  HPoly half(GaussRat(Rat(1, 2)));
  CHECK(r.terms.at({1, 3}) == half);
  CHECK(r.terms.at({2, 2}) == half);

  // squares collapse: class(x ox x)^2 = class(x^2 ox x^2)
  auto sq = polya_product({SymElement::basis({1, 1}), SymElement::basis({1, 1})},
                          symmetric_group(2), poly);
  CHECK(sq.terms.size() == 1);
  CHECK(sq.terms.at({2, 2}) == HPoly::one());
}

TEST_CASE("formula equals oracle over three algebras, subgroups of S3") {
  std::vector<BasedAlgebra> algs = {truncated_poly_algebra(3), boolean_algebra(),
                                    truncated_weyl_algebra(3, 3)};
  for (const auto& alg : algs)
    for (const auto& K : subgroups_of_s3()) {
      auto act = plain_action(K);
      auto tuples = all_tuples(alg.dim, 3);
      for (const auto& ta : tuples)
        for (const auto& tb : tuples) {
          auto canonA = canonicalize(ta, K, alg);
          auto canonB = canonicalize(tb, K, alg);
          if (canonA.first != ta || canonB.first != tb) continue;  // one rep per orbit
          std::vector<SymElement> fs = {SymElement::basis(ta), SymElement::basis(tb)};
          CHECK(polya_product(fs, K, alg) == oracle_product(fs, act, alg));
        }
    }
}

TEST_CASE("formula equals oracle on random triples") {
  std::mt19937 rng(4242);
  std::vector<BasedAlgebra> algs = {truncated_poly_algebra(3), boolean_algebra(),
                                    truncated_weyl_algebra(3, 3)};
  auto groups = subgroups_of_s3();
  for (int trial = 0; trial < 100; ++trial) {
    const auto& alg = algs[rng() % algs.size()];
    const auto& K = groups[rng() % groups.size()];
    std::vector<SymElement> fs;
    for (int f = 0; f < 3; ++f) {
      LabelTuple t(3);
      for (auto& x : t) x = rng() % alg.dim;
      fs.push_back(SymElement::basis(canonicalize(t, K, alg).first));
    }
    CHECK(polya_product(fs, K, alg) == oracle_product(fs, plain_action(K), alg));
  }
}

TEST_CASE("polya product associativity away from truncation") {
  // degrees bounded so products never leave the exponent ranges
  std::mt19937 rng(99);
  auto poly = truncated_poly_algebra(7);
  auto weyl = truncated_weyl_algebra(7, 7);
  auto boolean = boolean_algebra();
  std::vector<std::pair<const BasedAlgebra*, unsigned>> cases = {
      {&poly, 3}, {&weyl, 3}, {&boolean, 2}};
  for (auto [alg, maxlab] : cases)
    for (int trial = 0; trial < 25; ++trial) {
      auto K = subgroups_of_s3()[rng() % 6];
      std::vector<SymElement> fs;
      for (int f = 0; f < 3; ++f) {
        LabelTuple t(3);
        for (auto& x : t) x = rng() % maxlab;
        fs.push_back(SymElement::basis(canonicalize(t, K, *alg).first));
      }
      auto ab = polya_product({fs[0], fs[1]}, K, *alg);
      auto bc = polya_product({fs[1], fs[2]}, K, *alg);
      CHECK(polya_product({ab, fs[2]}, K, *alg) == polya_product({fs[0], bc}, K, *alg));
    }
}

TEST_CASE("constructed algebras pass checks") {
  check_algebra(truncated_poly_algebra(5));
  check_algebra(boolean_algebra());
  check_algebra(exterior_algebra(3));
  check_algebra(clifford_algebra(3));
  check_algebra(matrix_unit_algebra(3));
}

TEST_CASE("boolean product closed formula vs oracle and sum rule") {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned a = 0; a <= n; ++a)
      for (unsigned b = 0; b <= n; ++b)
        CHECK(boolean_product(a, b, n) == boolean_product_oracle(a, b, n));
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned a = 0; a <= n; ++a)
      for (unsigned b = 0; b <= n; ++b) {
        Rat total = 0;
        for (const auto& [cls, c] : boolean_product(a, b, n)) total += c;
        CHECK(total == 1);
      }
  // pinned reference values
  CHECK(boolean_product(0, 2, 5) == std::map<unsigned, Rat>{{2, Rat(1)}});
  CHECK(boolean_product(3, 1, 3) == std::map<unsigned, Rat>{{3, Rat(1)}});
  CHECK(boolean_product(1, 1, 2) == std::map<unsigned, Rat>{{1, Rat(1, 2)}, {2, Rat(1, 2)}});
}

TEST_CASE("exterior and clifford pairwise products") {
  CHECK(ext_product(0b001, 0b010) == std::make_pair(1, ExtMono(0b011)));
  CHECK(ext_product(0b010, 0b001) == std::make_pair(-1, ExtMono(0b011)));
  CHECK(ext_product(0b001, 0b001).first == 0);
  CHECK(clifford_product(0b001, 0b001) == std::make_pair(1, ExtMono(0)));
  CHECK(clifford_product(0b001, 0b010) == std::make_pair(1, ExtMono(0b011)));
  // th1 th2 th2 = th1
  CHECK(clifford_product(0b011, 0b010) == std::make_pair(1, ExtMono(0b001)));
}

TEST_CASE("blade products associative through m = 4") {
  for (unsigned m = 1; m <= 4; ++m) {
    unsigned dim = 1u << m;
    for (unsigned I = 0; I < dim; ++I)
      for (unsigned J = 0; J < dim; ++J)
        for (unsigned K = 0; K < dim; ++K) {
          {
            auto [s1, IJ] = ext_product(I, J);
            auto [s2, JK] = ext_product(J, K);
            int lhs_s = 0, rhs_s = 0;
            ExtMono lhs_m = 0, rhs_m = 0;
            if (s1) {
              auto [s3, M] = ext_product(IJ, K);
              lhs_s = s1 * s3;
              lhs_m = M;
            }
            if (s2) {
              auto [s3, M] = ext_product(I, JK);
              rhs_s = s2 * s3;
              rhs_m = M;
            }
            CHECK(lhs_s == rhs_s);
            if (lhs_s) CHECK(lhs_m == rhs_m);
          }
          {
            auto [s1, IJ] = clifford_product(I, J);
            auto [s2, JK] = clifford_product(J, K);
            auto [s3, L] = clifford_product(IJ, K);
            auto [s4, R] = clifford_product(I, JK);
            CHECK(s1 * s3 == s2 * s4);
            CHECK(L == R);
          }
        }
  }
}

TEST_CASE("odd symmetric product equals graded oracle") {
  for (unsigned m = 1; m <= 3; ++m) {
    auto ext = exterior_algebra(m);
    for (unsigned n = 1; n <= 3; ++n) {
      auto Sn = symmetric_group(n);
      auto act = plain_action(Sn);
      auto tuples = all_tuples(ext.dim, n);
      for (const auto& ti : tuples) {
        if (canonicalize(ti, Sn, ext).first != ti) continue;
        for (const auto& tj : tuples) {
          if (canonicalize(tj, Sn, ext).first != tj) continue;
          std::vector<ExtMono> I(ti.begin(), ti.end()), J(tj.begin(), tj.end());
          auto closed = odd_sym_product(I, J, m);
          auto oracle = oracle_product({SymElement::basis(ti), SymElement::basis(tj)},
                                       act, ext);
          CHECK(closed == oracle);
        }
      }
    }
  }
}

TEST_CASE("odd symmetric algebra is graded commutative at hbar^0") {
  unsigned m = 2, n = 2;
  auto ext = exterior_algebra(m);
  auto Sn = symmetric_group(n);
  auto tuples = all_tuples(ext.dim, n);
  for (const auto& ti : tuples) {
    if (canonicalize(ti, Sn, ext).first != ti) continue;
    unsigned pi = (ext_parity(ti[0]) + ext_parity(ti[1])) & 1;
    for (const auto& tj : tuples) {
      if (canonicalize(tj, Sn, ext).first != tj) continue;
      unsigned pj = (ext_parity(tj[0]) + ext_parity(tj[1])) & 1;
      std::vector<ExtMono> I(ti.begin(), ti.end()), J(tj.begin(), tj.end());
      auto ij = odd_sym_product(I, J, m);
      auto ji = odd_sym_product(J, I, m);
      SymElement signed_ji;
      for (const auto& [t, c] : ji.terms) signed_ji.add(t, (pi && pj) ? -c : c);
      CHECK(ij == signed_ji);
    }
  }
}

TEST_CASE("koszul sign worked example") {
  // sigma = id, n = 2, a = (0,1), b = (1,0): single odd swap gives -1
  CHECK(koszul_interleave_sign({0, 1}, {1, 0}, Perm::identity(2)) == -1);
  CHECK(koszul_interleave_sign({0, 0}, {0, 0}, parse_cycles("(1 2)", 2)) == 1);
}
