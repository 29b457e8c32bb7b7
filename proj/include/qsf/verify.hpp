#pragma once

// Named verification sweeps: every closed formula in the library replayed
// against its brute-force counterpart, with instance counts and a mismatch
// list that is empty exactly when the sweep passes. The sweeps back both the
// `verify` subcommand and the acceptance gate.

#include "qsf/genseries.hpp"
#include "qsf/qsym.hpp"
#include "qsf/qsym_oracle.hpp"
#include "qsf/schur.hpp"
#include "qsf/schur_oracle.hpp"
#include "qsf/superalg.hpp"
#include "qsf/sympow.hpp"
#include "qsf/weyl.hpp"

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qsf {

struct VerifyMismatch {
  std::string input, expected, actual;
};

struct VerifyReport {
  std::string suite;
  unsigned long long instances = 0;
  std::vector<VerifyMismatch> mismatches;

  bool pass() const { return mismatches.empty(); }

  void tally(bool ok, const std::string& input, const std::string& expected = "equal",
             const std::string& actual = "unequal") {
    ++instances;
    if (!ok) mismatches.push_back({input, expected, actual});
  }
};

struct VerifyOptions {
  unsigned nmax = 0;  // 0 = suite default
  unsigned emax = 0;
  long budget = 0;
};

namespace verify_detail {

inline std::string word_str(const WeylWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " . ";
    os << "x^" << w[i].a << " y^" << w[i].b;
  }
  return os.str();
}

inline std::string mat_str(const ExpMatrix& A) {
  std::ostringstream os;
  os << "[";
  for (size_t j = 0; j < A.rows.size(); ++j) {
    if (j) os << " | ";
    for (size_t q = 0; q < A.rows[j].a.size(); ++q)
      os << "x^" << A.rows[j].a[q] << " y^" << A.rows[j].b[q];
  }
  os << "]";
  return os.str();
}

inline std::string tuple_str(const LabelTuple& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

inline std::vector<WeylWord> small_words(unsigned n, unsigned emax) {
  std::vector<WeylWord> out;
  std::vector<unsigned> e(2 * n, 0);
  while (true) {
    WeylWord w(n);
    for (unsigned i = 0; i < n; ++i) w[i] = WeylFactor{e[2 * i], e[2 * i + 1]};
    out.push_back(w);
    size_t i = 0;
    while (i < e.size() && e[i] == emax) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

inline std::vector<ExpMatrix> all_matrices(unsigned n, unsigned emax) {
  std::vector<ExpMatrix> out;
  std::vector<unsigned> exps(2 * n, 0);
  while (true) {
    ExpMatrix A;
    for (unsigned j = 0; j < n; ++j) A.rows.push_back(ExpRow{{exps[2 * j]}, {exps[2 * j + 1]}});
    if (A.sorted() == A) out.push_back(A);
    size_t i = 0;
    while (i < exps.size() && exps[i] == emax) exps[i++] = 0;
    if (i == exps.size()) break;
    ++exps[i];
  }
  return out;
}

inline std::vector<LabelTuple> all_tuples(unsigned dim, unsigned n) {
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

inline std::vector<PermGroup> subgroups_of_s3() {
  return {trivial_group(3),
          enumerate_group(3, {parse_cycles("(1 2)", 3)}),
          enumerate_group(3, {parse_cycles("(1 3)", 3)}),
          enumerate_group(3, {parse_cycles("(2 3)", 3)}),
          enumerate_group(3, {parse_cycles("(1 2 3)", 3)}),
          symmetric_group(3)};
}

// 1. Four evaluation routes for the normal-ordering coordinates.
inline VerifyReport suite_weyl_coords(const VerifyOptions& opt) {
  VerifyReport r{"weyl-coords"};
  unsigned nmax = opt.nmax ? opt.nmax : 3;
  unsigned emax = opt.emax ? opt.emax : 3;
  for (unsigned n = 1; n <= nmax; ++n)
    for (const auto& w : small_words(n, emax)) {
      unsigned kmax = std::min(word_total_a(w), word_total_b(w));
      for (unsigned k = 0; k <= kmax; ++k) {
        Int ref = normal_coords_ref(w, k);
        bool ok = normal_coords_closed(w, k) == ref && normal_coords_pairings(w, k) == ref &&
                  normal_coords_flows(w, k) == ref;
        r.tally(ok, word_str(w) + " @k=" + std::to_string(k));
      }
    }
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = 2 + rng() % 3;
    WeylWord w(n);
    for (auto& f : w) f = {unsigned(rng() % 4), unsigned(rng() % 4)};
    unsigned kmax = std::min(word_total_a(w), word_total_b(w));
    for (unsigned k = 0; k <= kmax; ++k) {
      Int ref = normal_coords_ref(w, k);
      bool ok = normal_coords_closed(w, k) == ref && normal_coords_flows(w, k) == ref;
      r.tally(ok, word_str(w) + " @k=" + std::to_string(k));
    }
  }
  return r;
}

// 2. Exponential generating series against the rewriting evaluator.
inline VerifyReport suite_weyl_series(const VerifyOptions&) {
  VerifyReport r{"weyl-series"};
  const std::vector<std::array<unsigned, 4>> cases = {
      {1, 4, 4, 3}, {2, 2, 2, 3}, {3, 1, 1, 3}, {3, 2, 2, 2}};
  for (auto [n, amax, bmax, cmax] : cases) {
    auto mism = genseries_check(n, amax, bmax, cmax);
    unsigned long long count = cmax + 1;
    for (unsigned i = 0; i < 2 * n; ++i) count *= (i < n ? amax : bmax) + 1;
    r.instances += count;
    for (const auto& mm : mism) {
      std::ostringstream os;
      os << "n=" << n << " c=" << mm.c;
      r.mismatches.push_back({os.str(), mm.expected.str(), mm.reference.str()});
    }
  }
  return r;
}

// 3. M-Weyl routes.
inline VerifyReport suite_mweyl_coords(const VerifyOptions& opt) {
  VerifyReport r{"mweyl-coords"};
  unsigned nmax = opt.nmax ? opt.nmax : 3;
  unsigned emax = opt.emax ? opt.emax : 3;
  for (unsigned n = 1; n <= nmax; ++n)
    for (const auto& w : small_words(n, emax)) {
      unsigned kmax = word_total_b(w);
      for (unsigned k = 0; k <= kmax; ++k) {
        Int ref = mweyl_coords_ref(w, k);
        bool ok = mweyl_coords_closed(w, k) == ref && mweyl_coords_functions(w, k) == ref;
        r.tally(ok, word_str(w) + " @k=" + std::to_string(k));
      }
    }
  return r;
}

// 4. Polynomial factorial identities in t.
inline VerifyReport suite_factorial_identities(const VerifyOptions&) {
  VerifyReport r{"factorial-identities"};
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& w : small_words(n, 2)) {
      unsigned tb = word_total_b(w);
      std::vector<unsigned> suf_a(n + 1, 0), suf_b(n + 1, 0);
      for (int i = (int)n - 1; i >= 0; --i) {
        suf_a[i] = suf_a[i + 1] + w[i].a;
        suf_b[i] = suf_b[i + 1] + w[i].b;
      }
      for (int t = 0; t <= 10; ++t) {
        Int lhs = 1, lhsM = 1;
        for (unsigned i = 0; i < n; ++i) {
          lhs *= falling(Int(t) + suf_a[i + 1] - suf_b[i + 1], w[i].b);
          lhsM *= falling(Int(t) - suf_a[i + 1] - suf_b[i + 1], w[i].b);
        }
        Int rhs = 0, rhsM = 0;
        for (unsigned k = 0; k <= tb; ++k) {
          if (k <= word_total_a(w)) rhs += normal_coords_ref(w, k) * falling(Int(t), tb - k);
          Int term = mweyl_coords_ref(w, k) * falling(Int(t), tb - k);
          rhsM += (k % 2) ? -term : term;
        }
        r.tally(lhs == rhs, word_str(w) + " @t=" + std::to_string(t), lhs.str(), rhs.str());
        r.tally(lhsM == rhsM, word_str(w) + " (M) @t=" + std::to_string(t), lhsM.str(),
                rhsM.str());
      }
    }
  return r;
}

// 5. Averaged coinvariant product against the symmetrization oracle.
inline VerifyReport suite_polya_oracle(const VerifyOptions&) {
  VerifyReport r{"polya-oracle"};
  std::vector<BasedAlgebra> algs = {truncated_poly_algebra(3), boolean_algebra(),
                                    truncated_weyl_algebra(3, 3)};
  for (const auto& alg : algs)
    for (const auto& K : subgroups_of_s3()) {
      auto act = plain_action(K);
      auto tuples = all_tuples(alg.dim, 3);
      for (const auto& ta : tuples)
        for (const auto& tb : tuples) {
          if (canonicalize(ta, K, alg).first != ta || canonicalize(tb, K, alg).first != tb)
            continue;
          std::vector<SymElement> fs = {SymElement::basis(ta), SymElement::basis(tb)};
          r.tally(polya_product(fs, K, alg) == oracle_product(fs, act, alg),
                  tuple_str(ta) + "*" + tuple_str(tb));
        }
    }
  std::mt19937 rng(4242);
  auto groups = subgroups_of_s3();
  for (int trial = 0; trial < 100; ++trial) {
    const auto& alg = algs[rng() % algs.size()];
    const auto& K = groups[rng() % groups.size()];
    std::vector<SymElement> fs;
    std::string inp;
    for (int f = 0; f < 3; ++f) {
      LabelTuple t(3);
      for (auto& x : t) x = rng() % alg.dim;
      t = canonicalize(t, K, alg).first;
      inp += tuple_str(t);
      fs.push_back(SymElement::basis(t));
    }
    r.tally(polya_product(fs, K, alg) == oracle_product(fs, plain_action(K), alg), inp);
  }
  return r;
}

// 6. Type A star against the S_n-averaged oracle; B/D pass-through; the
//    classical limit at hbar^0.
inline VerifyReport suite_qsym_star(const VerifyOptions&) {
  VerifyReport r{"qsym-star"};
  unsigned dy = 7;
  auto alg = truncated_weyl_algebra(7, dy);
  for (unsigned n = 1; n <= 2; ++n) {
    auto act = plain_action(symmetric_group(n));
    for (const auto& A : all_matrices(n, 2))
      for (const auto& C : all_matrices(n, 2)) {
        auto star = qsym_star_A(A, C);
        auto viaOracle = oracle_product({SymElement::basis(expmatrix_to_tuple(A, dy)),
                                         SymElement::basis(expmatrix_to_tuple(C, dy))},
                                        act, alg);
        std::string inp = mat_str(A) + "*" + mat_str(C);
        r.tally(star == sym_to_qsym(viaOracle, dy), inp);
        r.tally(star.classical() == classical_sym_product(A, C, StarFamily::A),
                inp + " @hbar^0");
        if (star_admissible(A, StarFamily::B) && star_admissible(C, StarFamily::B))
          r.tally(qsym_star_BD(A, C, StarFamily::B) == star, inp + " (B)");
        if (star_admissible(A, StarFamily::D) && star_admissible(C, StarFamily::D))
          r.tally(qsym_star_BD(A, C, StarFamily::D) == star, inp + " (D)");
      }
  }
  return r;
}

// 7. Associativity of the three star families.
inline VerifyReport suite_star_associativity(const VerifyOptions&) {
  VerifyReport r{"star-associativity"};
  auto starA = [](const ExpMatrix& x, const ExpMatrix& y) { return qsym_star_A(x, y); };
  auto mats = all_matrices(2, 1);
  for (const auto& A : mats)
    for (const auto& C : mats)
      for (const auto& E : mats)
        r.tally(star_bilinear(qsym_star_A(A, C), QSymElement::basis(E), starA) ==
                    star_bilinear(QSymElement::basis(A), qsym_star_A(C, E), starA),
                mat_str(A) + "*" + mat_str(C) + "*" + mat_str(E));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    unsigned n = 1 + rng() % 2;
    auto rand_mat = [&]() {
      ExpMatrix M;
      for (unsigned j = 0; j < n; ++j) M.rows.push_back(ExpRow{{unsigned(rng() % 3)}, {unsigned(rng() % 3)}});
      return M.sorted();
    };
    auto A = rand_mat(), C = rand_mat(), E = rand_mat();
    r.tally(star_bilinear(qsym_star_A(A, C), QSymElement::basis(E), starA) ==
                star_bilinear(QSymElement::basis(A), qsym_star_A(C, E), starA),
            mat_str(A) + "*" + mat_str(C) + "*" + mat_str(E));
  }
  std::mt19937 rng2(23);
  for (unsigned m_cyc = 1; m_cyc <= 3; ++m_cyc) {
    auto star = [m_cyc](const ExpMatrix& x, const ExpMatrix& y) {
      return wreath_zm_star(x, y, m_cyc);
    };
    std::vector<ExpMatrix> adm;
    for (const auto& M : all_matrices(1, m_cyc))
      if (zm_admissible(M, m_cyc)) adm.push_back(M);
    for (const auto& A : adm)
      for (const auto& C : adm)
        for (const auto& E : adm)
          r.tally(star_bilinear(star(A, C), QSymElement::basis(E), star) ==
                      star_bilinear(QSymElement::basis(A), star(C, E), star),
                  "zm:" + std::to_string(m_cyc) + " " + mat_str(A) + "*" + mat_str(C) + "*" +
                      mat_str(E));
    for (int trial = 0; trial < 20; ++trial) {
      auto rand_adm = [&]() {
        ExpMatrix M;
        for (unsigned j = 0; j < 2; ++j) {
          unsigned a = rng2() % 3;
          M.rows.push_back(ExpRow{{a}, {unsigned(a + m_cyc * (rng2() % 2))}});
        }
        return M.sorted();
      };
      auto A = rand_adm(), C = rand_adm(), E = rand_adm();
      r.tally(star_bilinear(star(A, C), QSymElement::basis(E), star) ==
                  star_bilinear(QSymElement::basis(A), star(C, E), star),
              "zm:" + std::to_string(m_cyc) + " " + mat_str(A) + "*" + mat_str(C) + "*" +
                  mat_str(E));
    }
  }
  for (unsigned m_cyc = 1; m_cyc <= 2; ++m_cyc)
    for (unsigned n = 1; n <= 2; ++n) {
      std::vector<ExpMatrix> adm;
      for (const auto& M : all_matrices(n, n == 1 ? 2 : m_cyc))
        if (zm_admissible(M, m_cyc)) adm.push_back(M);
      for (const auto& A : adm)
        for (const auto& C : adm)
          for (const auto& E : adm) {
            auto AC = dihedral_star(A, C, m_cyc);
            auto CE = dihedral_star(C, E, m_cyc);
            r.tally(dihedral_star_element(AC, QSymElement::basis(E), m_cyc) ==
                        dihedral_star_element(QSymElement::basis(A), CE, m_cyc),
                    "dihedral:" + std::to_string(m_cyc) + " " + mat_str(A) + "*" + mat_str(C) +
                        "*" + mat_str(E));
          }
    }
  return r;
}

// 8. Cyclic-wreath and dihedral formulas against the character-averaged
//    oracle.
inline VerifyReport suite_wreath_dihedral_oracle(const VerifyOptions&) {
  VerifyReport r{"wreath-dihedral-oracle"};
  {
    unsigned dy = 7;
    auto alg = truncated_weyl_algebra(7, dy, GaussRat(Rat(0), Rat(-2)));
    std::vector<long> wt(alg.dim);
    for (unsigned l = 0; l < alg.dim; ++l) wt[l] = (long)(l % dy) - (long)(l / dy);
    for (unsigned m_cyc = 1; m_cyc <= 3; ++m_cyc)
      for (unsigned n = 1; n <= 2; ++n) {
        WreathAction act;
        act.K = symmetric_group(n);
        act.modulus = m_cyc;
        act.weight = wt;
        for (const auto& A : all_matrices(n, 2)) {
          if (!zm_admissible(A, m_cyc)) continue;
          for (const auto& C : all_matrices(n, 2)) {
            if (!zm_admissible(C, m_cyc)) continue;
            std::vector<SymElement> fs = {SymElement::basis(expmatrix_to_tuple(A, dy)),
                                          SymElement::basis(expmatrix_to_tuple(C, dy))};
            r.tally(wreath_zm_star(A, C, m_cyc) == sym_to_qsym(oracle_product(fs, act, alg), dy),
                    "zm:" + std::to_string(m_cyc) + " " + mat_str(A) + "*" + mat_str(C));
          }
        }
      }
  }
  {
    unsigned dy = 9;
    auto alg = truncated_weyl_algebra(9, dy, GaussRat(Rat(0), Rat(-2)));
    for (unsigned m_cyc = 1; m_cyc <= 2; ++m_cyc)
      for (unsigned n = 1; n <= 2; ++n)
        for (const auto& A : all_matrices(n, 2)) {
          if (!zm_admissible(A, m_cyc)) continue;
          for (const auto& C : all_matrices(n, 2)) {
            if (!zm_admissible(C, m_cyc)) continue;
            r.tally(dihedral_star(A, C, m_cyc) ==
                        sym_to_qsym(dihedral_oracle(A, C, m_cyc, alg, dy), dy),
                    "dihedral:" + std::to_string(m_cyc) + " " + mat_str(A) + "*" + mat_str(C));
          }
        }
  }
  // type B and D against sign-character actions
  {
    unsigned dy = 7;
    auto alg = truncated_weyl_algebra(7, dy);
    std::vector<long> wt(alg.dim);
    for (unsigned l = 0; l < alg.dim; ++l) wt[l] = (long)(l / dy) + (long)(l % dy);
    for (unsigned n = 1; n <= 2; ++n) {
      WreathAction actB;
      actB.K = symmetric_group(n);
      actB.modulus = 2;
      actB.weight = wt;
      WreathAction actD;
      actD.K = symmetric_group(n);
      actD.weight = wt;
      actD.same_parity_coupling = true;
      for (const auto& A : all_matrices(n, 2))
        for (const auto& C : all_matrices(n, 2)) {
          std::vector<SymElement> fs = {SymElement::basis(expmatrix_to_tuple(A, dy)),
                                        SymElement::basis(expmatrix_to_tuple(C, dy))};
          std::string inp = mat_str(A) + "*" + mat_str(C);
          if (star_admissible(A, StarFamily::B) && star_admissible(C, StarFamily::B))
            r.tally(qsym_star_BD(A, C, StarFamily::B) ==
                        sym_to_qsym(oracle_product(fs, actB, alg), dy),
                    inp + " (B)");
          if (star_admissible(A, StarFamily::D) && star_admissible(C, StarFamily::D))
            r.tally(qsym_star_BD(A, C, StarFamily::D) ==
                        sym_to_qsym(oracle_product(fs, actD, alg), dy),
                    inp + " (D)");
        }
    }
  }
  return r;
}

// 9. Multi-factor products in Sym^n of the Weyl and M-Weyl algebras.
inline VerifyReport suite_sympow_weyl(const VerifyOptions&) {
  VerifyReport r{"sympow-weyl"};
  unsigned dy = 7;
  auto alg = truncated_weyl_algebra(7, dy);
  auto malg = truncated_mweyl_algebra(19, dy);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = 1 + rng() % 2;
    unsigned M = 1 + rng() % 3;
    std::vector<ExpMatrix> fs;
    std::string inp;
    for (unsigned i = 0; i < M; ++i) {
      ExpMatrix f;
      for (unsigned j = 0; j < n; ++j) f.rows.push_back(ExpRow{{unsigned(rng() % 3)}, {unsigned(rng() % 3)}});
      f = f.sorted();
      inp += mat_str(f);
      fs.push_back(f);
    }
    auto direct = symweyl_multiproduct_direct(fs);
    r.tally(direct == symweyl_multiproduct_binary(fs), inp + " binary");
    std::vector<SymElement> sf;
    for (const auto& f : fs) sf.push_back(SymElement::basis(expmatrix_to_tuple(f, dy)));
    r.tally(direct == sym_to_qsym(oracle_product(sf, plain_action(symmetric_group(n)), alg), dy),
            inp + " oracle");
  }
  std::mt19937 rng2(31);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned n = 1 + rng2() % 2;
    unsigned M = 1 + rng2() % 3;
    std::vector<ExpMatrix> fs;
    std::string inp;
    for (unsigned i = 0; i < M; ++i) {
      ExpMatrix f;
      for (unsigned j = 0; j < n; ++j) f.rows.push_back(ExpRow{{unsigned(rng2() % 3)}, {unsigned(rng2() % 3)}});
      f = f.sorted();
      inp += mat_str(f);
      fs.push_back(f);
    }
    auto direct = symweyl_multiproduct_direct(fs, true);
    r.tally(direct == symweyl_multiproduct_binary(fs, true), inp + " (M) binary");
    std::vector<SymElement> sf;
    for (const auto& f : fs) sf.push_back(SymElement::basis(expmatrix_to_tuple(f, dy)));
    r.tally(direct ==
                sym_to_qsym(oracle_product(sf, plain_action(symmetric_group(n)), malg), dy),
            inp + " (M) oracle");
  }
  return r;
}

// 10. Odd symmetric functions and the Boolean symmetric algebra.
inline VerifyReport suite_odd_boolean(const VerifyOptions&) {
  VerifyReport r{"odd-boolean"};
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
          r.tally(odd_sym_product(I, J, m) ==
                      oracle_product({SymElement::basis(ti), SymElement::basis(tj)}, act, ext),
                  "odd m=" + std::to_string(m) + " " + tuple_str(ti) + "*" + tuple_str(tj));
        }
      }
    }
  }
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned a = 0; a <= n; ++a)
      for (unsigned b = 0; b <= n; ++b)
        r.tally(boolean_product(a, b, n) == boolean_product_oracle(a, b, n),
                "bool " + std::to_string(a) + "*" + std::to_string(b) + " n=" +
                    std::to_string(n));
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned a = 0; a <= n; ++a)
      for (unsigned b = 0; b <= n; ++b) {
        Rat total = 0;
        for (const auto& [cls, c] : boolean_product(a, b, n)) total += c;
        r.tally(total == 1,
                "bool-sum " + std::to_string(a) + "*" + std::to_string(b) + " n=" +
                    std::to_string(n),
                "1", total.str());
      }
  return r;
}

// 11. Truncated matrix model of the Weyl algebra.
inline VerifyReport suite_glinf_model(const VerifyOptions&) {
  VerifyReport r{"glinf-model"};
  const unsigned N = 12;
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned b = 0; b <= 5; ++b)
      r.tally(glinf_equal_upto(weyl_to_glinf({WeylFactor{a, b}}, N), elem_matrix(a, b, N), N - b),
              "rho(x^" + std::to_string(a) + " y^" + std::to_string(b) + ")");
  std::mt19937 rng(53);
  auto random_word = [&](unsigned budget) {
    WeylWord w;
    unsigned used = 0;
    while (used < budget && rng() % 4 != 0) {
      unsigned a = rng() % 2, b = rng() % 2;
      if (a + b == 0) a = 1;
      if (used + a + b > budget) break;
      w.push_back(WeylFactor{a, b});
      used += a + b;
    }
    return w;
  };
  for (int trial = 0; trial < 30; ++trial) {
    WeylWord u = random_word(3), v = random_word(2);
    WeylWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    unsigned margin = weyl_to_glinf_margin(uv, N);
    auto img = weyl_to_glinf(uv, N);
    r.tally(glinf_equal_upto(img, weyl_to_glinf(u, N) * weyl_to_glinf(v, N), margin),
            "rho mult " + word_str(uv));
    r.tally(glinf_equal_upto(img, normal_form_to_glinf(normal_order(uv), N), margin),
            "rho nf " + word_str(uv));
  }
  auto random_filtered = [&] {
    GlInfTrunc X(N);
    for (unsigned i = 0; i < N; ++i)
      for (unsigned j = 0; j < N; ++j) {
        if (rng() % 3 == 0) continue;
        unsigned lead = (j > i) ? j - i : 0;
        X.at(i, j) = HPoly::hbar(lead + rng() % 2,
                                 GaussRat(Rat((long)(rng() % 9) - 4, 1 + rng() % 4)));
      }
    return X;
  };
  for (int trial = 0; trial < 12; ++trial)
    r.tally(glinf_filtration_ok(random_filtered() * random_filtered()),
            "filtration trial " + std::to_string(trial));
  return r;
}

// 12. Schur category composition.
inline VerifyReport suite_schur_compose(const VerifyOptions&) {
  VerifyReport r{"schur-compose"};
  std::mt19937 rng(23);
  for (auto& setup : std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>>{
           {{2}, {0, 0}}, {{2}, {0, 1}}, {{3}, {0, 1}}}) {
    const std::vector<unsigned>& m = setup.first;
    const std::vector<unsigned>& par = setup.second;
    unsigned dim = (unsigned)par.size();
    std::string tag = "m=" + std::to_string(m[0]) + (par[1] ? " graded" : "");
    for (unsigned n = 1; n <= 2; ++n) {
      SchurClass I = schur_identity(dim, par, m, n);
      auto classes = schur_all_classes(dim, par, m, n);
      std::shuffle(classes.begin(), classes.end(), rng);
      size_t count = std::min<size_t>(classes.size(), 8);
      for (size_t i = 0; i < count; ++i) {
        SchurClass F = SchurClass::basis(classes[i]);
        r.tally(schur_compose(I, F, m, dim) == F && schur_compose(F, I, m, dim) == F,
                tag + " unit #" + std::to_string(i));
        for (size_t j = 0; j < count; ++j) {
          SchurClass G = SchurClass::basis(classes[j]);
          r.tally(schur_compose(F, G, m, dim) == schur_compose_oracle(F, G, m, dim, par),
                  tag + " oracle #" + std::to_string(i) + "," + std::to_string(j));
        }
      }
      for (int trial = 0; trial < 12; ++trial) {
        SchurClass F = SchurClass::basis(classes[rng() % classes.size()]);
        SchurClass G = SchurClass::basis(classes[rng() % classes.size()]);
        SchurClass H = SchurClass::basis(classes[rng() % classes.size()]);
        r.tally(schur_compose(schur_compose(F, G, m, dim), H, m, dim) ==
                    schur_compose(F, schur_compose(G, H, m, dim), m, dim),
                tag + " assoc #" + std::to_string(trial));
      }
    }
  }
  return r;
}

// 13. Dimension counts.
inline VerifyReport suite_dimensions(const VerifyOptions&) {
  VerifyReport r{"dimensions"};
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned n = 1; n <= 4; ++n) {
      std::vector<PermGroup> groups = {trivial_group(n), symmetric_group(n)};
      if (n >= 3) groups.push_back(enumerate_group(n, {parse_cycles("(1 2 3)", n)}));
      for (const auto& K : groups) {
        std::set<LabelTuple> orbits;
        for (const auto& t : all_tuples(d, n)) {
          LabelTuple best = t;
          for (const Perm& k : K.elements) best = std::min(best, k.act(t));
          orbits.insert(best);
        }
        r.tally(sym_dimension(d, K) == Int((long)orbits.size()),
                "dim=" + std::to_string(d) + " n=" + std::to_string(n),
                sym_dimension(d, K).str(), std::to_string(orbits.size()));
      }
      r.tally(sym_dimension(d, symmetric_group(n)) == binomial(Int(d) + n - 1, n),
              "multiset dim=" + std::to_string(d) + " n=" + std::to_string(n));
    }
  // Clifford / Schur chain at desk scale: dim C(2m') = (2^{m'})^2, so the
  // n-th symmetric power has the Schur(n, 2^{m'}) dimension; in the odd case
  // dim C(2m'+1) = 2 (2^{m'})^2 and the dimension splits by Vandermonde.
  for (unsigned mp = 0; mp <= 1; ++mp)
    for (unsigned n = 1; n <= 3; ++n) {
      unsigned D = 1u << mp;
      unsigned even_dim = (1u << (2 * mp));
      r.tally(sym_dimension(even_dim, symmetric_group(n)) ==
                  binomial(Int(D) * D + n - 1, n),
              "clifford even m'=" + std::to_string(mp) + " n=" + std::to_string(n));
      Int split = 0;
      for (unsigned a = 0; a <= n; ++a)
        split += binomial(Int(D) * D + a - 1, a) * binomial(Int(D) * D + (n - a) - 1, n - a);
      r.tally(sym_dimension(2 * even_dim, symmetric_group(n)) == split,
              "clifford odd m'=" + std::to_string(mp) + " n=" + std::to_string(n));
    }
  return r;
}

}  // namespace verify_detail

inline std::vector<std::string> verify_suite_names() {
  return {"weyl-coords",        "weyl-series",        "mweyl-coords",
          "factorial-identities", "polya-oracle",     "qsym-star",
          "star-associativity", "wreath-dihedral-oracle", "sympow-weyl",
          "odd-boolean",        "glinf-model",        "schur-compose",
          "dimensions"};
}

inline VerifyReport run_suite(const std::string& name, const VerifyOptions& opt = {}) {
  using namespace verify_detail;
  if (name == "weyl-coords") return suite_weyl_coords(opt);
  if (name == "weyl-series") return suite_weyl_series(opt);
  if (name == "mweyl-coords") return suite_mweyl_coords(opt);
  if (name == "factorial-identities") return suite_factorial_identities(opt);
  if (name == "polya-oracle") return suite_polya_oracle(opt);
  if (name == "qsym-star") return suite_qsym_star(opt);
  if (name == "star-associativity") return suite_star_associativity(opt);
  if (name == "wreath-dihedral-oracle") return suite_wreath_dihedral_oracle(opt);
  if (name == "sympow-weyl") return suite_sympow_weyl(opt);
  if (name == "odd-boolean") return suite_odd_boolean(opt);
  if (name == "glinf-model") return suite_glinf_model(opt);
  if (name == "schur-compose") return suite_schur_compose(opt);
  if (name == "dimensions") return suite_dimensions(opt);
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace qsf
