#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/perm.hpp"

#include <set>

using namespace qsf;

TEST_CASE("enumerate_group basic cases") {
  auto s3 = enumerate_group(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
  CHECK(s3.order() == 6);

  auto triv = enumerate_group(4, {});
  CHECK(triv.order() == 1);
  CHECK(triv.elements[0].is_identity());

  auto klein = enumerate_group(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  CHECK(klein.order() == 4);
}

TEST_CASE("group closure, identity, inverses") {
  auto groups = {symmetric_group(4),
                 enumerate_group(4, {parse_cycles("(1 2 3 4)", 4)}),
                 enumerate_group(5, {parse_cycles("(1 2)(3 4)", 5), parse_cycles("(1 5 2)", 5)})};
  for (const auto& K : groups) {
    std::set<Perm> members(K.elements.begin(), K.elements.end());
    CHECK(members.count(Perm::identity(K.n)) == 1);
    for (const Perm& g : K.elements) {
      CHECK(members.count(g.inverse()) == 1);
      for (const Perm& h : K.elements) CHECK(members.count(g * h) == 1);
    }
    CHECK(factorial(K.n) % Int((long)K.order()) == 0);
  }
}

TEST_CASE("cycle index examples") {
  auto ciS2 = cycle_index(symmetric_group(2));
  // 1/2 (x1^2 + x2)
  CHECK(ciS2.at({2, 0}) == Rat(1, 2));
  CHECK(ciS2.at({0, 1}) == Rat(1, 2));

  auto ciTriv = cycle_index(trivial_group(3));
  CHECK(ciTriv.size() == 1);
  CHECK(ciTriv.at({3, 0, 0}) == Rat(1));

  auto ciS3 = cycle_index(symmetric_group(3));
  CHECK(ciS3.at({3, 0, 0}) == Rat(1, 6));
  CHECK(ciS3.at({1, 1, 0}) == Rat(1, 2));
  CHECK(ciS3.at({0, 0, 1}) == Rat(1, 3));
}

TEST_CASE("sym_dimension examples and multiset formula") {
  CHECK(sym_dimension(2, symmetric_group(2)) == 3);
  CHECK(sym_dimension(4, symmetric_group(2)) == 10);
  CHECK(sym_dimension(3, trivial_group(2)) == 9);
  for (unsigned d = 0; d <= 5; ++d)
    for (unsigned n = 1; n <= 5; ++n)
      CHECK(sym_dimension(d, symmetric_group(n)) == binomial(Int(d) + n - 1, n));
}

TEST_CASE("sym_dimension equals direct orbit counting") {
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned n = 1; n <= 4; ++n) {
      for (const auto& K : {symmetric_group(n), trivial_group(n),
                            enumerate_group(n, n >= 2 ? std::vector<Perm>{parse_cycles("(1 2)", n)}
                                                      : std::vector<Perm>{})}) {
        std::set<std::vector<int>> orbits;
        std::vector<int> tup(n, 0);
        bool done = false;
        while (!done) {
          std::vector<int> best = tup;
          for (const Perm& g : K.elements) best = std::min(best, g.act(tup));
          orbits.insert(best);
          done = true;
          for (unsigned i = 0; i < n; ++i) {
            if (++tup[i] < (int)d) {
              done = false;
              break;
            }
            tup[i] = 0;
          }
        }
        CHECK(Int((long)orbits.size()) == sym_dimension(d, K));
      }
    }
}

TEST_CASE("parse errors") {
  CHECK_THROWS(Perm({0, 0, 1}));
  CHECK_THROWS(parse_cycles("(1 5)", 3));
  CHECK_THROWS(parse_group("gens:\"(1 9)\"", 3));
  CHECK_THROWS(parse_group("unknown", 3));
  CHECK_THROWS(parse_group("S4", 3));
}

TEST_CASE("parse_group grammar") {
  CHECK(parse_group("S3", 3).order() == 6);
  CHECK(parse_group("trivial", 5).order() == 1);
  CHECK(parse_group("gens:\"(1 2),(1 2 3)\"", 3).order() == 6);
  CHECK(parse_group("gens:\"(1 2)(3 4),(1 3)(2 4)\"", 4).order() == 4);
}
