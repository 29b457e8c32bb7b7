// Expression parser and command-line front end: grammar positions, dialect
// conversions, JSON output shapes, exit codes, and round-tripping results
// through the expression syntax.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsf/cli.hpp"
#include "qsf/expr.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace qsf;
using nlohmann::json;

namespace {

int run(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream os, es;
  int rc = qsf_run(args, os, es);
  out = os.str();
  return rc;
}

json run_json(const std::vector<std::string>& args, int expect_rc = 0) {
  std::string out;
  int rc = run(args, out);
  CHECK(rc == expect_rc);
  return json::parse(out);
}

std::string write_temp(const std::string& name, const json& j) {
  std::string path = std::string("/tmp/qsf_cli_") + name;
  std::ofstream f(path);
  f << j.dump();
  return path;
}

}  // namespace

TEST_CASE("expression grammar: words, exponents, brackets") {
  Expr e = parse("x^2 y . x", Dialect::weyl);
  WeylWord w = expr_to_weyl_word(e);
  REQUIRE(w.size() == 2);
  CHECK(w[0].a == 2);
  CHECK(w[0].b == 1);
  CHECK(w[1].a == 1);
  CHECK(w[1].b == 0);

  Expr q = parse("[x1 y1 | x2]", Dialect::qsym);
  REQUIRE(q.terms.size() == 1);
  ExpMatrix A = expr_term_to_expmatrix(q.terms[0]);
  REQUIRE(A.n() == 2);
  CHECK(A.rows[0].a[0] == 1);
  CHECK(A.rows[0].b[0] == 1);
  CHECK(A.rows[1].a[0] == 1);
  CHECK(A.rows[1].b[0] == 0);

  Expr c = parse("-3/2i h^2 [x^2 | y] + [x | x]", Dialect::qsym);
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[0].coeff == GaussRat(Rat(0), Rat(-3, 2)));
  CHECK(c.terms[0].hbar == 2);
  CHECK(c.terms[1].coeff == GaussRat(1));
}

TEST_CASE("expression grammar: errors carry line and column") {
  try {
    parse("x^", Dialect::weyl);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 3);
  }
  CHECK_THROWS_AS(parse("x + ", Dialect::weyl), ParseError);
  CHECK_THROWS_AS(parse("z", Dialect::weyl), ParseError);
  CHECK_THROWS_AS(parse("th1", Dialect::qsym), ParseError);
  CHECK_THROWS_AS(parse("[x | y", Dialect::qsym), ParseError);
  CHECK_THROWS_AS(parse("2/0 x", Dialect::weyl), ParseError);
}

TEST_CASE("dialect converters reject malformed slot lists") {
  Expr e = parse("[th1 th2 | th1]", Dialect::odd);
  std::vector<ExtMono> b = expr_term_to_blades(e.terms[0], 2);
  CHECK(b == std::vector<ExtMono>{3u, 1u});
  CHECK_THROWS_AS(expr_term_to_blades(parse("[th1 th1]", Dialect::odd).terms[0], 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(expr_term_to_blades(parse("[th3]", Dialect::odd).terms[0], 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(expr_term_to_labels(parse("[e5]", Dialect::boolean_alg).terms[0], 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(expr_term_to_expmatrix(parse("[x2 | y]", Dialect::qsym).terms[0]),
                  std::invalid_argument);
}

TEST_CASE("cli: weyl normal-order output and exit codes") {
  json j = run_json({"weyl", "normal-order", "y . x"});
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j["terms"][0] == json({{"x", 0}, {"y", 0}, {"h", 1}, {"coeff", "1"}}));
  CHECK(j["terms"][1] == json({{"x", 1}, {"y", 1}, {"h", 0}, {"coeff", "1"}}));

  std::string out;
  CHECK(run({"weyl", "normal-order", "x^"}, out) == 2);
  CHECK(json::parse(out).at("error").at("kind") == "parse");
  CHECK(run({"weyl", "bogus"}, out) == 2);
  CHECK(json::parse(out).at("error").at("kind") == "usage");
}

TEST_CASE("cli: weyl and mweyl expression round-trip") {
  auto roundtrip = [](const std::string& cmd, const std::string& input) {
    std::string out;
    REQUIRE(run({cmd, "normal-order", input}, out) == 0);
    json j = json::parse(out);
    std::string out2;
    REQUIRE(run({cmd, "normal-order", j.at("expr").get<std::string>()}, out2) == 0);
    CHECK(json::parse(out2)["terms"] == j["terms"]);
  };
  roundtrip("weyl", "y^2 x^2 . x y");
  roundtrip("weyl", "x y x y + 2 h^1 x");
  roundtrip("mweyl", "y^2 x^2 . x y");
  roundtrip("mweyl", "y x . y x + -1/2 y");
}

TEST_CASE("cli: qsym star matches the library and round-trips") {
  json j = run_json({"qsym", "star", "--type", "A", "--n", "2", "[x1|x2]", "[y1|y2]"});
  QSymElement R = qsym_star_A(make_expmatrix({{1, 0}, {1, 0}}, 1),
                              make_expmatrix({{0, 1}, {0, 1}}, 1));
  unsigned entries = 0;
  for (const auto& [A, c] : R.terms) entries += (unsigned)c.coeffs.size();
  CHECK(j.at("terms").size() == entries);

  std::string out;
  REQUIRE(run({"qsym", "star", "--type", "A", "--n", "2", j["expr"].get<std::string>(),
               "1 [x^0|x^0]"},
              out) == 0);
  CHECK(json::parse(out)["terms"] == j["terms"]);

  CHECK(run({"qsym", "star", "--type", "B", "--n", "1", "[x]", "[y]"}, out) == 1);
  CHECK(json::parse(out).at("error").at("kind") == "domain");
}

TEST_CASE("cli: sympow product and boolean") {
  json alg;
  alg["dim"] = 2;
  alg["unit"] = 0;
  alg["table"] = json::array();
  // Truncated polynomial algebra C[t]/(t^2): e0 = 1, e1 = t.
  alg["table"].push_back({{"s", 0}, {"t", 0}, {"terms", {{{"k", 0}, {"coeff", "1"}}}}});
  alg["table"].push_back({{"s", 0}, {"t", 1}, {"terms", {{{"k", 1}, {"coeff", "1"}}}}});
  alg["table"].push_back({{"s", 1}, {"t", 0}, {"terms", {{{"k", 1}, {"coeff", "1"}}}}});
  alg["table"].push_back({{"s", 1}, {"t", 1}, {"terms", json::array()}});
  std::string path = write_temp("alg.json", alg);

  json j = run_json({"sympow", "product", "--algebra", path, "--group", "S2", "--n", "2",
                     "[e0|e1]", "[e0|e1]"});
  // (1/2)(e0 ot e1 + e1 ot e0) squared: only the cross terms survive t^2 = 0.
  REQUIRE(j.at("terms").size() == 1);
  CHECK(j["terms"][0]["labels"] == json::array({1, 1}));
  CHECK(j["terms"][0]["coeff"][0]["re_num"] == "1");
  CHECK(j["terms"][0]["coeff"][0]["re_den"] == "2");

  json b = run_json({"sympow", "boolean", "--n", "2", "1", "1"});
  std::map<unsigned, Rat> ref = boolean_product(1, 1, 2);
  REQUIRE(b.at("terms").size() == ref.size());
  for (const auto& t : b["terms"]) {
    std::ostringstream os;
    os << ref.at(t.at("class").get<unsigned>());
    CHECK(t.at("coeff") == os.str());
  }
  std::remove(path.c_str());
}

TEST_CASE("cli: super product agrees with the odd symmetric product") {
  json j = run_json({"super", "product", "--m", "2", "--n", "2", "[th1|th2]", "[th2|th1]"});
  SymElement ref = odd_sym_product({1u, 2u}, {2u, 1u}, 2);
  unsigned count = 0;
  for (const auto& [t, c] : ref.terms) ++count;
  CHECK(j.at("terms").size() == count);
}

TEST_CASE("cli: schur compose identity and dimension mismatch") {
  std::vector<unsigned> m{2};
  PermGroup S1 = symmetric_group(1);
  json F;
  F["terms"] = json::array();
  F["terms"].push_back(
      {{"slots", {{{"r", 0}, {"s", {0u}}, {"t", 1}, {"u", {1u}}, {"pr", 0}, {"pt", 1}}}}});
  std::string fpath = write_temp("F.json", F);

  SchurClass id = schur_identity(2, {0, 1}, m, 1);
  json I = cli_detail::schur_class_json(id);
  std::string ipath = write_temp("I.json", I);

  json j = run_json({"schur", "compose", "--m", "2", "--n", "1", ipath, fpath});
  SchurClass Fc = cli_detail::schur_class_from_json(F, m, S1);
  SchurClass ref = schur_compose(id, Fc, m, 2);
  CHECK(j == cli_detail::schur_class_json(ref));

  std::string out;
  CHECK(run({"schur", "compose", "--m", "2", "--n", "1", "--dimw", "1", ipath, fpath}, out) == 1);
  CHECK(json::parse(out).at("error").at("kind") == "domain");
  std::remove(fpath.c_str());
  std::remove(ipath.c_str());
}

TEST_CASE("cli: verify runs a suite and reports instances") {
  json j = run_json({"verify", "dimensions"});
  CHECK(j.at("suite") == "dimensions");
  CHECK(j.at("instances").get<unsigned long long>() > 0);
  CHECK(j.at("mismatches").empty());

  std::string out;
  CHECK(run({"verify", "no-such-suite"}, out) == 1);
  CHECK(json::parse(out).at("error").at("kind") == "domain");
}

TEST_CASE("cli: deterministic output") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"weyl", "normal-order", "y^3 x^3"},
           {"qsym", "star", "--type", "dihedral:2", "--n", "1", "[x y]", "[x y]"},
           {"sympow", "boolean", "--n", "3", "2", "2"}}) {
    std::string a, b;
    REQUIRE(run(args, a) == 0);
    REQUIRE(run(args, b) == 0);
    CHECK(a == b);
  }
}
