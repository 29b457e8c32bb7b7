#pragma once

// Command-line front end. qsf_run() parses a subcommand line, evaluates it,
// and writes one JSON document to the output stream. Exit codes: 0 on
// success, 1 for domain errors (bad indices, inadmissible inputs, failed
// verification), 2 for parse errors (expressions, JSON files, usage).
//
// All JSON output is emitted with sorted object keys and container-ordered
// arrays, so identical invocations produce byte-identical output.

#include "qsf/based_algebra.hpp"
#include "qsf/coeff.hpp"
#include "qsf/expr.hpp"
#include "qsf/qsym.hpp"
#include "qsf/schur.hpp"
#include "qsf/superalg.hpp"
#include "qsf/sympow.hpp"
#include "qsf/verify.hpp"
#include "qsf/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qsf {

namespace cli_detail {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Serialization helpers

inline json hpoly_json(const HPoly& p) {
  json arr = json::array();
  for (const auto& [d, c] : p.coeffs) {
    arr.push_back({{"hbar_deg", d},
                   {"re_num", numerator(c.re).str()},
                   {"re_den", denominator(c.re).str()},
                   {"im_num", numerator(c.im).str()},
                   {"im_den", denominator(c.im).str()}});
  }
  return arr;
}

inline HPoly hpoly_from_json(const json& arr) {
  HPoly p;
  for (const auto& e : arr) {
    Rat re(Int(e.at("re_num").get<std::string>()), Int(e.at("re_den").get<std::string>()));
    Rat im(Int(e.at("im_num").get<std::string>()), Int(e.at("im_den").get<std::string>()));
    p += HPoly::hbar(e.at("hbar_deg").get<unsigned>(), GaussRat(re, im));
  }
  return p;
}

/// Parses "3/2", "-2", "2i", "-1/3i" into a Gaussian rational.
inline GaussRat gauss_from_string(std::string s) {
  bool imag = !s.empty() && s.back() == 'i';
  if (imag) s.pop_back();
  if (s.empty()) s = "1";
  if (s == "-") s = "-1";
  size_t slash = s.find('/');
  Rat r = slash == std::string::npos
              ? Rat(Int(s))
              : Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  return imag ? GaussRat(Rat(0), r) : GaussRat(r);
}

/// One summand of the expression syntax: coefficient, hbar power, body.
inline void append_expr_term(std::string& s, const GaussRat& c, unsigned h,
                             const std::string& body) {
  auto one_part = [&](const Rat& r, bool imag) {
    if (r == 0) return;
    if (!s.empty()) s += " + ";
    std::ostringstream os;
    os << r;
    s += os.str();
    if (imag) s += "i";
    if (h > 0) s += " h^" + std::to_string(h);
    if (!body.empty()) s += " " + body;
  };
  one_part(c.re, false);
  one_part(c.im, true);
}

// ---------------------------------------------------------------------------
// Expression evaluation per dialect

/// One unbracketed expression group list as a Weyl word (empty slots = the
/// empty word).
inline WeylWord term_to_weyl_word(const ExprTerm& t) {
  if (t.bracketed || t.slots.size() > 1)
    throw std::invalid_argument("expected a single unbracketed word per term");
  WeylWord w;
  if (t.slots.empty()) return w;
  for (const ExprGroup& g : t.slots[0]) {
    WeylFactor cur{0, 0};
    bool open = false;
    for (const ExprFactor& f : g) {
      auto [stem, idx] = split_var(f.name);
      if (idx != -1) throw std::invalid_argument("indexed variable in a one-letter word");
      if (stem == "x") {
        if (open && cur.b > 0) {
          w.push_back(cur);
          cur = WeylFactor{0, 0};
        }
        cur.a += f.exp;
      } else {
        cur.b += f.exp;
      }
      open = true;
    }
    if (open) w.push_back(cur);
  }
  return w;
}

using HNormalForm = std::map<NormalKey, GaussRat>;

inline HNormalForm eval_weyl_expr(const std::string& input, bool mweyl) {
  Expr e = parse(input, Dialect::weyl);
  HNormalForm out;
  for (const ExprTerm& t : e.terms) {
    WeylWord w = term_to_weyl_word(t);
    WeylNormalForm nf = mweyl ? mweyl_normal_order(w) : normal_order(w);
    for (const auto& [key, c] : nf) {
      NormalKey k = key;
      k.h += t.hbar;
      GaussRat& slot = out[k];
      slot = slot + t.coeff * GaussRat(Rat(c));
      if (slot.is_zero()) out.erase(k);
    }
  }
  return out;
}

inline std::string weyl_body(const NormalKey& k) {
  std::string body;
  auto pow = [&](const char* v, unsigned e) {
    if (e == 0) return;
    if (!body.empty()) body += " ";
    body += v;
    if (e > 1) body += "^" + std::to_string(e);
  };
  pow("x", k.x);
  pow("y", k.y);
  return body;
}

inline QSymElement eval_qsym_expr(const std::string& input, unsigned n) {
  Expr e = parse(input, Dialect::qsym);
  QSymElement X;
  for (const ExprTerm& t : e.terms) {
    ExpMatrix A = expr_term_to_expmatrix(t);
    if (A.n() != n) throw std::invalid_argument("slot count disagrees with --n");
    X.add(A.sorted(), HPoly::hbar(t.hbar, t.coeff));
  }
  return X;
}

inline std::string qsym_body(const ExpMatrix& A) {
  std::string body = "[";
  for (size_t i = 0; i < A.rows.size(); ++i) {
    if (i) body += " | ";
    std::string row;
    auto pow = [&](const char* v, unsigned e) {
      if (e == 0) return;
      if (!row.empty()) row += " ";
      row += v;
      if (e > 1) row += "^" + std::to_string(e);
    };
    pow("x", A.rows[i].a[0]);
    pow("y", A.rows[i].b[0]);
    if (row.empty()) row = "x^0";
    body += row;
  }
  return body + "]";
}

inline SymElement eval_label_expr(const std::string& input, unsigned n, const PermGroup& K,
                                  const BasedAlgebra& alg) {
  Expr e = parse(input, Dialect::boolean_alg);
  SymElement X;
  for (const ExprTerm& t : e.terms) {
    LabelTuple tup = expr_term_to_labels(t, alg.dim);
    if (tup.size() != n) throw std::invalid_argument("slot count disagrees with --n");
    auto [rep, sign] = canonicalize(tup, K, alg);
    if (sign == 0) continue;
    X.add(rep, HPoly::hbar(t.hbar, t.coeff * GaussRat(Rat(sign))));
  }
  return X;
}

inline std::string label_body(const LabelTuple& tup) {
  std::string body = "[";
  for (size_t i = 0; i < tup.size(); ++i) {
    if (i) body += " | ";
    body += "e" + std::to_string(tup[i]);
  }
  return body + "]";
}

inline SymElement eval_odd_expr(const std::string& input, unsigned n, unsigned m,
                                const PermGroup& Sn, const BasedAlgebra& ext) {
  Expr e = parse(input, Dialect::odd);
  SymElement X;
  for (const ExprTerm& t : e.terms) {
    std::vector<ExtMono> blades = expr_term_to_blades(t, m);
    if (blades.size() != n) throw std::invalid_argument("slot count disagrees with --n");
    LabelTuple tup(blades.begin(), blades.end());
    auto [rep, sign] = canonicalize(tup, Sn, ext);
    if (sign == 0) continue;
    X.add(rep, HPoly::hbar(t.hbar, t.coeff * GaussRat(Rat(sign))));
  }
  return X;
}

inline std::string blade_body(const LabelTuple& tup, bool& printable) {
  std::string body = "[";
  for (size_t i = 0; i < tup.size(); ++i) {
    if (i) body += " | ";
    std::string slot;
    for (unsigned g = 0; g < 32; ++g)
      if (tup[i] & (1u << g)) {
        if (!slot.empty()) slot += " ";
        slot += "th" + std::to_string(g + 1);
      }
    if (slot.empty()) printable = false;
    body += slot;
  }
  return body + "]";
}

// ---------------------------------------------------------------------------
// JSON input formats

inline BasedAlgebra algebra_from_json(const json& j) {
  BasedAlgebra A;
  A.dim = j.at("dim").get<unsigned>();
  A.unit = j.value("unit", -1);
  A.parity = j.value("parity", std::vector<unsigned>{});
  A.table.assign((size_t)A.dim * A.dim, {});
  for (const auto& e : j.at("table")) {
    unsigned s = e.at("s").get<unsigned>();
    unsigned t = e.at("t").get<unsigned>();
    if (s >= A.dim || t >= A.dim) throw std::invalid_argument("algebra table index out of range");
    std::vector<HPoly> acc(A.dim);
    for (const auto& tm : e.at("terms")) {
      unsigned k = tm.at("k").get<unsigned>();
      if (k >= A.dim) throw std::invalid_argument("algebra table label out of range");
      acc[k] += HPoly::hbar(tm.value("hbar_deg", 0u),
                            gauss_from_string(tm.at("coeff").get<std::string>()));
    }
    std::vector<std::pair<unsigned, HPoly>> terms;
    for (unsigned k = 0; k < A.dim; ++k)
      if (!acc[k].is_zero()) terms.emplace_back(k, acc[k]);
    A.set(s, t, std::move(terms));
  }
  check_algebra(A);
  return A;
}

inline SchurClass schur_class_from_json(const json& j, const std::vector<unsigned>& m,
                                        const PermGroup& Sn) {
  SchurClass F;
  for (const auto& e : j.at("terms")) {
    ElemTuple tup;
    for (const auto& s : e.at("slots")) {
      ElemTrans et;
      et.r = s.at("r").get<unsigned>();
      et.t = s.at("t").get<unsigned>();
      et.s = s.at("s").get<MultiIdx>();
      et.u = s.at("u").get<MultiIdx>();
      et.pr = s.value("pr", 0u);
      et.pt = s.value("pt", 0u);
      if (et.s.size() != m.size() || et.u.size() != m.size())
        throw std::invalid_argument("multi-index length disagrees with --m");
      tup.push_back(std::move(et));
    }
    if (tup.size() != Sn.n) throw std::invalid_argument("slot count disagrees with --n");
    HPoly c = e.contains("coeff") ? hpoly_from_json(e.at("coeff")) : HPoly::one();
    auto [rep, sign] = schur_canonicalize(tup, m, Sn);
    if (sign == 0) continue;
    F.add(rep, c * HPoly(GaussRat(Rat(sign))));
  }
  return F;
}

inline json schur_class_json(const SchurClass& F) {
  json terms = json::array();
  for (const auto& [tup, c] : F.terms) {
    json slots = json::array();
    for (const ElemTrans& et : tup)
      slots.push_back({{"r", et.r}, {"s", et.s}, {"t", et.t}, {"u", et.u},
                       {"pr", et.pr}, {"pt", et.pt}});
    terms.push_back({{"slots", slots}, {"coeff", hpoly_json(c)}});
  }
  return {{"terms", terms}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return json::parse(in);
}

inline std::vector<unsigned> parse_m_list(const std::string& s) {
  std::vector<unsigned> m;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) m.push_back((unsigned)std::stoul(piece));
  if (m.empty()) throw std::invalid_argument("empty --m list");
  return m;
}

// ---------------------------------------------------------------------------
// Subcommand bodies

inline void run_weyl(const std::string& expr, bool mweyl, std::ostream& out) {
  HNormalForm nf = eval_weyl_expr(expr, mweyl);
  json terms = json::array();
  std::string es;
  for (const auto& [k, c] : nf) {
    terms.push_back({{"x", k.x}, {"y", k.y}, {"h", k.h}, {"coeff", c.str()}});
    append_expr_term(es, c, k.h, weyl_body(k));
  }
  if (es.empty()) es = "0";
  json j{{"terms", terms}, {"expr", es}};
  out << j.dump(2) << "\n";
}

inline void run_qsym_star(const std::string& type, unsigned n, const std::string& ea,
                          const std::string& ec, std::ostream& out) {
  QSymElement X = eval_qsym_expr(ea, n);
  QSymElement Y = eval_qsym_expr(ec, n);
  QSymElement R;
  if (type == "A") {
    R = star_bilinear(X, Y, [](const ExpMatrix& A, const ExpMatrix& C) {
      return qsym_star_A(A, C);
    });
  } else if (type == "B" || type == "D") {
    StarFamily f = type == "B" ? StarFamily::B : StarFamily::D;
    R = star_bilinear(X, Y, [f](const ExpMatrix& A, const ExpMatrix& C) {
      return qsym_star_BD(A, C, f);
    });
  } else if (type.rfind("zm:", 0) == 0) {
    unsigned mc = (unsigned)std::stoul(type.substr(3));
    R = star_bilinear(X, Y, [mc](const ExpMatrix& A, const ExpMatrix& C) {
      return wreath_zm_star(A, C, mc);
    });
  } else if (type.rfind("dihedral:", 0) == 0) {
    unsigned mc = (unsigned)std::stoul(type.substr(9));
    R = dihedral_star_element(X, Y, mc);
  } else {
    throw std::invalid_argument("unknown star type: " + type);
  }
  json terms = json::array();
  std::string es;
  for (const auto& [A, c] : R.terms) {
    json rows = json::array();
    for (const ExpRow& r : A.rows) rows.push_back({r.a, r.b});
    for (const auto& [d, g] : c.coeffs) {
      terms.push_back({{"rows", rows}, {"hbar_deg", d}, {"coeff", g.str()}});
      append_expr_term(es, g, d, qsym_body(A));
    }
  }
  if (es.empty()) es = "0";
  json j{{"terms", terms}, {"expr", es}};
  out << j.dump(2) << "\n";
}

inline void run_sympow_product(const std::string& algebra_path, const std::string& group,
                               unsigned n, const std::string& ea, const std::string& eb,
                               std::ostream& out) {
  BasedAlgebra alg = algebra_from_json(load_json_file(algebra_path));
  PermGroup K = parse_group(group, n);
  SymElement X = eval_label_expr(ea, n, K, alg);
  SymElement Y = eval_label_expr(eb, n, K, alg);
  SymElement R = polya_product({X, Y}, K, alg);
  json terms = json::array();
  std::string es;
  for (const auto& [tup, c] : R.terms) {
    terms.push_back({{"labels", tup}, {"coeff", hpoly_json(c)}});
    for (const auto& [d, g] : c.coeffs) append_expr_term(es, g, d, label_body(tup));
  }
  if (es.empty()) es = "0";
  json j{{"terms", terms}, {"expr", es}};
  out << j.dump(2) << "\n";
}

inline void run_sympow_boolean(unsigned n, unsigned a, unsigned b, std::ostream& out) {
  std::map<unsigned, Rat> r = boolean_product(a, b, n);
  json terms = json::array();
  for (const auto& [k, c] : r) {
    std::ostringstream os;
    os << c;
    terms.push_back({{"class", k}, {"coeff", os.str()}});
  }
  json j{{"terms", terms}};
  out << j.dump(2) << "\n";
}

inline void run_super_product(unsigned m, unsigned n, const std::string& ea,
                              const std::string& eb, std::ostream& out) {
  if (m > 16) throw std::invalid_argument("--m too large for the odd product");
  BasedAlgebra ext = exterior_algebra(m);
  PermGroup Sn = symmetric_group(n);
  SymElement X = eval_odd_expr(ea, n, m, Sn, ext);
  SymElement Y = eval_odd_expr(eb, n, m, Sn, ext);
  SymElement R;
  for (const auto& [ti, ci] : X.terms)
    for (const auto& [tj, cj] : Y.terms) {
      std::vector<ExtMono> I(ti.begin(), ti.end()), J(tj.begin(), tj.end());
      SymElement P = odd_sym_product(I, J, m);
      HPoly scale = ci * cj;
      for (const auto& [rep, c] : P.terms) R.add(rep, c * scale);
    }
  json terms = json::array();
  std::string es;
  bool printable = true;
  for (const auto& [tup, c] : R.terms) {
    json slots = json::array();
    for (unsigned blade : tup) {
      json gens = json::array();
      for (unsigned g = 0; g < 32; ++g)
        if (blade & (1u << g)) gens.push_back(g + 1);
      slots.push_back(gens);
    }
    terms.push_back({{"slots", slots}, {"coeff", hpoly_json(c)}});
    std::string body = blade_body(tup, printable);
    for (const auto& [d, g] : c.coeffs) append_expr_term(es, g, d, body);
  }
  json j{{"terms", terms}};
  if (printable) j["expr"] = es.empty() ? "0" : es;
  out << j.dump(2) << "\n";
}

inline void run_schur_compose(const std::string& mspec, unsigned n, int dimw,
                              const std::string& fpath, const std::string& gpath,
                              std::ostream& out) {
  std::vector<unsigned> m = parse_m_list(mspec);
  PermGroup Sn = symmetric_group(n);
  SchurClass F = schur_class_from_json(load_json_file(fpath), m, Sn);
  SchurClass G = schur_class_from_json(load_json_file(gpath), m, Sn);
  unsigned dw;
  if (dimw >= 0) {
    dw = (unsigned)dimw;
  } else {
    dw = 0;
    for (const auto& [tup, c] : F.terms)
      for (const ElemTrans& et : tup) dw = std::max(dw, et.t + 1);
    for (const auto& [tup, c] : G.terms)
      for (const ElemTrans& et : tup) dw = std::max(dw, et.r + 1);
  }
  SchurClass R = schur_compose(F, G, m, dw);
  out << schur_class_json(R).dump(2) << "\n";
}

inline void run_verify(const std::string& suite, const VerifyOptions& opt, std::ostream& out,
                       int& rc) {
  VerifyReport rep = run_suite(suite, opt);
  json mism = json::array();
  for (const VerifyMismatch& m : rep.mismatches)
    mism.push_back({{"input", m.input}, {"expected", m.expected}, {"actual", m.actual}});
  json j{{"suite", rep.suite}, {"instances", rep.instances}, {"mismatches", mism}};
  out << j.dump(2) << "\n";
  if (!rep.pass()) rc = 1;
}

}  // namespace cli_detail

/// Runs one CLI invocation (without the program name). Writes the JSON result
/// or an {"error": {...}} object to `out`, CLI11 usage messages to `err`.
inline int qsf_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli_detail::json;
  CLI::App app{"exact products in coinvariant symmetric powers"};
  app.require_subcommand(1);
  int rc = 0;

  std::string expr_a, expr_b, type = "A", group = "trivial", algebra_path, mlist = "1";
  std::string fpath, gpath, suite;
  unsigned n = 1, m_gens = 1, bool_a = 0, bool_b = 0;
  int dimw = -1;
  VerifyOptions vopt;

  auto* weyl = app.add_subcommand("weyl", "Weyl algebra");
  weyl->require_subcommand(1);
  auto* weyl_no = weyl->add_subcommand("normal-order", "normal-ordered form of a word");
  weyl_no->add_option("expr", expr_a, "expression, e.g. \"y . x\"")->required();
  weyl_no->callback([&] { cli_detail::run_weyl(expr_a, false, out); });

  auto* mweyl = app.add_subcommand("mweyl", "meromorphic Weyl algebra");
  mweyl->require_subcommand(1);
  auto* mweyl_no = mweyl->add_subcommand("normal-order", "normal-ordered form of a word");
  mweyl_no->add_option("expr", expr_a, "expression, e.g. \"y . x\"")->required();
  mweyl_no->callback([&] { cli_detail::run_weyl(expr_a, true, out); });

  auto* sympow = app.add_subcommand("sympow", "coinvariant symmetric powers");
  sympow->require_subcommand(1);
  auto* sp_prod = sympow->add_subcommand("product", "product of two classes");
  sp_prod->add_option("--algebra", algebra_path, "algebra JSON file")->required();
  sp_prod->add_option("--group", group, "Sn | trivial | gens:\"(1 2),...\"");
  sp_prod->add_option("--n", n, "number of tensor slots")->required();
  sp_prod->add_option("exprA", expr_a, "first class, e.g. \"[e0|e1]\"")->required();
  sp_prod->add_option("exprB", expr_b, "second class")->required();
  sp_prod->callback(
      [&] { cli_detail::run_sympow_product(algebra_path, group, n, expr_a, expr_b, out); });
  auto* sp_bool = sympow->add_subcommand("boolean", "Boolean semiring class product");
  sp_bool->add_option("--n", n, "number of tensor slots")->required();
  sp_bool->add_option("a", bool_a, "first class")->required();
  sp_bool->add_option("b", bool_b, "second class")->required();
  sp_bool->callback([&] { cli_detail::run_sympow_boolean(n, bool_a, bool_b, out); });

  auto* qsym = app.add_subcommand("qsym", "quantum symmetric functions");
  qsym->require_subcommand(1);
  auto* qs_star = qsym->add_subcommand("star", "star product of two classes");
  qs_star->add_option("--type", type, "A | B | D | zm:<m> | dihedral:<m>");
  qs_star->add_option("--n", n, "number of tensor slots")->required();
  qs_star->add_option("exprA", expr_a, "first class, e.g. \"[x1 y1 | x2]\"")->required();
  qs_star->add_option("exprC", expr_b, "second class")->required();
  qs_star->callback([&] { cli_detail::run_qsym_star(type, n, expr_a, expr_b, out); });

  auto* super = app.add_subcommand("super", "exterior powers of odd variables");
  super->require_subcommand(1);
  auto* su_prod = super->add_subcommand("product", "product of two blade classes");
  su_prod->add_option("--m", m_gens, "number of odd generators")->required();
  su_prod->add_option("--n", n, "number of tensor slots")->required();
  su_prod->add_option("exprA", expr_a, "first class, e.g. \"[th1 th2 | th3]\"")->required();
  su_prod->add_option("exprB", expr_b, "second class")->required();
  su_prod->callback([&] { cli_detail::run_super_product(m_gens, n, expr_a, expr_b, out); });

  auto* schur = app.add_subcommand("schur", "Schur category morphisms");
  schur->require_subcommand(1);
  auto* sc_comp = schur->add_subcommand("compose", "composition of two morphism classes");
  sc_comp->add_option("--m", mlist, "cyclic moduli, e.g. 2,3")->required();
  sc_comp->add_option("--n", n, "number of tensor slots")->required();
  sc_comp->add_option("--dimw", dimw, "middle space dimension (default: inferred)");
  sc_comp->add_option("F", fpath, "later morphism class, JSON file")->required();
  sc_comp->add_option("G", gpath, "earlier morphism class, JSON file")->required();
  sc_comp->callback([&] { cli_detail::run_schur_compose(mlist, n, dimw, fpath, gpath, out); });

  auto* verify = app.add_subcommand("verify", "cross-check a formula against its oracle");
  verify->add_option("suite", suite, "suite name; see --help-suites")->required();
  verify->add_option("--nmax", vopt.nmax, "override the slot-count sweep bound");
  verify->add_option("--emax", vopt.emax, "override the exponent sweep bound");
  verify->add_option("--budget", vopt.budget, "override the instance budget");
  verify->callback([&] { cli_detail::run_verify(suite, vopt, out, rc); });

  std::vector<const char*> argv;
  argv.push_back("qsf");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    json j{{"error", {{"kind", "usage"}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    return 2;
  } catch (const ParseError& e) {
    json j{{"error", {{"kind", "parse"}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    json j{{"error", {{"kind", "parse"}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json j{{"error", {{"kind", "domain"}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    return 1;
  }
  return rc;
}

}  // namespace qsf
