#pragma once

// Expression language of the command-line front end.
//
//   element  := term ('+' term)*
//   term     := coeff? slotlist
//   slotlist := '[' word ('|' word)* ']' | word
//   word     := group ('.' group)*        (a group is one or more factors)
//   factor   := var ('^' nat)?
//   var      := [a-z]+[0-9]*
//   coeff    := rational 'i'? ('h^' nat)? | 'h^' nat
//
// Parse errors carry 1-based line and column positions.

#include "qsf/coeff.hpp"
#include "qsf/qsym.hpp"
#include "qsf/superalg.hpp"
#include "qsf/sympow.hpp"
#include "qsf/weyl.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsf {

struct ParseError : std::runtime_error {
  unsigned line, col;
  ParseError(unsigned l, unsigned c, const std::string& what)
      : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                           what),
        line(l),
        col(c) {}
};

enum class Dialect { weyl, qsym, odd, boolean_alg, schur };

struct ExprFactor {
  std::string name;
  unsigned exp = 1;
};

/// One '.'-separated group of juxtaposed factors.
using ExprGroup = std::vector<ExprFactor>;

/// One tensor slot: dot-separated groups.
using ExprWord = std::vector<ExprGroup>;

struct ExprTerm {
  GaussRat coeff = GaussRat(1);
  unsigned hbar = 0;
  std::vector<ExprWord> slots;
  bool bracketed = false;
};

struct Expr {
  std::vector<ExprTerm> terms;
};

namespace detail {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  unsigned line = 1, col = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && std::isspace((unsigned char)peek())) take();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, col, what); }
};

inline bool var_allowed(const std::string& stem, Dialect d) {
  switch (d) {
    case Dialect::weyl:
      return stem == "x" || stem == "y";
    case Dialect::qsym:
      return stem == "x" || stem == "y" || stem == "z" || stem == "zb";
    case Dialect::odd:
      return stem == "th";
    case Dialect::boolean_alg:
    case Dialect::schur:
      return stem == "e";
  }
  return false;
}

inline unsigned parse_nat(Cursor& cur) {
  if (!std::isdigit((unsigned char)cur.peek())) cur.fail("expected a number");
  unsigned long v = 0;
  while (std::isdigit((unsigned char)cur.peek())) {
    v = v * 10 + (unsigned long)(cur.take() - '0');
    if (v > 1000000) cur.fail("number too large");
  }
  return (unsigned)v;
}

inline ExprFactor parse_factor(Cursor& cur, Dialect d) {
  unsigned line = cur.line, col = cur.col;
  std::string stem;
  while (std::islower((unsigned char)cur.peek())) stem.push_back(cur.take());
  if (stem.empty()) cur.fail("expected a variable");
  std::string digits;
  while (std::isdigit((unsigned char)cur.peek())) digits.push_back(cur.take());
  if (!var_allowed(stem, d)) throw ParseError(line, col, "unknown variable '" + stem + digits + "'");
  ExprFactor f;
  f.name = stem + digits;
  if (cur.peek() == '^') {
    cur.take();
    f.exp = parse_nat(cur);
  }
  return f;
}

inline ExprWord parse_word(Cursor& cur, Dialect d) {
  ExprWord word;
  while (true) {
    ExprGroup group;
    group.push_back(parse_factor(cur, d));
    while (true) {
      cur.skip_ws();
      if (std::islower((unsigned char)cur.peek())) group.push_back(parse_factor(cur, d));
      else break;
    }
    word.push_back(std::move(group));
    cur.skip_ws();
    if (cur.peek() == '.') {
      cur.take();
      cur.skip_ws();
      continue;
    }
    break;
  }
  return word;
}

inline Rat parse_rational(Cursor& cur) {
  bool neg = false;
  if (cur.peek() == '-') {
    cur.take();
    neg = true;
  }
  Int num = 0;
  if (!std::isdigit((unsigned char)cur.peek())) cur.fail("expected a number");
  while (std::isdigit((unsigned char)cur.peek())) num = num * 10 + (cur.take() - '0');
  Int den = 1;
  if (cur.peek() == '/') {
    cur.take();
    if (!std::isdigit((unsigned char)cur.peek())) cur.fail("expected a denominator");
    den = 0;
    while (std::isdigit((unsigned char)cur.peek())) den = den * 10 + (cur.take() - '0');
    if (den == 0) cur.fail("division by zero");
  }
  Rat r(num, den);
  return neg ? -r : r;
}

inline ExprTerm parse_term(Cursor& cur, Dialect d) {
  ExprTerm term;
  cur.skip_ws();
  bool saw_coeff = false;
  if (std::isdigit((unsigned char)cur.peek()) || cur.peek() == '-') {
    Rat r = parse_rational(cur);
    if (cur.peek() == 'i' && !std::islower((unsigned char)(cur.pos + 1 < cur.text.size()
                                                               ? cur.text[cur.pos + 1]
                                                               : '\0'))) {
      cur.take();
      term.coeff = GaussRat(Rat(0), r);
    } else {
      term.coeff = GaussRat(r);
    }
    saw_coeff = true;
    cur.skip_ws();
  }
  if (cur.peek() == 'h' && cur.pos + 1 < cur.text.size() && cur.text[cur.pos + 1] == '^') {
    cur.take();
    cur.take();
    term.hbar = parse_nat(cur);
    saw_coeff = true;
    cur.skip_ws();
  }
  if (cur.peek() == '[') {
    cur.take();
    term.bracketed = true;
    while (true) {
      cur.skip_ws();
      term.slots.push_back(parse_word(cur, d));
      cur.skip_ws();
      if (cur.peek() == '|') {
        cur.take();
        continue;
      }
      if (cur.peek() == ']') {
        cur.take();
        break;
      }
      cur.fail("expected '|' or ']'");
    }
  } else if (std::islower((unsigned char)cur.peek())) {
    term.slots.push_back(parse_word(cur, d));
  } else if (!saw_coeff) {
    cur.fail("expected a term");
  }
  return term;
}

}  // namespace detail

inline Expr parse(const std::string& input, Dialect d) {
  detail::Cursor cur(input);
  Expr e;
  e.terms.push_back(detail::parse_term(cur, d));
  while (true) {
    cur.skip_ws();
    if (cur.eof()) break;
    if (cur.peek() != '+') cur.fail("expected '+' or end of input");
    cur.take();
    e.terms.push_back(detail::parse_term(cur, d));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Dialect conversions

/// Splits "x12" into {"x", 12}; index -1 when no digits.
inline std::pair<std::string, int> split_var(const std::string& name) {
  size_t i = 0;
  while (i < name.size() && std::islower((unsigned char)name[i])) ++i;
  std::string stem = name.substr(0, i);
  int idx = -1;
  if (i < name.size()) idx = std::stoi(name.substr(i));
  return {stem, idx};
}

/// A single unbracketed word of x/y factors as a Weyl word: each group
/// contributes x-then-y runs, starting a fresh factor whenever the order
/// x-before-y would be violated.
inline WeylWord expr_to_weyl_word(const Expr& e) {
  if (e.terms.size() != 1 || e.terms[0].bracketed || e.terms[0].slots.size() != 1 ||
      e.terms[0].hbar != 0 || !(e.terms[0].coeff == GaussRat(1)))
    throw std::invalid_argument("expected a plain product word");
  WeylWord w;
  for (const ExprGroup& g : e.terms[0].slots[0]) {
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
        open = true;
      } else {
        cur.b += f.exp;
        open = true;
      }
    }
    if (open) w.push_back(cur);
  }
  return w;
}

/// A bracketed slot list as an exponent matrix with m = 1: slot i admits
/// x/y (or z/zb) optionally indexed by i+1.
inline ExpMatrix expr_term_to_expmatrix(const ExprTerm& t) {
  if (!t.bracketed) throw std::invalid_argument("expected a bracketed slot list");
  ExpMatrix A;
  for (size_t slot = 0; slot < t.slots.size(); ++slot) {
    ExpRow row;
    row.a.assign(1, 0);
    row.b.assign(1, 0);
    for (const ExprGroup& g : t.slots[slot])
      for (const ExprFactor& f : g) {
        auto [stem, idx] = split_var(f.name);
        if (idx != -1 && idx != (int)slot + 1)
          throw std::invalid_argument("variable index does not match its slot");
        if (stem == "x" || stem == "z") row.a[0] += f.exp;
        else row.b[0] += f.exp;
      }
    A.rows.push_back(std::move(row));
  }
  return A;
}

/// A bracketed slot list of th-generators as a tuple of blades.
inline std::vector<ExtMono> expr_term_to_blades(const ExprTerm& t, unsigned m) {
  if (!t.bracketed) throw std::invalid_argument("expected a bracketed slot list");
  std::vector<ExtMono> out;
  for (const ExprWord& w : t.slots) {
    ExtMono blade = 0;
    for (const ExprGroup& g : w)
      for (const ExprFactor& f : g) {
        auto [stem, idx] = split_var(f.name);
        if (idx < 1 || idx > (int)m) throw std::invalid_argument("generator index out of range");
        if (f.exp != 1) throw std::invalid_argument("odd generators square to zero");
        ExtMono bit = ExtMono(1) << (idx - 1);
        if (blade & bit) throw std::invalid_argument("repeated odd generator");
        blade |= bit;
      }
    out.push_back(blade);
  }
  return out;
}

/// A bracketed slot list of basis labels e<k> as a label tuple.
inline LabelTuple expr_term_to_labels(const ExprTerm& t, unsigned dim) {
  if (!t.bracketed) throw std::invalid_argument("expected a bracketed slot list");
  LabelTuple out;
  for (const ExprWord& w : t.slots) {
    if (w.size() != 1 || w[0].size() != 1 || w[0][0].exp != 1)
      throw std::invalid_argument("each slot must be a single basis label");
    auto [stem, idx] = split_var(w[0][0].name);
    if (idx < 0 || idx >= (int)dim) throw std::invalid_argument("basis label out of range");
    out.push_back((unsigned)idx);
  }
  return out;
}

}  // namespace qsf
