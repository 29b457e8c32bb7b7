#pragma once

// Exact scalar arithmetic: Gaussian rationals and polynomials in the formal
// parameter hbar. These are the coefficients used by every other module.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qsf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Element of Q(i), stored as a pair of normalized rationals.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r) : re(r) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

  GaussRat div_int(const Int& d) const {
    if (d == 0) throw std::domain_error("GaussRat: division by zero");
    return {re / Rat(d), im / Rat(d)};
  }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    if (im == 0) {
      os << re;
    } else if (re == 0) {
      os << im << "i";
    } else {
      os << re;
      if (im > 0) os << "+";
      os << im << "i";
    }
    return os.str();
  }
};

/// Polynomial in hbar with GaussRat coefficients. The zero polynomial is the
/// empty map; stored coefficients are never zero.
struct HPoly {
  std::map<unsigned, GaussRat> coeffs;

  HPoly() = default;
  HPoly(GaussRat c) {
    if (!c.is_zero()) coeffs.emplace(0u, std::move(c));
  }
  HPoly(long c) : HPoly(GaussRat(c)) {}

  static HPoly hbar(unsigned deg, GaussRat c = GaussRat(1)) {
    HPoly p;
    if (!c.is_zero()) p.coeffs.emplace(deg, std::move(c));
    return p;
  }
  static HPoly one() { return HPoly(GaussRat(1)); }

  bool is_zero() const { return coeffs.empty(); }

  void add_term(unsigned deg, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(deg);
    if (it == coeffs.end()) {
      coeffs.emplace(deg, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }

  friend HPoly operator+(const HPoly& p, const HPoly& q) {
    HPoly r = p;
    for (const auto& [d, c] : q.coeffs) r.add_term(d, c);
    return r;
  }
  friend HPoly operator-(const HPoly& p, const HPoly& q) {
    HPoly r = p;
    for (const auto& [d, c] : q.coeffs) r.add_term(d, -c);
    return r;
  }
  friend HPoly operator-(const HPoly& p) {
    HPoly r;
    for (const auto& [d, c] : p.coeffs) r.coeffs.emplace(d, -c);
    return r;
  }
  friend HPoly operator*(const HPoly& p, const HPoly& q) {
    HPoly r;
    for (const auto& [dp, cp] : p.coeffs)
      for (const auto& [dq, cq] : q.coeffs) r.add_term(dp + dq, cp * cq);
    return r;
  }
  HPoly& operator+=(const HPoly& o) {
    for (const auto& [d, c] : o.coeffs) add_term(d, c);
    return *this;
  }
  HPoly& operator-=(const HPoly& o) {
    for (const auto& [d, c] : o.coeffs) add_term(d, -c);
    return *this;
  }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  HPoly div_nat(const Int& d) const {
    if (d <= 0) throw std::domain_error("HPoly: divisor must be positive");
    HPoly r;
    for (const auto& [deg, c] : coeffs) r.coeffs.emplace(deg, c.div_int(d));
    return r;
  }

  /// Coefficient at a given hbar degree (zero if absent).
  GaussRat coeff(unsigned deg) const {
    auto it = coeffs.find(deg);
    return it == coeffs.end() ? GaussRat() : it->second;
  }

  friend bool operator==(const HPoly& p, const HPoly& q) { return p.coeffs == q.coeffs; }
  friend bool operator!=(const HPoly& p, const HPoly& q) { return !(p == q); }

  std::string str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      if (d == 1) os << "*h";
      else if (d > 1) os << "*h^" << d;
    }
    return os.str();
  }
};

}  // namespace qsf
