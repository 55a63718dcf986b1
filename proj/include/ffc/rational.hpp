#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ffc/base.hpp"

namespace ffc {

/// Exact rational number; all arithmetic in the library is exact, no rounding anywhere.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat make_rat(long long p, long long q) {
  require(q != 0, "rational with zero denominator");
  return Rat(Int(p), Int(q));
}

/// Parses "p/q" or "p" (decimal integers, optional sign). Result is normalized.
inline Rat parse_rat(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    require(is_int(s), "malformed rational: '" + s + "'");
    return Rat(Int(s));
  }
  const std::string p = s.substr(0, slash);
  const std::string q = s.substr(slash + 1);
  require(is_int(p) && is_int(q), "malformed rational: '" + s + "'");
  Int den(q);
  require(den != 0, "rational with zero denominator: '" + s + "'");
  return Rat(Int(p), den);
}

/// Canonical form "p/q": normalized, q > 0, sign carried by p.
inline std::string format_rat(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// human-readable: drops the "/1" of integers
inline std::string pretty_rat(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return format_rat(r);
}

inline int rat_ceil_div(const Rat& r) {
  // smallest integer n with n >= r, for positive r
  require(r > 0, "ceil of non-positive rational");
  Int n = (numerator(r) + denominator(r) - 1) / denominator(r);
  return static_cast<int>(n);
}

/// Element of Q(i): complex number with exact rational real and imaginary parts.
struct Complex {
  Rat re;
  Rat im;

  Complex() : re(0), im(0) {}
  Complex(Rat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit from Rat
  Complex(int r) : re(r), im(0) {}             // NOLINT
  Complex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Complex conj() const { return Complex(re, -im); }

  /// |z|^2 = re^2 + im^2; kept squared so everything stays rational.
  Rat abs_sq() const { return re * re + im * im; }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Rat d = b.abs_sq();
    require_domain(d != 0, "division by zero");
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

// deterministic total order (representational, not algebraic); used for grouping
inline int compare_complex(const Complex& a, const Complex& b) {
  if (a.re != b.re) return a.re < b.re ? -1 : 1;
  if (a.im != b.im) return a.im < b.im ? -1 : 1;
  return 0;
}

inline std::string format_complex(const Complex& z) {
  if (z.is_real()) return pretty_rat(z.re);
  return pretty_rat(z.re) + (z.im > 0 ? "+" : "") + pretty_rat(z.im) + "i";
}

}  // namespace ffc
