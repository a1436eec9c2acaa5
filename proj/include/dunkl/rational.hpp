#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace dunklcore {

// Arbitrary-precision rational, always canonicalized (reduced, denominator > 0).
using BigRational = mpq_class;

inline BigRational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p", or "p/q". Throws on malformed input or zero denominator.
inline BigRational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Reduced decimal form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const BigRational& q) { return q.get_str(10); }

inline double rat_double(const BigRational& q) { return q.get_d(); }

inline long double rat_long_double(const BigRational& q) {
  // mpq_class::get_d loses the extended mantissa; split to keep long double precision.
  mpf_class f(q, 128);
  return static_cast<long double>(f.get_d()) +
         static_cast<long double>(mpf_class(f - f.get_d()).get_d());
}

// Rising factorial (x)_n = x(x+1)...(x+n-1).
inline BigRational rat_pochhammer(const BigRational& x, long n) {
  if (n < 0) throw std::invalid_argument("rat_pochhammer: negative length");
  BigRational acc = 1;
  BigRational t = x;
  for (long k = 0; k < n; ++k) {
    acc *= t;
    t += 1;
  }
  return acc;
}

inline BigRational rat_pow(const BigRational& x, long n) {
  if (n < 0) {
    if (x == 0) throw std::domain_error("rat_pow: zero to negative power");
    BigRational inv = 1 / x;
    return rat_pow(inv, -n);
  }
  BigRational acc = 1, base = x;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// Element of Q(i). Coefficient domain for all polynomial calculus here; purely
// real pipelines assert vanishing imaginary parts rather than using a second type.
struct GaussRational {
  BigRational re, im;

  GaussRational() : re(0), im(0) {}
  GaussRational(long v) : re(v, 1), im(0) {}  // NOLINT: implicit by design
  GaussRational(BigRational r) : re(std::move(r)), im(0) {}
  GaussRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return GaussRational(BigRational(0), BigRational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRational conj() const { return GaussRational(re, -im); }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    BigRational nre = re * o.re - im * o.im;
    BigRational nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator-(const GaussRational& a) { return GaussRational(-a.re, -a.im); }

  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    BigRational n2 = b.re * b.re + b.im * b.im;
    if (n2 == 0) throw std::domain_error("GaussRational: division by zero");
    return GaussRational((a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2);
  }
  GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

// "p/q" for real values, "(p/q)+(p/q)i" otherwise; for logs and error text.
inline std::string gauss_str(const GaussRational& z) {
  if (z.is_real()) return rat_str(z.re);
  return "(" + rat_str(z.re) + ")+(" + rat_str(z.im) + ")i";
}

}  // namespace dunklcore
