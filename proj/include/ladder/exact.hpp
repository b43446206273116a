#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace ladder {

using Integer = mpz_class;
using Rational = mpq_class;

/// n! as an arbitrary-precision integer. Throws for n < 0.
Integer factorial_int(long n);

/// Binomial coefficient C(n, k), zero when k < 0 or k > n.
Integer binomial_int(long n, long k);

/// num/den as a canonical rational. Throws on zero denominator.
Rational rat_frac(const Integer& num, const Integer& den);

/// Parse "a/b" or "a" into a canonical rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

/// Always renders as "numerator/denominator", e.g. "3/1", "-7/2".
std::string rational_to_string(const Rational& r);

/// Complex number with exact rational real and imaginary parts.
/// All arithmetic is exact; nothing here ever rounds.
struct ExactComplex {
  Rational re{0};
  Rational im{0};

  ExactComplex() = default;
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit ExactComplex(Rational r) : re(std::move(r)), im(0) {}
  explicit ExactComplex(long r) : re(r), im(0) {}
  explicit ExactComplex(const Integer& r) : re(r), im(0) {}

  static ExactComplex zero() { return ExactComplex(); }
  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex i() { return ExactComplex(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ExactComplex conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator*(const ExactComplex& a, const Rational& s) {
    return {a.re * s, a.im * s};
  }
  friend ExactComplex operator*(const Rational& s, const ExactComplex& a) { return a * s; }

  /// Division by (c + di) multiplies by the conjugate over c^2 + d^2.
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational d = b.norm_sq();
    if (d == 0) throw std::invalid_argument("ExactComplex: division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend ExactComplex operator/(const ExactComplex& a, const Rational& s) {
    if (s == 0) throw std::invalid_argument("ExactComplex: division by zero");
    return {a.re / s, a.im / s};
  }

  ExactComplex& operator+=(const ExactComplex& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& b) {
    *this = *this * b;
    return *this;
  }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// x^k for small nonnegative k.
ExactComplex pow_int(const ExactComplex& x, int k);

/// "a/b" or "a/b+c/d i" (imaginary part omitted when zero).
std::string exact_to_string(const ExactComplex& z);

}  // namespace ladder
