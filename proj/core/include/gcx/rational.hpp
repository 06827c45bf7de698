#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gcx {

// Arbitrary-precision rational, always stored fully reduced with a
// positive denominator, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Exact complex scalar over Q(i): the coefficient domain of every form,
// vector and matrix in this library. No floating point anywhere.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}  // NOLINT: implicit on purpose
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }

  // |z|^2, a nonnegative rational; zero only for z = 0.
  Rational norm() const { return Rational(re * re + im * im); }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r(re * o.re - im * o.im);
    Rational i(re * o.im + im * o.re);
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // "0", "1/2", "i", "-2/3i", "1/2 + 3i", "1 - i", ...
  std::string str() const;
};

// Strict wire format for rationals: an optional sign, digits, and an
// optional "/digits" with positive denominator. Anything else is rejected.
bool is_valid_rational_text(const std::string& text);
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& r);

}  // namespace gcx
