#include "gcx/rational.hpp"

#include <stdexcept>

namespace gcx {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational n = o.norm();
  Rational r((re * o.re + im * o.im) / n);
  Rational i((im * o.re - re * o.im) / n);
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string rational_str(const Rational& r) { return r.str(); }

namespace {

// Renders q as a coefficient of the imaginary unit: 1 -> "i", -1 -> "-i",
// 2 -> "2i", -2/3 -> "-2/3i".
std::string imag_str(const Rational& q) {
  if (q == 1) return "i";
  if (q == -1) return "-i";
  std::string s = q.str();
  if (s.find('/') != std::string::npos) return "(" + s + ")i";
  return s + "i";
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return imag_str(im);
  std::string out = re.str();
  if (im > 0) {
    out += " + " + imag_str(im);
  } else {
    out += " - " + imag_str(Rational(-im));
  }
  return out;
}

bool is_valid_rational_text(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    ++pos;
    ++digits;
  }
  if (digits == 0) return false;
  if (pos == text.size()) return true;
  if (text[pos] != '/') return false;
  ++pos;
  std::size_t den_digits = 0;
  bool den_nonzero = false;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    if (text[pos] != '0') den_nonzero = true;
    ++pos;
    ++den_digits;
  }
  return pos == text.size() && den_digits > 0 && den_nonzero;
}

Rational parse_rational(const std::string& text) {
  if (!is_valid_rational_text(text)) {
    throw std::invalid_argument("not a rational literal: \"" + text +
                                "\" (expected \"p\" or \"p/q\" with positive q)");
  }
  return Rational(text);
}

}  // namespace gcx
