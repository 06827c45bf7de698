#include "gcx/multivector.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace gcx {

namespace {

void check_dim(int dim) {
  if (dim < 2 || dim > kMaxDim || dim % 2 != 0) {
    throw std::invalid_argument("dimension must be even and within [2, " +
                                std::to_string(kMaxDim) + "], got " + std::to_string(dim));
  }
}

void check_same_dim(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

}  // namespace

namespace blades {

int degree(Blade b) { return std::popcount(b); }

int wedge_sign(Blade a, Blade b) {
  if ((a & b) != 0) return 0;
  // Parity of #{(x, y) : x in a, y in b, x > y}: each index of b must move
  // past the larger indices of a.
  int inversions = 0;
  Blade rest = b;
  while (rest != 0) {
    int y = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (y + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

int contraction_sign(Blade b, int index) {
  Blade below = b & ((Blade{1} << (index - 1)) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

std::vector<int> indices(Blade b) {
  std::vector<int> out;
  while (b != 0) {
    int bit = std::countr_zero(b);
    b &= b - 1;
    out.push_back(bit + 1);
  }
  return out;
}

Blade from_indices(const std::vector<int>& idx) {
  Blade b = 0;
  int prev = 0;
  for (int i : idx) {
    if (i <= prev) throw std::invalid_argument("blade indices must be strictly increasing");
    if (i > kMaxDim) throw std::invalid_argument("blade index out of range");
    b |= Blade{1} << (i - 1);
    prev = i;
  }
  return b;
}

std::vector<Blade> of_degree(int dim, int k) {
  std::vector<Blade> out;
  if (k < 0 || k > dim) return out;
  // Lexicographic enumeration of k-combinations of {1..dim}.
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    Blade b = 0;
    for (int i : comb) b |= Blade{1} << (i - 1);
    out.push_back(b);
    if (k == 0) break;
    int t = k - 1;
    while (t >= 0 && comb[static_cast<std::size_t>(t)] == dim - (k - 1 - t)) --t;
    if (t < 0) break;
    ++comb[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < k; ++s) {
      comb[static_cast<std::size_t>(s)] = comb[static_cast<std::size_t>(s - 1)] + 1;
    }
  }
  return out;
}

std::vector<Blade> all(int dim) {
  std::vector<Blade> out;
  out.reserve(std::size_t{1} << dim);
  for (int k = 0; k <= dim; ++k) {
    auto deg = of_degree(dim, k);
    out.insert(out.end(), deg.begin(), deg.end());
  }
  return out;
}

}  // namespace blades

Multivector::Multivector(int dim) : dim_(dim) { check_dim(dim); }

Multivector Multivector::scalar(int dim, const GaussianRational& c) {
  Multivector m(dim);
  m.add_term(0, c);
  return m;
}

Multivector Multivector::term(int dim, Blade b, const GaussianRational& c) {
  Multivector m(dim);
  if (b >= (Blade{1} << dim)) throw std::invalid_argument("blade index out of range");
  m.add_term(b, c);
  return m;
}

Multivector Multivector::term(int dim, const std::vector<int>& indices, const GaussianRational& c) {
  return term(dim, blades::from_indices(indices), c);
}

Multivector Multivector::one_form(int dim, int index) {
  if (index < 1 || index > dim) throw std::invalid_argument("1-form index out of range");
  return term(dim, Blade{1} << (index - 1), GaussianRational(1));
}

GaussianRational Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? GaussianRational() : it->second;
}

int Multivector::min_degree() const {
  int best = -1;
  for (const auto& [b, c] : terms_) {
    int d = blades::degree(b);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int Multivector::max_degree() const {
  int best = -1;
  for (const auto& [b, c] : terms_) best = std::max(best, blades::degree(b));
  return best;
}

bool Multivector::is_homogeneous(int k) const {
  for (const auto& [b, c] : terms_) {
    if (blades::degree(b) != k) return false;
  }
  return true;
}

Multivector Multivector::grade(int k) const {
  Multivector out(dim_);
  for (const auto& [b, c] : terms_) {
    if (blades::degree(b) == k) out.terms_.emplace(b, c);
  }
  return out;
}

Multivector Multivector::conjugate() const {
  Multivector out(dim_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, c.conj());
  return out;
}

Multivector Multivector::real_part() const {
  Multivector out(dim_);
  for (const auto& [b, c] : terms_) {
    if (!c.re.is_zero()) out.terms_.emplace(b, GaussianRational(c.re));
  }
  return out;
}

Multivector Multivector::imag_part() const {
  Multivector out(dim_);
  for (const auto& [b, c] : terms_) {
    if (!c.im.is_zero()) out.terms_.emplace(b, GaussianRational(c.im));
  }
  return out;
}

bool Multivector::is_real() const {
  for (const auto& [b, c] : terms_) {
    if (!c.is_real()) return false;
  }
  return true;
}

Multivector Multivector::operator-() const {
  Multivector out(dim_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

void Multivector::add_term(Blade b, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same_dim(dim_, o.dim_);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same_dim(dim_, o.dim_);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Multivector operator*(const GaussianRational& c, const Multivector& a) {
  Multivector out(a.dim_);
  if (c.is_zero()) return out;
  for (const auto& [b, coeff] : a.terms_) out.terms_.emplace(b, c * coeff);
  return out;
}

Multivector operator*(const Multivector& a, const Multivector& b) { return wedge(a, b); }

std::vector<GaussianRational> Multivector::dense() const {
  auto order = blades::all(dim_);
  std::vector<GaussianRational> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[i] = coefficient(order[i]);
  return out;
}

Multivector Multivector::from_dense(int dim, const std::vector<GaussianRational>& coords) {
  auto order = blades::all(dim);
  if (coords.size() != order.size()) {
    throw std::invalid_argument("dense coordinate vector has wrong length");
  }
  Multivector out(dim);
  for (std::size_t i = 0; i < order.size(); ++i) out.add_term(order[i], coords[i]);
  return out;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  // Degree-major, lexicographic-within-degree term order.
  std::vector<std::pair<Blade, GaussianRational>> sorted;
  for (int k = 0; k <= dim_; ++k) {
    for (Blade b : blades::of_degree(dim_, k)) {
      auto it = terms_.find(b);
      if (it != terms_.end()) sorted.emplace_back(b, it->second);
    }
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, c] : sorted) {
    std::string coeff = c.str();
    bool negated = false;
    if (c.im.is_zero() && c.re < 0) {
      coeff = Rational(-c.re).str();
      negated = true;
    } else if (c.re.is_zero() && c.im < 0) {
      coeff = GaussianRational(Rational(0), Rational(-c.im)).str();
      negated = true;
    }
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    bool compound = coeff.find(' ') != std::string::npos;
    if (b == 0) {
      out << (compound ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (coeff != "1") {
      out << (compound ? "(" + coeff + ")" : coeff) << "*";
    }
    out << "e";
    auto idx = blades::indices(b);
    if (dim_ > 9) {
      out << "{";
      for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
      out << "}";
    } else {
      for (int i : idx) out << i;
    }
  }
  return out.str();
}

Vector::Vector(int dim) : c(static_cast<std::size_t>(dim)) { check_dim(dim); }

Vector::Vector(int dim, std::vector<GaussianRational> coeffs) : c(std::move(coeffs)) {
  check_dim(dim);
  if (static_cast<int>(c.size()) != dim) throw std::invalid_argument("coefficient list length != dim");
}

bool Vector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const GaussianRational& v) { return v.is_zero(); });
}

Vector Vector::conjugate() const {
  Vector out(dim());
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] = c[i].conj();
  return out;
}

Covector::Covector(int dim) : c(static_cast<std::size_t>(dim)) { check_dim(dim); }

Covector::Covector(int dim, std::vector<GaussianRational> coeffs) : c(std::move(coeffs)) {
  check_dim(dim);
  if (static_cast<int>(c.size()) != dim) throw std::invalid_argument("coefficient list length != dim");
}

bool Covector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const GaussianRational& v) { return v.is_zero(); });
}

Covector Covector::conjugate() const {
  Covector out(dim());
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] = c[i].conj();
  return out;
}

GaussianRational Covector::operator()(const Vector& x) const {
  check_same_dim(dim(), x.dim());
  GaussianRational out;
  for (std::size_t i = 0; i < c.size(); ++i) out += c[i] * x.c[i];
  return out;
}

Multivector Covector::as_form() const {
  Multivector out(dim());
  for (std::size_t i = 0; i < c.size(); ++i) out.add_term(Blade{1} << i, c[i]);
  return out;
}

Covector Covector::from_form(const Multivector& a) {
  if (!a.is_homogeneous(1)) {
    throw std::invalid_argument("from_form: multivector is not a 1-form");
  }
  Covector out(a.dim());
  for (const auto& [b, coeff] : a.terms()) out.c[static_cast<std::size_t>(std::countr_zero(b))] = coeff;
  return out;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  check_same_dim(a.dim(), b.dim());
  Multivector out(a.dim());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      int sign = blades::wedge_sign(ba, bb);
      if (sign == 0) continue;
      GaussianRational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(ba | bb, c);
    }
  }
  return out;
}

Multivector contract(const Vector& x, const Multivector& a) {
  check_same_dim(x.dim(), a.dim());
  Multivector out(a.dim());
  for (const auto& [b, coeff] : a.terms()) {
    Blade rest = b;
    while (rest != 0) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      const GaussianRational& xi = x.c[static_cast<std::size_t>(bit)];
      if (xi.is_zero()) continue;
      GaussianRational c = xi * coeff;
      if (blades::contraction_sign(b, bit + 1) < 0) c = -c;
      out.add_term(b & ~(Blade{1} << bit), c);
    }
  }
  return out;
}

Multivector grade(const Multivector& a, int k) { return a.grade(k); }

Multivector conjugate(const Multivector& a) { return a.conjugate(); }

Multivector exp_even(const Multivector& tau) {
  if (!tau.is_zero() && !tau.is_homogeneous(2)) {
    throw std::invalid_argument("exp_even: argument must be homogeneous of degree 2");
  }
  Multivector out = Multivector::scalar(tau.dim(), GaussianRational(1));
  Multivector power = out;
  Rational factorial(1);
  for (int k = 1; 2 * k <= tau.dim(); ++k) {
    power = wedge(power, tau);
    if (power.is_zero()) break;
    factorial *= k;
    out += GaussianRational(Rational(1) / factorial) * power;
  }
  return out;
}

Multivector wedge_power(const Multivector& a, int k) {
  if (k < 0) throw std::invalid_argument("wedge_power: negative exponent");
  Multivector out = Multivector::scalar(a.dim(), GaussianRational(1));
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

}  // namespace gcx
