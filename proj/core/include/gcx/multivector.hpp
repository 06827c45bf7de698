#pragma once

#include "gcx/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gcx {

// Basis 1-forms are indexed 1..dim throughout the public interface; a blade
// e^{i1} ^ ... ^ e^{ik} with i1 < ... < ik is stored as the bitmask with bits
// (i1-1), ..., (ik-1) set. The dimension is even and at most kMaxDim.
using Blade = std::uint32_t;

inline constexpr int kMaxDim = 16;

namespace blades {

int degree(Blade b);
// Sign of sorting e_a ^ e_b into the canonical ascending blade, 0 if they
// share an index.
int wedge_sign(Blade a, Blade b);
// Sign picked up when contracting slot `index` (1-based, must be set in b).
int contraction_sign(Blade b, int index);
std::vector<int> indices(Blade b);
Blade from_indices(const std::vector<int>& indices);  // strictly increasing, 1-based
// All degree-k blades in lexicographic order of their index tuples.
std::vector<Blade> of_degree(int dim, int k);
// All blades, degree-major, lexicographic within each degree.
std::vector<Blade> all(int dim);

}  // namespace blades

// Sparse element of the complexified exterior algebra on a dim-dimensional
// space, with exact Gaussian-rational coefficients. Zero coefficients are
// never stored, so structural equality is semantic equality. Immutable in
// spirit: every operation returns a fresh value.
class Multivector {
public:
  explicit Multivector(int dim);
  static Multivector scalar(int dim, const GaussianRational& c);
  static Multivector term(int dim, Blade b, const GaussianRational& c);
  static Multivector term(int dim, const std::vector<int>& indices, const GaussianRational& c);
  // The basis 1-form e^index.
  static Multivector one_form(int dim, int index);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Blade, GaussianRational>& terms() const { return terms_; }
  GaussianRational coefficient(Blade b) const;

  // Lowest degree with a nonzero term; -1 for the zero element.
  int min_degree() const;
  int max_degree() const;
  bool is_homogeneous(int k) const;

  Multivector grade(int k) const;
  Multivector conjugate() const;
  Multivector real_part() const;
  Multivector imag_part() const;
  bool is_real() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const GaussianRational& c, const Multivector& a);
  // Wedge product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  void add_term(Blade b, const GaussianRational& c);

  // Coefficients over blades::all(dim), for linear algebra.
  std::vector<GaussianRational> dense() const;
  static Multivector from_dense(int dim, const std::vector<GaussianRational>& coords);

  std::string str() const;

private:
  int dim_;
  std::map<Blade, GaussianRational> terms_;
};

// Tangent vector with exact complex coefficients, 1-based index i stored at
// coefficient(i).
struct Vector {
  explicit Vector(int dim);
  Vector(int dim, std::vector<GaussianRational> coeffs);
  int dim() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  Vector conjugate() const;
  GaussianRational& coefficient(int index) { return c[static_cast<std::size_t>(index - 1)]; }
  const GaussianRational& coefficient(int index) const { return c[static_cast<std::size_t>(index - 1)]; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.c == b.c; }

  std::vector<GaussianRational> c;
};

struct Covector {
  explicit Covector(int dim);
  Covector(int dim, std::vector<GaussianRational> coeffs);
  int dim() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  Covector conjugate() const;
  GaussianRational& coefficient(int index) { return c[static_cast<std::size_t>(index - 1)]; }
  const GaussianRational& coefficient(int index) const { return c[static_cast<std::size_t>(index - 1)]; }
  GaussianRational operator()(const Vector& x) const;
  Multivector as_form() const;
  // Degree-1 part of a multivector as a covector; requires the rest zero.
  static Covector from_form(const Multivector& a);
  friend bool operator==(const Covector& a, const Covector& b) { return a.c == b.c; }

  std::vector<GaussianRational> c;
};

Multivector wedge(const Multivector& a, const Multivector& b);
// Interior product i_X a; degree-lowering antiderivation.
Multivector contract(const Vector& x, const Multivector& a);
Multivector grade(const Multivector& a, int k);
Multivector conjugate(const Multivector& a);
// Truncated exponential sum tau^k / k! of a degree-2 element (tau^k vanishes
// above the top degree). Throws std::invalid_argument on non-degree-2 input.
Multivector exp_even(const Multivector& tau);
// a^k
Multivector wedge_power(const Multivector& a, int k);

}  // namespace gcx
