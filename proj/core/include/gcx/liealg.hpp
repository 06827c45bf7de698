#pragma once

#include "gcx/linalg.hpp"
#include "gcx/multivector.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gcx {

struct BracketTerm {
  int i, j, k;  // [v_i, v_j] contributes c * v_k, 1-based, i < j
  Rational c;
};

// Lie algebra given by rational structure constants. Induces the invariant
// exterior derivative with the convention d e(x, y) = -e([x, y]), i.e.
// d e^k = -sum_{i<j} c^k_{ij} e^i ^ e^j on generators, extended as a
// degree +1 antiderivation. d . d = 0 holds exactly when Jacobi does.
class LieAlgebra {
public:
  explicit LieAlgebra(int dim);  // abelian
  LieAlgebra(int dim, const std::vector<BracketTerm>& brackets);

  int dim() const { return dim_; }
  const std::vector<BracketTerm>& bracket_terms() const { return terms_; }

  // [v_i, v_j] as a coefficient vector; antisymmetric in (i, j).
  std::vector<Rational> bracket_basis(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  Multivector d_one_form(int k) const;
  Multivector d(const Multivector& a) const;

  bool check_jacobi() const;

private:
  int dim_;
  std::vector<BracketTerm> terms_;
  std::vector<Multivector> d_generator_;  // d e^k, cached
};

// Closed real 3-form twisting the differential. Validated at construction.
class TwistForm {
public:
  TwistForm(const LieAlgebra& g, Multivector h);
  static TwistForm zero(const LieAlgebra& g);
  const Multivector& form() const { return h_; }
  bool is_zero() const { return h_.is_zero(); }

private:
  Multivector h_;
};

// d^H a = d a + H ^ a.
Multivector d_twisted(const LieAlgebra& g, const TwistForm& h, const Multivector& a);

struct CohomologySpace {
  int degree = 0;
  int betti = 0;
  int kernel_rank = 0;
  int image_rank = 0;
  std::vector<Multivector> representatives;
};

// Matrix of d from degree p to degree p+1 over the lexicographic blade bases.
Matrix d_matrix(const LieAlgebra& g, int p);

// Invariant (Chevalley-Eilenberg) cohomology in one degree, with a
// deterministic representative basis. For nilmanifolds this equals de Rham
// cohomology (Nomizu); elsewhere reports should carry an invariant-level
// qualifier. Throws JacobiError when d.d != 0.
CohomologySpace cohomology(const LieAlgebra& g, int degree);

std::vector<int> betti_numbers(const LieAlgebra& g);

// Antiderivation extension of generator images: generator_images[k-1] is the
// 2-form image of e^k. Shared by the invariant d and the Lie algebroid
// differential (which has complex constants).
Multivector antiderivation_d(const std::vector<Multivector>& generator_images,
                             const Multivector& a);

}  // namespace gcx
