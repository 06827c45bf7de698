#pragma once

#include "gcx/gcstruct.hpp"

#include <optional>
#include <vector>

namespace gcx {

// The differential ideal generated by the 1-form factors of the lowest
// degree part Omega of the spinor: I^l = {degree-l forms gamma with
// gamma ^ Omega = 0}, built constructively as factors ^ (everything) with a
// deterministic reduced basis per degree. d-stability is certified at
// construction (StabilityFailure otherwise).
class IdealComplex {
public:
  explicit IdealComplex(const InvariantGCS& s);

  int dim() const { return dim_; }
  const std::vector<Multivector>& factors() const { return factors_; }
  const std::vector<Multivector>& basis(int degree) const;
  int ideal_dim(int degree) const { return static_cast<int>(basis(degree).size()); }

  // Coordinates of a form in the degree-l basis; nullopt when it lies
  // outside the ideal.
  std::optional<GVec> coordinates(const Multivector& a, int degree) const;
  bool contains(const Multivector& a) const;

  // Untwisted differential in ideal coordinates, degree l -> l + 1.
  const Matrix& d_matrix(int degree) const;

  // Aggregated even/odd bases and the d^H matrices of the periodic complex.
  const std::vector<Multivector>& even_basis() const { return even_basis_; }
  const std::vector<Multivector>& odd_basis() const { return odd_basis_; }
  const Matrix& dh_even_to_odd() const { return dh_even_to_odd_; }
  const Matrix& dh_odd_to_even() const { return dh_odd_to_even_; }
  std::optional<GVec> odd_coordinates(const Multivector& a) const;

private:
  int dim_;
  std::vector<Multivector> factors_;
  std::vector<std::vector<Multivector>> basis_;  // per degree 0..dim
  std::vector<Matrix> d_;                        // per degree 0..dim
  std::vector<Multivector> even_basis_, odd_basis_;
  Matrix dh_even_to_odd_, dh_odd_to_even_;
};

IdealComplex ideal_complex(const InvariantGCS& s);

// H^l of (I^bullet, d), exact, with deterministic representatives.
CohomologySpace ideal_cohomology(const InvariantGCS& s, int degree);
CohomologySpace ideal_cohomology(const IdealComplex& ideal, int degree);

// The twisting class [H + d tau] in H^3 of the ideal complex, where tau is
// the canonical factorization exponent. Decision procedure: solvability of
// H + d tau + d beta = 0 over beta in I^2 (criterion c). When solvable the
// certified closed factor exp(tau + beta) is emitted and re-verified to be
// d^H-closed (criterion a). The connecting-homomorphism route (criterion b)
// is evaluated independently: the class of d^H exp(tau) in the odd d^H
// cohomology of the ideal. All three verdicts are reported.
struct TwistingClassReport {
  Multivector representative;  // H + d tau, an element of I^3
  bool vanishes = false;
  int h3_dim = 0;
  std::optional<Multivector> beta;
  std::optional<Multivector> closed_rep;
  bool criterion_a_verified = false;  // d^H exp(tau + beta) = 0, checked exactly
  bool criterion_b_vanishes = false;
  bool criteria_agree = false;

  explicit TwistingClassReport(int dim) : representative(dim) {}
};

TwistingClassReport twisting_class(const InvariantGCS& s);

// exp(tau + beta) when the twisting class vanishes; nullopt otherwise.
std::optional<Multivector> certified_closed_rep(const InvariantGCS& s);

}  // namespace gcx
