#pragma once

#include "gcx/linalg.hpp"
#include "gcx/multivector.hpp"

#include <optional>
#include <vector>

namespace gcx {

// Element X + xi of the complexified double V + V*.
struct GeneralizedVector {
  Vector x;
  Covector xi;

  explicit GeneralizedVector(int dim) : x(dim), xi(dim) {}
  GeneralizedVector(Vector v, Covector c);

  int dim() const { return x.dim(); }
  bool is_zero() const { return x.is_zero() && xi.is_zero(); }
  GeneralizedVector conjugate() const { return {x.conjugate(), xi.conjugate()}; }

  // Coordinates (X_1..X_2n, xi_1..xi_2n) in the 4n-dimensional double.
  GVec coords() const;
  static GeneralizedVector from_coords(int dim, const GVec& coords);

  friend bool operator==(const GeneralizedVector& a, const GeneralizedVector& b) {
    return a.x == b.x && a.xi == b.xi;
  }
};

// Natural pairing <X+xi, Y+eta> = (xi(Y) + eta(X)) / 2.
GaussianRational pairing(const GeneralizedVector& u, const GeneralizedVector& v);

// Clifford action of the double on forms: u . rho = i_X rho + xi ^ rho.
// Satisfies u.(u.rho) = xi(X) rho.
Multivector clifford_act(const GeneralizedVector& u, const Multivector& rho);

// Matrix of u -> u . rho over the coordinates of GeneralizedVector::coords,
// rows indexed by blades::all(dim).
Matrix clifford_action_matrix(const Multivector& rho);

// Deterministic reduced-echelon basis of the annihilator {u : u . rho = 0}.
// Throws std::invalid_argument on rho = 0.
std::vector<GeneralizedVector> annihilator(const Multivector& rho);

// Pointwise algebraic analysis of a spinor: its type (lowest nonvanishing
// degree), purity (annihilator of full rank dim), the factorization
// rho = exp(tau) ^ omega_factor, and nondegeneracy (L meets conj(L) only
// at zero). tau is the solution of tau ^ omega_factor = grade(rho, k+2)
// with all free coordinates pinned to zero; it is unique up to forms that
// wedge to zero with omega_factor, which no downstream check depends on.
struct SpinorAnalysis {
  int type_k = 0;
  bool pure = false;
  bool nondegenerate = false;
  Multivector omega_factor;
  std::optional<Multivector> tau;  // absent when not pure
  std::vector<GeneralizedVector> annihilator_basis;

  explicit SpinorAnalysis(int dim) : omega_factor(dim) {}
};

SpinorAnalysis analyze(const Multivector& rho);

// The literal nondegeneracy product Omega ^ conj(Omega) ^ (Im tau)^(n-k);
// nonzero exactly when the rank test in analyze reports nondegenerate.
// Requires a pure analysis.
Multivector condition2_product(const SpinorAnalysis& analysis);

}  // namespace gcx
