#pragma once

#include "gcx/clifford.hpp"
#include "gcx/liealg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gcx {

// An invariant almost generalized complex structure: Lie algebra, closed
// real twist 3-form, and a pure nondegenerate spinor generating the
// canonical line. Construction certifies Jacobi, purity and nondegeneracy
// (throws AlgebraicError subclasses otherwise); integrability is a separate
// question answered by modular_field.
class InvariantGCS {
public:
  InvariantGCS(LieAlgebra g, TwistForm h, Multivector rho);

  const LieAlgebra& algebra() const { return g_; }
  const TwistForm& twist() const { return h_; }
  const Multivector& rho() const { return rho_; }
  const SpinorAnalysis& analysis() const { return analysis_; }
  int dim() const { return g_.dim(); }
  int half_dim() const { return g_.dim() / 2; }
  int type() const { return analysis_.type_k; }

  Multivector d_h(const Multivector& a) const { return d_twisted(g_, h_, a); }

private:
  LieAlgebra g_;
  TwistForm h_;
  Multivector rho_;
  SpinorAnalysis analysis_;
};

// Twisted Dorfman bracket on invariant sections:
//   [X+xi, Y+eta] = [X,Y] + i_X d eta - i_Y d xi + i_X i_Y H.
// (Invariant functions are constants, so the Lie-derivative term collapses
// to i_X d eta.) Not antisymmetrized; on sections of an involutive isotropic
// it restricts to a Lie bracket.
GeneralizedVector courant_bracket(const LieAlgebra& g, const TwistForm& h,
                                  const GeneralizedVector& u, const GeneralizedVector& v);

// The unique u in span(conj L) with u . rho = d^H rho, or nullopt when the
// linear system is inconsistent (the structure is not integrable).
std::optional<GeneralizedVector> modular_field(const InvariantGCS& s);

// Generalized Calabi-Yau: the trivializing spinor is d^H-closed.
bool is_gcy(const InvariantGCS& s);

// The Lie algebroid conj(L) of an integrable structure: bases of L and
// conj(L), the bracket constants of conj(L), and the dual pairing with L.
// Elements of the exterior algebra of conj(L) are represented as
// Multivectors over the basis coordinates (index a <-> basis element a).
class AlgebroidData {
public:
  AlgebroidData(const InvariantGCS& s);  // throws NotIntegrableError / InvolutivityFailure

  int dim() const { return dim_; }
  const std::vector<GeneralizedVector>& l_basis() const { return l_basis_; }
  const std::vector<GeneralizedVector>& lbar_basis() const { return lbar_basis_; }
  // [lbar_a, lbar_b] = sum_c constant(a, b, c) lbar_c for a < b (1-based).
  GaussianRational structure_constant(int a, int b, int c) const;

  // Lie algebroid differential on the exterior algebra of conj(L), realized
  // through the pairing identification of conj(L) with the dual of L.
  Multivector d_l(const Multivector& alpha) const;

  // Clifford action of an exterior-algebra element of conj(L) on a form:
  // a basis monomial acts by composition, lowest index applied last.
  Multivector act(const Multivector& alpha, const Multivector& form) const;

private:
  int dim_;
  std::vector<GeneralizedVector> l_basis_;
  std::vector<GeneralizedVector> lbar_basis_;
  std::map<std::pair<int, int>, GVec> constants_;  // (a, b) with a < b, 0-based
  Matrix pairing_;                                 // P(a, b) = 2 <lbar_a, l_b>
  Matrix pairing_inv_;
  std::vector<Multivector> d_lambda_;  // CE images for the dual basis of L
};

AlgebroidData algebroid(const InvariantGCS& s);

// Invariant modular class: the class of the modular field in degree-1
// cohomology of (exterior algebra of conj(L), d_l). Invariant rescalings of
// the trivialization are constants, so the degree-0 image is zero and the
// class is the kernel coordinate vector itself. This invariant class can be
// strictly finer than its smooth counterpart; reports label it accordingly.
struct ModularClassReport {
  GeneralizedVector field;
  bool integrable = true;
  bool field_closed = false;    // d_l of the modular field vanishes
  bool zero = false;            // class (equivalently the field) is zero
  int h1_dim = 0;
  GVec coordinates;             // in the deterministic kernel basis

  explicit ModularClassReport(int dim) : field(dim) {}
};

ModularClassReport modular_class(const InvariantGCS& s);

// The decomposition of forms into eigenspaces U^k, k = -n..n, realized by
// Clifford monomials of conj(L) applied to rho: U^(n-j) is spanned by the
// degree-j monomials acting on rho.
class EigenDecomposition {
public:
  explicit EigenDecomposition(const InvariantGCS& s);

  int half_dim() const { return n_; }
  // U^k component of phi; k in [-n, n].
  Multivector component(const Multivector& phi, int k) const;
  std::vector<std::pair<int, Multivector>> components(const Multivector& phi) const;

private:
  int n_;
  int dim_;
  Matrix basis_inv_;                  // inverse of the U-basis column matrix
  std::vector<Multivector> columns_;  // basis spinors, blades::all order
  std::vector<int> column_level_;     // j = monomial degree per column
};

Multivector eigenspace_component(const InvariantGCS& s, const Multivector& phi, int k);

// Checks that d^H maps each U^k into U^(k+1) + U^(k-1), and the
// differential-module identity {dbar, a} rho' = (d_l a) . rho' for every
// basis element a of conj(L) and every U-basis spinor rho'. Violations are
// reported, not thrown: a non-integrable input is expected to produce some.
struct EigensplitReport {
  bool dh_splits = true;
  bool differential_module_ok = true;
  std::vector<std::string> violations;
  bool ok() const { return dh_splits && differential_module_ok; }
};

EigensplitReport verify_eigensplit(const InvariantGCS& s);

}  // namespace gcx
