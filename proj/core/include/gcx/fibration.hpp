#pragma once

#include "gcx/gcstruct.hpp"

#include <array>
#include <optional>
#include <tuple>
#include <vector>

namespace gcx {

// Invariant symplectic-fibration data over a 2-torus: a Lie algebra whose
// derived algebra lies inside the span of the fiber directions (so the
// 2-dimensional quotient spanned by the base pair is abelian), plus a real
// fiberwise-symplectic 2-form. The structural conditions are certified at
// construction; degeneracy of omega on the fibers is reported later by
// normalize_omega.
class FibrationData {
public:
  FibrationData(LieAlgebra g, std::vector<int> fiber_indices, std::pair<int, int> base_indices,
                Multivector omega);

  const LieAlgebra& algebra() const { return g_; }
  const std::vector<int>& fiber_indices() const { return fiber_; }
  std::pair<int, int> base_indices() const { return base_; }
  const Multivector& omega() const { return omega_; }
  int dim() const { return g_.dim(); }

  // Pullback of the complex coordinate 1-form of the base torus.
  Multivector base_holomorphic_form() const;

private:
  LieAlgebra g_;
  std::vector<int> fiber_;
  std::pair<int, int> base_;
  Multivector omega_;
};

// Pre-composes omega with the projection onto the fibers along its
// omega-orthogonal complement: the result agrees with omega on the fibers
// and annihilates the horizontal distribution. Throws DegenerateFiberForm
// when omega restricted to the fibers is degenerate.
Multivector normalize_omega(const FibrationData& f);

// The (k; p, q) decomposition of forms induced by the splitting into fiber
// and omega-horizontal directions, with the base complexified via the fixed
// holomorphic 1-form. p and q only take the values 0 and 1.
class TriGrading {
public:
  explicit TriGrading(const FibrationData& f);  // throws DegenerateFiberForm

  int dim() const { return dim_; }
  Multivector component(const Multivector& phi, int k, int p, int q) const;
  // All nonzero components, ordered by (k, p, q).
  std::vector<std::tuple<int, int, int, Multivector>> components(const Multivector& phi) const;

  // Standard-coordinate form of a blade over the adapted coframe: slots
  // 1..dim-2 are the fiber duals, slot dim-1 the (1,0) base form, slot dim
  // the (0,1) base form.
  Multivector adapted_blade(Blade b) const;

private:
  int dim_;
  std::vector<int> fiber_;
  Matrix to_adapted_, from_adapted_;
};

// The four graded components of d phi: the fiber differential (k+1; p, q),
// the holomorphic and antiholomorphic horizontal parts (k; p+1, q) and
// (k; p, q+1), and the curvature part N mapping into (k-1; p+1, q+1).
// Their sum is exactly d phi.
struct DSplit {
  Multivector d_v;
  Multivector del_h;
  Multivector delbar_h;
  Multivector n;

  explicit DSplit(int dim) : d_v(dim), del_h(dim), delbar_h(dim), n(dim) {}
  Multivector total() const { return d_v + del_h + delbar_h + n; }
};

DSplit split_d(const FibrationData& f, const Multivector& phi);

// Solves d_V A = -delbar_H omega for A in the (1; 0, 1) space, free
// coordinates pinned to zero; nullopt when no invariant solution exists
// (the smooth construction glues local solutions with a partition of
// unity, which has no invariant counterpart).
std::optional<Multivector> solve_a01(const FibrationData& f);

// The full construction: rho = exp(i (A + omega_normalized)) ^ Omega_base,
// certified to be a type-1 generalized Calabi-Yau for the zero twist.
struct FibrationResult {
  InvariantGCS structure;
  Multivector omega_normalized;
  Multivector a01;
  bool identity_vertical = false;  // (3;1,0): d_V omega ^ Omega = 0
  bool identity_mixed = false;     // (2;1,1): (d_V A + delbar_H omega) ^ Omega = 0
};

// Throws DegenerateFiberForm, UnsolvableError, or VerificationFailure.
FibrationResult build_gcy(const FibrationData& f);

}  // namespace gcx
