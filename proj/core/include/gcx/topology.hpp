#pragma once

#include "gcx/gcstruct.hpp"

#include <optional>
#include <vector>

namespace gcx {

std::pair<std::vector<int>, int> euler_and_betti(const LieAlgebra& g);

// Exact signature of the intersection form Q(a, b) = top coefficient of
// a ^ b on the middle invariant cohomology, computed by symmetric congruence
// diagonalization over the rationals (Sylvester); dim must be divisible
// by 4.
int signature(const LieAlgebra& g);

// Sylvester signature of a symmetric rational matrix.
int symmetric_signature(const Matrix& q);

// A compact oriented 4n-manifold with an oriented 2-plane field has even
// Euler characteristic congruent to its signature mod 4. Usable on
// externally supplied pairs, so manifolds outside the invariant model can
// be screened.
bool atiyah_check(long long chi, long long sigma);

struct NecessaryConditions {
  std::vector<int> betti;
  int b1 = 0;
  int chi = 0;
  bool b1_pass = false;   // b1 >= 2
  bool chi_pass = false;  // chi == 0
};

NecessaryConditions gcy_necessary_conditions(const LieAlgebra& g);

// Independence of the classes of the real and imaginary parts of the
// degree-1 factor in invariant H^1. Requires a type-1 structure. Parts
// that fail to be closed do not define classes and report false.
bool h1_independence(const InvariantGCS& s);

// omega + (i/2) Omega ^ conj(Omega) for a type-1 structure whose twisting
// class vanishes (omega is the imaginary part of the certified closed
// exponent). nullopt when no certified closed factor exists.
struct SymplecticExtension {
  Multivector omega_ext;
  bool closed_and_real = false;
  bool top_power_nonzero = false;
  // [Omega_R] [Omega_I] [omega_ext]^(n-1) nonzero in top invariant
  // cohomology.
  bool cup_product_nonzero = false;

  explicit SymplecticExtension(int dim) : omega_ext(dim) {}
};

std::optional<SymplecticExtension> symplectic_extension(const InvariantGCS& s);

}  // namespace gcx
