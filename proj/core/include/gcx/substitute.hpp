#pragma once

#include "gcx/linalg.hpp"
#include "gcx/multivector.hpp"

namespace gcx {

// Algebra substitution on the exterior algebra: replaces each basis 1-form
// e^a by sum_b M(a-1, b-1) e^b and extends multiplicatively to all blades.
// M must be dim x dim.
Multivector substitute_one_forms(const Multivector& a, const Matrix& m);

}  // namespace gcx
