#include "gcx/topology.hpp"

#include "gcx/errors.hpp"
#include "gcx/obstruct.hpp"

#include <stdexcept>

namespace gcx {

std::pair<std::vector<int>, int> euler_and_betti(const LieAlgebra& g) {
  std::vector<int> betti = betti_numbers(g);
  int chi = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 == 0) ? betti[i] : -betti[i];
  return {betti, chi};
}

int symmetric_signature(const Matrix& q) {
  if (q.rows() != q.cols()) throw std::invalid_argument("symmetric_signature: not square");
  const std::size_t m = q.rows();
  Matrix d = q;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = r + 1; c < m; ++c) {
      if (d.at(r, c) != d.at(c, r)) {
        throw std::invalid_argument("symmetric_signature: matrix is not symmetric");
      }
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (!d.at(r, c).is_real()) {
        throw std::invalid_argument("symmetric_signature: matrix is not real");
      }
    }
  }

  auto swap_rc = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m; ++c) std::swap(d.at(a, c), d.at(b, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(d.at(r, a), d.at(r, b));
  };
  auto add_rc = [&](std::size_t dst, std::size_t src, const GaussianRational& f) {
    for (std::size_t c = 0; c < m; ++c) d.at(dst, c) += f * d.at(src, c);
    for (std::size_t r = 0; r < m; ++r) d.at(r, dst) += f * d.at(r, src);
  };

  for (std::size_t k = 0; k < m; ++k) {
    if (d.at(k, k).is_zero()) {
      std::size_t diag = m;
      for (std::size_t j = k + 1; j < m; ++j) {
        if (!d.at(j, j).is_zero()) {
          diag = j;
          break;
        }
      }
      if (diag < m) {
        swap_rc(k, diag);
      } else {
        std::size_t off = m;
        for (std::size_t j = k + 1; j < m; ++j) {
          if (!d.at(k, j).is_zero()) {
            off = j;
            break;
          }
        }
        if (off == m) continue;  // row and column k vanish: null direction
        add_rc(k, off, GaussianRational(1));  // diagonal becomes 2 d(k, off)
      }
    }
    GaussianRational pivot = d.at(k, k);
    for (std::size_t r = k + 1; r < m; ++r) {
      if (d.at(r, k).is_zero()) continue;
      add_rc(r, k, -(d.at(r, k) / pivot));
    }
  }

  int sig = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const Rational& v = d.at(k, k).re;
    if (v > 0) ++sig;
    if (v < 0) --sig;
  }
  return sig;
}

int signature(const LieAlgebra& g) {
  if (g.dim() % 4 != 0) {
    throw std::invalid_argument("signature requires dimension divisible by 4");
  }
  const int middle = g.dim() / 2;
  CohomologySpace h = cohomology(g, middle);
  const Blade top = static_cast<Blade>((Blade{1} << g.dim()) - 1);
  Matrix q(h.representatives.size(), h.representatives.size());
  for (std::size_t a = 0; a < h.representatives.size(); ++a) {
    for (std::size_t b = a; b < h.representatives.size(); ++b) {
      GaussianRational v = wedge(h.representatives[a], h.representatives[b]).coefficient(top);
      q.at(a, b) = v;
      q.at(b, a) = v;
    }
  }
  return symmetric_signature(q);
}

bool atiyah_check(long long chi, long long sigma) {
  return chi % 2 == 0 && (chi - sigma) % 4 == 0;
}

NecessaryConditions gcy_necessary_conditions(const LieAlgebra& g) {
  NecessaryConditions out;
  auto [betti, chi] = euler_and_betti(g);
  out.betti = betti;
  out.chi = chi;
  out.b1 = betti.size() > 1 ? betti[1] : 0;
  out.b1_pass = out.b1 >= 2;
  out.chi_pass = chi == 0;
  return out;
}

bool h1_independence(const InvariantGCS& s) {
  if (s.type() != 1) {
    throw AlgebraicError("h1 independence is defined for type-1 structures");
  }
  Multivector re = s.analysis().omega_factor.real_part();
  Multivector im = s.analysis().omega_factor.imag_part();
  // Non-closed parts define no class; invariant exact 1-forms vanish, so
  // independence in H^1 reduces to linear independence of the forms.
  if (!s.algebra().d(re).is_zero() || !s.algebra().d(im).is_zero()) return false;
  Matrix rows(0, re.dense().size());
  rows.append_row(re.dense());
  rows.append_row(im.dense());
  return rows.rank() == 2;
}

std::optional<SymplecticExtension> symplectic_extension(const InvariantGCS& s) {
  if (s.type() != 1) {
    throw AlgebraicError("symplectic extension is defined for type-1 structures");
  }
  TwistingClassReport twisting = twisting_class(s);
  if (!twisting.vanishes) return std::nullopt;

  const Multivector& tau = *s.analysis().tau;
  Multivector exponent = tau + *twisting.beta;
  Multivector omega = exponent.imag_part();
  const Multivector& factor = s.analysis().omega_factor;

  SymplecticExtension out(s.dim());
  GaussianRational half_i(Rational(0), Rational(1, 2));
  out.omega_ext = omega + half_i * (factor * factor.conjugate());
  out.closed_and_real = out.omega_ext.is_real() && s.algebra().d(out.omega_ext).is_zero();
  out.top_power_nonzero = !wedge_power(out.omega_ext, s.half_dim()).is_zero();

  // Cup product in top degree: nonzero class iff the form is not exact.
  Multivector triple = factor.real_part() * factor.imag_part() *
                       wedge_power(out.omega_ext, s.half_dim() - 1);
  if (triple.is_zero()) {
    out.cup_product_nonzero = false;
  } else {
    auto top_blades = blades::of_degree(s.dim(), s.dim());
    Matrix image_rows(0, top_blades.size());
    for (Blade b : blades::of_degree(s.dim(), s.dim() - 1)) {
      Multivector db = s.algebra().d(Multivector::term(s.dim(), b, GaussianRational(1)));
      GVec row(top_blades.size());
      for (std::size_t c = 0; c < top_blades.size(); ++c) row[c] = db.coefficient(top_blades[c]);
      image_rows.append_row(row);
    }
    GVec coords(top_blades.size());
    for (std::size_t c = 0; c < top_blades.size(); ++c) coords[c] = triple.coefficient(top_blades[c]);
    out.cup_product_nonzero = !RowSpace(image_rows).contains(coords);
  }
  return out;
}

}  // namespace gcx
