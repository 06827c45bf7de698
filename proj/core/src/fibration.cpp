#include "gcx/fibration.hpp"

#include "gcx/errors.hpp"
#include "gcx/substitute.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gcx {

namespace {

// Antisymmetric coefficient matrix W(i, j) = omega(v_i, v_j), 0-based.
Matrix omega_matrix(const Multivector& omega, int dim) {
  Matrix w(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (const auto& [b, c] : omega.terms()) {
    auto idx = blades::indices(b);
    w.at(static_cast<std::size_t>(idx[0] - 1), static_cast<std::size_t>(idx[1] - 1)) = c;
    w.at(static_cast<std::size_t>(idx[1] - 1), static_cast<std::size_t>(idx[0] - 1)) = -c;
  }
  return w;
}

// Basis of the omega-orthogonal complement of the fibers; requires the
// fiber restriction to be nondegenerate.
std::vector<GVec> horizontal_basis(const FibrationData& f) {
  const int dim = f.dim();
  Matrix w = omega_matrix(f.omega(), dim);
  const auto& fiber = f.fiber_indices();

  Matrix fiber_block(fiber.size(), fiber.size());
  for (std::size_t r = 0; r < fiber.size(); ++r) {
    for (std::size_t c = 0; c < fiber.size(); ++c) {
      fiber_block.at(r, c) = w.at(static_cast<std::size_t>(fiber[r] - 1),
                                  static_cast<std::size_t>(fiber[c] - 1));
    }
  }
  if (fiber_block.rank() != fiber.size()) {
    throw DegenerateFiberForm("omega restricted to the fibers is degenerate");
  }

  // omega(X, v_f) = 0 for every fiber direction f.
  Matrix constraints(fiber.size(), static_cast<std::size_t>(dim));
  for (std::size_t r = 0; r < fiber.size(); ++r) {
    for (int j = 0; j < dim; ++j) {
      constraints.at(r, static_cast<std::size_t>(j)) =
          w.at(static_cast<std::size_t>(j), static_cast<std::size_t>(fiber[r] - 1));
    }
  }
  auto kernel = constraints.kernel();
  if (kernel.size() != 2) {
    throw DegenerateFiberForm("omega-horizontal space is not 2-dimensional");
  }
  return kernel;
}

// Columns: fiber coordinate vectors then the two horizontal vectors.
Matrix adapted_frame(const FibrationData& f, const std::vector<GVec>& horizontal) {
  const int dim = f.dim();
  Matrix frame(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  const auto& fiber = f.fiber_indices();
  for (std::size_t j = 0; j < fiber.size(); ++j) {
    frame.at(static_cast<std::size_t>(fiber[j] - 1), j) = GaussianRational(1);
  }
  for (std::size_t j = 0; j < 2; ++j) {
    for (int r = 0; r < dim; ++r) {
      frame.at(static_cast<std::size_t>(r), fiber.size() + j) =
          horizontal[j][static_cast<std::size_t>(r)];
    }
  }
  return frame;
}

}  // namespace

FibrationData::FibrationData(LieAlgebra g, std::vector<int> fiber_indices,
                             std::pair<int, int> base_indices, Multivector omega)
    : g_(std::move(g)), fiber_(std::move(fiber_indices)), base_(base_indices),
      omega_(std::move(omega)) {
  const int dim = g_.dim();
  if (omega_.dim() != dim) throw std::invalid_argument("FibrationData: dimension mismatch");
  if (!g_.check_jacobi()) throw JacobiError("structure constants violate the Jacobi identity");

  std::sort(fiber_.begin(), fiber_.end());
  std::vector<bool> seen(static_cast<std::size_t>(dim) + 1, false);
  for (int i : fiber_) {
    if (i < 1 || i > dim || seen[static_cast<std::size_t>(i)]) {
      throw AlgebraicError("fiber indices must be distinct and within range");
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
  for (int i : {base_.first, base_.second}) {
    if (i < 1 || i > dim || seen[static_cast<std::size_t>(i)]) {
      throw AlgebraicError("base indices must complement the fiber indices");
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
  if (static_cast<int>(fiber_.size()) != dim - 2) {
    throw AlgebraicError("fiber must have codimension 2");
  }

  // Every bracket must land in the fiber span: the quotient by the fibers is
  // the abelian 2-dimensional base and the fiber span is an ideal.
  for (const auto& t : g_.bracket_terms()) {
    if (t.k == base_.first || t.k == base_.second) {
      throw AlgebraicError("derived algebra leaves the fiber span: base is not abelian");
    }
  }

  if (!omega_.is_zero() && !omega_.is_homogeneous(2)) {
    throw AlgebraicError("omega must be homogeneous of degree 2");
  }
  if (!omega_.is_real()) throw AlgebraicError("omega must be real");
}

Multivector FibrationData::base_holomorphic_form() const {
  return Multivector::one_form(dim(), base_.first) +
         GaussianRational::i() * Multivector::one_form(dim(), base_.second);
}

Multivector normalize_omega(const FibrationData& f) {
  const int dim = f.dim();
  auto horizontal = horizontal_basis(f);
  Matrix frame = adapted_frame(f, horizontal);
  auto frame_inv = frame.inverse();
  if (!frame_inv) {
    throw DegenerateFiberForm("fiber span and omega-horizontal space do not split the space");
  }

  // Projection onto the fibers along the horizontal space, then
  // W' = P^T W P.
  Matrix p(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (std::size_t c = 0; c < static_cast<std::size_t>(dim); ++c) {
    for (std::size_t r = 0; r < f.fiber_indices().size(); ++r) {
      std::size_t row = static_cast<std::size_t>(f.fiber_indices()[r] - 1);
      p.at(row, c) += frame_inv->at(r, c);
    }
  }
  Matrix w = omega_matrix(f.omega(), dim);
  Matrix wp(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (std::size_t r = 0; r < wp.rows(); ++r) {
    for (std::size_t c = 0; c < wp.cols(); ++c) {
      GaussianRational acc;
      for (std::size_t a = 0; a < wp.rows(); ++a) {
        for (std::size_t b = 0; b < wp.cols(); ++b) {
          if (p.at(a, r).is_zero() || w.at(a, b).is_zero() || p.at(b, c).is_zero()) continue;
          acc += p.at(a, r) * w.at(a, b) * p.at(b, c);
        }
      }
      wp.at(r, c) = acc;
    }
  }
  Multivector out(dim);
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) {
      out.add_term(blades::from_indices({i, j}),
                   wp.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
    }
  }
  return out;
}

TriGrading::TriGrading(const FibrationData& f) : dim_(f.dim()), fiber_(f.fiber_indices()) {
  auto horizontal = horizontal_basis(f);
  Matrix frame = adapted_frame(f, horizontal);
  auto dual = frame.inverse();
  if (!dual) throw DegenerateFiberForm("adapted frame is singular");

  // Coframe rows: fiber duals annihilating the horizontal space, then the
  // (1,0) and (0,1) combinations of the base coordinate forms.
  Matrix coframe(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
  for (std::size_t r = 0; r + 2 < static_cast<std::size_t>(dim_); ++r) {
    for (std::size_t c = 0; c < static_cast<std::size_t>(dim_); ++c) {
      coframe.at(r, c) = dual->at(r, c);
    }
  }
  auto [h1, h2] = f.base_indices();
  std::size_t p_row = static_cast<std::size_t>(dim_) - 2;
  std::size_t q_row = static_cast<std::size_t>(dim_) - 1;
  coframe.at(p_row, static_cast<std::size_t>(h1 - 1)) = GaussianRational(1);
  coframe.at(p_row, static_cast<std::size_t>(h2 - 1)) = GaussianRational::i();
  coframe.at(q_row, static_cast<std::size_t>(h1 - 1)) = GaussianRational(1);
  coframe.at(q_row, static_cast<std::size_t>(h2 - 1)) = -GaussianRational::i();

  from_adapted_ = coframe;
  auto inv = coframe.inverse();
  if (!inv) throw DegenerateFiberForm("adapted coframe is singular");
  to_adapted_ = *inv;
}

Multivector TriGrading::component(const Multivector& phi, int k, int p, int q) const {
  if (phi.dim() != dim_) throw std::invalid_argument("component: dimension mismatch");
  Multivector adapted = substitute_one_forms(phi, to_adapted_);
  const Blade p_bit = Blade{1} << (dim_ - 2);
  const Blade q_bit = Blade{1} << (dim_ - 1);
  Multivector filtered(dim_);
  for (const auto& [b, c] : adapted.terms()) {
    int bk = std::popcount(b & static_cast<Blade>(~(p_bit | q_bit)));
    int bp = (b & p_bit) ? 1 : 0;
    int bq = (b & q_bit) ? 1 : 0;
    if (bk == k && bp == p && bq == q) filtered.add_term(b, c);
  }
  return substitute_one_forms(filtered, from_adapted_);
}

std::vector<std::tuple<int, int, int, Multivector>> TriGrading::components(
    const Multivector& phi) const {
  std::vector<std::tuple<int, int, int, Multivector>> out;
  for (int k = 0; k <= dim_ - 2; ++k) {
    for (int p = 0; p <= 1; ++p) {
      for (int q = 0; q <= 1; ++q) {
        Multivector c = component(phi, k, p, q);
        if (!c.is_zero()) out.emplace_back(k, p, q, std::move(c));
      }
    }
  }
  return out;
}

DSplit split_d(const FibrationData& f, const Multivector& phi) {
  TriGrading grading(f);
  DSplit out(f.dim());
  for (const auto& [k, p, q, piece] : grading.components(phi)) {
    Multivector image = f.algebra().d(piece);
    Multivector routed(f.dim());
    for (const auto& [ik, ip, iq, part] : grading.components(image)) {
      if (ik == k + 1 && ip == p && iq == q) {
        out.d_v += part;
      } else if (ik == k && ip == p + 1 && iq == q) {
        out.del_h += part;
      } else if (ik == k && ip == p && iq == q + 1) {
        out.delbar_h += part;
      } else if (ik == k - 1) {
        out.n += part;
      } else {
        throw VerificationFailure("exterior derivative has an unexpected graded component");
      }
      routed += part;
    }
    if (routed != image) throw VerificationFailure("graded components do not re-sum");
  }
  return out;
}

Multivector TriGrading::adapted_blade(Blade b) const {
  return substitute_one_forms(Multivector::term(dim_, b, GaussianRational(1)), from_adapted_);
}

std::optional<Multivector> solve_a01(const FibrationData& f) {
  const int dim = f.dim();
  TriGrading grading(f);
  Multivector omega_n = normalize_omega(f);
  Multivector rhs_form = -split_d(f, omega_n).delbar_h;

  // Unknowns: the (1; 0, 1) space, spanned by fiber coframe duals wedged
  // with the (0,1) base form.
  const Blade q_bit = Blade{1} << (dim - 1);
  std::vector<Multivector> generators;
  for (int i = 0; i + 2 < dim; ++i) {
    generators.push_back(grading.adapted_blade((Blade{1} << i) | q_bit));
  }

  auto order = blades::all(dim);
  Matrix m(order.size(), generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    Multivector image = split_d(f, generators[j]).d_v;
    for (std::size_t r = 0; r < order.size(); ++r) m.at(r, j) = image.coefficient(order[r]);
  }
  auto sol = m.solve(rhs_form.dense());
  if (!sol) return std::nullopt;
  Multivector a(dim);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (!(*sol)[j].is_zero()) a += (*sol)[j] * generators[j];
  }
  return a;
}

FibrationResult build_gcy(const FibrationData& f) {
  Multivector omega_n = normalize_omega(f);
  auto a01 = solve_a01(f);
  if (!a01) {
    throw UnsolvableError(
        "no invariant solution of the connection equation d_V A = -delbar_H omega");
  }
  Multivector base = f.base_holomorphic_form();
  Multivector rho = exp_even(GaussianRational::i() * (*a01 + omega_n)) * base;

  try {
    InvariantGCS s(f.algebra(), TwistForm::zero(f.algebra()), rho);
    FibrationResult out{std::move(s), omega_n, *a01, false, false};
    if (out.structure.type() != 1) {
      throw VerificationFailure("constructed spinor does not have type 1");
    }
    if (!is_gcy(out.structure)) {
      throw VerificationFailure("constructed spinor is not d-closed");
    }
    out.identity_vertical = wedge(split_d(f, omega_n).d_v, base).is_zero();
    out.identity_mixed =
        wedge(split_d(f, *a01).d_v + split_d(f, omega_n).delbar_h, base).is_zero();
    if (!out.identity_vertical || !out.identity_mixed) {
      throw VerificationFailure("graded component identities of the construction fail");
    }
    return out;
  } catch (const AlgebraicError& e) {
    throw VerificationFailure(std::string("constructed spinor failed certification: ") +
                              e.what());
  }
}

}  // namespace gcx
