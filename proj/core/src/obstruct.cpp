#include "gcx/obstruct.hpp"

#include "gcx/errors.hpp"

#include <stdexcept>

namespace gcx {

namespace {

Matrix columns_of(const std::vector<Multivector>& forms, std::size_t rows) {
  Matrix m(rows, forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j) {
    GVec col = forms[j].dense();
    for (std::size_t r = 0; r < rows; ++r) m.at(r, j) = col[r];
  }
  return m;
}

}  // namespace

IdealComplex::IdealComplex(const InvariantGCS& s) : dim_(s.dim()) {
  const Multivector& omega = s.analysis().omega_factor;
  const std::size_t space = blades::all(dim_).size();

  // Factor 1-forms: the kernel of theta -> theta ^ Omega.
  Matrix wedge_map(space, static_cast<std::size_t>(dim_));
  auto order = blades::all(dim_);
  for (int j = 1; j <= dim_; ++j) {
    Multivector image = wedge(Multivector::one_form(dim_, j), omega);
    for (std::size_t r = 0; r < space; ++r) {
      wedge_map.at(r, static_cast<std::size_t>(j - 1)) = image.coefficient(order[r]);
    }
  }
  for (const auto& coords : wedge_map.kernel()) {
    Multivector theta(dim_);
    for (int j = 1; j <= dim_; ++j) {
      theta.add_term(Blade{1} << (j - 1), coords[static_cast<std::size_t>(j - 1)]);
    }
    factors_.push_back(theta);
  }
  if (static_cast<int>(factors_.size()) != s.type()) {
    throw VerificationFailure("factor space dimension does not match the type");
  }

  // Per-degree bases from the spanning set factors ^ (degree l-1 blades).
  basis_.resize(static_cast<std::size_t>(dim_) + 1);
  for (int l = 1; l <= dim_; ++l) {
    Matrix span_rows(0, space);
    for (const auto& theta : factors_) {
      for (Blade b : blades::of_degree(dim_, l - 1)) {
        Multivector gen = wedge(theta, Multivector::term(dim_, b, GaussianRational(1)));
        if (!gen.is_zero()) span_rows.append_row(gen.dense());
      }
    }
    Matrix reduced = span_rows.rref();
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
      basis_[static_cast<std::size_t>(l)].push_back(
          Multivector::from_dense(dim_, reduced.row(r)));
    }
  }

  // d-stability and the induced differential, in ideal coordinates.
  d_.resize(static_cast<std::size_t>(dim_) + 1);
  static const std::vector<Multivector> kEmpty;
  for (int l = 0; l <= dim_; ++l) {
    const auto& source = basis_[static_cast<std::size_t>(l)];
    const auto& target = (l < dim_) ? basis_[static_cast<std::size_t>(l + 1)] : kEmpty;
    Matrix target_cols = columns_of(target, space);
    Matrix dm(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
      Multivector image = s.algebra().d(source[j]);
      auto coords = target_cols.solve(image.dense());
      if (!coords) {
        throw StabilityFailure("d does not preserve the ideal in degree " + std::to_string(l));
      }
      for (std::size_t r = 0; r < target.size(); ++r) dm.at(r, j) = (*coords)[r];
    }
    d_[static_cast<std::size_t>(l)] = std::move(dm);
  }

  // Periodic even/odd complex with the twisted differential.
  for (int l = 0; l <= dim_; ++l) {
    auto& bucket = (l % 2 == 0) ? even_basis_ : odd_basis_;
    for (const auto& b : basis_[static_cast<std::size_t>(l)]) bucket.push_back(b);
  }
  Matrix even_cols = columns_of(even_basis_, space);
  Matrix odd_cols = columns_of(odd_basis_, space);
  auto build_dh = [&](const std::vector<Multivector>& source, const Matrix& target_cols,
                      std::size_t target_size) {
    Matrix dm(target_size, source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
      Multivector image = s.d_h(source[j]);
      auto coords = target_cols.solve(image.dense());
      if (!coords) throw StabilityFailure("d^H does not preserve the ideal");
      for (std::size_t r = 0; r < target_size; ++r) dm.at(r, j) = (*coords)[r];
    }
    return dm;
  };
  dh_even_to_odd_ = build_dh(even_basis_, odd_cols, odd_basis_.size());
  dh_odd_to_even_ = build_dh(odd_basis_, even_cols, even_basis_.size());
}

const std::vector<Multivector>& IdealComplex::basis(int degree) const {
  if (degree < 0 || degree > dim_) throw std::invalid_argument("basis: degree out of range");
  return basis_[static_cast<std::size_t>(degree)];
}

std::optional<GVec> IdealComplex::coordinates(const Multivector& a, int degree) const {
  if (!a.is_zero() && !a.is_homogeneous(degree)) return std::nullopt;
  Matrix cols = columns_of(basis(degree), blades::all(dim_).size());
  return cols.solve(a.dense());
}

bool IdealComplex::contains(const Multivector& a) const {
  Multivector residue = a;
  for (int l = 0; l <= dim_; ++l) {
    Multivector part = a.grade(l);
    if (part.is_zero()) continue;
    if (!coordinates(part, l)) return false;
    residue -= part;
  }
  return true;
}

const Matrix& IdealComplex::d_matrix(int degree) const {
  if (degree < 0 || degree > dim_) throw std::invalid_argument("d_matrix: degree out of range");
  return d_[static_cast<std::size_t>(degree)];
}

std::optional<GVec> IdealComplex::odd_coordinates(const Multivector& a) const {
  Matrix cols = columns_of(odd_basis_, blades::all(dim_).size());
  return cols.solve(a.dense());
}

IdealComplex ideal_complex(const InvariantGCS& s) { return IdealComplex(s); }

CohomologySpace ideal_cohomology(const IdealComplex& ideal, int degree) {
  CohomologySpace out;
  out.degree = degree;
  auto kernel = ideal.d_matrix(degree).kernel();
  out.kernel_rank = static_cast<int>(kernel.size());

  Matrix image_rows(0, static_cast<std::size_t>(ideal.ideal_dim(degree)));
  if (degree > 0) {
    const Matrix& below = ideal.d_matrix(degree - 1);
    for (std::size_t j = 0; j < below.cols(); ++j) {
      GVec row(below.rows());
      for (std::size_t r = 0; r < below.rows(); ++r) row[r] = below.at(r, j);
      image_rows.append_row(row);
    }
  }
  out.image_rank = static_cast<int>(image_rows.rank());
  out.betti = out.kernel_rank - out.image_rank;

  for (const auto& coords : quotient_representatives(kernel, image_rows)) {
    Multivector rep(ideal.dim());
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (!coords[c].is_zero()) rep += coords[c] * ideal.basis(degree)[c];
    }
    out.representatives.push_back(rep);
  }
  return out;
}

CohomologySpace ideal_cohomology(const InvariantGCS& s, int degree) {
  return ideal_cohomology(IdealComplex(s), degree);
}

TwistingClassReport twisting_class(const InvariantGCS& s) {
  if (!modular_field(s)) {
    throw NotIntegrableError("twisting class requires an integrable structure");
  }
  IdealComplex ideal(s);
  const Multivector& tau = *s.analysis().tau;
  Multivector rep3 = s.twist().form() + s.algebra().d(tau);

  TwistingClassReport out(s.dim());
  out.representative = rep3;
  out.h3_dim = ideal_cohomology(ideal, 3).betti;

  auto rep_coords = ideal.coordinates(rep3, 3);
  if (!rep_coords) {
    throw VerificationFailure("twisting representative does not lie in the ideal");
  }

  // Criterion (c): find beta in I^2 with H + d tau + d beta = 0.
  GVec rhs(rep_coords->size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = -(*rep_coords)[i];
  auto beta_coords = ideal.d_matrix(2).solve(rhs);
  if (beta_coords) {
    out.vanishes = true;
    Multivector beta(s.dim());
    for (std::size_t c = 0; c < beta_coords->size(); ++c) {
      if (!(*beta_coords)[c].is_zero()) beta += (*beta_coords)[c] * ideal.basis(2)[c];
    }
    out.beta = beta;
    Multivector closed = exp_even(tau + beta);
    out.closed_rep = closed;
    out.criterion_a_verified = s.d_h(closed).is_zero();
  }

  // Criterion (b): the connecting image of [exp(tau)] under the periodic
  // even/odd sequence, evaluated independently of (c).
  Multivector connecting = s.d_h(exp_even(tau));
  auto odd_coords = ideal.odd_coordinates(connecting);
  if (!odd_coords) {
    throw VerificationFailure("connecting image does not lie in the ideal");
  }
  out.criterion_b_vanishes = ideal.dh_even_to_odd().solve(*odd_coords).has_value();
  out.criteria_agree = (out.criterion_b_vanishes == out.vanishes) &&
                       (!out.vanishes || out.criterion_a_verified);
  return out;
}

std::optional<Multivector> certified_closed_rep(const InvariantGCS& s) {
  TwistingClassReport report = twisting_class(s);
  if (!report.vanishes) return std::nullopt;
  return report.closed_rep;
}

}  // namespace gcx
