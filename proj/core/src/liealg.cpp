#include "gcx/liealg.hpp"

#include "gcx/errors.hpp"

#include <stdexcept>

namespace gcx {

LieAlgebra::LieAlgebra(int dim) : LieAlgebra(dim, {}) {}

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketTerm>& brackets) : dim_(dim) {
  // Fold duplicate (i, j, k) entries; reject malformed ones.
  std::map<std::tuple<int, int, int>, Rational> folded;
  for (const auto& t : brackets) {
    if (t.i < 1 || t.j < 1 || t.k < 1 || t.i > dim || t.j > dim || t.k > dim) {
      throw std::invalid_argument("bracket index out of range");
    }
    if (t.i >= t.j) throw std::invalid_argument("bracket requires i < j");
    folded[{t.i, t.j, t.k}] += t.c;
  }
  for (const auto& [key, c] : folded) {
    if (c.is_zero()) continue;
    terms_.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  }
  d_generator_.reserve(static_cast<std::size_t>(dim));
  for (int k = 1; k <= dim; ++k) {
    Multivector dk(dim);
    for (const auto& t : terms_) {
      if (t.k != k) continue;
      dk.add_term(blades::from_indices({t.i, t.j}), GaussianRational(-t.c));
    }
    d_generator_.push_back(dk);
  }
}

std::vector<Rational> LieAlgebra::bracket_basis(int i, int j) const {
  std::vector<Rational> out(static_cast<std::size_t>(dim_));
  if (i == j) return out;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  for (const auto& t : terms_) {
    if (t.i == i && t.j == j) out[static_cast<std::size_t>(t.k - 1)] += flip ? -t.c : t.c;
  }
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  Vector out(dim_);
  for (const auto& t : terms_) {
    GaussianRational cij = x.coefficient(t.i) * y.coefficient(t.j) -
                           x.coefficient(t.j) * y.coefficient(t.i);
    if (cij.is_zero()) continue;
    out.coefficient(t.k) += GaussianRational(t.c) * cij;
  }
  return out;
}

Multivector LieAlgebra::d_one_form(int k) const {
  if (k < 1 || k > dim_) throw std::invalid_argument("d_one_form: index out of range");
  return d_generator_[static_cast<std::size_t>(k - 1)];
}

Multivector antiderivation_d(const std::vector<Multivector>& generator_images,
                             const Multivector& a) {
  const int dim = a.dim();
  if (generator_images.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("antiderivation_d: need one image per generator");
  }
  Multivector out(dim);
  for (const auto& [b, coeff] : a.terms()) {
    // d(e_S) = sum_t (-1)^(t-1) d(e_{i_t}) ^ e_{S minus i_t}; the 2-form
    // image commutes past the prefix, so only the position sign remains.
    int t = 0;
    Blade rest = b;
    while (rest != 0) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      const Multivector& de = generator_images[static_cast<std::size_t>(bit)];
      if (!de.is_zero()) {
        GaussianRational c = coeff;
        if (t % 2 != 0) c = -c;
        out += c * wedge(de, Multivector::term(dim, b & ~(Blade{1} << bit), GaussianRational(1)));
      }
      ++t;
    }
  }
  return out;
}

Multivector LieAlgebra::d(const Multivector& a) const {
  if (a.dim() != dim_) throw std::invalid_argument("d: dimension mismatch");
  return antiderivation_d(d_generator_, a);
}

bool LieAlgebra::check_jacobi() const {
  for (int k = 1; k <= dim_; ++k) {
    if (!d(d_one_form(k)).is_zero()) return false;
  }
  return true;
}

TwistForm::TwistForm(const LieAlgebra& g, Multivector h) : h_(std::move(h)) {
  if (h_.dim() != g.dim()) throw std::invalid_argument("TwistForm: dimension mismatch");
  if (!h_.is_zero() && !h_.is_homogeneous(3)) {
    throw AlgebraicError("twist form must be homogeneous of degree 3");
  }
  if (!h_.is_real()) throw AlgebraicError("twist form must be real");
  if (!g.d(h_).is_zero()) throw AlgebraicError("twist form must be closed");
}

TwistForm TwistForm::zero(const LieAlgebra& g) { return TwistForm(g, Multivector(g.dim())); }

Multivector d_twisted(const LieAlgebra& g, const TwistForm& h, const Multivector& a) {
  return g.d(a) + wedge(h.form(), a);
}

Matrix d_matrix(const LieAlgebra& g, int p) {
  auto source = blades::of_degree(g.dim(), p);
  auto target = blades::of_degree(g.dim(), p + 1);
  Matrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    Multivector image = g.d(Multivector::term(g.dim(), source[j], GaussianRational(1)));
    for (std::size_t r = 0; r < target.size(); ++r) m.at(r, j) = image.coefficient(target[r]);
  }
  return m;
}

CohomologySpace cohomology(const LieAlgebra& g, int degree) {
  if (degree < 0 || degree > g.dim()) throw std::invalid_argument("cohomology: bad degree");
  if (!g.check_jacobi()) throw JacobiError("structure constants violate the Jacobi identity");

  CohomologySpace out;
  out.degree = degree;

  auto source = blades::of_degree(g.dim(), degree);
  Matrix d_here = d_matrix(g, degree);
  auto kernel = d_here.kernel();
  out.kernel_rank = static_cast<int>(kernel.size());

  Matrix image_rows(0, source.size());
  if (degree > 0) {
    auto below = blades::of_degree(g.dim(), degree - 1);
    for (std::size_t j = 0; j < below.size(); ++j) {
      Multivector image = g.d(Multivector::term(g.dim(), below[j], GaussianRational(1)));
      GVec row(source.size());
      for (std::size_t c = 0; c < source.size(); ++c) row[c] = image.coefficient(source[c]);
      image_rows.append_row(row);
    }
  }
  out.image_rank = static_cast<int>(image_rows.rank());
  out.betti = out.kernel_rank - out.image_rank;

  for (const auto& coords : quotient_representatives(kernel, image_rows)) {
    Multivector rep(g.dim());
    for (std::size_t c = 0; c < source.size(); ++c) rep.add_term(source[c], coords[c]);
    out.representatives.push_back(rep);
  }
  return out;
}

std::vector<int> betti_numbers(const LieAlgebra& g) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.dim() + 1));
  for (int p = 0; p <= g.dim(); ++p) out.push_back(cohomology(g, p).betti);
  return out;
}

}  // namespace gcx
