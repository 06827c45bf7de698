#include "gcx/gcstruct.hpp"

#include "gcx/errors.hpp"
#include "gcx/substitute.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gcx {

namespace {

// Columns: coordinates of the L basis followed by the conj(L) basis.
Matrix frame_matrix(const std::vector<GeneralizedVector>& l_basis,
                    const std::vector<GeneralizedVector>& lbar_basis) {
  const std::size_t rows = l_basis.front().coords().size();
  Matrix m(rows, l_basis.size() + lbar_basis.size());
  for (std::size_t j = 0; j < l_basis.size(); ++j) {
    GVec col = l_basis[j].coords();
    for (std::size_t r = 0; r < rows; ++r) m.at(r, j) = col[r];
  }
  for (std::size_t j = 0; j < lbar_basis.size(); ++j) {
    GVec col = lbar_basis[j].coords();
    for (std::size_t r = 0; r < rows; ++r) m.at(r, l_basis.size() + j) = col[r];
  }
  return m;
}

std::vector<GeneralizedVector> conjugate_basis(const std::vector<GeneralizedVector>& basis) {
  std::vector<GeneralizedVector> out;
  out.reserve(basis.size());
  for (const auto& u : basis) out.push_back(u.conjugate());
  return out;
}

}  // namespace

InvariantGCS::InvariantGCS(LieAlgebra g, TwistForm h, Multivector rho)
    : g_(std::move(g)), h_(std::move(h)), rho_(std::move(rho)), analysis_(rho_.dim()) {
  if (h_.form().dim() != g_.dim() || rho_.dim() != g_.dim()) {
    throw std::invalid_argument("InvariantGCS: dimension mismatch");
  }
  if (!g_.check_jacobi()) {
    throw JacobiError("structure constants violate the Jacobi identity");
  }
  if (rho_.is_zero()) throw AlgebraicError("spinor is zero");
  analysis_ = analyze(rho_);
  if (!analysis_.pure) {
    throw NonPureError("spinor is not pure (annihilator rank " +
                       std::to_string(analysis_.annihilator_basis.size()) + ", expected " +
                       std::to_string(g_.dim()) + ")");
  }
  if (!analysis_.nondegenerate) {
    throw DegenerateError("annihilator meets its conjugate: no almost structure");
  }
}

GeneralizedVector courant_bracket(const LieAlgebra& g, const TwistForm& h,
                                  const GeneralizedVector& u, const GeneralizedVector& v) {
  if (u.dim() != g.dim() || v.dim() != g.dim()) {
    throw std::invalid_argument("courant_bracket: dimension mismatch");
  }
  Vector xy = g.bracket(u.x, v.x);
  Multivector form = contract(u.x, g.d(v.xi.as_form())) - contract(v.x, g.d(u.xi.as_form())) +
                     contract(u.x, contract(v.x, h.form()));
  return {xy, Covector::from_form(form)};
}

std::optional<GeneralizedVector> modular_field(const InvariantGCS& s) {
  Matrix action = clifford_action_matrix(s.rho());
  auto solution = action.solve(s.d_h(s.rho()).dense());
  if (!solution) return std::nullopt;
  // The solution is unique modulo L = Ann(rho); project onto span(conj L).
  const auto& l_basis = s.analysis().annihilator_basis;
  auto lbar_basis = conjugate_basis(l_basis);
  Matrix frame = frame_matrix(l_basis, lbar_basis);
  auto gamma = frame.solve(*solution);
  if (!gamma) throw VerificationFailure("modular field: frame solve failed");
  GeneralizedVector out(s.dim());
  GVec coords(static_cast<std::size_t>(2 * s.dim()));
  for (std::size_t a = 0; a < lbar_basis.size(); ++a) {
    const GaussianRational& w = (*gamma)[l_basis.size() + a];
    if (w.is_zero()) continue;
    GVec c = lbar_basis[a].coords();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += w * c[i];
  }
  return GeneralizedVector::from_coords(s.dim(), coords);
}

bool is_gcy(const InvariantGCS& s) { return s.d_h(s.rho()).is_zero(); }

AlgebroidData::AlgebroidData(const InvariantGCS& s) : dim_(s.dim()) {
  if (!modular_field(s)) {
    throw NotIntegrableError("structure is not integrable; no Lie algebroid");
  }
  l_basis_ = s.analysis().annihilator_basis;
  lbar_basis_ = conjugate_basis(l_basis_);

  const std::size_t n2 = static_cast<std::size_t>(dim_);
  pairing_ = Matrix(n2, n2);
  for (std::size_t a = 0; a < n2; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      pairing_.at(a, b) = GaussianRational(2) * pairing(lbar_basis_[a], l_basis_[b]);
    }
  }
  auto inv = pairing_.inverse();
  if (!inv) throw VerificationFailure("algebroid: dual pairing is singular");
  pairing_inv_ = *inv;

  Matrix frame = frame_matrix(l_basis_, lbar_basis_);
  for (int a = 0; a < dim_; ++a) {
    for (int b = a + 1; b < dim_; ++b) {
      GeneralizedVector w =
          courant_bracket(s.algebra(), s.twist(), lbar_basis_[static_cast<std::size_t>(a)],
                          lbar_basis_[static_cast<std::size_t>(b)]);
      auto gamma = frame.solve(w.coords());
      if (!gamma) throw VerificationFailure("algebroid: frame solve failed");
      for (std::size_t c = 0; c < n2; ++c) {
        if (!(*gamma)[c].is_zero()) {
          throw InvolutivityFailure("bracket of conj(L) sections leaves conj(L)");
        }
      }
      GVec consts(n2);
      for (std::size_t c = 0; c < n2; ++c) consts[c] = (*gamma)[n2 + c];
      constants_[{a, b}] = std::move(consts);
    }
  }

  // Chevalley-Eilenberg images for the dual basis of L: the constants of L
  // are the conjugates of those of conj(L).
  d_lambda_.reserve(n2);
  for (int c = 0; c < dim_; ++c) {
    Multivector img(dim_);
    for (const auto& [ab, consts] : constants_) {
      const GaussianRational& cc = consts[static_cast<std::size_t>(c)];
      if (cc.is_zero()) continue;
      Blade b = (Blade{1} << ab.first) | (Blade{1} << ab.second);
      img.add_term(b, -cc.conj());
    }
    d_lambda_.push_back(img);
  }
}

GaussianRational AlgebroidData::structure_constant(int a, int b, int c) const {
  if (a < 1 || b < 1 || c < 1 || a > dim_ || b > dim_ || c > dim_) {
    throw std::invalid_argument("structure_constant: index out of range");
  }
  if (a == b) return GaussianRational();
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = constants_.find({a - 1, b - 1});
  if (it == constants_.end()) return GaussianRational();
  GaussianRational v = it->second[static_cast<std::size_t>(c - 1)];
  return flip ? -v : v;
}

Multivector AlgebroidData::d_l(const Multivector& alpha) const {
  if (alpha.dim() != dim_) throw std::invalid_argument("d_l: dimension mismatch");
  Multivector lambda = substitute_one_forms(alpha, pairing_);
  Multivector image = antiderivation_d(d_lambda_, lambda);
  return substitute_one_forms(image, pairing_inv_);
}

Multivector AlgebroidData::act(const Multivector& alpha, const Multivector& form) const {
  if (alpha.dim() != dim_ || form.dim() != dim_) {
    throw std::invalid_argument("act: dimension mismatch");
  }
  Multivector out(dim_);
  for (const auto& [blade, coeff] : alpha.terms()) {
    Multivector cur = form;
    auto idx = blades::indices(blade);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
      cur = clifford_act(lbar_basis_[static_cast<std::size_t>(*it - 1)], cur);
    }
    out += coeff * cur;
  }
  return out;
}

AlgebroidData algebroid(const InvariantGCS& s) { return AlgebroidData(s); }

ModularClassReport modular_class(const InvariantGCS& s) {
  auto v = modular_field(s);
  if (!v) throw NotIntegrableError("modular class requires an integrable structure");
  AlgebroidData data(s);

  // Coordinates of the field over the conj(L) basis.
  const std::size_t n2 = static_cast<std::size_t>(s.dim());
  Matrix lbar_cols(static_cast<std::size_t>(2 * s.dim()), n2);
  for (std::size_t a = 0; a < n2; ++a) {
    GVec col = data.lbar_basis()[a].coords();
    for (std::size_t r = 0; r < col.size(); ++r) lbar_cols.at(r, a) = col[r];
  }
  auto gamma = lbar_cols.solve(v->coords());
  if (!gamma) throw VerificationFailure("modular class: field not in span(conj L)");

  ModularClassReport rep(s.dim());
  rep.field = *v;
  Multivector alpha(s.dim());
  for (std::size_t a = 0; a < n2; ++a) alpha.add_term(Blade{1} << a, (*gamma)[a]);
  rep.field_closed = data.d_l(alpha).is_zero();
  rep.zero = alpha.is_zero();

  // H^1 of the invariant complex is the kernel of d_l in degree 1: the
  // degree-0 image vanishes because invariant rescalings are constants.
  auto deg2 = blades::of_degree(s.dim(), 2);
  Matrix d1(deg2.size(), n2);
  for (std::size_t a = 0; a < n2; ++a) {
    Multivector img = data.d_l(Multivector::term(s.dim(), Blade{1} << a, GaussianRational(1)));
    for (std::size_t r = 0; r < deg2.size(); ++r) d1.at(r, a) = img.coefficient(deg2[r]);
  }
  auto kernel = d1.kernel();
  rep.h1_dim = static_cast<int>(kernel.size());
  if (!rep.field_closed) return rep;  // no class coordinates for a non-closed field

  Matrix kernel_cols(n2, kernel.size());
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    for (std::size_t r = 0; r < n2; ++r) kernel_cols.at(r, j) = kernel[j][r];
  }
  auto coords = kernel_cols.solve(*gamma);
  if (!coords) throw VerificationFailure("modular class: closed field outside kernel span");
  rep.coordinates = *coords;
  return rep;
}

EigenDecomposition::EigenDecomposition(const InvariantGCS& s)
    : n_(s.half_dim()), dim_(s.dim()) {
  auto lbar = conjugate_basis(s.analysis().annihilator_basis);
  auto order = blades::all(dim_);
  Matrix basis(order.size(), order.size());
  columns_.reserve(order.size());
  column_level_.reserve(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    Multivector spinor = s.rho();
    auto idx = blades::indices(order[j]);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
      spinor = clifford_act(lbar[static_cast<std::size_t>(*it - 1)], spinor);
    }
    GVec dense = spinor.dense();
    for (std::size_t r = 0; r < order.size(); ++r) basis.at(r, j) = dense[r];
    columns_.push_back(std::move(spinor));
    column_level_.push_back(blades::degree(order[j]));
  }
  auto inv = basis.inverse();
  if (!inv) {
    throw AlgebraicError("eigenspace basis incomplete: spinor monomials do not span");
  }
  basis_inv_ = *inv;
}

Multivector EigenDecomposition::component(const Multivector& phi, int k) const {
  if (phi.dim() != dim_) throw std::invalid_argument("component: dimension mismatch");
  if (k < -n_ || k > n_) throw std::invalid_argument("component: level out of range");
  const int level = n_ - k;
  GVec x = basis_inv_.apply(phi.dense());
  Multivector out(dim_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (column_level_[c] != level || x[c].is_zero()) continue;
    out += x[c] * columns_[c];
  }
  return out;
}

std::vector<std::pair<int, Multivector>> EigenDecomposition::components(
    const Multivector& phi) const {
  std::vector<std::pair<int, Multivector>> out;
  for (int k = n_; k >= -n_; --k) {
    Multivector c = component(phi, k);
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  }
  return out;
}

Multivector eigenspace_component(const InvariantGCS& s, const Multivector& phi, int k) {
  return EigenDecomposition(s).component(phi, k);
}

EigensplitReport verify_eigensplit(const InvariantGCS& s) {
  EigensplitReport rep;
  EigenDecomposition dec(s);
  const int n = s.half_dim();
  auto order = blades::all(s.dim());
  auto lbar = conjugate_basis(s.analysis().annihilator_basis);

  // d^H must not leak beyond the adjacent eigenspaces.
  for (std::size_t j = 0; j < order.size(); ++j) {
    const int level = blades::degree(order[j]);
    Multivector spinor = s.rho();
    auto idx = blades::indices(order[j]);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
      spinor = clifford_act(lbar[static_cast<std::size_t>(*it - 1)], spinor);
    }
    Multivector image = s.d_h(spinor);
    for (const auto& [k, comp] : dec.components(image)) {
      const int comp_level = n - k;
      if (comp_level != level - 1 && comp_level != level + 1) {
        rep.dh_splits = false;
        std::ostringstream msg;
        msg << "dH(U^" << (n - level) << ") has a component in U^" << k;
        rep.violations.push_back(msg.str());
      }
    }
  }

  // Differential-module identity {dbar, a} rho' = (d_l a) rho'. The
  // algebroid differential needs involutivity; failure there is itself a
  // violation for this check.
  auto dbar = [&](const Multivector& phi) {
    Multivector out(s.dim());
    for (const auto& [k, comp] : dec.components(phi)) {
      if (k - 1 >= -n) out += dec.component(s.d_h(comp), k - 1);
    }
    return out;
  };
  try {
    AlgebroidData data(s);
    for (int a = 0; a < s.dim(); ++a) {
      Multivector alpha = Multivector::term(s.dim(), Blade{1} << a, GaussianRational(1));
      Multivector dla = data.d_l(alpha);
      for (std::size_t j = 0; j < order.size(); ++j) {
        Multivector sigma = s.rho();
        auto idx = blades::indices(order[j]);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
          sigma = clifford_act(lbar[static_cast<std::size_t>(*it - 1)], sigma);
        }
        Multivector lhs = dbar(data.act(alpha, sigma)) + data.act(alpha, dbar(sigma));
        Multivector rhs = data.act(dla, sigma);
        if (lhs != rhs) {
          rep.differential_module_ok = false;
          std::ostringstream msg;
          msg << "differential-module identity fails for basis element " << (a + 1)
              << " on spinor column " << j;
          rep.violations.push_back(msg.str());
        }
      }
    }
  } catch (const Error& e) {
    rep.differential_module_ok = false;
    rep.violations.push_back(std::string("differential-module check unavailable: ") + e.what());
  }
  return rep;
}

}  // namespace gcx
