#include "gcx/substitute.hpp"

#include <bit>
#include <stdexcept>

namespace gcx {

Multivector substitute_one_forms(const Multivector& a, const Matrix& m) {
  const int dim = a.dim();
  if (m.rows() != static_cast<std::size_t>(dim) || m.cols() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("substitute_one_forms: matrix must be dim x dim");
  }
  std::vector<Multivector> images;
  images.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    Multivector img(dim);
    for (int j = 0; j < dim; ++j) {
      img.add_term(Blade{1} << j, m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
    images.push_back(img);
  }
  Multivector out(dim);
  for (const auto& [b, coeff] : a.terms()) {
    Multivector product = Multivector::scalar(dim, coeff);
    Blade rest = b;
    while (rest != 0 && !product.is_zero()) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      product = wedge(product, images[static_cast<std::size_t>(bit)]);
    }
    out += product;
  }
  return out;
}

}  // namespace gcx
