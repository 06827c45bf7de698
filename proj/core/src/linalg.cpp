#include "gcx/linalg.hpp"

#include <stdexcept>

namespace gcx {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<GVec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

GVec Matrix::row(std::size_t r) const {
  GVec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

void Matrix::append_row(const GVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("append_row: wrong length");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  }
  return m;
}

GVec Matrix::apply(const GVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: wrong length");
  GVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    GaussianRational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    }
    GaussianRational inv = GaussianRational(1) / m.at(row, col);
    for (std::size_t c = col; c < cols_; ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      GaussianRational f = m.at(r, col);
      for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix out(row, cols_);
  for (std::size_t r = 0; r < row; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = m.at(r, c);
  }
  if (pivot_cols) *pivot_cols = pivots;
  return out;
}

std::size_t Matrix::rank() const { return rref().rows(); }

std::vector<GVec> Matrix::kernel() const {
  std::vector<std::size_t> pivots;
  Matrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<GVec> out;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    GVec v(cols_);
    v[j] = GaussianRational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -r.at(i, j);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<GVec> Matrix::solve(const GVec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: wrong rhs length");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  std::vector<std::size_t> pivots;
  Matrix r = aug.rref(&pivots);
  GVec x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols_) return std::nullopt;  // pivot in the rhs column
    x[pivots[i]] = r.at(i, cols_);
  }
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = GaussianRational(1);
  }
  std::vector<std::size_t> pivots;
  Matrix red = aug.rref(&pivots);
  if (pivots.size() != rows_) return std::nullopt;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] != i) return std::nullopt;
  }
  Matrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = red.at(r, cols_ + c);
  }
  return out;
}

std::vector<GVec> quotient_representatives(const std::vector<GVec>& kernel_basis,
                                           const Matrix& image_rows) {
  Matrix reducer = image_rows;
  std::vector<GVec> out;
  for (const auto& v : kernel_basis) {
    RowSpace space(reducer);
    if (space.contains(v)) continue;
    out.push_back(v);
    reducer.append_row(v);
  }
  return out;
}

RowSpace::RowSpace(const Matrix& rows) : basis_(rows.rref(&pivots_)) {}

GVec RowSpace::reduce(const GVec& v) const {
  if (v.size() != basis_.cols()) throw std::invalid_argument("reduce: wrong length");
  GVec out = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const GaussianRational& f = out[pivots_[i]];
    if (f.is_zero()) continue;
    GaussianRational factor = f;  // basis pivot entries are 1
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (!basis_.at(i, c).is_zero()) out[c] -= factor * basis_.at(i, c);
    }
  }
  return out;
}

bool RowSpace::contains(const GVec& v) const {
  GVec residue = reduce(v);
  for (const auto& x : residue) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace gcx
