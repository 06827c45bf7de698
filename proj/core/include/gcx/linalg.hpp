#pragma once

#include "gcx/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gcx {

using GVec = std::vector<GaussianRational>;

// Dense matrix over the Gaussian rationals. All eliminations pivot on the
// first nonzero entry in column-major sweep order, so echelon forms, kernel
// bases and particular solutions are deterministic and bit-identical across
// runs.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<GVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  GVec row(std::size_t r) const;
  void append_row(const GVec& v);

  Matrix transpose() const;
  GVec apply(const GVec& x) const;  // this * x

  // Reduced row echelon form; zero rows dropped. pivot_cols[i] is the pivot
  // column of row i.
  Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
  std::size_t rank() const;

  // Basis of {x : A x = 0}. One vector per free column j: entry j is 1 and
  // the pivot coordinates carry the negated reduced column.
  std::vector<GVec> kernel() const;

  // Particular solution of A x = b with every free variable set to zero
  // (the lexicographically pinned representative); nullopt if inconsistent.
  std::optional<GVec> solve(const GVec& b) const;

  std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<GaussianRational> a_;
};

// Kernel vectors that stay independent modulo the span of image_rows, kept
// in their original order: a deterministic representative basis of
// kernel / image.
std::vector<GVec> quotient_representatives(const std::vector<GVec>& kernel_basis,
                                           const Matrix& image_rows);

// Row span with reduced echelon basis; membership and coordinates are exact.
class RowSpace {
public:
  explicit RowSpace(const Matrix& rows);
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  bool contains(const GVec& v) const;
  // Residue of v after reduction against the basis.
  GVec reduce(const GVec& v) const;

private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gcx
