#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nodal/field.hpp"

namespace nodal {

/// Dense row-major matrix of scalars. Zero-sized dimensions are allowed and
/// common: the map out of a zero space is a rows x 0 matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& f, std::size_t n);
  /// Builds a matrix from columns of equal length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  const std::vector<Scalar>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;
  auto operator<=>(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

namespace linalg {

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, Scalar s, const Matrix& a);
Matrix power(const Field& f, const Matrix& a, std::size_t k);
bool is_zero(const Field& f, const Matrix& a);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form with the leftmost-pivot convention.
Echelon rref(const Field& f, const Matrix& a);
std::size_t rank(const Field& f, const Matrix& a);
bool is_invertible(const Field& f, const Matrix& a);
/// Throws std::domain_error if singular.
Matrix inverse(const Field& f, const Matrix& a);

/// Basis of {x : a x = 0}, one vector per free column, each with a 1 in its
/// free column (the standard RREF kernel basis).
std::vector<std::vector<Scalar>> nullspace(const Field& f, const Matrix& a);

/// Canonical basis of the column space of a: the nonzero rows of the RREF of
/// the transpose, returned as the columns of a (rows x r) matrix.
Matrix column_space(const Field& f, const Matrix& a);
/// Basis of the kernel as the columns of a (cols x k) matrix.
Matrix kernel(const Field& f, const Matrix& a);

/// Coordinates of the columns of y in the basis formed by the columns of b,
/// or nullopt if some column of y is outside the span. b must have full
/// column rank.
std::optional<Matrix> coordinates(const Field& f, const Matrix& b, const Matrix& y);

Matrix transpose(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// Rows [r0, r0+nr) and columns [c0, c0+nc).
Matrix block(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);

}  // namespace linalg
}  // namespace nodal
