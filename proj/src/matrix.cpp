#include "nodal/matrix.hpp"

#include <stdexcept>

namespace nodal {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

namespace linalg {

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (f.is_zero(b(k, j))) continue;
        out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
  return out;
}

Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
  return add(f, a, scale(f, f.neg(f.one()), b));
}

Matrix scale(const Field& f, Scalar s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.mul(s, a(i, j));
  return out;
}

Matrix power(const Field& f, const Matrix& a, std::size_t k) {
  if (a.rows() != a.cols()) throw std::invalid_argument("power of a non-square matrix");
  Matrix result = Matrix::identity(f, a.rows());
  Matrix base = a;
  while (k) {
    if (k & 1) result = multiply(f, result, base);
    k >>= 1;
    if (k) base = multiply(f, base, base);
  }
  return result;
}

bool is_zero(const Field& f, const Matrix& a) {
  for (const auto& x : a.data())
    if (!f.is_zero(x)) return false;
  return true;
}

Echelon rref(const Field& f, const Matrix& a) {
  Echelon e{a, {}};
  auto& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const auto inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Field& f, const Matrix& a) { return rref(f, a).pivots.size(); }

bool is_invertible(const Field& f, const Matrix& a) {
  return a.rows() == a.cols() && rank(f, a) == a.rows();
}

Matrix inverse(const Field& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("inverse of a non-square matrix");
  const auto n = a.rows();
  auto e = rref(f, hstack(a, Matrix::identity(f, n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) throw std::domain_error("singular matrix");
  return block(e.reduced, 0, n, n, n);
}

std::vector<std::vector<Scalar>> nullspace(const Field& f, const Matrix& a) {
  auto e = rref(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix column_space(const Field& f, const Matrix& a) {
  auto e = rref(f, transpose(a));
  Matrix out(a.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, k) = e.reduced(k, r);
  return out;
}

Matrix kernel(const Field& f, const Matrix& a) {
  return Matrix::from_columns(a.cols(), nullspace(f, a));
}

std::optional<Matrix> coordinates(const Field& f, const Matrix& b, const Matrix& y) {
  if (b.rows() != y.rows()) throw std::invalid_argument("coordinates: row mismatch");
  const auto k = b.cols();
  auto e = rref(f, hstack(b, y));
  // b has full column rank, so the first k pivots are columns 0..k-1.
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= k) return std::nullopt;
  }
  if (e.pivots.size() < k) throw std::invalid_argument("coordinates: basis is not independent");
  return block(e.reduced, 0, k, k, y.cols());
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Matrix block(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > a.rows() || c0 + nc > a.cols()) throw std::out_of_range("matrix block");
  Matrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = a(r0 + i, c0 + j);
  return out;
}

}  // namespace linalg
}  // namespace nodal
