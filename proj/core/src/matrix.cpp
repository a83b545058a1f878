#include "urr/matrix.hpp"

#include <sstream>
#include <utility>

#include "urr/errors.hpp"

namespace urr {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::ArityMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rat> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rat> Matrix::column(std::size_t c) const {
  std::vector<Rat> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) fail(ErrorKind::ArityMismatch, "matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

std::vector<Rat> Matrix::operator*(const std::vector<Rat>& v) const {
  if (cols_ != v.size()) fail(ErrorKind::ArityMismatch, "matrix-vector shape mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::vector<std::size_t> Matrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t p = lead_row;
    while (p < rows_ && (*this)(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(lead_row, k));
    Rat inv = 1 / (*this)(lead_row, c);
    for (std::size_t k = c; k < cols_; ++k) (*this)(lead_row, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row) continue;
      Rat f = (*this)(r, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < cols_; ++k) {
        if ((*this)(lead_row, k) != 0) (*this)(r, k) -= f * (*this)(lead_row, k);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref_in_place().size();
}

Rat Matrix::determinant() const {
  if (rows_ != cols_) fail(ErrorKind::ArityMismatch, "determinant of a non-square matrix");
  Matrix m = *this;
  Rat det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      Rat f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::SingularMatrix, "non-square matrix");
  std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = aug.rref_in_place();
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    fail(ErrorKind::SingularMatrix, "matrix is not invertible");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<std::vector<Rat>> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) fail(ErrorKind::ArityMismatch, "stacking matrices of different width");
  Matrix out(rows_ + other.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < other.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(rows_ + r, c) = other(r, c);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const std::vector<Rat>& b) {
  if (b.size() != m.rows()) fail(ErrorKind::ArityMismatch, "right-hand side length mismatch");
  std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(n, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, free);
    sol.directions.push_back(std::move(v));
  }
  return sol;
}

}  // namespace urr
