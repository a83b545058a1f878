#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "urr/rational.hpp"

namespace urr {

// Dense row-major matrix over Q with exact Gaussian elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Rat> row(std::size_t r) const;
  std::vector<Rat> column(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  std::vector<Rat> operator*(const std::vector<Rat>& v) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Reduces in place to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;
  Rat determinant() const;
  // Throws SingularMatrix.
  Matrix inverse() const;
  // Basis of {v : M v = 0}, one vector per free column, in column order.
  std::vector<std::vector<Rat>> kernel() const;
  // Stacks `other` below this matrix.
  Matrix stacked(const Matrix& other) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Affine solution set {particular + span(directions)} of M x = b.
struct AffineSolution {
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> directions;
};

// Free variables are set to zero in the particular solution, so earlier
// columns are preferred as pivots. Returns nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, const std::vector<Rat>& b);

}  // namespace urr
