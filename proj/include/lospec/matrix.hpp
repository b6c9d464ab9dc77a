#pragma once

#include <optional>
#include <vector>

#include "lospec/field.hpp"

namespace lospec {

// Dense matrix over the coefficient field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend Matrix operator*(const FieldElem& c, const Matrix& m);
  bool operator==(const Matrix& o) const;

  Matrix conjugate_transpose() const;
  FieldElem trace() const;
  bool is_hermitian() const;
  bool is_zero() const;

  // lcm of all entry denominators.
  Integer denominator_lcm() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> data_;
};

// Row echelon factorization of a matrix, reused to solve many right-hand
// sides and to read off rank / kernel.
class RowEchelon {
 public:
  explicit RowEchelon(const Matrix& m);

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  // Solves A x = rhs; nullopt when inconsistent.  Free variables are set to
  // zero, so the solution is the unique one when rank == cols.
  std::optional<std::vector<FieldElem>> solve(const std::vector<FieldElem>& rhs) const;

  // Deterministic kernel basis in reduced echelon convention: one vector per
  // free column, unit entry at the free column, pivots filled in above.
  std::vector<std::vector<FieldElem>> kernel_basis() const;

 private:
  std::size_t rows_, cols_;
  Matrix rref_;                         // reduced row echelon form of A
  std::vector<std::size_t> pivots_;     // pivot column per echelon row
  std::vector<std::vector<FieldElem>> ops_;  // row operations applied, as rows of E with E*A = rref
};

}  // namespace lospec
