#include "lospec/matrix.hpp"

#include <stdexcept>

namespace lospec {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem::one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const FieldElem& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix operator*(const FieldElem& c, const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = c * m.data_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

Matrix Matrix::conjugate_transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

FieldElem Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  FieldElem t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (!(at(i, j) == at(j, i).conj())) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Integer Matrix::denominator_lcm() const {
  Integer l = 1;
  for (const auto& e : data_) {
    Integer d = e.denominator_lcm();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

RowEchelon::RowEchelon(const Matrix& m) : rows_(m.rows()), cols_(m.cols()), rref_(m) {
  ops_.assign(rows_, std::vector<FieldElem>(rows_));
  for (std::size_t i = 0; i < rows_; ++i) ops_[i][i] = FieldElem::one();

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && rref_.at(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(rref_.at(p, j), rref_.at(row, j));
      std::swap(ops_[p], ops_[row]);
    }
    FieldElem inv = rref_.at(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) rref_.at(row, j) = inv * rref_.at(row, j);
    for (auto& x : ops_[row]) x = inv * x;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      FieldElem f = rref_.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < cols_; ++j) rref_.at(r, j) -= f * rref_.at(row, j);
      for (std::size_t j = 0; j < rows_; ++j) ops_[r][j] -= f * ops_[row][j];
    }
    pivots_.push_back(col);
    ++row;
  }
}

std::optional<std::vector<FieldElem>> RowEchelon::solve(const std::vector<FieldElem>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("rhs size mismatch");
  // transformed rhs: E * rhs
  std::vector<FieldElem> t(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rows_; ++j) {
      if (ops_[i][j].is_zero() || rhs[j].is_zero()) continue;
      t[i] += ops_[i][j] * rhs[j];
    }
  }
  // consistency: rows beyond rank must vanish
  for (std::size_t i = pivots_.size(); i < rows_; ++i)
    if (!t[i].is_zero()) return std::nullopt;
  std::vector<FieldElem> x(cols_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = t[i];
  return x;
}

std::vector<std::vector<FieldElem>> RowEchelon::kernel_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldElem> v(cols_);
    v[free_col] = FieldElem::one();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const FieldElem& coef = rref_.at(r, free_col);
      if (!coef.is_zero()) v[pivots_[r]] = -coef;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lospec
