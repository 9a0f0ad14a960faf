#pragma once

#include <map>
#include <optional>
#include <vector>

#include "affsp/ring.hpp"

namespace affsp {

using SparseRow = std::map<int, Rational>;

// Incremental row echelon form over Q.  Each stored row is normalised so
// that its pivot (smallest column) has coefficient 1.
class EchelonSolver {
 public:
  explicit EchelonSolver(int ncols) : ncols_(ncols) {}

  // Returns false when the row reduces to 0 = nonzero.
  bool add_row(SparseRow row, Rational rhs = 0);
  int rank() const { return int(pivots_.size()); }
  int ncols() const { return ncols_; }
  bool consistent() const { return consistent_; }
  std::vector<int> free_columns() const;
  // Free columns set to zero.  Throws NoSolution if inconsistent.
  std::vector<Rational> particular_solution() const;
  // Throws NoSolution or NonUnique.
  std::vector<Rational> unique_solution() const;

 private:
  struct Pivot {
    SparseRow row;
    Rational rhs;
  };
  int ncols_;
  bool consistent_ = true;
  std::map<int, Pivot> pivots_;
};

// Rank of a list of sparse rows.
int sparse_rank(const std::vector<SparseRow>& rows, int ncols);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(size_t(rows) * cols, zero) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const T& zero() const { return zero_; }
  // 0-based
  T& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_entry(x)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (is_zero_entry(y)) continue;
          c(i, j) += x * y;
        }
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!(data_[i] == o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  template <class F>
  auto map(F f) const {
    using U = decltype(f(zero_));
    Matrix<U> m(rows_, cols_, f(zero_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }
  static Matrix identity(int n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

 private:
  static bool is_zero_entry(const T& x) { return x.is_zero(); }
  int rows_ = 0, cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

// Inverse of a lower or upper unitriangular matrix by substitution.
template <class T>
Matrix<T> unitriangular_inverse(const Matrix<T>& m, const T& one) {
  int n = m.rows();
  bool lower = true, upper = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j && !m(i, j).is_zero()) lower = false;
      if (i > j && !m(i, j).is_zero()) upper = false;
    }
  if (!lower && !upper) throw InvalidArgument("matrix is not triangular");
  Matrix<T> inv = Matrix<T>::identity(n, m.zero(), one);
  if (lower) {
    // column j of the inverse: forward substitution
    for (int j = 0; j < n; ++j)
      for (int i = j + 1; i < n; ++i) {
        T s = m.zero();
        for (int k = j; k < i; ++k)
          if (!m(i, k).is_zero() && !inv(k, j).is_zero()) s += m(i, k) * inv(k, j);
        inv(i, j) = -s;
      }
  } else {
    for (int j = n - 1; j >= 0; --j)
      for (int i = j - 1; i >= 0; --i) {
        T s = m.zero();
        for (int k = i + 1; k <= j; ++k)
          if (!m(i, k).is_zero() && !inv(k, j).is_zero()) s += m(i, k) * inv(k, j);
        inv(i, j) = -s;
      }
  }
  return inv;
}

}  // namespace affsp
