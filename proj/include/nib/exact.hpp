#pragma once

// Exact integer/rational arithmetic and linear algebra.
//
// Every routine here is a pure function of its arguments. Matrices are dense,
// row-major, and small (dimension at most a few dozen).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nib/error.hpp"

namespace nib {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Builds a matrix from a list of columns of equal length.
  static Matrix from_columns(const std::vector<std::vector<T>>& columns,
                             std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw Error(ErrorCode::kInvalidArgument, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, const std::vector<T>& c) {
    if (c.size() != rows_) throw Error(ErrorCode::kInvalidArgument, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::kInvalidArgument, "matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error(ErrorCode::kInvalidArgument, "matrix-vector dimension mismatch");
    std::vector<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
// Throws kNotIntegral when some entry has a denominator.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);
bool is_integral(const RatVector& v);
bool is_integral(const RatMatrix& m);

// Rounds to the nearest integer, halves toward +infinity.
Integer round_nearest(const Rational& x);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
// Floor division with a positive or negative divisor.
Integer floor_div(const Integer& a, const Integer& b);

// Parses "p", "-p", or "p/q" in decimal. Returns nullopt on malformed text.
std::optional<Rational> parse_rational(std::string_view text);
std::optional<Integer> parse_integer(std::string_view text);
std::string format_rational(const Rational& x);

// Column-style Hermite normal form.
//
// h = m * u with u unimodular. The non-zero columns of h sit at the right
// end; every pivot row carries a positive pivot and all entries to the right
// of a pivot lie in [0, pivot). For a full-rank square input h is upper
// triangular.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of each nonzero column
};
HnfResult hnf(const IntMatrix& m);

// Like hnf() without the transform; returns only the rank-many nonzero
// columns (rows x rank).
IntMatrix hnf_basis(const IntMatrix& m);

// Smith normal form u * m * v = diag(d), with d_1 | d_2 | ... and d_i >= 0.
struct SnfResult {
  IntMatrix u;
  IntMatrix v;
  std::vector<Integer> diagonal;  // length min(rows, cols)
};
SnfResult snf(const IntMatrix& m);

// Fraction-free Bareiss determinant.
Integer det(const IntMatrix& m);
Rational det(const RatMatrix& m);

// Throws kSingular for singular input.
RatVector solve_linear(const RatMatrix& m, const RatVector& v);
RatMatrix inverse(const RatMatrix& m);

// Solves m * x = v for a matrix with full column rank, rows >= cols.
// Returns nullopt when the system is inconsistent.
std::optional<RatVector> solve_overdetermined(const RatMatrix& m,
                                              const RatVector& v);

// Exact LLL with delta = 3/4 on a symmetric positive definite Gram matrix.
// Returns the unimodular transform whose columns are the reduced basis
// expressed in the input basis. Throws kNotPositiveDefinite.
IntMatrix lll_reduce(const RatMatrix& gram);

// Characteristic polynomial det(x I - m), ascending coefficients, via
// Hessenberg reduction.
RatVector charpoly(const RatMatrix& m);

}  // namespace nib
