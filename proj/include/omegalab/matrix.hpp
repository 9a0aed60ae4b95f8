/**
 * Dense exact matrices and the linear algebra the rest of the library needs:
 * reduced row echelon form and nullspaces over Q, and Smith/Hermite normal
 * forms plus integer kernels over Z.
 */

#ifndef OMEGALAB_MATRIX_HPP
#define OMEGALAB_MATRIX_HPP

#include "omegalab/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace omegalab {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += (*this)(i, k) * o(k, j);
      }
    return p;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

RationalMatrix to_rational(const IntMatrix& m);

struct EchelonForm {
  RationalMatrix reduced;             // nonzero rows only, leading entries 1
  std::vector<std::size_t> pivots;    // pivot column of each row
};

EchelonForm reduced_row_echelon(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntMatrix& m);

// Rows form the reduced echelon basis of {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m);

// Some solution of m x = b, or nothing when the system is inconsistent.
bool solve(const RationalMatrix& m, const RationalVector& b, RationalVector& x);

struct SmithForm {
  std::vector<Integer> divisors;  // nonzero elementary divisors d1 | d2 | ...
  IntMatrix left;                 // unimodular, left * m * right = diag(divisors)
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form: the nonzero rows are a basis of the row
// lattice of m, upper triangular with positive pivots and reduced entries
// above each pivot.
IntMatrix hermite_row_basis(const IntMatrix& m);

// Rows form a Z-basis of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace omegalab

#endif
