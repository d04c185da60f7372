#pragma once

#include "geninv/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace geninv {

// Dense row-major matrix over the Gaussian rationals.
//
// Element access is 1-based: A(1, 1) is the top-left entry. Zero-sized
// matrices are allowed so that empty blocks (e.g. the U block of a
// full-row-rank matrix) compose without special cases.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  // Throws DimensionError if entries.size() != rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Gaussian> entries);
  // Row-wise literal; ragged rows throw DimensionError.
  Matrix(std::initializer_list<std::initializer_list<Gaussian>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(std::vector<Gaussian> entries);
  static Matrix row(std::vector<Gaussian> entries);
  // E_a: the rows x cols matrix with I_a in the top-left corner.
  static Matrix rank_normal(std::size_t rows, std::size_t cols, std::size_t rank);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }
  bool is_zero() const;

  Gaussian& operator()(std::size_t row, std::size_t col) {
    return entries_[(row - 1) * cols_ + (col - 1)];
  }
  const Gaussian& operator()(std::size_t row, std::size_t col) const {
    return entries_[(row - 1) * cols_ + (col - 1)];
  }
  // Bounds-checked; throws DimensionError.
  const Gaussian& at(std::size_t row, std::size_t col) const;

  std::span<const Gaussian> entries() const { return entries_; }

  // Sub-matrix of shape rows x cols whose top-left entry is (first_row, first_col).
  Matrix block(std::size_t first_row, std::size_t first_col, std::size_t rows,
               std::size_t cols) const;
  Matrix transpose() const;

  // [lhs | rhs] and [top ; bottom].
  static Matrix hstack(const Matrix& lhs, const Matrix& rhs);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Gaussian& scalar);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const Gaussian& scalar) { return lhs *= scalar; }
  friend Matrix operator*(const Gaussian& scalar, Matrix rhs) { return rhs *= scalar; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

  // "3x2"
  std::string shape() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gaussian> entries_;
};

// Q * A * P == E_a with Q (m x m) and P (n x n) regular and a = rank(A).
struct RankNormalForm {
  Matrix Q;
  Matrix P;
  std::size_t rank = 0;
};

// Deterministic: row operations use the topmost nonzero pivot of each column,
// scanning columns left to right, and are accumulated into Q; the column
// permutation and column eliminations are accumulated into P.
RankNormalForm rank_normal_form(const Matrix& A);

std::size_t rank(const Matrix& A);

// Throws DimensionError for non-square input, SingularMatrixError if singular.
Matrix inverse_regular(const Matrix& M);

Gaussian determinant(const Matrix& M);

// Bracketed text form used by .mx files: "[ 1 2 ; 3 4 ]".
std::string to_mx(const Matrix& A);

std::ostream& operator<<(std::ostream& out, const Matrix& A);

}  // namespace geninv
