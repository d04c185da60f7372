#pragma once

// Kronecker products and the row-major vec / mat operators. With rows of X
// stacked into one column, vec(A X B) = (A (x) B^T) vec(X), which turns
// A X B = C into an ordinary linear system.

#include "geninv/linsys.hpp"
#include "geninv/matrix.hpp"

#include <cstddef>
#include <utility>

namespace geninv {

// Position bookkeeping for vec/mat on m x n matrices, all 1-based:
// (i, j) <-> (i - 1) n + j.
class VecIndexMap {
public:
  VecIndexMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t length() const { return rows_ * cols_; }
  std::size_t linear(std::size_t row, std::size_t col) const { return (row - 1) * cols_ + col; }
  // (ceil(k / n), ((k - 1) mod n) + 1)
  std::pair<std::size_t, std::size_t> position(std::size_t k) const {
    return {(k - 1) / cols_ + 1, (k - 1) % cols_ + 1};
  }

private:
  std::size_t rows_;
  std::size_t cols_;
};

// Block (i, j) of the result is a_{i,j} B.
Matrix kronecker(const Matrix& A, const Matrix& B);

// Row-major flattening into an (m n) x 1 column.
Matrix vec(const Matrix& X);

// Inverse of vec. Throws DimensionError unless v is an (rows cols) x 1 column.
Matrix mat(const Matrix& v, std::size_t rows, std::size_t cols);

struct KronSolution {
  Matrix system;  // A (x) B^T
  Matrix rhs;     // vec(C)
  std::size_t unknown_rows = 0;  // shape of X
  std::size_t unknown_cols = 0;
  LinearSolution linear;  // over vec(X)

  // A member of the solution set as a matrix.
  Matrix solution_at(const Matrix& t) const;
  bool contains(const Matrix& X) const;
};

// Solves A X B = C through (A (x) B^T) vec(X) = vec(C). Propagates
// InconsistentSystemError; throws DimensionError on incompatible shapes.
KronSolution solve_axb_via_kron(const Matrix& A, const Matrix& B, const Matrix& C);

}  // namespace geninv
