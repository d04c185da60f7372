#include "geninv/kron.hpp"

#include "geninv/error.hpp"

namespace geninv {

Matrix kronecker(const Matrix& A, const Matrix& B) {
  Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 1; i <= A.rows(); ++i) {
    for (std::size_t j = 1; j <= A.cols(); ++j) {
      const Gaussian& a = A(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 1; k <= B.rows(); ++k) {
        for (std::size_t l = 1; l <= B.cols(); ++l) {
          out((i - 1) * B.rows() + k, (j - 1) * B.cols() + l) = a * B(k, l);
        }
      }
    }
  }
  return out;
}

Matrix vec(const Matrix& X) {
  return Matrix(X.size(), 1, std::vector<Gaussian>(X.entries().begin(), X.entries().end()));
}

Matrix mat(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw DimensionError("mat: expected a " + std::to_string(rows * cols) + "x1 column, got " +
                         v.shape());
  }
  Matrix out(rows, cols);
  const VecIndexMap index(rows, cols);
  for (std::size_t k = 1; k <= index.length(); ++k) {
    const auto [i, j] = index.position(k);
    out(i, j) = v(k, 1);
  }
  return out;
}

Matrix KronSolution::solution_at(const Matrix& t) const {
  return mat(linear.solution.point(t), unknown_rows, unknown_cols);
}

bool KronSolution::contains(const Matrix& X) const {
  if (X.rows() != unknown_rows || X.cols() != unknown_cols) return false;
  return linear.solution.contains(vec(X));
}

KronSolution solve_axb_via_kron(const Matrix& A, const Matrix& B, const Matrix& C) {
  if (C.rows() != A.rows() || C.cols() != B.cols()) {
    throw DimensionError("A X B = C: C must be " + std::to_string(A.rows()) + "x" +
                         std::to_string(B.cols()) + " for A " + A.shape() + " and B " +
                         B.shape() + ", got " + C.shape());
  }
  KronSolution out;
  out.system = kronecker(A, B.transpose());
  out.rhs = vec(C);
  out.unknown_rows = A.cols();
  out.unknown_cols = B.rows();
  out.linear = solve_right(out.system, out.rhs);
  return out;
}

}  // namespace geninv
