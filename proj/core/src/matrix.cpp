#include "geninv/matrix.hpp"

#include "geninv/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace geninv {

namespace {

void require_same_shape(const Matrix& lhs, const Matrix& rhs, const char* op) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + lhs.shape() +
                         " vs " + rhs.shape());
  }
}

// Row-reduce `work` in place to reduced row echelon form, mirroring every row
// operation on `track` (which must have the same number of rows). Returns the
// pivot columns (1-based) in order.
std::vector<std::size_t> reduce_rows(Matrix& work, Matrix* track) {
  std::vector<std::size_t> pivots;
  std::size_t row = 1;
  for (std::size_t col = 1; col <= work.cols() && row <= work.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot <= work.rows() && work(pivot, col).is_zero()) ++pivot;
    if (pivot > work.rows()) continue;

    if (pivot != row) {
      for (std::size_t j = 1; j <= work.cols(); ++j) std::swap(work(pivot, j), work(row, j));
      if (track) {
        for (std::size_t j = 1; j <= track->cols(); ++j) {
          std::swap((*track)(pivot, j), (*track)(row, j));
        }
      }
    }

    const Gaussian scale = work(row, col).inverse();
    if (!scale.is_one()) {
      for (std::size_t j = 1; j <= work.cols(); ++j) work(row, j) *= scale;
      if (track) {
        for (std::size_t j = 1; j <= track->cols(); ++j) (*track)(row, j) *= scale;
      }
    }

    for (std::size_t i = 1; i <= work.rows(); ++i) {
      if (i == row || work(i, col).is_zero()) continue;
      const Gaussian factor = work(i, col);
      for (std::size_t j = 1; j <= work.cols(); ++j) {
        if (!work(row, j).is_zero()) work(i, j) -= factor * work(row, j);
      }
      if (track) {
        for (std::size_t j = 1; j <= track->cols(); ++j) {
          if (!(*track)(row, j).is_zero()) (*track)(i, j) -= factor * (*track)(row, j);
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Gaussian> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix of shape " + shape() + " needs " +
                         std::to_string(rows_ * cols_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Gaussian>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) { return rank_normal(n, n, n); }

Matrix Matrix::column(std::vector<Gaussian> entries) {
  const std::size_t n = entries.size();
  return Matrix(n, 1, std::move(entries));
}

Matrix Matrix::row(std::vector<Gaussian> entries) {
  const std::size_t n = entries.size();
  return Matrix(1, n, std::move(entries));
}

Matrix Matrix::rank_normal(std::size_t rows, std::size_t cols, std::size_t rank) {
  if (rank > std::min(rows, cols)) {
    throw DimensionError("rank " + std::to_string(rank) + " exceeds the shape " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
  Matrix E(rows, cols);
  for (std::size_t k = 1; k <= rank; ++k) E(k, k) = 1;
  return E;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Gaussian& x) { return x.is_zero(); });
}

const Gaussian& Matrix::at(std::size_t row, std::size_t col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) {
    throw DimensionError("index (" + std::to_string(row) + "," + std::to_string(col) +
                         ") outside " + shape());
  }
  return (*this)(row, col);
}

Matrix Matrix::block(std::size_t first_row, std::size_t first_col, std::size_t rows,
                     std::size_t cols) const {
  if (rows > 0 && cols > 0 &&
      (first_row < 1 || first_col < 1 || first_row + rows - 1 > rows_ ||
       first_col + cols - 1 > cols_)) {
    throw DimensionError("block outside " + shape());
  }
  Matrix out(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) {
      out(i, j) = (*this)(first_row + i - 1, first_col + j - 1);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t j = 1; j <= cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows()) {
    throw DimensionError("hstack: row counts differ " + lhs.shape() + " vs " + rhs.shape());
  }
  Matrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t i = 1; i <= out.rows(); ++i) {
    for (std::size_t j = 1; j <= lhs.cols(); ++j) out(i, j) = lhs(i, j);
    for (std::size_t j = 1; j <= rhs.cols(); ++j) out(i, lhs.cols() + j) = rhs(i, j);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw DimensionError("vstack: column counts differ " + top.shape() + " vs " +
                         bottom.shape());
  }
  std::vector<Gaussian> entries(top.entries().begin(), top.entries().end());
  entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.entries_) x = -x;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Gaussian& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("multiply: inner dimensions differ " + lhs.shape() + " * " +
                         rhs.shape());
  }
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 1; i <= lhs.rows(); ++i) {
    for (std::size_t k = 1; k <= lhs.cols(); ++k) {
      const Gaussian& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 1; j <= rhs.cols(); ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

std::string Matrix::shape() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

RankNormalForm rank_normal_form(const Matrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();

  Matrix reduced = A;
  Matrix Q = Matrix::identity(m);
  const std::vector<std::size_t> pivots = reduce_rows(reduced, &Q);
  const std::size_t a = pivots.size();

  // Column permutation moving pivot columns to the front (stable order).
  std::vector<std::size_t> order = pivots;
  for (std::size_t j = 1; j <= n; ++j) {
    if (!std::binary_search(pivots.begin(), pivots.end(), j)) order.push_back(j);
  }

  // reduced * Perm = [[I_a, N], [0, 0]]; clearing N with column operations
  // gives P = Perm * [[I_a, -N], [0, I]].
  Matrix P(n, n);
  for (std::size_t k = 1; k <= n; ++k) P(order[k - 1], k) = 1;
  for (std::size_t k = a + 1; k <= n; ++k) {
    const std::size_t source = order[k - 1];
    for (std::size_t r = 1; r <= a; ++r) {
      const Gaussian& coeff = reduced(r, source);
      if (!coeff.is_zero()) P(order[r - 1], k) -= coeff;
    }
  }
  return {std::move(Q), std::move(P), a};
}

std::size_t rank(const Matrix& A) {
  Matrix work = A;
  return reduce_rows(work, nullptr).size();
}

Matrix inverse_regular(const Matrix& M) {
  if (!M.is_square()) throw DimensionError("inverse of non-square matrix " + M.shape());
  Matrix work = M;
  Matrix inverse = Matrix::identity(M.rows());
  if (reduce_rows(work, &inverse).size() != M.rows()) {
    throw SingularMatrixError("matrix of shape " + M.shape() + " is singular");
  }
  return inverse;
}

Gaussian determinant(const Matrix& M) {
  if (!M.is_square()) throw DimensionError("determinant of non-square matrix " + M.shape());
  Matrix work = M;
  const std::size_t n = M.rows();
  Gaussian det = 1;
  for (std::size_t col = 1; col <= n; ++col) {
    std::size_t pivot = col;
    while (pivot <= n && work(pivot, col).is_zero()) ++pivot;
    if (pivot > n) return 0;
    if (pivot != col) {
      for (std::size_t j = 1; j <= n; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    const Gaussian inv = work(col, col).inverse();
    for (std::size_t i = col + 1; i <= n; ++i) {
      if (work(i, col).is_zero()) continue;
      const Gaussian factor = work(i, col) * inv;
      for (std::size_t j = col; j <= n; ++j) work(i, j) -= factor * work(col, j);
    }
  }
  return det;
}

std::string to_mx(const Matrix& A) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 1; i <= A.rows(); ++i) {
    if (i > 1) out << " ;";
    for (std::size_t j = 1; j <= A.cols(); ++j) out << ' ' << render_scalar(A(i, j));
  }
  out << " ]";
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Matrix& A) { return out << to_mx(A); }

}  // namespace geninv
