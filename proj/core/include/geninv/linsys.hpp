#pragma once

// General solutions of consistent linear systems A x = c (x a column) and
// x B = c (x a row) obtained from a single {1}-inverse in block form.
//
// For A x = c with Q A P = E_a, let c' = Q c. The system is consistent iff
// the last m - a coordinates of c' vanish, and then
//
//   x = P [[I, U], [V, W]] Q c = P [c'_1 .. c'_a, tau_1 .. tau_{n-a}]^T,
//   tau_i = sum_k c'_k v_{i,k}.
//
// Choosing V with a single nonzero column j (c'_j != 0) holding
// v_{i,j} / c'_j makes tau_i = v_{i,j}, so the n - a entries of that column
// sweep the affine solution set freely.

#include "geninv/error.hpp"
#include "geninv/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace geninv {

enum class Side {
  Right,  // A x = c, x a column
  Left,   // x B = c, x a row
};

struct AffineSolution {
  Side side = Side::Right;
  // n x 1 (Right) or 1 x m (Left).
  Matrix particular;
  // Right: n x d matrix whose columns span the homogeneous solutions.
  // Left:  d x m matrix whose rows span them.
  Matrix directrix;
  std::size_t dimension = 0;

  // particular + directrix * t (Right) or particular + t * directrix (Left).
  Matrix point(const Matrix& t) const;
  // Exact membership: x - particular lies in the span of the directrix.
  bool contains(const Matrix& x) const;
};

// Steps of the construction for A x = c (for the Left side: of the
// transposed system).
struct SolveTrace {
  RankNormalForm rnf;
  Matrix c_prime;  // Q c
  bool consistent = false;
  bool homogeneous = false;
  // Smallest j with c'_j != 0 (1-based), absent for c = 0.
  std::optional<std::size_t> pivot_index;
  Gaussian pivot_value;
  std::vector<std::string> notes;
};

struct LinearSolution {
  AffineSolution solution;
  SolveTrace trace;
};

// Thrown for an inconsistent system; carries the nonzero tail of c' = Q c.
class InconsistentSystemError : public Error {
public:
  InconsistentSystemError(const std::string& what, Matrix tail)
      : Error(what), tail_(std::move(tail)) {}
  const Matrix& tail() const { return tail_; }

private:
  Matrix tail_;
};

// A x = c. Throws DimensionError unless c is an m x 1 column,
// InconsistentSystemError if no solution exists.
LinearSolution solve_right(const Matrix& A, const Matrix& c);

// x B = c, through solve_right on (B^T, c^T). c must be 1 x n for B m x n.
LinearSolution solve_left(const Matrix& B, const Matrix& c);

// x = P [[I, 0], [V, 0]] Q c for the (n-a) x a block V; the U and W blocks
// multiply the zero tail of c' and are irrelevant, so they are fixed to zero.
Matrix general_inverse_solution(const Matrix& A, const Matrix& c, const Matrix& V);

// The V block with one nonzero column (trace.pivot_index) holding
// target_i / c'_j, so that general_inverse_solution returns
// particular + directrix * target. Requires a non-homogeneous trace.
Matrix parametrizing_block(const SolveTrace& trace, const Matrix& target);

}  // namespace geninv
