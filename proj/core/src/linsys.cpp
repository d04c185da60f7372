#include "geninv/linsys.hpp"

#include "geninv/one_inverse.hpp"

namespace geninv {

Matrix AffineSolution::point(const Matrix& t) const {
  return side == Side::Right ? particular + directrix * t : particular + t * directrix;
}

bool AffineSolution::contains(const Matrix& x) const {
  if (x.rows() != particular.rows() || x.cols() != particular.cols()) return false;
  const Matrix shift = x - particular;
  if (shift.is_zero()) return true;
  if (dimension == 0) return false;
  const Matrix augmented = side == Side::Right ? Matrix::hstack(directrix, shift)
                                               : Matrix::vstack(directrix, shift);
  return rank(augmented) == dimension;
}

LinearSolution solve_right(const Matrix& A, const Matrix& c) {
  if (c.cols() != 1 || c.rows() != A.rows()) {
    throw DimensionError("right-hand side for a " + A.shape() + " system must be " +
                         std::to_string(A.rows()) + "x1, got " + c.shape());
  }
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();

  LinearSolution out;
  SolveTrace& trace = out.trace;
  trace.rnf = rank_normal_form(A);
  const std::size_t a = trace.rnf.rank;
  trace.c_prime = trace.rnf.Q * c;

  const Matrix tail = trace.c_prime.block(a + 1, 1, m - a, 1);
  trace.consistent = tail.is_zero();
  if (!trace.consistent) {
    throw InconsistentSystemError("inconsistent system: the last " + std::to_string(m - a) +
                                      " coordinates of Q c are " + to_mx(tail.transpose()),
                                  tail);
  }

  for (std::size_t j = 1; j <= a; ++j) {
    if (!trace.c_prime(j, 1).is_zero()) {
      trace.pivot_index = j;
      trace.pivot_value = trace.c_prime(j, 1);
      break;
    }
  }
  trace.homogeneous = !trace.pivot_index.has_value();
  if (trace.homogeneous) {
    trace.notes.push_back(
        "homogeneous right-hand side: particular solution 0, no V-block parametrization");
  } else if (a < n) {
    trace.notes.push_back("V column " + std::to_string(*trace.pivot_index) + " holds v_{i," +
                          std::to_string(*trace.pivot_index) + "}/(" +
                          render_scalar(trace.pivot_value) + "), the rest of V is zero");
  }

  Matrix head(n, 1);
  for (std::size_t j = 1; j <= a; ++j) head(j, 1) = trace.c_prime(j, 1);

  AffineSolution& solution = out.solution;
  solution.side = Side::Right;
  solution.particular = trace.rnf.P * head;
  solution.directrix = trace.rnf.P.block(1, a + 1, n, n - a);
  solution.dimension = n - a;
  return out;
}

LinearSolution solve_left(const Matrix& B, const Matrix& c) {
  if (c.rows() != 1 || c.cols() != B.cols()) {
    throw DimensionError("right-hand side of x B = c for B " + B.shape() + " must be 1x" +
                         std::to_string(B.cols()) + ", got " + c.shape());
  }
  LinearSolution out = solve_right(B.transpose(), c.transpose());
  out.solution.side = Side::Left;
  out.solution.particular = out.solution.particular.transpose();
  out.solution.directrix = out.solution.directrix.transpose();
  return out;
}

Matrix general_inverse_solution(const Matrix& A, const Matrix& c, const Matrix& V) {
  // Consistency (and the c shape) are checked by the full construction.
  solve_right(A, c);
  const OneInverseFamily family(A);
  const Matrix G = family.instantiate(Matrix::zero(family.u_shape().rows, family.u_shape().cols),
                                      V,
                                      Matrix::zero(family.w_shape().rows, family.w_shape().cols));
  return G * c;
}

Matrix parametrizing_block(const SolveTrace& trace, const Matrix& target) {
  if (!trace.pivot_index) {
    throw ContractError("the V-block parametrization needs a non-homogeneous system");
  }
  const std::size_t n = trace.rnf.P.rows();
  const std::size_t a = trace.rnf.rank;
  if (target.rows() != n - a || target.cols() != 1) {
    throw DimensionError("target must be " + std::to_string(n - a) + "x1, got " +
                         target.shape());
  }
  Matrix V(n - a, a);
  const Gaussian scale = trace.pivot_value.inverse();
  for (std::size_t i = 1; i <= n - a; ++i) V(i, *trace.pivot_index) = target(i, 1) * scale;
  return V;
}

}  // namespace geninv
