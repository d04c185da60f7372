#pragma once

// Consistency and general solutions of A X B = C.
//
// With {1}-inverses A1 of A and B1 of B the equation is solvable iff
// A A1 C B1 B = C, and then every solution is
//
//   X = g(Y) = X0 + Y - L Y R,   L = A1 A,  R = B B1,
//
// for any particular solution X0 and arbitrary Y. g is idempotent exactly
// when X0 = L X0 R, i.e. when X0 = A1 C B1 for the chosen inverses: then
// g(g(Y)) = g(Y) and g reproduces its own solutions. For other X0,
// g(g(Y)) = g(Y) + (X0 - L X0 R).

#include "geninv/error.hpp"
#include "geninv/matrix.hpp"

#include <cstddef>
#include <string_view>

namespace geninv {

struct MatrixEquation {
  Matrix A;
  Matrix B;
  Matrix C;

  bool is_solved_by(const Matrix& X) const { return A * X * B == C; }
};

class GeneralSolutionMap {
public:
  GeneralSolutionMap(MatrixEquation equation, Matrix X0, Matrix L, Matrix R);

  const MatrixEquation& equation() const { return equation_; }
  const Matrix& particular() const { return X0_; }
  const Matrix& left_projector() const { return L_; }
  const Matrix& right_projector() const { return R_; }

  // X0 + Y - L Y R. Throws DimensionError unless Y has X0's shape.
  Matrix apply(const Matrix& Y) const;
  Matrix operator()(const Matrix& Y) const { return apply(Y); }

  // X0 == L X0 R, equivalently g o g == g.
  bool is_reproductive() const;
  // X0 - L X0 R; zero iff reproductive.
  Matrix reproductivity_defect() const;

private:
  MatrixEquation equation_;
  Matrix X0_;
  Matrix L_;
  Matrix R_;
};

// Thrown when A X B = C has no solution; carries A A1 C B1 B - C.
class InconsistentEquationError : public Error {
public:
  InconsistentEquationError(const std::string& what, Matrix residual)
      : Error(what), residual_(std::move(residual)) {}
  const Matrix& residual() const { return residual_; }

private:
  Matrix residual_;
};

// A A1 C B1 B - C. Throws ContractError unless A1 in A{1} and B1 in B{1}.
Matrix consistency_residual(const Matrix& A, const Matrix& B, const Matrix& C,
                            const Matrix& A1, const Matrix& B1);

bool consistency_check(const Matrix& A, const Matrix& B, const Matrix& C,
                       const Matrix& A1, const Matrix& B1);

// Uses the canonical (zero-block) {1}-inverses.
bool consistency_check(const Matrix& A, const Matrix& B, const Matrix& C);

// X0 = A1 C B1. The canonical overload uses zero-block inverses.
GeneralSolutionMap penrose_general_solution(const Matrix& A, const Matrix& B, const Matrix& C);
GeneralSolutionMap penrose_general_solution(const Matrix& A, const Matrix& B, const Matrix& C,
                                            const Matrix& A1, const Matrix& B1);

// General solution around a caller-supplied particular solution X0.
// Throws ContractError if A X0 B != C.
GeneralSolutionMap shifted_general_solution(const Matrix& A, const Matrix& B, const Matrix& C,
                                            const Matrix& X0);
GeneralSolutionMap shifted_general_solution(const Matrix& A, const Matrix& B, const Matrix& C,
                                            const Matrix& X0, const Matrix& A1,
                                            const Matrix& B1);

Matrix apply(const GeneralSolutionMap& map, const Matrix& Y);
bool is_reproductive(const GeneralSolutionMap& map);

// rank(I - L (x) R^T): the dimension of the solution set {g(Y)}.
std::size_t solution_dimension(const GeneralSolutionMap& map);

// The five square special cases; each is A X B = C for particular A, B, C.
enum class SpecialCase {
  LeftAnnihilator,   // A X = 0
  LeftIdentity,      // A X = A
  RightAnnihilator,  // X A = 0
  RightIdentity,     // X A = A
  InnerInverse,      // A X A = A
};

inline constexpr SpecialCase kAllSpecialCases[] = {
    SpecialCase::LeftAnnihilator, SpecialCase::LeftIdentity, SpecialCase::RightAnnihilator,
    SpecialCase::RightIdentity, SpecialCase::InnerInverse};

std::string_view to_string(SpecialCase c);

// The equation a special case stands for, as A X B = C.
MatrixEquation special_equation(const Matrix& A, SpecialCase c);

// Non-reproductive forms: X0 in {0, I, 0, I, B1} with (L, R) in
// {(B1 A, I), (B1 A, I), (I, A B1), (I, A B1), (B1 A, A B1)}.
// Throws DimensionError for non-square A, ContractError unless B1 in A{1}.
GeneralSolutionMap presic_solution(const Matrix& A, const Matrix& B1, SpecialCase c);

// Reproductive forms: same projectors, X0 in {0, B1 A, 0, A B1, B1 A B1}.
GeneralSolutionMap haveric_solution(const Matrix& A, const Matrix& B1, SpecialCase c);

}  // namespace geninv
