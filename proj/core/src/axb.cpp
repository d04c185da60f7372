#include "geninv/axb.hpp"

#include "geninv/kron.hpp"
#include "geninv/one_inverse.hpp"

namespace geninv {

namespace {

void require_equation_shapes(const Matrix& A, const Matrix& B, const Matrix& C) {
  if (C.rows() != A.rows() || C.cols() != B.cols()) {
    throw DimensionError("A X B = C: C must be " + std::to_string(A.rows()) + "x" +
                         std::to_string(B.cols()) + " for A " + A.shape() + " and B " +
                         B.shape() + ", got " + C.shape());
  }
}

void require_one_inverse(const Matrix& M, const Matrix& G, const char* name) {
  if (!is_one_inverse(M, G)) {
    throw ContractError(std::string(name) + " is not a {1}-inverse");
  }
}

}  // namespace

GeneralSolutionMap::GeneralSolutionMap(MatrixEquation equation, Matrix X0, Matrix L, Matrix R)
    : equation_(std::move(equation)), X0_(std::move(X0)), L_(std::move(L)), R_(std::move(R)) {
  if (!L_.is_square() || !R_.is_square() || L_.rows() != X0_.rows() ||
      R_.rows() != X0_.cols()) {
    throw DimensionError("solution map: projectors " + L_.shape() + ", " + R_.shape() +
                         " do not fit X0 " + X0_.shape());
  }
}

Matrix GeneralSolutionMap::apply(const Matrix& Y) const {
  if (Y.rows() != X0_.rows() || Y.cols() != X0_.cols()) {
    throw DimensionError("solution map expects " + X0_.shape() + ", got " + Y.shape());
  }
  return X0_ + Y - L_ * Y * R_;
}

Matrix GeneralSolutionMap::reproductivity_defect() const { return X0_ - L_ * X0_ * R_; }

bool GeneralSolutionMap::is_reproductive() const { return reproductivity_defect().is_zero(); }

Matrix consistency_residual(const Matrix& A, const Matrix& B, const Matrix& C,
                            const Matrix& A1, const Matrix& B1) {
  require_equation_shapes(A, B, C);
  require_one_inverse(A, A1, "A1");
  require_one_inverse(B, B1, "B1");
  return A * A1 * C * B1 * B - C;
}

bool consistency_check(const Matrix& A, const Matrix& B, const Matrix& C,
                       const Matrix& A1, const Matrix& B1) {
  return consistency_residual(A, B, C, A1, B1).is_zero();
}

bool consistency_check(const Matrix& A, const Matrix& B, const Matrix& C) {
  return consistency_check(A, B, C, family_from(A).canonical(), family_from(B).canonical());
}

GeneralSolutionMap penrose_general_solution(const Matrix& A, const Matrix& B, const Matrix& C) {
  return penrose_general_solution(A, B, C, family_from(A).canonical(),
                                  family_from(B).canonical());
}

GeneralSolutionMap penrose_general_solution(const Matrix& A, const Matrix& B, const Matrix& C,
                                            const Matrix& A1, const Matrix& B1) {
  Matrix residual = consistency_residual(A, B, C, A1, B1);
  if (!residual.is_zero()) {
    const std::string message = "A X B = C is inconsistent: A A1 C B1 B - C = " + to_mx(residual);
    throw InconsistentEquationError(message, std::move(residual));
  }
  return GeneralSolutionMap({A, B, C}, A1 * C * B1, A1 * A, B * B1);
}

GeneralSolutionMap shifted_general_solution(const Matrix& A, const Matrix& B, const Matrix& C,
                                            const Matrix& X0) {
  return shifted_general_solution(A, B, C, X0, family_from(A).canonical(),
                                  family_from(B).canonical());
}

GeneralSolutionMap shifted_general_solution(const Matrix& A, const Matrix& B, const Matrix& C,
                                            const Matrix& X0, const Matrix& A1,
                                            const Matrix& B1) {
  require_equation_shapes(A, B, C);
  if (X0.rows() != A.cols() || X0.cols() != B.rows()) {
    throw DimensionError("particular solution must be " + std::to_string(A.cols()) + "x" +
                         std::to_string(B.rows()) + ", got " + X0.shape());
  }
  if (A * X0 * B != C) throw ContractError("the supplied X0 does not solve A X B = C");
  require_one_inverse(A, A1, "A1");
  require_one_inverse(B, B1, "B1");
  return GeneralSolutionMap({A, B, C}, X0, A1 * A, B * B1);
}

Matrix apply(const GeneralSolutionMap& map, const Matrix& Y) { return map.apply(Y); }

bool is_reproductive(const GeneralSolutionMap& map) { return map.is_reproductive(); }

std::size_t solution_dimension(const GeneralSolutionMap& map) {
  const Matrix& L = map.left_projector();
  const Matrix& R = map.right_projector();
  const Matrix linear = Matrix::identity(L.rows() * R.rows()) - kronecker(L, R.transpose());
  return rank(linear);
}

std::string_view to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::LeftAnnihilator: return "AX=0";
    case SpecialCase::LeftIdentity: return "AX=A";
    case SpecialCase::RightAnnihilator: return "XA=0";
    case SpecialCase::RightIdentity: return "XA=A";
    case SpecialCase::InnerInverse: return "AXA=A";
  }
  return "?";
}

MatrixEquation special_equation(const Matrix& A, SpecialCase c) {
  const std::size_t n = A.rows();
  const Matrix I = Matrix::identity(n);
  const Matrix Z = Matrix::zero(n, n);
  switch (c) {
    case SpecialCase::LeftAnnihilator: return {A, I, Z};
    case SpecialCase::LeftIdentity: return {A, I, A};
    case SpecialCase::RightAnnihilator: return {I, A, Z};
    case SpecialCase::RightIdentity: return {I, A, A};
    case SpecialCase::InnerInverse: return {A, A, A};
  }
  return {A, A, A};
}

namespace {

struct SpecialParts {
  MatrixEquation equation;
  Matrix L;
  Matrix R;
  Matrix BA;
  Matrix AB;
};

SpecialParts special_parts(const Matrix& A, const Matrix& B1, SpecialCase c) {
  if (!A.is_square()) throw DimensionError("special cases need a square A, got " + A.shape());
  if (!is_one_inverse(A, B1)) throw ContractError("B1 is not a {1}-inverse of A");
  const Matrix I = Matrix::identity(A.rows());
  const Matrix BA = B1 * A;
  const Matrix AB = A * B1;
  switch (c) {
    case SpecialCase::LeftAnnihilator:
    case SpecialCase::LeftIdentity:
      return {special_equation(A, c), BA, I, BA, AB};
    case SpecialCase::RightAnnihilator:
    case SpecialCase::RightIdentity:
      return {special_equation(A, c), I, AB, BA, AB};
    case SpecialCase::InnerInverse:
      break;
  }
  return {special_equation(A, c), BA, AB, BA, AB};
}

}  // namespace

GeneralSolutionMap presic_solution(const Matrix& A, const Matrix& B1, SpecialCase c) {
  SpecialParts parts = special_parts(A, B1, c);
  const std::size_t n = A.rows();
  Matrix X0;
  switch (c) {
    case SpecialCase::LeftAnnihilator:
    case SpecialCase::RightAnnihilator: X0 = Matrix::zero(n, n); break;
    case SpecialCase::LeftIdentity:
    case SpecialCase::RightIdentity: X0 = Matrix::identity(n); break;
    case SpecialCase::InnerInverse: X0 = B1; break;
  }
  return GeneralSolutionMap(std::move(parts.equation), std::move(X0), std::move(parts.L),
                            std::move(parts.R));
}

GeneralSolutionMap haveric_solution(const Matrix& A, const Matrix& B1, SpecialCase c) {
  SpecialParts parts = special_parts(A, B1, c);
  const std::size_t n = A.rows();
  Matrix X0;
  switch (c) {
    case SpecialCase::LeftAnnihilator:
    case SpecialCase::RightAnnihilator: X0 = Matrix::zero(n, n); break;
    case SpecialCase::LeftIdentity: X0 = parts.BA; break;
    case SpecialCase::RightIdentity: X0 = parts.AB; break;
    case SpecialCase::InnerInverse: X0 = parts.BA * B1; break;
  }
  return GeneralSolutionMap(std::move(parts.equation), std::move(X0), std::move(parts.L),
                            std::move(parts.R));
}

}  // namespace geninv
