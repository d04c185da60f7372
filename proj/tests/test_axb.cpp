#include "doctest.h"

#include "geninv/axb.hpp"
#include "geninv/error.hpp"
#include "geninv/kron.hpp"
#include "geninv/one_inverse.hpp"
#include "support/oracles.hpp"
#include "support/worked_example.hpp"

#include <functional>

using namespace geninv;
namespace example = geninv::testing::example;

namespace {

Matrix random_member(testing::Generator& gen, const Matrix& A) {
  const OneInverseFamily f(A);
  return f.instantiate(gen.matrix(f.u_shape().rows, f.u_shape().cols, 4),
                       gen.matrix(f.v_shape().rows, f.v_shape().cols, 4),
                       gen.matrix(f.w_shape().rows, f.w_shape().cols, 4));
}

// Three independent readings of reproductivity must agree.
void check_reproductivity_agreement(const GeneralSolutionMap& g, testing::Generator& gen) {
  const Matrix& X0 = g.particular();
  const bool fixed = X0 == g.left_projector() * X0 * g.right_projector();
  bool idempotent = true;
  for (int s = 0; s < 5; ++s) {
    const Matrix Y = gen.matrix(X0.rows(), X0.cols(), 5);
    if (g(g(Y)) != g(Y)) idempotent = false;
  }
  REQUIRE(g.is_reproductive() == fixed);
  REQUIRE(g.is_reproductive() == idempotent);
  REQUIRE(g.reproductivity_defect().is_zero() == fixed);
}

void check_projectors(const GeneralSolutionMap& g) {
  const Matrix& L = g.left_projector();
  const Matrix& R = g.right_projector();
  REQUIRE(L * L == L);
  REQUIRE(R * R == R);
}

}  // namespace

TEST_CASE("consistency verdicts") {
  CHECK(consistency_check(example::A(), example::B(), example::C()));
  CHECK(consistency_check(example::A(), example::B(), Matrix::zero(3, 2)));
  CHECK_FALSE(consistency_check(Matrix{{1, 0}, {0, 0}}, Matrix::identity(2),
                                Matrix{{0, 0}, {0, 1}}));
  CHECK_THROWS_AS(consistency_check(example::A(), example::B(), example::C(), Matrix::zero(3, 3),
                                    family_from(example::B()).canonical()),
                  ContractError);
}

TEST_CASE("consistency verdict does not depend on the chosen inverses") {
  testing::Generator gen(71);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = gen.integer(1, 4);
    const std::size_t n = gen.integer(1, 4);
    const std::size_t p = gen.integer(1, 4);
    const std::size_t q = gen.integer(1, 4);
    const Matrix A = gen.matrix_of_rank(m, n, gen.integer(0, std::min(m, n)), 3);
    const Matrix B = gen.matrix_of_rank(p, q, gen.integer(0, std::min(p, q)), 3);
    const Matrix C = trial % 2 == 0 ? A * gen.matrix(n, p, 3) * B : gen.matrix(m, q, 3);
    const bool canonical = consistency_check(A, B, C);
    REQUIRE(consistency_check(A, B, C, random_member(gen, A), random_member(gen, B)) ==
            canonical);
    REQUIRE(canonical == testing::rref_solve(kronecker(A, B.transpose()), vec(C)).has_value());
  }
}

TEST_CASE("penrose solution of the worked example") {
  const GeneralSolutionMap g = penrose_general_solution(example::A(), example::B(), example::C());
  const Matrix expected{{-1, 0, 0}, {-1, 0, 0}, {0, 0, 0}};
  CHECK(g.particular() == expected);
  CHECK(g.is_reproductive());
  CHECK(g(Matrix::zero(3, 3)) == expected);
  CHECK(g(g.particular()) == g.particular());
  CHECK(g.left_projector() * g.particular() * g.right_projector() == g.particular());

  // Agrees with the reference X0 at the canonical point.
  Ring ring;
  const SymMatrix X0 = example::reference_X0(ring);
  Assignment zero;
  for (std::size_t id = 0; id < ring.size(); ++id) zero[id] = 0;
  CHECK(X0.evaluate(zero) == expected);
  CHECK(solution_dimension(g) == 7);
}

TEST_CASE("penrose solution of trivial equations") {
  const GeneralSolutionMap id =
      penrose_general_solution(Matrix::identity(2), Matrix::identity(2), Matrix::identity(2));
  CHECK(id.particular() == Matrix::identity(2));
  CHECK(id.left_projector() == Matrix::identity(2));
  CHECK(id.right_projector() == Matrix::identity(2));
  CHECK(id(Matrix{{5, 6}, {7, 8}}) == Matrix::identity(2));

  const GeneralSolutionMap hom = penrose_general_solution(example::A(), example::B(), Matrix::zero(3, 2));
  CHECK(hom.particular().is_zero());
  CHECK(hom.is_reproductive());

  try {
    penrose_general_solution(Matrix{{1, 0}, {0, 0}}, Matrix::identity(2), Matrix{{0, 0}, {0, 1}});
    FAIL("expected InconsistentEquationError");
  } catch (const InconsistentEquationError& e) {
    CHECK(e.residual() == Matrix{{0, 0}, {0, -1}});
  }
}

TEST_CASE("shifted solution around X1") {
  const GeneralSolutionMap g =
      shifted_general_solution(example::A(), example::B(), example::C(), example::X1());
  CHECK_FALSE(g.is_reproductive());
  CHECK_FALSE(is_reproductive(g));
  CHECK(apply(g, Matrix::zero(3, 3)) == example::X1());
  CHECK_THROWS_AS(shifted_general_solution(example::A(), example::B(), example::C(), Matrix::zero(3, 3)),
                  ContractError);
  CHECK_THROWS_AS(g(Matrix::zero(2, 2)), DimensionError);

  testing::Generator gen(72);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix Y = gen.matrix(3, 3, 6, trial % 2 == 0);
    REQUIRE(example::A() * g(Y) * example::B() == example::C());
    // g(g(Y)) = g(Y) + (X0 - L X0 R).
    REQUIRE(g(g(Y)) == g(Y) + g.reproductivity_defect());
  }

  const GeneralSolutionMap p = penrose_general_solution(example::A(), example::B(), example::C());
  const GeneralSolutionMap same =
      shifted_general_solution(example::A(), example::B(), example::C(), p.particular());
  CHECK(same.is_reproductive());
  CHECK(same.particular() == p.particular());
  CHECK(same.left_projector() == p.left_projector());
  CHECK(same.right_projector() == p.right_projector());
}

TEST_CASE("general solution maps on random equations") {
  testing::Generator gen(73);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = gen.integer(1, 4);
    const std::size_t n = gen.integer(1, 4);
    const std::size_t p = gen.integer(1, 4);
    const std::size_t q = gen.integer(1, 4);
    const Matrix A = gen.matrix_of_rank(m, n, gen.integer(0, std::min(m, n)), 3);
    const Matrix B = gen.matrix_of_rank(p, q, gen.integer(0, std::min(p, q)), 3);
    const Matrix Xs = gen.matrix(n, p, 3);
    const Matrix C = A * Xs * B;
    const Matrix A1 = random_member(gen, A);
    const Matrix B1 = random_member(gen, B);

    const GeneralSolutionMap pen = penrose_general_solution(A, B, C, A1, B1);
    const GeneralSolutionMap shift = shifted_general_solution(A, B, C, Xs, A1, B1);
    for (const auto* g : {&pen, &shift}) {
      check_projectors(*g);
      check_reproductivity_agreement(*g, gen);
      const Matrix Y = gen.matrix(n, p, 5);
      REQUIRE(A * (*g)(Y) * B == C);
    }
    REQUIRE(pen.is_reproductive());
    REQUIRE(pen.particular() == A1 * C * B1);
    // Every solution is fixed by the reproductive map.
    REQUIRE(pen(Xs) == Xs);
    const Matrix xs = shift(gen.matrix(n, p, 5));
    REQUIRE(pen(xs) == xs);
    // The shifted map reaches Xs' = pen(Y) via Z = Y - X0 + A1 C B1.
    const Matrix Y = gen.matrix(n, p, 5);
    REQUIRE(shift(Y - shift.particular() + pen.particular()) == pen(Y));
  }
}

TEST_CASE("grid completeness for small equations") {
  // Enumerate all 2x2 X with entries in {-1, 0, 1}; every solution on the
  // grid must be fixed by the reproductive map, and every map output solves.
  testing::Generator gen(74);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix A = gen.matrix_of_rank(2, 2, gen.integer(0, 2), 2);
    const Matrix B = gen.matrix_of_rank(2, 2, gen.integer(0, 2), 2);
    Matrix seed(2, 2);
    for (std::size_t k = 0; k < 4; ++k) seed(k / 2 + 1, k % 2 + 1) = gen.integer(-1, 1);
    const Matrix C = A * seed * B;
    const GeneralSolutionMap g = penrose_general_solution(A, B, C);
    std::size_t found = 0;
    for (int code = 0; code < 81; ++code) {
      Matrix X(2, 2);
      int rest = code;
      for (std::size_t k = 0; k < 4; ++k, rest /= 3) X(k / 2 + 1, k % 2 + 1) = rest % 3 - 1;
      REQUIRE(A * g(X) * B == C);
      if (A * X * B == C) {
        ++found;
        REQUIRE(g(X) == X);
      }
    }
    REQUIRE(found >= 1);
  }
}

TEST_CASE("special cases as equations") {
  const Matrix A = example::A();
  CHECK(to_string(SpecialCase::InnerInverse) == "AXA=A");
  CHECK(to_string(SpecialCase::LeftAnnihilator) == "AX=0");
  const MatrixEquation e = special_equation(A, SpecialCase::RightIdentity);
  CHECK(e.A == Matrix::identity(3));
  CHECK(e.B == A);
  CHECK(e.C == A);
}

TEST_CASE("non-reproductive and reproductive special-case forms") {
  const Matrix A = example::A();
  const Matrix B1 = family_from(A).canonical();
  const Matrix I = Matrix::identity(3);

  const GeneralSolutionMap p2 = presic_solution(A, B1, SpecialCase::LeftIdentity);
  CHECK(p2.particular() == I);
  CHECK(p2.left_projector() == B1 * A);
  CHECK(p2.right_projector() == I);
  const GeneralSolutionMap p5 = presic_solution(A, B1, SpecialCase::InnerInverse);
  CHECK(p5(Matrix::zero(3, 3)) == B1);
  CHECK(is_one_inverse(A, p5(Matrix::zero(3, 3))));

  const GeneralSolutionMap h2 = haveric_solution(A, B1, SpecialCase::LeftIdentity);
  CHECK(h2.particular() == B1 * A);
  CHECK(h2.is_reproductive());
  const GeneralSolutionMap h5 = haveric_solution(A, B1, SpecialCase::InnerInverse);
  CHECK(h5.particular() == B1 * A * B1);
  CHECK(h5.is_reproductive());

  for (const SpecialCase c : {SpecialCase::LeftAnnihilator, SpecialCase::RightAnnihilator}) {
    const GeneralSolutionMap p = presic_solution(A, B1, c);
    const GeneralSolutionMap h = haveric_solution(A, B1, c);
    CHECK(p.particular() == h.particular());
    CHECK(p.left_projector() == h.left_projector());
    CHECK(p.right_projector() == h.right_projector());
  }

  // Regular A: AX = A has the unique solution I.
  const Matrix R{{2, 1}, {1, 1}};
  const GeneralSolutionMap unique =
      presic_solution(R, inverse_regular(R), SpecialCase::LeftIdentity);
  CHECK(unique.left_projector() == Matrix::identity(2));
  CHECK(unique(Matrix{{4, 5}, {6, 7}}) == Matrix::identity(2));

  CHECK_THROWS_AS(presic_solution(example::B(), Matrix::zero(2, 3), SpecialCase::InnerInverse),
                  DimensionError);
  CHECK_THROWS_AS(haveric_solution(A, Matrix::zero(3, 3), SpecialCase::InnerInverse),
                  ContractError);
}

TEST_CASE("special-case families on random square matrices") {
  testing::Generator gen(75);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.integer(1, 4);
    const Matrix A = gen.matrix_of_rank(n, n, gen.integer(0, n), 4);
    const Matrix B1 = random_member(gen, A);
    for (const SpecialCase c : kAllSpecialCases) {
      const MatrixEquation e = special_equation(A, c);
      const GeneralSolutionMap p = presic_solution(A, B1, c);
      const GeneralSolutionMap h = haveric_solution(A, B1, c);
      check_projectors(p);
      check_projectors(h);
      REQUIRE(h.is_reproductive());
      check_reproductivity_agreement(p, gen);
      for (int s = 0; s < 3; ++s) {
        const Matrix Y = gen.matrix(n, n, 5);
        const Matrix xp = p(Y);
        const Matrix xh = h(Y);
        REQUIRE(e.is_solved_by(xp));
        REQUIRE(e.is_solved_by(xh));
        // The reproductive map fixes every solution, including the other
        // map's outputs.
        REQUIRE(h(xp) == xp);
        REQUIRE(h(xh) == xh);
        if (c != SpecialCase::InnerInverse) {
          // With one projector equal to I, Y' = X - X0_P reaches X.
          REQUIRE(p(xh - p.particular()) == xh);
        }
      }
    }
  }
}
