#include "doctest.h"

#include "geninv/error.hpp"
#include "geninv/one_inverse.hpp"
#include "geninv/represent.hpp"
#include "support/oracles.hpp"
#include "support/worked_example.hpp"

using namespace geninv;
namespace example = geninv::testing::example;

namespace {

ParametricMatrix parametric(const SymMatrix& m, const Ring& ring, const char* const* names,
                            std::size_t count) {
  ParametricMatrix out{m, {}};
  for (std::size_t k = 0; k < count; ++k) out.parameters.push_back(*ring.find(names[k]));
  return out;
}

constexpr const char* kLeftNames[] = {"a", "b", "c", "d", "e"};
constexpr const char* kRightNames[] = {"g", "h", "p", "q", "r"};

void check_trace(const EliminationTrace& trace, const BilinearSystem& system) {
  REQUIRE(trace.ends_in_contradiction());
  REQUIRE_FALSE(trace.contradiction_constant().is_zero());
  REQUIRE(replay(trace, system.equations));
}

void check_witness(const Witness& w, const Matrix& A, const Matrix& B, const Matrix& C,
                   const Matrix& X) {
  REQUIRE(is_one_inverse(A, w.left_inverse));
  REQUIRE(is_one_inverse(B, w.right_inverse));
  REQUIRE(w.left_inverse * C * w.right_inverse == X);
}

}  // namespace

TEST_CASE("symbolic product of the reference families") {
  Ring ring;
  const SymMatrix A1 = example::reference_A1(ring);
  const SymMatrix B1 = example::reference_B1(ring);
  const SymMatrix X0 = sym_matmul(sym_matmul(A1, SymMatrix(example::C())), B1);
  const SymMatrix reference = example::reference_X0(ring);
  CHECK(X0 == reference);
  std::set<std::string> names;
  for (std::size_t v : X0.variables()) names.insert(ring.name(v));
  CHECK(names == std::set<std::string>{"c", "d", "g", "h"});

  // The hand contradiction: entry (2,2) forces g = 0, then entry (3,2)
  // reads 0 = 1.
  const Assignment g0{{ring.find("g")->id, 0}};
  CHECK(reference(2, 2).render(ring) == "-g");
  CHECK(X0(3, 2).partial_evaluate(g0) - Poly(example::X1()(3, 2)) == Poly(-1));
}

TEST_CASE("generated symbolic product") {
  const SymbolicProduct s = symbolic_product(example::A(), example::B(), example::C());
  CHECK(s.left.parameters.size() == 5);
  CHECK(s.right.parameters.size() == 5);
  CHECK(s.ring.find("u'_{1,1}").has_value());

  const SymbolicProduct id =
      symbolic_product(Matrix::identity(3), Matrix::identity(3), Matrix::identity(3));
  CHECK(id.product == SymMatrix(Matrix::identity(3)));
  CHECK(id.product.variables().empty());

  testing::Generator gen(81);
  for (int trial = 0; trial < 30; ++trial) {
    Assignment sigma;
    for (std::size_t id = 0; id < s.ring.size(); ++id) sigma[id] = gen.scalar(4, trial % 2 == 0);
    REQUIRE(s.product.evaluate(sigma) ==
            s.left.instantiate(sigma) * example::C() * s.right.instantiate(sigma));
  }
}

TEST_CASE("X1 is not of the form A1 C B1 (generated families)") {
  const ProbeResult r = representability_probe(example::A(), example::B(), example::C(), example::X1());
  REQUIRE(std::holds_alternative<ProvenInfeasible>(r.verdict));
  CHECK(verdict_name(r.verdict) == "ProvenInfeasible");
  const auto& trace = std::get<ProvenInfeasible>(r.verdict).trace;
  check_trace(trace, r.system);
  const auto lines = render_trace(trace, r.product.ring);
  REQUIRE_FALSE(lines.empty());
  CHECK(lines.back().find("0 = ") != std::string::npos);
}

TEST_CASE("X1 is not of the form A1 C B1 (reference families)") {
  Ring ring;
  const ParametricMatrix left = parametric(example::reference_A1(ring), ring, kLeftNames, 5);
  const ParametricMatrix right = parametric(example::reference_B1(ring), ring, kRightNames, 5);
  const ProbeResult r =
      representability_probe(example::A(), example::B(), example::C(), example::X1(), left, right, ring);
  REQUIRE(std::holds_alternative<ProvenInfeasible>(r.verdict));
  const auto& trace = std::get<ProvenInfeasible>(r.verdict).trace;
  check_trace(trace, r.system);
  CHECK(trace.contradiction_constant() == Gaussian(1));

  // g and h are eliminated before the contradiction.
  std::set<std::string> eliminated;
  for (const auto& step : trace.steps) {
    for (const auto& [v, idx] : step.eliminated) eliminated.insert(ring.name(v));
  }
  CHECK(eliminated.contains("g"));
  CHECK(eliminated.contains("h"));
  const auto lines = render_trace(trace, ring);
  CHECK(lines.back().ends_with("0 = 1"));
}

TEST_CASE("tampered traces do not replay") {
  const ProbeResult r = representability_probe(example::A(), example::B(), example::C(), example::X1());
  EliminationTrace trace = std::get<ProvenInfeasible>(r.verdict).trace;
  REQUIRE(trace.steps.size() >= 2);
  trace.steps.back().equation = Poly(0);
  CHECK_FALSE(replay(trace, r.system.equations));

  EliminationTrace shifted = std::get<ProvenInfeasible>(r.verdict).trace;
  shifted.steps.front().equation += Poly(1);
  CHECK_FALSE(replay(shifted, r.system.equations));
}

TEST_CASE("representable solutions yield verified witnesses") {
  const OneInverseFamily fa(example::A());
  const OneInverseFamily fb(example::B());
  const Matrix X = fa.canonical() * example::C() * fb.canonical();
  const ProbeResult r = representability_probe(example::A(), example::B(), example::C(), X);
  REQUIRE(std::holds_alternative<Witness>(r.verdict));
  check_witness(std::get<Witness>(r.verdict), example::A(), example::B(), example::C(), X);

  testing::Generator gen(82);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = gen.integer(1, 3);
    const std::size_t n = gen.integer(1, 3);
    const std::size_t p = gen.integer(1, 3);
    const std::size_t q = gen.integer(1, 3);
    const Matrix A = gen.matrix_of_rank(m, n, gen.integer(0, std::min(m, n)), 3);
    const Matrix B = gen.matrix_of_rank(p, q, gen.integer(0, std::min(p, q)), 3);
    const Matrix C = A * gen.matrix(n, p, 3) * B;
    const OneInverseFamily f(A);
    const OneInverseFamily g(B);
    auto member = [&](const OneInverseFamily& fam) {
      return fam.instantiate(gen.matrix(fam.u_shape().rows, fam.u_shape().cols, 4),
                             gen.matrix(fam.v_shape().rows, fam.v_shape().cols, 4),
                             gen.matrix(fam.w_shape().rows, fam.w_shape().cols, 4));
    };
    const Matrix Xr = member(f) * C * member(g);
    const ProbeResult pr = representability_probe(A, B, C, Xr);
    REQUIRE_FALSE(std::holds_alternative<ProvenInfeasible>(pr.verdict));
    if (const auto* w = std::get_if<Witness>(&pr.verdict)) check_witness(*w, A, B, C, Xr);
    CHECK(std::holds_alternative<Witness>(pr.verdict));
  }
}

TEST_CASE("probe rejects non-solutions and non-families") {
  CHECK_THROWS_AS(
      representability_probe(example::A(), example::B(), example::C(), Matrix::zero(3, 3)),
      ContractError);
  Ring ring;
  const ParametricMatrix left = parametric(example::reference_A1(ring), ring, kLeftNames, 5);
  const ParametricMatrix bogus{SymMatrix(Matrix::zero(2, 3)), {}};
  CHECK_THROWS_AS(representability_probe(example::A(), example::B(), example::C(), example::X1(), left,
                                         bogus, ring),
                  ContractError);
}

TEST_CASE("bilinear solver") {
  Ring ring;
  const Poly ag = parse_poly("a*g - 1", ring);
  const std::size_t a = ring.find("a")->id;
  const std::size_t g = ring.find("g")->id;

  BilinearSystem sys{{ag}, {"eq"}, {a}, {g}};
  const BilinearVerdict v = solve_bilinear(sys);
  REQUIRE(std::holds_alternative<BilinearSolution>(v));
  CHECK(ag.evaluate(std::get<BilinearSolution>(v).values).is_zero());

  // Same seed, same answer.
  const BilinearVerdict again = solve_bilinear(sys);
  CHECK(std::get<BilinearSolution>(again).values == std::get<BilinearSolution>(v).values);

  // Linear contradiction found by elimination.
  BilinearSystem bad{{parse_poly("a - 1", ring), parse_poly("a - 2", ring)}, {"x", "y"}, {a}, {g}};
  const BilinearVerdict no = solve_bilinear(bad);
  REQUIRE(std::holds_alternative<ProvenInfeasible>(no));
  CHECK(replay(std::get<ProvenInfeasible>(no).trace, bad.equations));

  // Infeasible only through a non-linear argument: the heuristic gives up.
  BilinearSystem hard{{parse_poly("a*g - 1", ring), parse_poly("a*g", ring)}, {"x", "y"}, {a}, {g}};
  const BilinearVerdict unknown = solve_bilinear(hard, ProbeBudget{1, 4, 3});
  CHECK_FALSE(std::holds_alternative<BilinearSolution>(unknown));
  if (const auto* proof = std::get_if<ProvenInfeasible>(&unknown)) {
    CHECK(replay(proof->trace, hard.equations));
  }

  BilinearSystem quadratic{{parse_poly("a^2 - 1", ring)}, {"x"}, {a}, {g}};
  CHECK_THROWS_AS(solve_bilinear(quadratic), std::logic_error);
}
