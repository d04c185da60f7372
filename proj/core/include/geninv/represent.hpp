#pragma once

// Is a solution X of A X B = C of the form A1 C B1 for some {1}-inverses
// A1 in A{1}, B1 in B{1}?
//
// With both families written parametrically, A1(alpha) C B1(beta) - X = 0 is
// a polynomial system that is affine in alpha for fixed beta and vice versa.
// The probe eliminates it in stages:
//
//   1. solve every equation of degree <= 1 exactly (Gauss-Jordan);
//      a nonzero constant row proves infeasibility;
//   2. substitute the solved variables everywhere and repeat;
//   3. when no single equation is affine, look for affine combinations in the
//      linear span of the remaining equations;
//   4. if the system empties, every remaining parameter is free: witness;
//   5. otherwise fix one parameter group at sampled points, which leaves a
//      linear system in the other group, alternating up to a budget.
//
// Infeasibility is only ever reported from stages 1-3, whose steps are
// recorded in a replayable trace. Witnesses are re-instantiated and checked.

#include "geninv/matrix.hpp"
#include "geninv/one_inverse.hpp"
#include "geninv/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace geninv {

inline constexpr std::uint64_t kDefaultProbeSeed = 0x5eed2011;

struct ProbeBudget {
  std::uint64_t seed = kDefaultProbeSeed;
  // Sampled rounds of the alternating search.
  std::size_t rounds = 16;
  // Sampled values are p/q with |p| <= max_height, 1 <= q <= max_height.
  long max_height = 4;
};

// One step of an elimination. Every step defines the equation `equation = 0`
// at ledger position == its index in the trace.
struct EliminationStep {
  enum class Kind {
    Equation,       // system[source]
    Combination,    // sum of coefficient * ledger[index]
    Substitution,   // ledger[source] with each (variable, pivot) eliminated in order
    Contradiction,  // ledger[source] is a nonzero constant
  };

  Kind kind = Kind::Equation;
  Poly equation;
  std::string origin;
  std::size_t source = 0;
  std::vector<std::pair<std::size_t, Gaussian>> combination;
  // (variable id, ledger index of an affine equation with a nonzero
  // coefficient on that variable). The variable is replaced by the value the
  // equation forces.
  std::vector<std::pair<std::size_t, std::size_t>> eliminated;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;

  bool ends_in_contradiction() const;
  // The constant c of the final "0 = c".
  Gaussian contradiction_constant() const;
};

// Re-derives every step from `system` and checks that the final step is a
// nonzero constant.
bool replay(const EliminationTrace& trace, const std::vector<Poly>& system);

// Human-readable lines, one per step.
std::vector<std::string> render_trace(const EliminationTrace& trace, const Ring& ring);

struct BilinearSystem {
  std::vector<Poly> equations;
  std::vector<std::string> origins;
  std::set<std::size_t> left_group;
  std::set<std::size_t> right_group;

  // Throws std::logic_error unless every equation has degree <= 1 in each
  // group and no other variables.
  void check_bilinear() const;
};

struct BilinearSolution {
  Assignment values;  // every variable of both groups
};

struct ProvenInfeasible {
  EliminationTrace trace;
};

struct Unknown {
  std::string reason;
};

using BilinearVerdict = std::variant<BilinearSolution, ProvenInfeasible, Unknown>;

BilinearVerdict solve_bilinear(const BilinearSystem& system, const ProbeBudget& budget = {});

// A1(alpha) C B1(beta) for the deterministic block families of A and B.
struct SymbolicProduct {
  Ring ring;
  ParametricMatrix left;   // A1
  ParametricMatrix right;  // B1
  SymMatrix product;
};

SymbolicProduct symbolic_product(const Matrix& A, const Matrix& B, const Matrix& C);

struct Witness {
  Assignment values;
  Matrix left_inverse;
  Matrix right_inverse;
};

using RepresentabilityVerdict = std::variant<Witness, ProvenInfeasible, Unknown>;

struct ProbeResult {
  SymbolicProduct product;
  BilinearSystem system;
  RepresentabilityVerdict verdict;
};

// Throws ContractError unless A X B == C.
ProbeResult representability_probe(const Matrix& A, const Matrix& B, const Matrix& C,
                                   const Matrix& X, const ProbeBudget& budget = {});

// Same, for caller-supplied parametric families (e.g. ones entered as data).
// Both families must be {1}-inverse families of A and B respectively.
ProbeResult representability_probe(const Matrix& A, const Matrix& B, const Matrix& C,
                                   const Matrix& X, const ParametricMatrix& left,
                                   const ParametricMatrix& right, const Ring& ring,
                                   const ProbeBudget& budget = {});

std::string_view verdict_name(const RepresentabilityVerdict& verdict);

}  // namespace geninv
