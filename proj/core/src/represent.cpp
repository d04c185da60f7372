#include "geninv/represent.hpp"

#include "geninv/error.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace geninv {

bool EliminationTrace::ends_in_contradiction() const {
  return !steps.empty() && steps.back().kind == EliminationStep::Kind::Contradiction;
}

Gaussian EliminationTrace::contradiction_constant() const {
  if (!ends_in_contradiction()) throw ContractError("trace does not end in a contradiction");
  // p = 0 with p constant reads 0 = -p.
  return -steps.back().equation.constant_term();
}

namespace {

using Step = EliminationStep;
using Combination = std::map<std::size_t, Gaussian>;

struct Solved {
  std::size_t variable;
  Poly replacement;
};

enum class Outcome { Contradiction, Solved, Stuck };

// Staged linear elimination over a polynomial system, recording every
// derived equation in a ledger (the trace).
class StagedEliminator {
public:
  StagedEliminator(const std::vector<Poly>& system, const std::vector<std::string>& origins) {
    for (std::size_t k = 0; k < system.size(); ++k) {
      Step step;
      step.kind = Step::Kind::Equation;
      step.equation = system[k];
      step.origin = k < origins.size() ? origins[k] : "equation " + std::to_string(k + 1);
      step.source = k;
      const std::size_t idx = push(std::move(step));
      if (!system[k].is_zero()) live_.push_back(idx);
    }
  }

  Outcome run() {
    for (;;) {
      for (std::size_t idx : live_) {
        if (ledger(idx).is_constant()) {
          contradiction(idx);
          return Outcome::Contradiction;
        }
      }
      if (live_.empty()) return Outcome::Solved;

      std::vector<std::size_t> affine;
      for (std::size_t idx : live_) {
        if (ledger(idx).total_degree() <= 1) affine.push_back(idx);
      }
      if (affine.empty()) {
        if (!find_affine_combinations()) return Outcome::Stuck;
        continue;
      }
      if (!solve_affine(affine)) return Outcome::Contradiction;
    }
  }

  const EliminationTrace& trace() const { return trace_; }
  const std::vector<Solved>& solved() const { return solved_; }
  std::vector<Poly> live_equations() const {
    std::vector<Poly> out;
    for (std::size_t idx : live_) out.push_back(ledger(idx));
    return out;
  }

private:
  const Poly& ledger(std::size_t idx) const { return trace_.steps[idx].equation; }

  std::size_t push(Step step) {
    trace_.steps.push_back(std::move(step));
    return trace_.steps.size() - 1;
  }

  void contradiction(std::size_t idx) {
    Step step;
    step.kind = Step::Kind::Contradiction;
    step.equation = ledger(idx);
    step.source = idx;
    step.origin = "contradiction";
    push(std::move(step));
  }

  std::size_t push_combination(const Poly& p, const Combination& comb, std::string origin) {
    if (comb.size() == 1 && comb.begin()->second.is_one() && ledger(comb.begin()->first) == p) {
      return comb.begin()->first;
    }
    Step step;
    step.kind = Step::Kind::Combination;
    step.equation = p;
    step.origin = std::move(origin);
    for (const auto& [idx, c] : comb) {
      if (!c.is_zero()) step.combination.emplace_back(idx, c);
    }
    return push(std::move(step));
  }

  struct Row {
    Poly poly;
    Combination comb;
  };

  static void subtract_multiple(Row& target, const Row& pivot, const Gaussian& factor) {
    target.poly -= Poly(factor) * pivot.poly;
    for (const auto& [idx, c] : pivot.comb) {
      Gaussian& slot = target.comb[idx];
      slot -= factor * c;
    }
    std::erase_if(target.comb, [](const auto& kv) { return kv.second.is_zero(); });
  }

  static void scale(Row& row, const Gaussian& factor) {
    row.poly *= factor;
    for (auto& [idx, c] : row.comb) c *= factor;
  }

  // Gauss-Jordan on the affine equations; returns false on a contradiction.
  bool solve_affine(const std::vector<std::size_t>& affine) {
    std::vector<Row> rows;
    std::set<std::size_t> vars;
    for (std::size_t idx : affine) {
      rows.push_back({ledger(idx), {{idx, Gaussian(1)}}});
      vars.merge(ledger(idx).variables());
    }

    std::vector<std::pair<std::size_t, std::size_t>> pivot_of_row;  // (row, variable)
    std::vector<bool> used(rows.size(), false);
    for (std::size_t v : vars) {
      std::size_t r = 0;
      while (r < rows.size() && (used[r] || rows[r].poly.linear_coefficient(v).is_zero())) ++r;
      if (r == rows.size()) continue;
      used[r] = true;
      scale(rows[r], rows[r].poly.linear_coefficient(v).inverse());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r) continue;
        const Gaussian factor = rows[i].poly.linear_coefficient(v);
        if (!factor.is_zero()) subtract_multiple(rows[i], rows[r], factor);
      }
      pivot_of_row.emplace_back(r, v);
    }

    std::erase_if(live_, [&](std::size_t idx) {
      return std::find(affine.begin(), affine.end(), idx) != affine.end();
    });

    // Any nonzero constant row is a contradiction.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!used[i] && !rows[i].poly.is_zero()) {
        contradiction(push_combination(rows[i].poly, rows[i].comb, "linear combination"));
        return false;
      }
    }

    std::map<std::size_t, std::size_t> pivots;  // variable -> ledger index
    for (const auto& [r, v] : pivot_of_row) {
      const std::size_t idx = push_combination(rows[r].poly, rows[r].comb, "solve");
      pivots.emplace(v, idx);
      // poly = v + rest, so v = -rest = v - poly.
      solved_.push_back({v, Poly::variable(v) - rows[r].poly});
    }

    std::vector<std::size_t> next_live;
    for (std::size_t idx : live_) {
      const std::set<std::size_t> present = ledger(idx).variables();
      Step step;
      step.kind = Step::Kind::Substitution;
      step.source = idx;
      step.origin = "substitution";
      std::map<std::size_t, Poly> replacements;
      for (const auto& [v, pivot_idx] : pivots) {
        if (!present.contains(v)) continue;
        step.eliminated.emplace_back(v, pivot_idx);
        replacements.emplace(v, Poly::variable(v) - ledger(pivot_idx));
      }
      if (replacements.empty()) {
        next_live.push_back(idx);
        continue;
      }
      step.equation = ledger(idx).substitute(replacements);
      const bool vanished = step.equation.is_zero();
      const std::size_t new_idx = push(std::move(step));
      if (!vanished) next_live.push_back(new_idx);
    }
    live_ = std::move(next_live);
    return true;
  }

  // Looks for degree <= 1 members of the linear span of the live equations.
  bool find_affine_combinations() {
    std::vector<Monomial> columns;
    {
      std::set<Monomial, GradedLexOrder> all;
      for (std::size_t idx : live_) {
        for (const auto& [m, c] : ledger(idx).terms()) all.insert(m);
      }
      // Highest degree first, so reduced rows led by a degree <= 1 monomial
      // have no higher-degree terms at all.
      columns.assign(all.rbegin(), all.rend());
    }

    std::vector<Row> rows;
    for (std::size_t idx : live_) rows.push_back({ledger(idx), {{idx, Gaussian(1)}}});

    std::vector<bool> used(rows.size(), false);
    for (std::size_t col = 0; col < columns.size(); ++col) {
      const Monomial& m = columns[col];
      std::size_t r = 0;
      while (r < rows.size() && (used[r] || rows[r].poly.coefficient(m).is_zero())) ++r;
      if (r == rows.size()) continue;
      used[r] = true;
      scale(rows[r], rows[r].poly.coefficient(m).inverse());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r) continue;
        const Gaussian factor = rows[i].poly.coefficient(m);
        if (!factor.is_zero()) subtract_multiple(rows[i], rows[r], factor);
      }
    }

    bool found = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].poly.is_zero() || rows[i].poly.total_degree() > 1) continue;
      live_.push_back(push_combination(rows[i].poly, rows[i].comb, "affine combination"));
      found = true;
    }
    return found;
  }

  EliminationTrace trace_;
  std::vector<std::size_t> live_;
  std::vector<Solved> solved_;
};

// Free variables get 0, then each layer's solved variables are recovered in
// reverse solving order (each replacement only mentions variables that were
// still unsolved at the time).
Assignment assemble(const std::set<std::size_t>& all_vars, Assignment values,
                    const std::vector<const std::vector<Solved>*>& layers) {
  std::set<std::size_t> solved_vars;
  for (const auto* layer : layers) {
    for (const auto& s : *layer) solved_vars.insert(s.variable);
  }
  for (std::size_t v : all_vars) {
    if (!values.contains(v) && !solved_vars.contains(v)) values.emplace(v, Gaussian());
  }
  for (const auto* layer : layers) {
    for (auto it = layer->rbegin(); it != layer->rend(); ++it) {
      values[it->variable] = it->replacement.evaluate(values);
    }
  }
  return values;
}

Gaussian sample(std::mt19937_64& rng, long height) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, std::max(1L, height));
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

}  // namespace

bool replay(const EliminationTrace& trace, const std::vector<Poly>& system) {
  std::vector<Poly> ledger;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& step = trace.steps[i];
    switch (step.kind) {
      case Step::Kind::Equation:
        if (step.source >= system.size() || system[step.source] != step.equation) return false;
        break;
      case Step::Kind::Combination: {
        Poly sum;
        for (const auto& [idx, c] : step.combination) {
          if (idx >= i) return false;
          sum += Poly(c) * ledger[idx];
        }
        if (sum != step.equation) return false;
        break;
      }
      case Step::Kind::Substitution: {
        if (step.source >= i) return false;
        Poly p = ledger[step.source];
        for (const auto& [v, idx] : step.eliminated) {
          if (idx >= i) return false;
          const Poly& q = ledger[idx];
          const Gaussian kappa = q.linear_coefficient(v);
          if (q.total_degree() > 1 || kappa.is_zero()) return false;
          p = p.substitute(v, Poly::variable(v) - Poly(kappa.inverse()) * q);
        }
        if (p != step.equation) return false;
        break;
      }
      case Step::Kind::Contradiction:
        if (step.source >= i || ledger[step.source] != step.equation) return false;
        if (!step.equation.is_constant() || step.equation.is_zero()) return false;
        break;
    }
    ledger.push_back(step.equation);
  }
  return trace.ends_in_contradiction();
}

std::vector<std::string> render_trace(const EliminationTrace& trace, const Ring& ring) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& step = trace.steps[i];
    std::string line = "[" + std::to_string(i) + "] ";
    switch (step.kind) {
      case Step::Kind::Equation:
        line += step.origin + ": " + step.equation.render(ring) + " = 0";
        break;
      case Step::Kind::Combination: {
        line += step.origin + " of";
        bool first = true;
        for (const auto& [idx, c] : step.combination) {
          line += first ? " " : " + ";
          if (!c.is_one()) line += "(" + render_scalar(c) + ")*";
          line += "[" + std::to_string(idx) + "]";
          first = false;
        }
        line += ": " + step.equation.render(ring) + " = 0";
        break;
      }
      case Step::Kind::Substitution: {
        line += "substitute";
        bool first = true;
        for (const auto& [v, idx] : step.eliminated) {
          line += (first ? " " : ", ") + ring.name(v) + " by [" + std::to_string(idx) + "]";
          first = false;
        }
        line += " into [" + std::to_string(step.source) + "]: " + step.equation.render(ring) +
                " = 0";
        break;
      }
      case Step::Kind::Contradiction:
        line += "contradiction from [" + std::to_string(step.source) + "]: 0 = " +
                render_scalar(-step.equation.constant_term());
        break;
    }
    out.push_back(std::move(line));
  }
  return out;
}

void BilinearSystem::check_bilinear() const {
  for (std::size_t k = 0; k < equations.size(); ++k) {
    const Poly& p = equations[k];
    for (std::size_t v : p.variables()) {
      if (!left_group.contains(v) && !right_group.contains(v)) {
        throw std::logic_error("equation " + std::to_string(k + 1) +
                               " mentions a variable outside both parameter groups");
      }
    }
    if (p.degree_in(left_group) > 1 || p.degree_in(right_group) > 1) {
      throw std::logic_error("equation " + std::to_string(k + 1) + " is not bilinear");
    }
  }
}

BilinearVerdict solve_bilinear(const BilinearSystem& system, const ProbeBudget& budget) {
  system.check_bilinear();
  std::set<std::size_t> all_vars = system.left_group;
  all_vars.insert(system.right_group.begin(), system.right_group.end());

  StagedEliminator staged(system.equations, system.origins);
  switch (staged.run()) {
    case Outcome::Contradiction: return ProvenInfeasible{staged.trace()};
    case Outcome::Solved: return BilinearSolution{assemble(all_vars, {}, {&staged.solved()})};
    case Outcome::Stuck: break;
  }

  const std::vector<Poly> remaining = staged.live_equations();
  std::set<std::size_t> remaining_vars;
  for (const auto& p : remaining) remaining_vars.merge(p.variables());

  std::mt19937_64 rng(budget.seed);
  for (std::size_t round = 0; round < budget.rounds; ++round) {
    const std::set<std::size_t>& group = round % 2 == 0 ? system.right_group : system.left_group;
    Assignment fixed;
    for (std::size_t v : group) {
      if (!remaining_vars.contains(v)) continue;
      fixed.emplace(v, round < 2 ? Gaussian() : sample(rng, budget.max_height));
    }
    std::vector<Poly> reduced;
    for (const auto& p : remaining) reduced.push_back(p.partial_evaluate(fixed));

    StagedEliminator inner(reduced, {});
    if (inner.run() == Outcome::Solved) {
      return BilinearSolution{assemble(all_vars, fixed, {&inner.solved(), &staged.solved()})};
    }
  }
  return Unknown{"no witness after " + std::to_string(budget.rounds) +
                 " alternating rounds; elimination left " + std::to_string(remaining.size()) +
                 " bilinear equations"};
}

SymbolicProduct symbolic_product(const Matrix& A, const Matrix& B, const Matrix& C) {
  SymbolicProduct out;
  out.left = symbolic_family(A, out.ring).parametric();
  out.right = symbolic_family(B, out.ring, NameScheme::blocks("u'", "v'", "w'")).parametric();
  out.product = out.left.matrix * SymMatrix(C) * out.right.matrix;
  return out;
}

namespace {

ProbeResult run_probe(const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& X,
                      SymbolicProduct product, const ProbeBudget& budget) {
  ProbeResult out;
  out.product = std::move(product);
  const SymMatrix& P = out.product.product;
  for (std::size_t i = 1; i <= P.rows(); ++i) {
    for (std::size_t j = 1; j <= P.cols(); ++j) {
      out.system.equations.push_back(P(i, j) - Poly(X(i, j)));
      out.system.origins.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (const auto& v : out.product.left.parameters) out.system.left_group.insert(v.id);
  for (const auto& v : out.product.right.parameters) out.system.right_group.insert(v.id);

  BilinearVerdict verdict = solve_bilinear(out.system, budget);
  if (auto* infeasible = std::get_if<ProvenInfeasible>(&verdict)) {
    out.verdict = std::move(*infeasible);
  } else if (auto* unknown = std::get_if<Unknown>(&verdict)) {
    out.verdict = std::move(*unknown);
  } else {
    Witness w;
    w.values = std::get<BilinearSolution>(verdict).values;
    w.left_inverse = out.product.left.instantiate(w.values);
    w.right_inverse = out.product.right.instantiate(w.values);
    const bool verified = is_one_inverse(A, w.left_inverse) &&
                          is_one_inverse(B, w.right_inverse) &&
                          w.left_inverse * C * w.right_inverse == X;
    if (verified) {
      out.verdict = std::move(w);
    } else {
      out.verdict = Unknown{"candidate witness failed re-instantiation"};
    }
  }
  return out;
}

void require_solution(const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& X) {
  if (C.rows() != A.rows() || C.cols() != B.cols() || X.rows() != A.cols() ||
      X.cols() != B.rows()) {
    throw DimensionError("representability: incompatible shapes A " + A.shape() + ", B " +
                         B.shape() + ", C " + C.shape() + ", X " + X.shape());
  }
  if (A * X * B != C) throw ContractError("the candidate X does not solve A X B = C");
}

}  // namespace

ProbeResult representability_probe(const Matrix& A, const Matrix& B, const Matrix& C,
                                   const Matrix& X, const ProbeBudget& budget) {
  require_solution(A, B, C, X);
  return run_probe(A, B, C, X, symbolic_product(A, B, C), budget);
}

ProbeResult representability_probe(const Matrix& A, const Matrix& B, const Matrix& C,
                                   const Matrix& X, const ParametricMatrix& left,
                                   const ParametricMatrix& right, const Ring& ring,
                                   const ProbeBudget& budget) {
  require_solution(A, B, C, X);
  const SymMatrix SA(A);
  const SymMatrix SB(B);
  if (!(SA * left.matrix * SA - SA).is_zero()) {
    throw ContractError("left family is not a family of {1}-inverses of A");
  }
  if (!(SB * right.matrix * SB - SB).is_zero()) {
    throw ContractError("right family is not a family of {1}-inverses of B");
  }
  SymbolicProduct product{ring, left, right, left.matrix * SymMatrix(C) * right.matrix};
  return run_probe(A, B, C, X, std::move(product), budget);
}

std::string_view verdict_name(const RepresentabilityVerdict& verdict) {
  switch (verdict.index()) {
    case 0: return "Witness";
    case 1: return "ProvenInfeasible";
    default: return "Unknown";
  }
}

}  // namespace geninv
