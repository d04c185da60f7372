#include "commands.hpp"

#include "geninv/axb.hpp"
#include "geninv/kron.hpp"
#include "geninv/linsys.hpp"
#include "geninv/one_inverse.hpp"

#include <filesystem>
#include <functional>
#include <map>

namespace geninv::cli {

namespace {

std::string yes_no(bool value) { return value ? "yes" : "no"; }

Table table(const SymMatrix& m, const Ring& ring) {
  Table out;
  out.rows.resize(m.rows());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) out.rows[i - 1].push_back(m(i, j).render(ring));
  }
  return out;
}

Lines names_of(const std::vector<Variable>& vars) {
  Lines out;
  std::string line;
  for (const auto& v : vars) line += (line.empty() ? "" : ", ") + v.name;
  if (!line.empty()) out.lines.push_back(line);
  return out;
}

struct Equation {
  Matrix A, B, C;
};

Equation equation(const MatrixDocument& doc, Report& report) {
  Equation e{doc.get("A"), doc.get("B"), doc.get("C")};
  report.inputs = {{"A", e.A}, {"B", e.B}, {"C", e.C}};
  return e;
}

void add_input(Report& report, const std::string& name, const Matrix& m) {
  for (const auto& [n, existing] : report.inputs) {
    if (n == name) return;
  }
  report.inputs.emplace_back(name, m);
}

// Canonical inverses and the consistency residual; returns consistency.
bool consistency_step(Report& report, const Equation& e) {
  const Matrix A1 = family_from(e.A).canonical();
  const Matrix B1 = family_from(e.B).canonical();
  const Matrix residual = consistency_residual(e.A, e.B, e.C, A1, B1);
  Step& s = report.step("consistency: A A1 C B1 B = C");
  s.facts.push_back({"A1 (zero blocks)", A1});
  s.facts.push_back({"B1 (zero blocks)", B1});
  s.facts.push_back({"A A1 C B1 B - C", residual});
  s.facts.push_back({"consistent", yes_no(residual.is_zero())});
  return residual.is_zero();
}

void map_facts(Step& s, const GeneralSolutionMap& g) {
  s.facts.push_back({"X0", g.particular()});
  s.facts.push_back({"L = A1 A", g.left_projector()});
  s.facts.push_back({"R = B B1", g.right_projector()});
  s.facts.push_back({"X0 - L X0 R", g.reproductivity_defect()});
  s.facts.push_back({"reproductive", yes_no(g.is_reproductive())});
}

void linsys_facts(Step& s, const LinearSolution& sol) {
  const SolveTrace& t = sol.trace;
  s.facts.push_back({"rank", std::to_string(t.rnf.rank)});
  s.facts.push_back({"Q", t.rnf.Q});
  s.facts.push_back({"P", t.rnf.P});
  s.facts.push_back({"c' = Q c", t.c_prime});
  s.facts.push_back({"consistent", yes_no(t.consistent)});
  if (t.pivot_index) {
    s.facts.push_back({"pivot j", std::to_string(*t.pivot_index)});
    s.facts.push_back({"c'_j", render_scalar(t.pivot_value)});

    // V with column j holding v_{i,j} / c'_j.
    const std::size_t n = t.rnf.P.rows();
    const std::size_t a = t.rnf.rank;
    Ring ring;
    SymMatrix V(n - a, a);
    for (std::size_t i = 1; i <= n - a; ++i) {
      const Variable v = ring.add("v_{" + std::to_string(i) + "," + std::to_string(*t.pivot_index) +
                                  "}");
      V(i, *t.pivot_index) = Poly::variable(v) * Poly(t.pivot_value.inverse());
    }
    s.facts.push_back({"V", table(V, ring)});
  }
  if (!t.notes.empty()) s.facts.push_back({"notes", Lines{t.notes}});
  s.facts.push_back({"particular", sol.solution.particular});
  s.facts.push_back({"directrix", sol.solution.directrix});
  s.facts.push_back({"dimension", std::to_string(sol.solution.dimension)});
}

Report rnf(const Options& o, const MatrixDocument& doc) {
  Report r;
  const Matrix& A = doc.get(o.matrix);
  r.inputs = {{o.matrix, A}};
  const RankNormalForm f = rank_normal_form(A);
  r.result.push_back({"Q", f.Q});
  r.result.push_back({"P", f.P});
  r.result.push_back({"rank", std::to_string(f.rank)});
  r.result.push_back(
      {"Q A P = E_a", yes_no(f.Q * A * f.P == Matrix::rank_normal(A.rows(), A.cols(), f.rank))});
  r.verdict = "rank " + std::to_string(f.rank);
  return r;
}

Report ginverse(const Options& o, const MatrixDocument& doc) {
  Report r;
  const Matrix& A = doc.get(o.matrix);
  r.inputs = {{o.matrix, A}};
  const OneInverseFamily f(A);
  Step& s = r.step("rank normal form");
  s.facts.push_back({"Q", f.rnf().Q});
  s.facts.push_back({"P", f.rnf().P});
  s.facts.push_back({"rank", std::to_string(f.rank())});
  s.facts.push_back({"parameters", std::to_string(f.parameter_count())});

  const bool instantiate = !o.u_block.empty() || !o.v_block.empty() || !o.w_block.empty();
  if (o.canonical || instantiate) {
    auto block = [&](const std::string& name, BlockShape shape) {
      if (name.empty()) return Matrix::zero(shape.rows, shape.cols);
      add_input(r, name, doc.get(name));
      return doc.get(name);
    };
    const Matrix G = f.instantiate(block(o.u_block, f.u_shape()), block(o.v_block, f.v_shape()),
                                   block(o.w_block, f.w_shape()));
    r.result.push_back({"G", G});
    r.result.push_back({"A G A = A", yes_no(is_one_inverse(A, G))});
    r.verdict = "instance";
    return r;
  }

  Ring ring;
  const SymbolicFamily family =
      f.symbolic(ring, o.names.empty() ? NameScheme{} : NameScheme::explicit_names(o.names));
  r.result.push_back({"G", table(family.inverse, ring)});
  r.result.push_back({"parameters", names_of(family.parameters())});
  r.verdict = "family with " + std::to_string(f.parameter_count()) + " parameters";
  return r;
}

Report solve(const Options& o, const MatrixDocument& doc) {
  Report r;
  const Equation e = equation(doc, r);
  if (!consistency_step(r, e)) {
    r.verdict = "inconsistent";
    r.exit_code = kNegative;
    return r;
  }
  GeneralSolutionMap g = [&] {
    if (o.particular.empty()) return penrose_general_solution(e.A, e.B, e.C);
    add_input(r, o.particular, doc.get(o.particular));
    return shifted_general_solution(e.A, e.B, e.C, doc.get(o.particular));
  }();
  Step& s = r.step(o.particular.empty() ? "general solution X = X0 + Y - L Y R, X0 = A1 C B1"
                                        : "general solution X = X0 + Y - L Y R, X0 = " +
                                              o.particular);
  map_facts(s, g);
  r.result.push_back({"particular", g.particular()});
  r.result.push_back({"dimension", std::to_string(solution_dimension(g))});
  r.result.push_back({"reproductive", yes_no(g.is_reproductive())});
  r.verdict = "consistent";
  return r;
}

Report solve_kron(const Options& o, const MatrixDocument& doc) {
  Report r;
  const Equation e = equation(doc, r);
  const Matrix K = kronecker(e.A, e.B.transpose());
  Step& s = r.step("vectorized system (A (x) B^T) vec(X) = vec(C)");
  s.facts.push_back({"A (x) B^T", K});
  s.facts.push_back({"vec(C)", vec(e.C)});
  try {
    const KronSolution k = solve_axb_via_kron(e.A, e.B, e.C);
    linsys_facts(r.step("linear system"), k.linear);
    r.result.push_back({"particular", mat(k.linear.solution.particular, k.unknown_rows,
                                          k.unknown_cols)});
    r.result.push_back({"dimension", std::to_string(k.linear.solution.dimension)});
    if (!o.particular.empty()) {
      add_input(r, o.particular, doc.get(o.particular));
      r.result.push_back({o.particular + " in solution set", yes_no(k.contains(doc.get(o.particular)))});
    }
    r.verdict = "consistent";
  } catch (const InconsistentSystemError& err) {
    r.result.push_back({"tail of c'", err.tail()});
    r.verdict = "inconsistent";
    r.exit_code = kNegative;
  }
  return r;
}

Report linsys(const Options& o, const MatrixDocument& doc) {
  Report r;
  const Matrix& A = doc.get(o.matrix);
  const Matrix& c = doc.get(o.rhs);
  r.inputs = {{o.matrix, A}, {o.rhs, c}};
  const bool left = o.side == "left";
  try {
    const LinearSolution sol = left ? solve_left(A, c) : solve_right(A, c);
    linsys_facts(r.step(left ? "x " + o.matrix + " = " + o.rhs + " via the transposed system"
                             : o.matrix + " x = " + o.rhs),
                 sol);
    r.result.push_back({"particular", sol.solution.particular});
    r.result.push_back({"dimension", std::to_string(sol.solution.dimension)});
    r.verdict = "consistent";
  } catch (const InconsistentSystemError& err) {
    r.result.push_back({"tail of c'", err.tail()});
    r.verdict = "inconsistent";
    r.exit_code = kNegative;
  }
  return r;
}

Report check_consistency(const Options&, const MatrixDocument& doc) {
  Report r;
  const Equation e = equation(doc, r);
  const bool ok = consistency_step(r, e);
  r.verdict = ok ? "consistent" : "inconsistent";
  r.exit_code = ok ? kSuccess : kNegative;
  return r;
}

Report check_reproductive(const Options& o, const MatrixDocument& doc) {
  Report r;
  const Equation e = equation(doc, r);
  if (!consistency_step(r, e)) {
    r.verdict = "inconsistent";
    r.exit_code = kNegative;
    return r;
  }
  GeneralSolutionMap g = [&] {
    if (o.particular.empty()) return penrose_general_solution(e.A, e.B, e.C);
    add_input(r, o.particular, doc.get(o.particular));
    return shifted_general_solution(e.A, e.B, e.C, doc.get(o.particular));
  }();
  Step& s = r.step("reproductivity: X0 = L X0 R");
  map_facts(s, g);
  s.facts.push_back(
      {"L X0 R", g.left_projector() * g.particular() * g.right_projector()});
  r.verdict = g.is_reproductive() ? "reproductive" : "not reproductive";
  r.exit_code = g.is_reproductive() ? kSuccess : kNegative;
  return r;
}

void probe_step(Report& r, const ProbeResult& p, const std::string& candidate) {
  Step& s = r.step("representability of " + candidate + " as A1 C B1");
  s.facts.push_back({"equations", std::to_string(p.system.equations.size())});
  s.facts.push_back({"verdict", std::string(verdict_name(p.verdict))});
  if (const auto* proof = std::get_if<ProvenInfeasible>(&p.verdict)) {
    s.facts.push_back({"trace", Lines{render_trace(proof->trace, p.product.ring)}});
    s.facts.push_back(
        {"trace replays", yes_no(replay(proof->trace, p.system.equations))});
  } else if (const auto* w = std::get_if<Witness>(&p.verdict)) {
    s.facts.push_back({"A1", w->left_inverse});
    s.facts.push_back({"B1", w->right_inverse});
  } else {
    s.facts.push_back({"reason", std::get<Unknown>(p.verdict).reason});
  }
}

int probe_exit(const ProbeResult& p) {
  switch (p.verdict.index()) {
    case 0: return kSuccess;
    case 1: return kNegative;
    default: return kUndecided;
  }
}

Report represent(const Options& o, const MatrixDocument& doc) {
  Report r;
  const Equation e = equation(doc, r);
  const Matrix& X = doc.get(o.candidate);
  add_input(r, o.candidate, X);
  const ProbeResult p = representability_probe(e.A, e.B, e.C, X, ProbeBudget{o.seed});
  Step& s = r.step("symbolic product A1 C B1");
  s.facts.push_back({"A1", table(p.product.left.matrix, p.product.ring)});
  s.facts.push_back({"B1", table(p.product.right.matrix, p.product.ring)});
  s.facts.push_back({"A1 C B1", table(p.product.product, p.product.ring)});
  probe_step(r, p, o.candidate);
  r.verdict = std::string(verdict_name(p.verdict));
  r.exit_code = probe_exit(p);
  return r;
}

Report report(const Options& o, const MatrixDocument& doc) {
  Report r;
  const Equation e = equation(doc, r);
  const bool consistent = consistency_step(r, e);

  const Matrix K = kronecker(e.A, e.B.transpose());
  Step& ks = r.step("vectorized system (A (x) B^T) vec(X) = vec(C)");
  ks.facts.push_back({"A (x) B^T", K});
  ks.facts.push_back({"rank", std::to_string(rank(K))});
  ks.facts.push_back({"rank(A) rank(B)", std::to_string(rank(e.A) * rank(e.B))});
  ks.facts.push_back({"vec(C)", vec(e.C)});
  if (!consistent) {
    r.verdict = "inconsistent";
    r.exit_code = kNegative;
    return r;
  }
  const KronSolution k = solve_axb_via_kron(e.A, e.B, e.C);
  linsys_facts(r.step("linear system"), k.linear);

  Ring ring;
  const SymbolicFamily fa = symbolic_family(e.A, ring);
  const SymbolicFamily fb = symbolic_family(e.B, ring, NameScheme::blocks("u'", "v'", "w'"));
  Step& fs = r.step("{1}-inverse families P [[I, U], [V, W]] Q");
  fs.facts.push_back({"A1", table(fa.inverse, ring)});
  fs.facts.push_back({"B1", table(fb.inverse, ring)});
  fs.facts.push_back({"parameters of A1", std::to_string(fa.parameters().size())});
  fs.facts.push_back({"parameters of B1", std::to_string(fb.parameters().size())});
  const SymMatrix X0 = fa.inverse * SymMatrix(e.C) * fb.inverse;
  fs.facts.push_back({"A1 C B1", table(X0, ring)});

  const GeneralSolutionMap g = penrose_general_solution(e.A, e.B, e.C);
  map_facts(r.step("reproductive general solution, X0 = A1 C B1"), g);

  r.result.push_back({"dimension", std::to_string(k.linear.solution.dimension)});
  r.result.push_back({"X0", g.particular()});
  r.verdict = "consistent";

  if (!o.particular.empty() || doc.contains(o.candidate)) {
    const std::string name = o.particular.empty() ? o.candidate : o.particular;
    const Matrix& X = doc.get(name);
    add_input(r, name, X);
    Step& cs = r.step("candidate " + name);
    const bool solves = e.A * X * e.B == e.C;
    cs.facts.push_back({"A " + name + " B = C", yes_no(solves)});
    cs.facts.push_back({"in vectorized solution set", yes_no(k.contains(X))});
    if (!solves) {
      r.verdict = "consistent; " + name + " is not a solution";
      return r;
    }
    map_facts(cs, shifted_general_solution(e.A, e.B, e.C, X));
    const ProbeResult p = representability_probe(e.A, e.B, e.C, X, ProbeBudget{o.seed});
    probe_step(r, p, name);
    r.result.push_back({name + " representable", std::string(verdict_name(p.verdict))});
    r.verdict = "consistent; " + name + ": " + std::string(verdict_name(p.verdict));
  }
  return r;
}

// Canonical echo of the invocation; the file is named by its basename so
// reports do not depend on the working directory.
std::string echo(const Options& o) {
  std::string out = o.command;
  if (!o.file.empty()) out += " --file " + std::filesystem::path(o.file).filename().string();
  auto flag = [&](const char* name, const std::string& value, const std::string& fallback) {
    if (value != fallback) out += std::string(" --") + name + " " + value;
  };
  flag("matrix", o.matrix, "A");
  flag("rhs", o.rhs, "c");
  flag("side", o.side, "right");
  flag("particular", o.particular, "");
  flag("candidate", o.candidate, "X");
  if (o.canonical) out += " --canonical";
  flag("U", o.u_block, "");
  flag("V", o.v_block, "");
  flag("W", o.w_block, "");
  if (!o.names.empty()) {
    out += " --names ";
    for (std::size_t k = 0; k < o.names.size(); ++k) out += (k ? "," : "") + o.names[k];
  }
  if (o.seed != kDefaultProbeSeed) out += " --seed " + std::to_string(o.seed);
  return out;
}

}  // namespace

Report run_command(const Options& options, const MatrixDocument& document) {
  static const std::map<std::string, std::function<Report(const Options&, const MatrixDocument&)>>
      handlers = {
          {"rnf", rnf},
          {"ginverse", ginverse},
          {"solve", solve},
          {"solve-kron", solve_kron},
          {"linsys", linsys},
          {"check-consistency", check_consistency},
          {"check-reproductive", check_reproductive},
          {"represent", represent},
          {"report", report},
      };
  const auto it = handlers.find(options.command);
  if (it == handlers.end()) throw Error("unknown command '" + options.command + "'");
  Report r = it->second(options, document);
  r.command = echo(options);
  return r;
}

}  // namespace geninv::cli
