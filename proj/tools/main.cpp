#include "cli/commands.hpp"

#include "geninv/error.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace geninv;

int main(int argc, char** argv) {
  cli::Options o;
  CLI::App app{"Exact {1}-inverses and solutions of A X B = C", "geninv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-f,--file", o.file, "Matrix document (.mx)")->required();
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--seed", o.seed, "Seed for sampled probe rounds");

  auto* rnf = app.add_subcommand("rnf", "Rank normal form Q A P = E_a");
  auto* ginverse = app.add_subcommand("ginverse", "Symbolic {1}-inverse family or an instance");
  auto* solve = app.add_subcommand("solve", "General solution of A X B = C");
  auto* solve_kron = app.add_subcommand("solve-kron", "Solve A X B = C through vec and Kronecker");
  auto* linsys = app.add_subcommand("linsys", "General solution of A x = c or x A = c");
  app.add_subcommand("check-consistency", "Is A X B = C solvable?");
  auto* reproductive = app.add_subcommand("check-reproductive", "Is the general solution map idempotent?");
  auto* represent = app.add_subcommand("represent", "Is a solution of the form A1 C B1?");
  auto* report = app.add_subcommand("report", "Full derivation for A X B = C");

  for (auto* sub : {rnf, ginverse, linsys}) {
    sub->add_option("-m,--matrix", o.matrix, "Name of the matrix")->capture_default_str();
  }
  ginverse->add_flag("--canonical", o.canonical, "Instance with zero U, V, W blocks");
  ginverse->add_option("--U", o.u_block, "Name of the U block");
  ginverse->add_option("--V", o.v_block, "Name of the V block");
  ginverse->add_option("--W", o.w_block, "Name of the W block");
  ginverse->add_option("--names", o.names, "Explicit parameter names")->delimiter(',');
  for (auto* sub : {solve, reproductive, solve_kron}) {
    sub->add_option("--particular", o.particular, "Particular solution to shift around");
  }
  linsys->add_option("--rhs", o.rhs, "Name of the right-hand side")->capture_default_str();
  linsys->add_option("--side", o.side, "right: A x = c, left: x A = c")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  for (auto* sub : {represent, report}) {
    sub->add_option("--candidate", o.candidate, "Name of the candidate solution")
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    const cli::MatrixDocument doc = cli::MatrixDocument::load(o.file);
    const cli::Report r = cli::run_command(o, doc);
    std::cout << (o.json ? cli::render_json(r) : cli::render_text(r));
    return r.exit_code;
  } catch (const cli::DocumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "error: " << o.file << ": " << e.what() << '\n';
  }
  return cli::kInputError;
}
