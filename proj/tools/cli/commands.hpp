#pragma once

#include "document.hpp"
#include "report.hpp"

#include "geninv/represent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace geninv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kInputError = 2,
  kUndecided = 3,
};

struct Options {
  std::string command;
  std::string file;
  bool json = false;
  std::uint64_t seed = kDefaultProbeSeed;

  std::string matrix = "A";
  std::string rhs = "c";
  std::string side = "right";
  std::string particular;
  std::string candidate = "X";
  bool canonical = false;
  std::string u_block;
  std::string v_block;
  std::string w_block;
  std::vector<std::string> names;
};

inline const std::vector<std::string> kCommands = {
    "rnf",  "ginverse", "solve", "solve-kron", "linsys", "check-consistency", "check-reproductive",
    "represent", "report"};

// Runs one command on a loaded document. Input problems (missing matrices,
// shape mismatches, contract violations) propagate as exceptions.
Report run_command(const Options& options, const MatrixDocument& document);

}  // namespace geninv::cli
