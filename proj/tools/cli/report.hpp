#pragma once

// Structured command output with text and JSON renderings of the same facts.

#include "geninv/matrix.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace geninv::cli {

// Rendered symbolic matrix: rows of entry strings.
struct Table {
  std::vector<std::vector<std::string>> rows;
};

// Free-form lines, e.g. an elimination trace.
struct Lines {
  std::vector<std::string> lines;
};

struct Fact {
  std::string key;
  std::variant<std::string, Matrix, Table, Lines> value;
};

struct Step {
  std::string title;
  std::vector<Fact> facts;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Matrix>> inputs;
  std::vector<Step> steps;
  std::vector<Fact> result;
  std::string verdict;
  int exit_code = 0;

  Step& step(std::string title);
};

std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace geninv::cli
