#pragma once

// `.mx` matrix documents:
//
//   # comment
//   A = [ 1 2 1 ; 0 1 0 ; 1 1 1 ]
//   c = [ 3/2-1/3i ; -i ]
//
// Entries use the scalar grammar; ';' separates rows; blocks may span lines.

#include "geninv/error.hpp"
#include "geninv/matrix.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geninv::cli {

// Input error located in a document; what() is "file:line:column: message".
class DocumentError : public Error {
public:
  DocumentError(std::string file, std::size_t line, std::size_t column, const std::string& message);

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

class MatrixDocument {
public:
  static MatrixDocument parse(std::string_view text, std::string file = "<input>");
  // Throws DocumentError (line 0) if the file cannot be read.
  static MatrixDocument load(const std::string& path);

  const std::string& file() const { return file_; }
  const std::vector<std::pair<std::string, Matrix>>& matrices() const { return matrices_; }
  bool contains(std::string_view name) const;
  // Throws DocumentError naming the file if `name` is absent.
  const Matrix& get(std::string_view name) const;

private:
  std::string file_;
  std::vector<std::pair<std::string, Matrix>> matrices_;
};

}  // namespace geninv::cli
