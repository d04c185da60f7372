#include "document.hpp"

#include "geninv/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace geninv::cli {

DocumentError::DocumentError(std::string file, std::size_t line, std::size_t column,
                             const std::string& message)
    : Error(line == 0 ? file + ": " + message
                      : file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                            message),
      file_(std::move(file)),
      line_(line),
      column_(column) {}

namespace {

class Scanner {
public:
  Scanner(std::string_view text, const std::string& file) : text_(text), file_(file) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t position() const { return pos_; }
  void advance() { ++pos_; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      const char got = peek();
      fail(pos_, std::string("expected '") + c + "'" +
                     (got == '\0' ? " before end of file" : std::string(", got '") + got + "'"));
    }
  }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    auto head = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; };
    auto tail = [&](char ch) {
      return head(ch) || std::isdigit(static_cast<unsigned char>(ch)) || ch == '\'';
    };
    if (pos_ >= text_.size() || !head(text_[pos_])) fail(pos_, "expected a matrix name");
    while (pos_ < text_.size() && tail(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Maximal run of characters that can belong to a scalar.
  std::pair<std::string_view, std::size_t> token() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ';' || ch == ']' || ch == '[' ||
          ch == '#') {
        break;
      }
      ++pos_;
    }
    return {text_.substr(start, pos_ - start), start};
  }

  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        line_start = k + 1;
      }
    }
    throw DocumentError(file_, line, offset - line_start + 1, message);
  }

private:
  void skip() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  const std::string& file_;
  std::size_t pos_ = 0;
};

Matrix parse_block(Scanner& in) {
  in.peek();
  const std::size_t open = in.position();
  in.expect('[');
  std::vector<std::vector<Gaussian>> rows(1);
  std::vector<std::size_t> row_start{in.position()};
  for (;;) {
    const char ch = in.peek();
    if (ch == '\0') in.fail(open, "unterminated '['");
    if (ch == ']') {
      in.advance();
      break;
    }
    if (ch == ';') {
      in.advance();
      rows.emplace_back();
      row_start.push_back(in.position());
      continue;
    }
    const auto [text, offset] = in.token();
    if (text.empty()) in.fail(offset, std::string("unexpected '") + ch + "'");
    try {
      rows.back().push_back(parse_scalar(text));
    } catch (const ParseError& e) {
      in.fail(offset + e.position(), "malformed entry '" + std::string(text) + "'");
    }
  }
  const std::size_t cols = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) in.fail(row_start[r], "empty row " + std::to_string(r + 1));
    if (rows[r].size() != cols) {
      in.fail(row_start[r], "row " + std::to_string(r + 1) + " has " +
                                std::to_string(rows[r].size()) + " entries, expected " +
                                std::to_string(cols));
    }
  }
  std::vector<Gaussian> entries;
  for (auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  return Matrix(rows.size(), cols, std::move(entries));
}

}  // namespace

MatrixDocument MatrixDocument::parse(std::string_view text, std::string file) {
  MatrixDocument doc;
  doc.file_ = std::move(file);
  Scanner in(text, doc.file_);
  while (!in.at_end()) {
    const std::size_t at = in.position();
    std::string name = in.name();
    if (doc.contains(name)) in.fail(at, "duplicate matrix name '" + name + "'");
    in.expect('=');
    Matrix m = parse_block(in);
    doc.matrices_.emplace_back(std::move(name), std::move(m));
  }
  return doc;
}

MatrixDocument MatrixDocument::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path, 0, 0, "cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

bool MatrixDocument::contains(std::string_view name) const {
  return std::any_of(matrices_.begin(), matrices_.end(),
                     [&](const auto& entry) { return entry.first == name; });
}

const Matrix& MatrixDocument::get(std::string_view name) const {
  for (const auto& [n, m] : matrices_) {
    if (n == name) return m;
  }
  throw DocumentError(file_, 0, 0, "no matrix named '" + std::string(name) + "'");
}

}  // namespace geninv::cli
