#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geninv {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

// `position` is a 0-based character offset into the parsed text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class SingularMatrixError : public Error {
public:
  using Error::Error;
};

// A documented precondition was violated by the caller (e.g. a supplied
// matrix is not a {1}-inverse, or a supplied X0 does not solve AXB = C).
class ContractError : public Error {
public:
  using Error::Error;
};

class UnboundVariableError : public Error {
public:
  using Error::Error;
};

}  // namespace geninv
