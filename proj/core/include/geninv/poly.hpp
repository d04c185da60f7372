#pragma once

// Sparse multivariate polynomials over the Gaussian rationals, and dense
// matrices of them. Enough algebra to carry parametric {1}-inverses through
// products and to feed the representability probe; no GCDs, no ideals.

#include "geninv/matrix.hpp"
#include "geninv/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace geninv {

struct Variable {
  std::string name;
  std::size_t id = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Owns the variable names of one symbolic computation. Ids are assigned
// densely in creation order; names must be unique.
class Ring {
public:
  // Throws ContractError on a duplicate name.
  Variable add(std::string name);
  std::optional<Variable> find(const std::string& name) const;
  const std::string& name(std::size_t id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

// Sparse exponent vector: (variable id, exponent) pairs sorted by id, no
// zero exponents.
using Monomial = std::vector<std::pair<std::size_t, std::uint32_t>>;

std::uint32_t total_degree(const Monomial& m);

// Graded order: lower total degree first; within a degree, a monomial with a
// larger exponent on the smallest differing variable id comes first. For
// variables c < d < g < h this yields 1, c, d, g, h, cg, ch, dg, dh.
struct GradedLexOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

// Variable id -> value.
using Assignment = std::map<std::size_t, Gaussian>;

class Poly {
public:
  using Terms = std::map<Monomial, Gaussian, GradedLexOrder>;

  Poly() = default;
  Poly(Gaussian constant);  // NOLINT(implicit)
  Poly(long constant) : Poly(Gaussian(constant)) {}  // NOLINT(implicit)
  static Poly variable(const Variable& v) { return variable(v.id); }
  static Poly variable(std::size_t id);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the empty monomial.
  Gaussian constant_term() const;
  Gaussian coefficient(const Monomial& m) const;
  // Coefficient of the degree-1 monomial of `id`.
  Gaussian linear_coefficient(std::size_t id) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  // Highest combined exponent of the given variables over all terms.
  int degree_in(const std::set<std::size_t>& ids) const;
  std::set<std::size_t> variables() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Gaussian& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Replace variable `id` by `replacement` everywhere.
  Poly substitute(std::size_t id, const Poly& replacement) const;
  // Simultaneous substitution.
  Poly substitute(const std::map<std::size_t, Poly>& replacements) const;
  // Substitute the assigned variables, keep the rest symbolic.
  Poly partial_evaluate(const Assignment& values) const;
  // Throws UnboundVariableError if any variable is unassigned.
  Gaussian evaluate(const Assignment& values) const;

  // Compact rendering, e.g. "-1+3c+d+g+2h-3cg". Multi-character names are
  // joined with '*'.
  std::string render(const Ring& ring) const;

private:
  void add_term(const Monomial& m, const Gaussian& coeff);

  Terms terms_;
};

// Dense matrix of polynomials, row-major, 1-based access like Matrix.
class SymMatrix {
public:
  SymMatrix() = default;
  SymMatrix(std::size_t rows, std::size_t cols);
  SymMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);
  explicit SymMatrix(const Matrix& constants);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Poly>& entries() const { return entries_; }

  Poly& operator()(std::size_t row, std::size_t col) {
    return entries_[(row - 1) * cols_ + (col - 1)];
  }
  const Poly& operator()(std::size_t row, std::size_t col) const {
    return entries_[(row - 1) * cols_ + (col - 1)];
  }

  bool is_zero() const;
  std::set<std::size_t> variables() const;

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator-=(const SymMatrix& other);
  friend SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
  friend SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs) { return lhs -= rhs; }
  friend SymMatrix operator*(const SymMatrix& lhs, const SymMatrix& rhs);
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

  SymMatrix partial_evaluate(const Assignment& values) const;
  Matrix evaluate(const Assignment& values) const;

  std::string shape() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

SymMatrix sym_matmul(const SymMatrix& lhs, const SymMatrix& rhs);

// Splits a system into its degree <= 1 members and the rest, preserving order.
struct AffineSplit {
  std::vector<Poly> affine;
  std::vector<Poly> residual;
};
AffineSplit affine_decompose(const std::vector<Poly>& system);

// Parses a polynomial in the rendering syntax ("1-a+2b-c+e", "-3c*g-d*g",
// "v_{1,1}/3"), creating variables in `ring` on first sight. Single-letter
// juxtaposition ("3cg") denotes a product.
Poly parse_poly(std::string_view text, Ring& ring);

}  // namespace geninv
