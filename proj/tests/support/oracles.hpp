#pragma once

// Test-only reference computations. Nothing here calls the library's
// elimination routines, so agreement with them is meaningful.

#include "geninv/matrix.hpp"
#include "geninv/scalar.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace geninv::testing {

// Cofactor expansion along the first row.
Gaussian cofactor_determinant(const Matrix& M);

// Largest k with a nonzero k x k minor, by enumerating all minors.
std::size_t minor_rank(const Matrix& M);

// Plain Gauss-Jordan reduced row echelon form (partial "first nonzero"
// pivoting, written independently of the library).
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // 0-based
};
Rref rref(const Matrix& M);
std::size_t rref_rank(const Matrix& M);

// Solves A x = c by RREF back-substitution: particular solution with free
// variables set to zero, plus one kernel vector per free column.
struct RrefSolution {
  Matrix particular;
  Matrix kernel;  // n x (n - rank)
};
std::optional<RrefSolution> rref_solve(const Matrix& A, const Matrix& c);

// Column spaces equal (mutual containment via ranks).
bool same_column_space(const Matrix& lhs, const Matrix& rhs);
bool in_column_space(const Matrix& basis, const Matrix& v);

class Generator {
public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  // p/q with |p| <= height, 1 <= q <= height; optional imaginary part.
  Gaussian scalar(long height, bool complex = false);
  Matrix matrix(std::size_t rows, std::size_t cols, long height, bool complex = false);
  // Product of random rows x r and r x cols integer factors (rank <= r,
  // almost always exactly r).
  Matrix matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t r, long height);

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace geninv::testing
