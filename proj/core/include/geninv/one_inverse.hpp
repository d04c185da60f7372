#pragma once

// Parametric family of all {1}-inverses (solutions G of A G A = A) of a
// matrix A, in the block form
//
//   G = P * [ I_a  U ] * Q        with Q A P = E_a, a = rank(A),
//           [ V    W ]
//
// U is a x (m-a), V is (n-a) x a and W is (n-a) x (m-a), so the family has
// k = m n - a^2 free parameters.

#include "geninv/matrix.hpp"
#include "geninv/poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace geninv {

struct BlockShape {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t size() const { return rows * cols; }
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

// How to name the k parameters of a symbolic family. Either explicit names
// (consumed in U, V, W order, each block row-major) or generated names
// "<u>_{i,j}", "<v>_{i,j}", "<w>_{i,j}".
struct NameScheme {
  std::vector<std::string> names;
  std::string u = "u";
  std::string v = "v";
  std::string w = "w";

  static NameScheme explicit_names(std::vector<std::string> names) {
    NameScheme s;
    s.names = std::move(names);
    return s;
  }
  static NameScheme blocks(std::string u, std::string v, std::string w) {
    return {{}, std::move(u), std::move(v), std::move(w)};
  }
};

// A matrix whose entries are affine in a list of parameters; any assignment
// of the parameters gives a member of some set (here: A{1}).
struct ParametricMatrix {
  SymMatrix matrix;
  std::vector<Variable> parameters;

  Matrix instantiate(const Assignment& values) const { return matrix.evaluate(values); }
};

// Symbolic family with the parameter variables grouped by block (row-major).
struct SymbolicFamily {
  SymMatrix inverse;
  std::vector<Variable> u;
  std::vector<Variable> v;
  std::vector<Variable> w;

  std::vector<Variable> parameters() const;
  ParametricMatrix parametric() const { return {inverse, parameters()}; }
};

class OneInverseFamily {
public:
  explicit OneInverseFamily(const Matrix& A);

  std::size_t source_rows() const { return m_; }
  std::size_t source_cols() const { return n_; }
  std::size_t rank() const { return rnf_.rank; }
  const RankNormalForm& rnf() const { return rnf_; }

  BlockShape u_shape() const { return {rnf_.rank, m_ - rnf_.rank}; }
  BlockShape v_shape() const { return {n_ - rnf_.rank, rnf_.rank}; }
  BlockShape w_shape() const { return {n_ - rnf_.rank, m_ - rnf_.rank}; }
  // m n - a^2
  std::size_t parameter_count() const;

  // P [[I, U], [V, W]] Q; throws DimensionError on block shape mismatch.
  Matrix instantiate(const Matrix& U, const Matrix& V, const Matrix& W) const;
  // The member with zero U, V, W blocks.
  Matrix canonical() const;

  // Throws ContractError if an explicit name list is shorter than k, or a
  // name already exists in `ring`.
  SymbolicFamily symbolic(Ring& ring, const NameScheme& names = {}) const;

private:
  std::size_t m_;
  std::size_t n_;
  RankNormalForm rnf_;
};

OneInverseFamily family_from(const Matrix& A);

// True iff A G A == A. Throws DimensionError unless G is n x m for A m x n.
bool is_one_inverse(const Matrix& A, const Matrix& G);

SymbolicFamily symbolic_family(const Matrix& A, Ring& ring, const NameScheme& names = {});

}  // namespace geninv
