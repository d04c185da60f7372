#include "geninv/one_inverse.hpp"

#include "geninv/error.hpp"

namespace geninv {

namespace {

// Assembles the n x m middle factor [[I_a, U], [V, W]] row-major. Shared by
// the numeric and symbolic paths; `block(which, i, j)` supplies U/V/W entries
// with 1-based indices local to the block.
template <typename Entry, typename BlockEntry>
std::vector<Entry> assemble_middle(std::size_t n, std::size_t m, std::size_t a,
                                   BlockEntry&& block) {
  std::vector<Entry> out(n * m);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      Entry& e = out[(i - 1) * m + (j - 1)];
      if (i <= a && j <= a) {
        e = Entry(i == j ? 1 : 0);
      } else if (i <= a) {
        e = block('u', i, j - a);
      } else if (j <= a) {
        e = block('v', i - a, j);
      } else {
        e = block('w', i - a, j - a);
      }
    }
  }
  return out;
}

void require_shape(const Matrix& block, const BlockShape& shape, const char* name) {
  if (block.rows() != shape.rows || block.cols() != shape.cols) {
    throw DimensionError(std::string("block ") + name + " must be " +
                         std::to_string(shape.rows) + "x" + std::to_string(shape.cols) +
                         ", got " + block.shape());
  }
}

}  // namespace

std::vector<Variable> SymbolicFamily::parameters() const {
  std::vector<Variable> out = u;
  out.insert(out.end(), v.begin(), v.end());
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

OneInverseFamily::OneInverseFamily(const Matrix& A)
    : m_(A.rows()), n_(A.cols()), rnf_(rank_normal_form(A)) {}

std::size_t OneInverseFamily::parameter_count() const {
  return m_ * n_ - rnf_.rank * rnf_.rank;
}

Matrix OneInverseFamily::instantiate(const Matrix& U, const Matrix& V, const Matrix& W) const {
  require_shape(U, u_shape(), "U");
  require_shape(V, v_shape(), "V");
  require_shape(W, w_shape(), "W");
  auto middle = assemble_middle<Gaussian>(n_, m_, rnf_.rank,
      [&](char which, std::size_t i, std::size_t j) -> Gaussian {
        switch (which) {
          case 'u': return U(i, j);
          case 'v': return V(i, j);
          default: return W(i, j);
        }
      });
  return rnf_.P * Matrix(n_, m_, std::move(middle)) * rnf_.Q;
}

Matrix OneInverseFamily::canonical() const {
  return instantiate(Matrix::zero(u_shape().rows, u_shape().cols),
                     Matrix::zero(v_shape().rows, v_shape().cols),
                     Matrix::zero(w_shape().rows, w_shape().cols));
}

SymbolicFamily OneInverseFamily::symbolic(Ring& ring, const NameScheme& names) const {
  const std::size_t k = parameter_count();
  if (!names.names.empty() && names.names.size() < k) {
    throw ContractError("symbolic family needs " + std::to_string(k) + " names, got " +
                        std::to_string(names.names.size()));
  }

  SymbolicFamily out;
  std::size_t next = 0;
  auto make_block = [&](const BlockShape& shape, const std::string& prefix,
                        std::vector<Variable>& vars) {
    for (std::size_t i = 1; i <= shape.rows; ++i) {
      for (std::size_t j = 1; j <= shape.cols; ++j) {
        std::string name = names.names.empty()
            ? prefix + "_{" + std::to_string(i) + "," + std::to_string(j) + "}"
            : names.names[next++];
        vars.push_back(ring.add(std::move(name)));
      }
    }
  };
  make_block(u_shape(), names.u, out.u);
  make_block(v_shape(), names.v, out.v);
  make_block(w_shape(), names.w, out.w);

  auto middle = assemble_middle<Poly>(n_, m_, rnf_.rank,
      [&](char which, std::size_t i, std::size_t j) -> Poly {
        switch (which) {
          case 'u': return Poly::variable(out.u[(i - 1) * u_shape().cols + (j - 1)]);
          case 'v': return Poly::variable(out.v[(i - 1) * v_shape().cols + (j - 1)]);
          default: return Poly::variable(out.w[(i - 1) * w_shape().cols + (j - 1)]);
        }
      });
  out.inverse = SymMatrix(rnf_.P) * SymMatrix(n_, m_, std::move(middle)) * SymMatrix(rnf_.Q);
  return out;
}

OneInverseFamily family_from(const Matrix& A) { return OneInverseFamily(A); }

bool is_one_inverse(const Matrix& A, const Matrix& G) {
  if (G.rows() != A.cols() || G.cols() != A.rows()) {
    throw DimensionError("a {1}-inverse of a " + A.shape() + " matrix must be " +
                         std::to_string(A.cols()) + "x" + std::to_string(A.rows()) +
                         ", got " + G.shape());
  }
  return A * G * A == A;
}

SymbolicFamily symbolic_family(const Matrix& A, Ring& ring, const NameScheme& names) {
  return OneInverseFamily(A).symbolic(ring, names);
}

}  // namespace geninv
