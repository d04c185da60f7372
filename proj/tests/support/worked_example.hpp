#pragma once

// The worked AXB = C instance and reference matrices that accompany it, entered
// verbatim as data.

#include "geninv/matrix.hpp"
#include "geninv/poly.hpp"

#include <string>
#include <vector>

namespace geninv::testing::example {

inline Matrix A() { return {{1, 2, 1}, {0, 1, 0}, {1, 1, 1}}; }
inline Matrix B() { return {{1, 1}, {1, 1}, {2, 2}}; }
inline Matrix C() { return {{-3, -3}, {-1, -1}, {-2, -2}}; }
inline Matrix X1() { return {{-7, 1, 1}, {-1, 0, 0}, {0, 1, 1}}; }

// A (x) B^T as given.
inline Matrix kron_system() {
  return {{1, 1, 2, 2, 2, 4, 1, 1, 2},
          {1, 1, 2, 2, 2, 4, 1, 1, 2},
          {0, 0, 0, 1, 1, 2, 0, 0, 0},
          {0, 0, 0, 1, 1, 2, 0, 0, 0},
          {1, 1, 2, 1, 1, 2, 1, 1, 2},
          {1, 1, 2, 1, 1, 2, 1, 1, 2}};
}

inline Matrix vec_C() { return Matrix::column({-3, -3, -1, -1, -2, -2}); }
inline Matrix c_prime() { return Matrix::column({-3, -1, 0, 0, 0, 0}); }

inline Matrix reference_Q() {
  return {{1, 0, 0, 0, 0, 0},  {0, 0, 1, 0, 0, 0}, {-1, 1, 0, 0, 0, 0},
          {0, 0, -1, 1, 0, 0}, {-1, 0, 1, 0, 1, 0}, {-1, 0, 1, 0, 0, 1}};
}

inline Matrix reference_P() {
  return {{1, -2, -1, -2, 0, 0, -1, -1, -2}, {0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0},       {0, 1, 0, 0, -1, -2, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0},       {0, 0, 0, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, -1, 0, 0},      {0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1}};
}

inline SymMatrix parse_sym(std::size_t rows, std::size_t cols,
                           const std::vector<std::string>& entries, Ring& ring) {
  std::vector<Poly> polys;
  for (const auto& e : entries) polys.push_back(parse_poly(e, ring));
  return SymMatrix(rows, cols, std::move(polys));
}

// Reference general {1}-inverse of A, parameters a, b, c, d, e.
inline SymMatrix reference_A1(Ring& ring) {
  return parse_sym(3, 3,
                   {"1-a+2b-c+e", "-2+a-2b-d-e", "a-2b-e",  //
                    "-b", "1+b", "b",                       //
                    "c-e", "d+e", "e"},
                   ring);
}

// Reference general {1}-inverse of B, parameters g, h, p, q, r.
inline SymMatrix reference_B1(Ring& ring) {
  return parse_sym(2, 3,
                   {"1-g-2h-p+q+2r", "g-q", "h-r",  //
                    "p-q-2r", "q", "r"},
                   ring);
}

// Reference X0 = A1 C B1.
inline SymMatrix reference_X0(Ring& ring) {
  return parse_sym(3, 3,
                   {"-1+3c+d+g+2h-3cg-6ch-dg-2dh", "-g+3cg+dg", "-h+3ch+dh",  //
                    "-1+g+2h", "-g", "-h",                                  //
                    "-3c+3cg+6ch-d+dg+2dh", "-3cg-dg", "-3ch-dh"},
                   ring);
}

// Reference vec(X) of the general solution in v_{1,1} .. v_{7,1}.
inline SymMatrix reference_vec_solution(Ring& ring) {
  return parse_sym(9, 1,
                   {"-1-v_{1,1}-2v_{2,1}-v_{5,1}-v_{6,1}-2v_{7,1}", "v_{1,1}", "v_{2,1}",
                    "-1-v_{3,1}-2v_{4,1}", "v_{3,1}", "v_{4,1}", "v_{5,1}", "v_{6,1}",
                    "v_{7,1}"},
                   ring);
}

}  // namespace geninv::testing::example
