#pragma once
// Exact arithmetic in the real division algebras of dimension 2, 4, 8
// (complex numbers, quaternions, octonions). Two independent product
// encodings are kept on purpose: the basis multiplication table and the
// fully written-out bilinear formula for dimension 8. Tests cross-check
// them against each other; neither is derived from the other in code.
#include "hopf/linalg.hpp"

#include <array>
#include <utility>

namespace hopf {

struct MultiplicationTable {
  int dim = 8;                                   // 2, 4, or 8
  std::array<std::array<int, 8>, 8> sign{};      // +1 / -1
  std::array<std::array<int, 8>, 8> index{};     // basis index of e_i * e_j
};

// The canonical table for a given dimension (2, 4, or 8).
const MultiplicationTable& multiplication_table(int dim);

struct AlgebraElement {
  int dim = 8;
  RatVec coeffs;  // length dim; coefficient of basis element e_i at index i
};

AlgebraElement algebra_element(int dim, RatVec coeffs);
AlgebraElement basis_element(int dim, int i);

// (sign, index) of e_i * e_j; table lookup.
std::pair<int, int> basis_product(int dim, int i, int j);

// Bilinear product over the canonical multiplication table.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

// Same expansion but over a caller-supplied table. Exists so tests can
// demonstrate that a corrupted table is actually caught by the checks
// (mutation negative control); production code always uses `mul`.
AlgebraElement mul_with_table(const AlgebraElement& a, const AlgebraElement& b,
                              const MultiplicationTable& table);

// Independent dimension-8 product: the expanded coordinate formula with all
// 64 signed terms written out literally. Used only to cross-check `mul`.
AlgebraElement octonion_formula_mul(const AlgebraElement& a,
                                    const AlgebraElement& b);

AlgebraElement conjugate(const AlgebraElement& a);  // negate coeffs 1..dim-1
Rational norm_sq(const AlgebraElement& a);          // sum of squared coeffs

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);

// (a*b)*c - a*(b*c); zero for dims 2 and 4, nonzero for some dim-8 triples.
AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c);

}  // namespace hopf
