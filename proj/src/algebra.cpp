#include "hopf/algebra.hpp"

#include <stdexcept>

namespace hopf {

namespace {

// Octonion basis products, row i = left factor, column j = right factor.
// Entry "-3" means -e3. Transcribed once; everything table-driven reads this.
constexpr int kOctSigned[8][8] = {
    {+0, +1, +2, +3, +4, +5, +6, +7},
    {+1, -0, +3, -2, +5, -4, -7, +6},
    {+2, -3, -0, +1, +6, +7, -4, -5},
    {+3, +2, -1, -0, +7, -6, +5, -4},
    {+4, -5, -6, -7, -0, +1, +2, +3},
    {+5, +4, -7, +6, -1, -0, -3, +2},
    {+6, +7, +4, -5, -2, +3, -0, -1},
    {+7, -6, +5, +4, -3, -2, +1, -0},
};
// Sign grid for the entries above ("+0" vs "-0" cannot carry sign in an int).
constexpr int kOctSign[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

MultiplicationTable make_table(int dim) {
  MultiplicationTable t;
  t.dim = dim;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      t.sign[i][j] = kOctSign[i][j];
      t.index[i][j] = kOctSigned[i][j] < 0 ? -kOctSigned[i][j] : kOctSigned[i][j];
    }
  return t;
}

void check_dim(int dim) {
  if (dim != 2 && dim != 4 && dim != 8)
    throw std::invalid_argument("algebra dimension must be 2, 4, or 8");
}

// The 64 signed terms of the dimension-8 product, written out literally as
// (sign, left coefficient index, right coefficient index) per output
// coordinate. This is a second, independent encoding of the product; it is
// deliberately NOT generated from the table above.
struct FormulaTerm {
  int sign, xi, yj;
};
constexpr FormulaTerm kFormula[8][8] = {
    {{+1, 0, 0}, {-1, 1, 1}, {-1, 2, 2}, {-1, 3, 3}, {-1, 4, 4}, {-1, 5, 5}, {-1, 6, 6}, {-1, 7, 7}},
    {{+1, 1, 0}, {+1, 0, 1}, {-1, 3, 2}, {+1, 2, 3}, {-1, 5, 4}, {+1, 4, 5}, {+1, 7, 6}, {-1, 6, 7}},
    {{+1, 2, 0}, {+1, 3, 1}, {+1, 0, 2}, {-1, 1, 3}, {-1, 6, 4}, {-1, 7, 5}, {+1, 4, 6}, {+1, 5, 7}},
    {{+1, 3, 0}, {-1, 2, 1}, {+1, 1, 2}, {+1, 0, 3}, {-1, 7, 4}, {+1, 6, 5}, {-1, 5, 6}, {+1, 4, 7}},
    {{+1, 4, 0}, {+1, 5, 1}, {+1, 6, 2}, {+1, 7, 3}, {+1, 0, 4}, {-1, 1, 5}, {-1, 2, 6}, {-1, 3, 7}},
    {{+1, 5, 0}, {-1, 4, 1}, {+1, 7, 2}, {-1, 6, 3}, {+1, 1, 4}, {+1, 0, 5}, {+1, 3, 6}, {-1, 2, 7}},
    {{+1, 6, 0}, {-1, 7, 1}, {-1, 4, 2}, {+1, 5, 3}, {+1, 2, 4}, {-1, 3, 5}, {+1, 0, 6}, {+1, 1, 7}},
    {{+1, 7, 0}, {+1, 6, 1}, {-1, 5, 2}, {-1, 4, 3}, {+1, 3, 4}, {+1, 2, 5}, {-1, 1, 6}, {+1, 0, 7}},
};

}  // namespace

const MultiplicationTable& multiplication_table(int dim) {
  check_dim(dim);
  static const MultiplicationTable t2 = make_table(2);
  static const MultiplicationTable t4 = make_table(4);
  static const MultiplicationTable t8 = make_table(8);
  switch (dim) {
    case 2: return t2;
    case 4: return t4;
    default: return t8;
  }
}

AlgebraElement algebra_element(int dim, RatVec coeffs) {
  check_dim(dim);
  if (static_cast<int>(coeffs.size()) != dim)
    throw std::invalid_argument("coefficient count does not match dimension");
  return AlgebraElement{dim, std::move(coeffs)};
}

AlgebraElement basis_element(int dim, int i) {
  check_dim(dim);
  if (i < 0 || i >= dim) throw std::out_of_range("basis index out of range");
  RatVec c(dim, Rational(0));
  c[i] = 1;
  return AlgebraElement{dim, std::move(c)};
}

std::pair<int, int> basis_product(int dim, int i, int j) {
  const MultiplicationTable& t = multiplication_table(dim);
  if (i < 0 || i >= dim || j < 0 || j >= dim)
    throw std::out_of_range("basis index out of range");
  return {t.sign[i][j], t.index[i][j]};
}

AlgebraElement mul_with_table(const AlgebraElement& a, const AlgebraElement& b,
                              const MultiplicationTable& table) {
  if (a.dim != b.dim || a.dim != table.dim)
    throw std::invalid_argument("algebra dimension mismatch");
  RatVec out(a.dim, Rational(0));
  for (int i = 0; i < a.dim; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < b.dim; ++j) {
      if (b.coeffs[j] == 0) continue;
      Rational term = a.coeffs[i] * b.coeffs[j];
      if (table.sign[i][j] < 0) term = -term;
      out[table.index[i][j]] += term;
    }
  }
  return AlgebraElement{a.dim, std::move(out)};
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("algebra dimension mismatch");
  return mul_with_table(a, b, multiplication_table(a.dim));
}

AlgebraElement octonion_formula_mul(const AlgebraElement& a,
                                    const AlgebraElement& b) {
  if (a.dim != 8 || b.dim != 8)
    throw std::invalid_argument("formula product is dimension-8 only");
  RatVec out(8, Rational(0));
  for (int k = 0; k < 8; ++k)
    for (const FormulaTerm& t : kFormula[k]) {
      Rational term = a.coeffs[t.xi] * b.coeffs[t.yj];
      out[k] += t.sign < 0 ? -term : term;
    }
  return AlgebraElement{8, std::move(out)};
}

AlgebraElement conjugate(const AlgebraElement& a) {
  AlgebraElement out = a;
  for (int i = 1; i < a.dim; ++i) out.coeffs[i] = -out.coeffs[i];
  return out;
}

Rational norm_sq(const AlgebraElement& a) { return dot(a.coeffs, a.coeffs); }

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("algebra dimension mismatch");
  AlgebraElement out = a;
  for (int i = 0; i < a.dim; ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("algebra dimension mismatch");
  AlgebraElement out = a;
  for (int i = 0; i < a.dim; ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c) {
  return sub(mul(mul(a, b), c), mul(a, mul(b, c)));
}

}  // namespace hopf
