#pragma once
// Sparse multivariate polynomials over exact rationals, up to 8 variables.
// This is the engine that proves identities by full canonical expansion
// (rational-point spot checks are used in tests, but equality of canonical
// forms is what decides every identity).
#include "hopf/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hopf {

// Exponent vector packed one byte per variable (variable i in byte i).
// Total degree stays far below 255 per variable for everything checked here.
using Monomial = std::uint64_t;

struct MultiPoly {
  int nvars = 0;
  // Sorted by monomial key, ascending; no zero coefficients stored.
  std::vector<std::pair<Monomial, Rational>> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
};

MultiPoly mp_zero(int nvars);
MultiPoly mp_const(int nvars, const Rational& c);
MultiPoly mp_var(int nvars, int i);                      // the polynomial x_i
MultiPoly mp_monomial(int nvars, const std::vector<int>& exps,
                      const Rational& c);

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_scale(const MultiPoly& a, const Rational& c);
MultiPoly mp_neg(const MultiPoly& a);
MultiPoly mp_pow(const MultiPoly& a, int e);
Rational mp_eval(const MultiPoly& a, const RatVec& point);
MultiPoly mp_derivative(const MultiPoly& a, int var);
int mp_total_degree(const MultiPoly& a);
std::string mp_to_string(const MultiPoly& a);  // for diagnostics

// Remainder of p modulo (sum of squares of all nvars variables) - 1, using
// the substitution x0^2 -> 1 - x1^2 - ... - x_{n-1}^2 until the degree of p
// in x0 is at most 1. Idempotent; agrees with p at every exact unit vector.
MultiPoly reduce_mod_sphere(const MultiPoly& p);

// True iff p - q expands to the zero polynomial (after reduce_mod_sphere on
// both when mod_sphere is set). Decided by canonical form, never sampling.
bool poly_identity_check(const MultiPoly& p, const MultiPoly& q,
                         bool mod_sphere = false);

struct PolyMatrix {
  int rows = 0, cols = 0;
  std::vector<MultiPoly> entries;  // row-major

  MultiPoly& at(int r, int c) { return entries[r * cols + c]; }
  const MultiPoly& at(int r, int c) const { return entries[r * cols + c]; }
};

PolyMatrix poly_matrix(int rows, int cols, int nvars);
PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_mat_transpose(const PolyMatrix& a);
RatMat poly_mat_eval(const PolyMatrix& a, const RatVec& point);

// Exact determinant, square matrices up to 6x6, by Laplace expansion over
// column subsets with memoization (every subset minor computed once).
MultiPoly poly_det(const PolyMatrix& m);

}  // namespace hopf
