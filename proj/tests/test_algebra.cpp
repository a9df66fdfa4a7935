#include "hopf/algebra.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hopf;

namespace {

bool equal(const AlgebraElement& a, const AlgebraElement& b) {
  return a.dim == b.dim && a.coeffs == b.coeffs;
}

AlgebraElement elem(int dim, std::vector<long> ints) {
  RatVec c;
  for (long v : ints) c.push_back(rat(v));
  return algebra_element(dim, std::move(c));
}

}  // namespace

TEST_CASE("quaternion basis cycle") {
  CHECK(basis_product(4, 1, 2) == std::make_pair(1, 3));
  CHECK(basis_product(4, 2, 3) == std::make_pair(1, 1));
  CHECK(basis_product(4, 3, 1) == std::make_pair(1, 2));
  CHECK(basis_product(4, 2, 1) == std::make_pair(-1, 3));
  CHECK(basis_product(4, 1, 1) == std::make_pair(-1, 0));
}

TEST_CASE("octonion basis products match the frozen table entries") {
  CHECK(basis_product(8, 1, 4) == std::make_pair(1, 5));
  CHECK(basis_product(8, 2, 4) == std::make_pair(1, 6));
  CHECK(basis_product(8, 3, 4) == std::make_pair(1, 7));
  CHECK(basis_product(8, 4, 5) == std::make_pair(1, 1));
  CHECK(basis_product(8, 4, 1) == std::make_pair(-1, 5));
  CHECK(basis_product(8, 1, 6) == std::make_pair(-1, 7));
  CHECK(basis_product(8, 6, 7) == std::make_pair(-1, 1));
  CHECK(basis_product(8, 7, 7) == std::make_pair(-1, 0));
}

TEST_CASE("identity row and column, imaginary diagonal") {
  for (int dim : {2, 4, 8}) {
    for (int j = 0; j < dim; ++j) {
      CHECK(basis_product(dim, 0, j) == std::make_pair(1, j));
      CHECK(basis_product(dim, j, 0) == std::make_pair(1, j));
    }
    for (int i = 1; i < dim; ++i) {
      CHECK(basis_product(dim, i, i) == std::make_pair(-1, 0));
    }
  }
  CHECK_THROWS_AS(basis_product(8, 0, 8), std::out_of_range);
  CHECK_THROWS_AS(multiplication_table(3), std::invalid_argument);
}

TEST_CASE("table product equals the written-out bilinear formula") {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      AlgebraElement lhs = mul(basis_element(8, i), basis_element(8, j));
      AlgebraElement rhs =
          octonion_formula_mul(basis_element(8, i), basis_element(8, j));
      CHECK(equal(lhs, rhs));
    }
  }
  AlgebraElement a = elem(8, {1, 2, -3, 4, 5, -6, 7, 8});
  AlgebraElement b = elem(8, {-2, 1, 4, -3, 6, 5, -8, 7});
  CHECK(equal(mul(a, b), octonion_formula_mul(a, b)));
  CHECK(equal(mul(b, a), octonion_formula_mul(b, a)));
}

TEST_CASE("a corrupted table entry is caught by the dual-route comparison") {
  // Negative control: the two product encodings are independent, so flipping
  // one sign in a copy of the table must produce a detectable disagreement.
  MultiplicationTable bad = multiplication_table(8);
  bad.sign[1][2] = -bad.sign[1][2];
  AlgebraElement viaBad =
      mul_with_table(basis_element(8, 1), basis_element(8, 2), bad);
  AlgebraElement viaFormula =
      octonion_formula_mul(basis_element(8, 1), basis_element(8, 2));
  CHECK_FALSE(equal(viaBad, viaFormula));
  // Untouched entries still agree.
  CHECK(equal(mul_with_table(basis_element(8, 1), basis_element(8, 3), bad),
              octonion_formula_mul(basis_element(8, 1), basis_element(8, 3))));
}

TEST_CASE("norm is multiplicative") {
  AlgebraElement a = elem(8, {1, 2, -3, 4, 5, -6, 7, 8});
  AlgebraElement b = elem(8, {-2, 1, 4, -3, 6, 5, -8, 7});
  CHECK(norm_sq(mul(a, b)) == norm_sq(a) * norm_sq(b));

  AlgebraElement q1 = elem(4, {1, -2, 3, -4});
  AlgebraElement q2 = elem(4, {5, 6, -7, 8});
  CHECK(norm_sq(mul(q1, q2)) == norm_sq(q1) * norm_sq(q2));

  AlgebraElement c1 = elem(2, {3, 4});
  AlgebraElement c2 = elem(2, {-5, 12});
  CHECK(norm_sq(mul(c1, c2)) == norm_sq(c1) * norm_sq(c2));
}

TEST_CASE("conjugation reverses products and is an involution") {
  AlgebraElement a = elem(8, {1, 2, -3, 4, 5, -6, 7, 8});
  AlgebraElement b = elem(8, {-2, 1, 4, -3, 6, 5, -8, 7});
  CHECK(equal(conjugate(mul(a, b)), mul(conjugate(b), conjugate(a))));
  CHECK(equal(conjugate(conjugate(a)), a));
  // a * conj(a) is real with value |a|^2.
  AlgebraElement n = mul(a, conjugate(a));
  CHECK(n.coeffs[0] == norm_sq(a));
  for (int i = 1; i < 8; ++i) CHECK(n.coeffs[i] == 0);
}

TEST_CASE("associativity holds in dims 2 and 4, fails in dim 8") {
  AlgebraElement q1 = elem(4, {1, -2, 3, -4});
  AlgebraElement q2 = elem(4, {5, 6, -7, 8});
  AlgebraElement q3 = elem(4, {0, 1, 1, -1});
  CHECK(norm_sq(associator(q1, q2, q3)) == 0);

  AlgebraElement witness =
      associator(basis_element(8, 1), basis_element(8, 2), basis_element(8, 4));
  CHECK(norm_sq(witness) != 0);
}

TEST_CASE("dimension-2 product is commutative") {
  AlgebraElement c1 = elem(2, {3, 4});
  AlgebraElement c2 = elem(2, {-5, 12});
  CHECK(equal(mul(c1, c2), mul(c2, c1)));
}

TEST_CASE("add and sub are componentwise") {
  AlgebraElement a = elem(4, {1, 2, 3, 4});
  AlgebraElement b = elem(4, {4, 3, 2, 1});
  CHECK(equal(add(a, b), elem(4, {5, 5, 5, 5})));
  CHECK(equal(sub(a, b), elem(4, {-3, -1, 1, 3})));
}
