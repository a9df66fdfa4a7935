#include "hopf/multipoly.hpp"

#include <doctest.h>

using namespace hopf;

namespace {

MultiPoly x(int i) { return mp_var(4, i); }

}  // namespace

TEST_CASE("polynomial arithmetic reaches canonical form") {
  MultiPoly sum = mp_add(x(0), x(1));
  MultiPoly sq = mp_mul(sum, sum);
  MultiPoly expect = mp_add(
      mp_add(mp_mul(x(0), x(0)), mp_scale(mp_mul(x(0), x(1)), rat(2))),
      mp_mul(x(1), x(1)));
  CHECK(sq == expect);
  CHECK(mp_sub(sq, expect).is_zero());
  CHECK(mp_pow(sum, 2) == sq);
  CHECK(mp_pow(sum, 0) == mp_const(4, rat(1)));
  CHECK(mp_add(x(0), mp_neg(x(0))).is_zero());
  CHECK(mp_total_degree(sq) == 2);
}

TEST_CASE("evaluation and derivative") {
  // p = x0^2 x1 + 3 x2
  MultiPoly p = mp_add(mp_mul(mp_mul(x(0), x(0)), x(1)),
                       mp_scale(x(2), rat(3)));
  RatVec pt = {rat(2), rat(3), rat(-1), rat(5)};
  CHECK(mp_eval(p, pt) == 12 - 3);
  CHECK(mp_derivative(p, 0) == mp_scale(mp_mul(x(0), x(1)), rat(2)));
  CHECK(mp_derivative(p, 2) == mp_const(4, rat(3)));
  CHECK(mp_derivative(p, 3).is_zero());
}

TEST_CASE("reduction modulo the unit-sphere relation") {
  MultiPoly sumsq = mp_zero(4);
  for (int i = 0; i < 4; ++i) sumsq = mp_add(sumsq, mp_mul(x(i), x(i)));
  MultiPoly one = mp_const(4, rat(1));

  CHECK(poly_identity_check(sumsq, one, /*mod_sphere=*/true));
  CHECK_FALSE(poly_identity_check(sumsq, one, /*mod_sphere=*/false));

  // Idempotence and agreement with evaluation at an exact unit vector.
  MultiPoly p = mp_add(mp_mul(mp_mul(x(0), x(0)), mp_mul(x(0), x(1))), x(2));
  MultiPoly r = reduce_mod_sphere(p);
  CHECK(reduce_mod_sphere(r) == r);
  RatVec unit = {rat(3, 5), rat(4, 5), rat(0), rat(0)};
  CHECK(mp_eval(r, unit) == mp_eval(p, unit));

  // (sum of squares)^2 reduces to 1 as well.
  CHECK(poly_identity_check(mp_mul(sumsq, sumsq), one, /*mod_sphere=*/true));
}

TEST_CASE("polynomial matrices multiply and transpose") {
  PolyMatrix m = poly_matrix(2, 2, 4);
  m.at(0, 0) = x(0);
  m.at(0, 1) = mp_const(4, rat(1));
  m.at(1, 0) = mp_zero(4);
  m.at(1, 1) = x(0);

  PolyMatrix sq = poly_mat_mul(m, m);
  CHECK(sq.at(0, 0) == mp_mul(x(0), x(0)));
  CHECK(sq.at(0, 1) == mp_scale(x(0), rat(2)));
  CHECK(sq.at(1, 0).is_zero());

  PolyMatrix t = poly_mat_transpose(m);
  CHECK(t.at(1, 0) == mp_const(4, rat(1)));
  CHECK(t.at(0, 1).is_zero());

  RatMat ev = poly_mat_eval(m, {rat(7), rat(0), rat(0), rat(0)});
  CHECK(ev == RatMat{{rat(7), rat(1)}, {rat(0), rat(7)}});
}

TEST_CASE("polynomial determinants") {
  PolyMatrix m = poly_matrix(2, 2, 4);
  m.at(0, 0) = x(0);
  m.at(0, 1) = mp_const(4, rat(1));
  m.at(1, 0) = mp_zero(4);
  m.at(1, 1) = x(0);
  CHECK(poly_det(m) == mp_mul(x(0), x(0)));

  PolyMatrix d = poly_matrix(3, 3, 4);
  d.at(0, 0) = x(0);
  d.at(1, 1) = x(1);
  d.at(2, 2) = x(2);
  CHECK(poly_det(d) == mp_mul(mp_mul(x(0), x(1)), x(2)));

  // Equal rows give determinant zero.
  PolyMatrix s = poly_matrix(2, 2, 4);
  s.at(0, 0) = x(0);
  s.at(0, 1) = x(1);
  s.at(1, 0) = x(0);
  s.at(1, 1) = x(1);
  CHECK(poly_det(s).is_zero());
}

TEST_CASE("monomial constructor matches built-up products") {
  MultiPoly viaMono = mp_monomial(4, {2, 1, 0, 0}, rat(5));
  MultiPoly built =
      mp_scale(mp_mul(mp_mul(x(0), x(0)), x(1)), rat(5));
  CHECK(viaMono == built);
}
