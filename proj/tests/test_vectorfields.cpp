#include "hopf/vectorfields.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hopf;

TEST_CASE("sphere points validate exact unit norm") {
  CHECK_NOTHROW(sphere_point({rat(3, 5), rat(4, 5), rat(0), rat(0)}));
  CHECK_THROWS_AS(sphere_point({rat(1), rat(1), rat(0), rat(0)}),
                  std::invalid_argument);
  SpherePoint p = basis_point(4, 1, -1);
  CHECK(p.coords == RatVec{rat(0), rat(-1), rat(0), rat(0)});
}

TEST_CASE("dim-4 frame matrices are the frozen patterns") {
  const auto& frame = invariant_frame(4);
  REQUIRE(frame.size() == 4);
  CHECK(frame[0].mat == IntMat{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                               {0, 0, 0, 1}});
  CHECK(frame[1].mat == IntMat{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1},
                               {0, 0, 1, 0}});
  CHECK(frame[2].mat == IntMat{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0},
                               {0, -1, 0, 0}});
  CHECK(frame[3].mat == IntMat{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0},
                               {1, 0, 0, 0}});
  CHECK(vertical_field(4).mat == frame[1].mat);
  CHECK(vertical_field(8).mat == invariant_frame(8)[1].mat);
}

TEST_CASE("right translation at the identity basis point is the identity") {
  RatMat r4 = right_translation_matrix({rat(1), rat(0), rat(0), rat(0)});
  CHECK(r4 == RatMat(identity_mat(4)));
  RatMat r8 = right_translation_matrix({rat(1), rat(0), rat(0), rat(0),
                                        rat(0), rat(0), rat(0), rat(0)});
  CHECK(r8 == RatMat(identity_mat(8)));
}

TEST_CASE("frozen bracket relations of the dim-4 frame") {
  const auto& frame = invariant_frame(4);
  const auto& v = frame[1];
  const auto& x = frame[2];
  const auto& y = frame[3];
  CHECK(bracket(v, y).mat == field_scale(x, 2).mat);
  CHECK(bracket(x, v).mat == field_scale(y, 2).mat);
  // With this bracket orientation [X,Y] lands on -2V (see the s3 suite).
  CHECK(bracket(x, y).mat == field_scale(v, -2).mat);
  // Antisymmetry and self-bracket.
  CHECK(bracket(y, x).mat == field_scale(v, 2).mat);
  CHECK(is_zero_int_mat(bracket(x, x).mat));
}

TEST_CASE("computed half-commutators equal the transcribed table") {
  FieldTable computed = commutator_table(invariant_frame(8));
  const FieldTable& printed = tabulated_half_commutators();
  REQUIRE(computed.size() == 21);
  REQUIRE(printed.size() == 21);
  for (const auto& [key, field] : printed) {
    REQUIRE(computed.count(key) == 1);
    CHECK(computed.at(key).mat == field.mat);
  }
  // One entry frozen literally: Y45 = (y1, -y0, -y3, y2, y5, -y4, -y7, y6).
  const LinearVectorField& y45 = printed.at({4, 5});
  SpherePoint e1 = basis_point(8, 1);
  CHECK(eval_field(y45, e1) ==
        RatVec{rat(1), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0),
               rat(0)});
  SpherePoint e4 = basis_point(8, 4);
  CHECK(eval_field(y45, e4) ==
        RatVec{rat(0), rat(0), rat(0), rat(0), rat(0), rat(-1), rat(0),
               rat(0)});
}

TEST_CASE("one-forms evaluate against the frame") {
  const auto& frame = invariant_frame(4);
  SpherePoint e0 = basis_point(4, 0);
  CHECK(one_form_eval(contact_form_omega(), frame[1], e0) == 1);
  CHECK(one_form_eval(contact_form_omega(), frame[2], e0) == 0);
  CHECK(one_form_eval(contact_form_omega(), frame[3], e0) == 0);
  CHECK(one_form_eval(contact_form_theta(), frame[2], e0) == 1);
  CHECK(one_form_eval(contact_form_eta(), frame[3], e0) == 1);
}

TEST_CASE("gram polynomials certify orthogonality") {
  const auto& frame = invariant_frame(4);
  MultiPoly g = gram_poly(frame[1], frame[1]);
  MultiPoly sumsq = mp_zero(4);
  for (int i = 0; i < 4; ++i) {
    sumsq = mp_add(sumsq, mp_mul(mp_var(4, i), mp_var(4, i)));
  }
  CHECK(poly_identity_check(g, sumsq));
  CHECK(poly_identity_check(gram_poly(frame[1], frame[2]), mp_zero(4)));
}

TEST_CASE("flag dimensions and bracket generation for the contact plane") {
  const auto& frame = invariant_frame(4);
  Distribution xy{4, "XY", {frame[2], frame[3]}};
  SpherePoint e0 = basis_point(4, 0);
  SpherePoint generic = sphere_point({rat(3, 5), rat(0), rat(4, 5), rat(0)});
  CHECK(flag_dimensions(xy, e0, 2) == std::vector<int>{2, 3});
  CHECK(flag_dimensions(xy, generic, 2) == std::vector<int>{2, 3});

  BracketGenerating bg = is_bracket_generating(xy, {e0, generic}, 2);
  CHECK(bg.generating);
  CHECK(bg.step == 2);

  // A single field can never bracket-generate: its self-bracket vanishes.
  Distribution xonly{4, "X", {frame[2]}};
  CHECK(flag_dimensions(xonly, e0, 3) == std::vector<int>{1, 1, 1});
  BracketGenerating single = is_bracket_generating(xonly, {e0}, 3);
  CHECK_FALSE(single.generating);

  // Non-tangent generators are rejected, empty point lists are rejected.
  Distribution badgen{4, "N", {frame[0]}};
  CHECK_THROWS_AS(flag_dimensions(badgen, e0, 2), std::logic_error);
  CHECK_THROWS_AS(is_bracket_generating(xy, {}, 2), std::invalid_argument);
}

TEST_CASE("v-field decomposition of Y4 and Y5") {
  const auto& frame = invariant_frame(8);
  CHECK(field_add(v41_field(), v42_field()).mat == frame[4].mat);
  CHECK(field_add(v51_field(), v52_field()).mat == frame[5].mat);
}

TEST_CASE("field building helpers") {
  LinearVectorField f = field_from_components(
      4, {{+1, 1}, {-1, 0}, {0, -1}, {0, -1}}, "test");
  SpherePoint p = sphere_point({rat(3, 5), rat(4, 5), rat(0), rat(0)});
  CHECK(eval_field(f, p) == RatVec{rat(4, 5), rat(-3, 5), rat(0), rat(0)});
  CHECK(fields_equal(f, f));
  CHECK_FALSE(fields_equal(f, invariant_frame(4)[0]));
  MultiPoly comp0 = field_component_poly(f, 0);
  CHECK(comp0 == mp_var(4, 1));
}
