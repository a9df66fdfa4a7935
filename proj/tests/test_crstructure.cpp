#include "hopf/crstructure.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hopf;

TEST_CASE("interleaved almost complex structure") {
  AlmostComplexStructure j = almost_complex_structure(4);
  CHECK(j.mat == IntMat{{0, -1, 0, 0},
                        {1, 0, 0, 0},
                        {0, 0, 0, -1},
                        {0, 0, 1, 0}});
  CHECK(j_structure_check(4));
  CHECK(j_structure_check(8));
}

TEST_CASE("subspace primitives") {
  CHECK_THROWS_AS(make_subspace(3, {{rat(1), rat(2), rat(3)},
                                    {rat(2), rat(4), rat(6)}}),
                  std::invalid_argument);
  Subspace s = make_subspace(3, {{rat(1), rat(0), rat(0)},
                                 {rat(0), rat(1), rat(0)}});
  CHECK(subspace_dim(s) == 2);
  CHECK(subspace_contains(s, {rat(2), rat(-3), rat(0)}));
  CHECK_FALSE(subspace_contains(s, {rat(0), rat(0), rat(1)}));

  Subspace a = make_subspace(3, {{rat(1), rat(0), rat(0)},
                                 {rat(0), rat(1), rat(0)}});
  Subspace b = make_subspace(3, {{rat(0), rat(1), rat(0)},
                                 {rat(0), rat(0), rat(1)}});
  Subspace inter = subspace_intersection(3, a.basis, b.basis);
  CHECK(subspace_dim(inter) == 1);
  CHECK(subspace_contains(inter, {rat(0), rat(1), rat(0)}));
  CHECK(subspace_equal(inter,
                       make_subspace(3, {{rat(0), rat(5), rat(0)}})));
}

TEST_CASE("tangent space of the sphere") {
  SpherePoint e0 = basis_point(4, 0);
  Subspace t = tangent_space(e0);
  CHECK(subspace_dim(t) == 3);
  CHECK_FALSE(subspace_contains(t, e0.coords));
  CHECK(subspace_contains(t, {rat(0), rat(1), rat(0), rat(0)}));
}

TEST_CASE("holomorphic tangent space at reference points") {
  SpherePoint e0 = basis_point(4, 0);
  Subspace h = holomorphic_tangent(e0);
  CHECK(subspace_dim(h) == 2);
  CHECK(same_span(h.basis, {{rat(0), rat(0), rat(1), rat(0)},
                            {rat(0), rat(0), rat(0), rat(1)}}));

  SpherePoint p = sphere_point({rat(3, 5), rat(4, 5), rat(0), rat(0)});
  CHECK(subspace_dim(holomorphic_tangent(p)) == 2);
  CHECK(verify_orthocomplement(e0));
  CHECK(verify_orthocomplement(p));

  SpherePoint e0_8 = basis_point(8, 0);
  Subspace h8 = holomorphic_tangent(e0_8);
  CHECK(subspace_dim(h8) == 6);
  RatMat expect8;
  for (int i = 2; i < 8; ++i) {
    RatVec row(8, rat(0));
    row[i] = rat(1);
    expect8.push_back(row);
  }
  CHECK(same_span(h8.basis, expect8));
  CHECK(verify_orthocomplement(e0_8));
}

TEST_CASE("tautological form values on the frame at a reference point") {
  const auto& frame = invariant_frame(4);
  SpherePoint e0 = basis_point(4, 0);
  CHECK(cr_form_eval(frame[0], e0) == std::make_pair(Rational(1), Rational(0)));
  CHECK(cr_form_eval(frame[1], e0) == std::make_pair(Rational(0), Rational(1)));
  CHECK(cr_form_eval(frame[2], e0) == std::make_pair(Rational(0), Rational(0)));
  CHECK(cr_form_eval(frame[3], e0) == std::make_pair(Rational(0), Rational(0)));
}

TEST_CASE("complex-coefficient fields split into real pairs") {
  CHECK(complex_split_identities_check());

  // x0 d/dz0 has twice-real part x0 d/dx0 and twice-imaginary -x0 d/dx1.
  ComplexLinearField f;
  f.dim = 4;
  f.holo = {{{1, 0, 0, 0}, {0, 0, 0, 0}}, {{0, 0, 0, 0}, {0, 0, 0, 0}}};
  f.anti = {{{0, 0, 0, 0}, {0, 0, 0, 0}}, {{0, 0, 0, 0}, {0, 0, 0, 0}}};
  auto [re2, im2] = complex_field_real_imag_doubled(f);
  IntMat reExpect(4, std::vector<long>(4, 0));
  reExpect[0][0] = 1;
  IntMat imExpect(4, std::vector<long>(4, 0));
  imExpect[1][0] = -1;
  CHECK(re2.mat == reExpect);
  CHECK(im2.mat == imExpect);
}

TEST_CASE("J-invariance of the complement of the vertical plane") {
  CHECK(j_invariant_complement_check(basis_point(4, 0)));
  CHECK(j_invariant_complement_check(
      sphere_point({rat(3, 5), rat(4, 5), rat(0), rat(0)})));
  CHECK(j_invariant_complement_check(basis_point(8, 3)));
  CHECK(j_invariant_complement_check(sphere_point(
      {rat(1, 2), rat(1, 2), rat(1, 2), rat(0), rat(1, 2), rat(0), rat(0),
       rat(0)})));
}
