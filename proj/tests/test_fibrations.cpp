#include "hopf/fibrations.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hopf;

namespace {

SpherePoint witness_point() {
  return sphere_point({rat(1, 2), rat(1, 2), rat(0), rat(0), rat(1, 2),
                       rat(1, 2), rat(0), rat(0)});
}

}  // namespace

TEST_CASE("circle-fiber map values and identities") {
  CHECK(hopf_s3_map(basis_point(4, 0)) == RatVec{rat(1), rat(0), rat(0)});
  SpherePoint p = sphere_point({rat(3, 5), rat(0), rat(4, 5), rat(0)});
  CHECK(hopf_s3_map(p) == RatVec{rat(-7, 25), rat(24, 25), rat(0)});
  CHECK(quadratic_norm_identity_check(hopf_s3()));
  CHECK(s3_minor_identity_check());
  CHECK(s3_equivariance_check(p));
  CHECK(fiber_curve_check(basis_point(4, 0), 8));
}

TEST_CASE("circle-fiber jacobian kernel is the vertical line") {
  JacobianInfo info = hopf_s3_jacobian(basis_point(4, 0));
  CHECK(info.rank == 3);
  REQUIRE(info.kernel.size() == 1);
  CHECK(same_span(info.kernel, {{rat(0), rat(1), rat(0), rat(0)}}));

  SpherePoint p = sphere_point({rat(3, 5), rat(0), rat(4, 5), rat(0)});
  JacobianInfo gi = hopf_s3_jacobian(p);
  // V(p) = (-y1, y0, -y3, y2).
  CHECK(same_span(gi.kernel, {{rat(0), rat(3, 5), rat(0), rat(4, 5)}}));

  // Finite-difference agreement of the analytic differential.
  CHECK(quadratic_fd_jacobian_check(hopf_s3(), {basis_point(4, 0), p}, 1e-6,
                                    1e-6));
}

TEST_CASE("projective chart values, domain, and differential") {
  RatVec zero6(6, Rational(0));
  CHECK(chart_map(basis_point(8, 0)) == zero6);
  CHECK(chart_map(sphere_point({rat(3, 5), rat(4, 5), rat(0), rat(0), rat(0),
                                rat(0), rat(0), rat(0)})) == zero6);
  CHECK_THROWS_AS(chart_map(basis_point(8, 2)), std::domain_error);

  SpherePoint p = sphere_point({rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2),
                                rat(0), rat(0), rat(0), rat(0)});
  CHECK(chart_map(p) == RatVec{rat(1), rat(0), rat(0), rat(0), rat(0),
                               rat(0)});

  JacobianInfo info = chart_jacobian(p);
  CHECK(info.rank == 6);
  REQUIRE(info.kernel.size() == 2);
  RatVec vp = {rat(-1, 2), rat(1, 2), rat(-1, 2), rat(1, 2),
               rat(0),     rat(0),    rat(0),     rat(0)};
  CHECK(same_span(info.kernel, {p.coords, vp}));

  CHECK(chart_det_check(p));
  CHECK(chart_printed_jacobian_check());
}

TEST_CASE("quaternionic map values and vertical annihilation") {
  CHECK(quat_hopf_map(basis_point(8, 0)) ==
        RatVec{rat(1), rat(0), rat(0), rat(0), rat(0)});
  CHECK(quat_hopf_map(basis_point(8, 7)) ==
        RatVec{rat(-1), rat(0), rat(0), rat(0), rat(0)});
  CHECK(quat_hopf_map(witness_point()) ==
        RatVec{rat(0), rat(1), rat(0), rat(0), rat(0)});
  CHECK(quadratic_norm_identity_check(quat_hopf()));

  auto [holds, on_r8] = quat_vertical_annihilation_check();
  CHECK(holds);
  CHECK(on_r8);

  CHECK(quat_hopf_restricted_rank(basis_point(8, 0)) == 4);
  CHECK(quat_hopf_restricted_rank(witness_point()) == 4);
}

TEST_CASE("coefficient grid and its identities") {
  HopfCoefficients c = hopf_coefficients(witness_point());
  CHECK(c.a00 == 0);
  CHECK(c.amk[0][0] == 1);  // a11 at the witness

  CHECK(coefficient_identities_check());

  const auto& pairings = coefficient_pairings();
  CHECK(pairings.size() == 57);
  int printed = 0;
  for (const auto& cp : pairings) {
    if (cp.sign != 0) ++printed;
  }
  CHECK(printed == 27);
}

TEST_CASE("region classification") {
  CHECK(region_tag(basis_point(8, 0)) == RegionTag::S2);
  CHECK(region_tag(basis_point(8, 5, -1)) == RegionTag::S2);
  CHECK(region_tag(witness_point()) == RegionTag::S1);
  SpherePoint generic = sphere_point({rat(1, 2), rat(1, 2), rat(1, 2), rat(0),
                                      rat(1, 2), rat(0), rat(0), rat(0)});
  CHECK(region_tag(generic) == RegionTag::GENERIC);
  CHECK(region_tag_name(RegionTag::S1) != region_tag_name(RegionTag::S2));
}

TEST_CASE("horizontal collections and transversality oracles") {
  Distribution h1 = horizontal_family(1);
  REQUIRE(h1.generators.size() == 4);
  CHECK(h1.generators[0].mat == tabulated_half_commutators().at({3, 4}).mat);
  Distribution h0 = horizontal_family0(2);
  REQUIRE(h0.generators.size() == 4);
  CHECK(h0.generators[0].mat == tabulated_half_commutators().at({4, 7}).mat);
  CHECK(h0.generators[3].mat == tabulated_half_commutators().at({2, 7}).mat);

  SpherePoint e0 = basis_point(8, 0);
  CHECK(transversality_check(horizontal_family(1), e0));
  for (int j = 0; j <= 3; ++j) {
    CHECK_FALSE(transversality_check(horizontal_family0(j), e0));
  }

  SpherePoint w = witness_point();
  for (int m = 1; m <= 4; ++m) {
    CHECK_FALSE(transversality_check(horizontal_family(m), w));
  }
  CHECK(transversality_check(horizontal_family0(3), w));

  // Guard rails: exactly four generators, all tangent.
  Distribution tooFew{8, "few", {h1.generators[0], h1.generators[1]}};
  CHECK_THROWS_AS(transversality_check(tooFew, e0), std::invalid_argument);
  Distribution notTangent{
      8, "bad", {invariant_frame(8)[0], h1.generators[1], h1.generators[2],
                 h1.generators[3]}};
  CHECK_THROWS_AS(transversality_check(notTangent, e0), std::logic_error);
}

TEST_CASE("connection selection follows the stated preference order") {
  SpherePoint e0 = basis_point(8, 0);
  EhresmannSelection s = ehresmann_select(e0);
  CHECK(s.found);
  CHECK(s.tag == RegionTag::S2);
  CHECK(s.label == horizontal_family(1).label);

  EhresmannSelection w = ehresmann_select(witness_point());
  CHECK(w.found);
  CHECK(w.tag == RegionTag::S1);
  CHECK(w.label == horizontal_family0(3).label);

  SpherePoint generic = sphere_point({rat(1, 2), rat(1, 2), rat(1, 2), rat(0),
                                      rat(1, 2), rat(0), rat(0), rat(0)});
  EhresmannSelection g = ehresmann_select(generic);
  CHECK(g.found);
  CHECK(g.tag == RegionTag::GENERIC);
  CHECK(flag_dimensions(g.chosen, generic, 2) == std::vector<int>{4, 7});
}
