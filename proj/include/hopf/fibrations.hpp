#pragma once
// The three sphere fibrations and their exact differential checks:
//  - the quadratic map S^3 -> S^2 with circle fibers,
//  - the chart-0 rational map S^7 -> R^6 covering the complex projective
//    fibration, and
//  - the quadratic map S^7 -> S^4 with 3-sphere fibers,
// together with vertical/transversality structure, the inner-product
// coefficient grid, the region classification, and the horizontal-space
// selection logic.
#include "hopf/linalg.hpp"
#include "hopf/multipoly.hpp"
#include "hopf/vectorfields.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hopf {

struct QuadraticMap {
  int in_dim = 0, out_dim = 0;
  std::vector<IntMat> q;  // symmetric; component c at x is x^T q[c] x
};

RatVec quadratic_map_eval(const QuadraticMap& m, const RatVec& x);
// Row c is 2 x^T q[c]; exactly linear in x.
RatMat quadratic_map_jacobian(const QuadraticMap& m, const RatVec& x);
MultiPoly quadratic_component_poly(const QuadraticMap& m, int c);
// sum_c (component_c)^2 == (sum_i x_i^2)^2 as polynomials (so the map sends
// the unit sphere to the unit sphere).
bool quadratic_norm_identity_check(const QuadraticMap& m);
// Analytic Jacobian rows vs centered finite differences at the given points
// (floating point sanity bound; the exact form is authoritative).
bool quadratic_fd_jacobian_check(const QuadraticMap& m,
                                 const std::vector<SpherePoint>& points,
                                 double step, double tol);

// (|z|^2 - |w|^2, 2 Re(z wbar), 2 Im(z wbar)) on R^4.
const QuadraticMap& hopf_s3();
// The five quadratic components of the quaternionic map on R^8.
const QuadraticMap& quat_hopf();

RatVec hopf_s3_map(const SpherePoint& p);

struct JacobianInfo {
  RatMat jac;
  int rank = 0;
  std::vector<RatVec> kernel;
};
// Throws std::logic_error if the rank at a sphere point is not 3.
JacobianInfo hopf_s3_jacobian(const SpherePoint& p);

// Sum over i of det(jacobian with column i deleted)^2 == (sum x_j^2)^3 as a
// polynomial identity, for the half-scaled matrix (prefactor 2 stripped).
bool s3_minor_identity_check();

// Exact circle equivariance: rotating both complex coordinates by a rational
// rotation (cos, sin) = (3/5, 4/5) or (5/13, 12/13) leaves the map value
// unchanged.
bool s3_equivariance_check(const SpherePoint& p);

// Floating-point fiber check: the curve t -> e^{2 pi i t} p has constant
// image under the map (within 1e-12, including t=0 vs t=1) and velocity
// 2 pi V within 1e-9 of a centered finite difference of step 1e-6.
bool fiber_curve_check(const SpherePoint& p, int samples);

struct RationalMap {
  int in_dim = 0, out_dim = 0;
  std::vector<std::pair<MultiPoly, MultiPoly>> components;  // (num, den)
};

// Chart 0 of the complex projective fibration: six components with common
// denominator x0^2 + x1^2.
const RationalMap& cp3_chart();

// Throws std::domain_error when x0^2 + x1^2 = 0 (point outside the chart).
RatVec chart_map(const SpherePoint& p);
JacobianInfo chart_jacobian(const SpherePoint& p);

// The printed 6x8 cleared-numerator matrix equals den * d(num_r)/dx_c -
// num_r * d(den)/dx_c entry-for-entry as polynomial identities.
bool chart_printed_jacobian_check();

// det(J J^T) * (x0^2+x1^2)^8 == 1 exactly at the sphere point p.
bool chart_det_check(const SpherePoint& p);

RatVec quat_hopf_map(const SpherePoint& p);
RatMat quat_hopf_jacobian(const SpherePoint& p);
// Rank of the Jacobian restricted to the tangent space at p (expected 4).
int quat_hopf_restricted_rank(const SpherePoint& p);

// The three vertical fields {Y45, Y46, Y56} of the quaternionic fibration.
const std::vector<LinearVectorField>& quat_vertical_fields();

// dh * F == 0 for each vertical field F. Returns (holds, on_all_of_R8):
// checked first as raw polynomial identities on R^8 and, failing that,
// modulo the sphere relation.
std::pair<bool, bool> quat_vertical_annihilation_check();

struct HopfCoefficients {
  Rational a00;
  Rational amk[4][4];  // row m-1: (a_m1 .. a_m4), diagonal from the base map
};

// The 17 printed coefficient polynomials: index [0][0] is a00; [m][k] for
// m,k in 1..4 is a_mk (diagonal entries are the base-map components).
const MultiPoly& hopf_coefficient_poly(int m, int k);
HopfCoefficients hopf_coefficients(const SpherePoint& p);

// a00^2 + a11^2 + a22^2 + a33^2 + a44^2 == 1 and the four row sums
// a00^2 + sum_k a_mk^2 == 1, all modulo the sphere relation.
bool coefficient_identities_check();

// One printed inner-product equality <vertical, partner> == sign * a_mk
// (sign 0 encodes an expected-zero pair), checkable as a polynomial identity.
struct CoefficientPairing {
  int family = 0;          // 0..4, which horizontal collection
  int vertical = 0;        // 0 = Y45, 1 = Y46, 2 = Y56
  std::pair<int, int> partner;  // field Y_{ij}; (0, k) means frame field Y_k
  int sign = 0;            // -1, 0, +1
  int m = 0, k = 0;        // coefficient index when sign != 0
};

// Every pair within {verticals} x {family fields} plus the intra-family and
// intra-vertical pairs, with their printed expectations (families 0..4).
const std::vector<CoefficientPairing>& coefficient_pairings();

// Check one pairing as a polynomial identity modulo the sphere relation.
bool coefficient_pairing_check(const CoefficientPairing& cp);

enum class RegionTag { GENERIC, S1, S2 };

// S1: both half-sums equal 1/2; S2: one half-sum 0 and the other 1.
RegionTag region_tag(const SpherePoint& p);
std::string region_tag_name(RegionTag t);

// Horizontal collections: family m in 1..4 is {Y_{(4-m),4} .. Y_{(4-m),7}}
// (family 4 uses the frame fields Y4..Y7); family 0 with parameter j is
// {Y47, Y57, Y67, Y_{j7}}.
Distribution horizontal_family(int m);
Distribution horizontal_family0(int j);

// True iff the four generators at p together with the three verticals at p
// span the full 7-dimensional tangent space (exact rank). Throws
// std::invalid_argument unless there are exactly 4 generators and
// std::logic_error if a generator is not tangent at p.
bool transversality_check(const Distribution& d, const SpherePoint& p);

struct EhresmannSelection {
  RegionTag tag = RegionTag::GENERIC;
  bool found = false;  // false = no candidate passed (theorem violation)
  std::string label;
  Distribution chosen;
};

// Off S1: first of families 1..4 passing transversality_check; on S1: first
// of family-0 choices j = 0..3. found == false is a reportable violation,
// never silently ignored.
EhresmannSelection ehresmann_select(const SpherePoint& p);

}  // namespace hopf
