#pragma once
// Linear vector fields on R^4/R^8 (value at y is an integer matrix times y),
// the invariant frames tangent to the unit spheres S^3 and S^7, their Lie
// brackets and commutator tables, contact one-forms, pointwise inner
// products, and bracket-generating flag computations.
#include "hopf/linalg.hpp"
#include "hopf/multipoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

using IntMat = std::vector<std::vector<long>>;

struct SpherePoint {
  int dim = 0;
  RatVec coords;  // constructor-checked: sum of squares is exactly 1
};

// Throws std::invalid_argument unless the coordinates have exact unit norm.
SpherePoint sphere_point(RatVec coords);
SpherePoint basis_point(int dim, int i, int sign = +1);

struct LinearVectorField {
  int dim = 0;
  IntMat mat;  // field value at y is mat * y
  std::string name;
};

struct OneForm {
  int dim = 0;
  IntMat mat;  // value on tangent vector u at base point y is y^T * mat * u
  std::string name;
};

struct Distribution {
  int dim = 0;
  std::string label;
  std::vector<LinearVectorField> generators;
};

// Build a field whose c-th component is sign[c] * y_{var[c]} (var -1 => 0).
LinearVectorField field_from_components(
    int dim, const std::vector<std::pair<int, int>>& signed_vars,
    std::string name);

RatVec eval_field(const LinearVectorField& f, const SpherePoint& p);
RatVec eval_field(const LinearVectorField& f, const RatVec& y);

bool is_zero_int_mat(const IntMat& m);
bool fields_equal(const LinearVectorField& a, const LinearVectorField& b);
LinearVectorField field_add(const LinearVectorField& a,
                            const LinearVectorField& b);
LinearVectorField field_scale(const LinearVectorField& a, long c);

// The c-th component of the field as a polynomial in y_0..y_{dim-1}.
MultiPoly field_component_poly(const LinearVectorField& f, int c);
// <F(y), G(y)> as a polynomial (used to prove orthogonality identities).
MultiPoly gram_poly(const LinearVectorField& f, const LinearVectorField& g);

// The printed right-translation matrix pattern evaluated at y (dim 4 or 8).
RatMat right_translation_matrix(const RatVec& y);
// The same pattern with entries as degree-1 polynomials in y_0..y_{dim-1}.
PolyMatrix right_translation_poly_matrix(int dim);

// dim 4 -> {N, V, X, Y}; dim 8 -> {Y0..Y7}; transcribed component formulas.
const std::vector<LinearVectorField>& invariant_frame(int dim);

// The single vertical field (-y1, y0, -y3, y2, ...): equals V for dim 4 and
// Y1 for dim 8.
LinearVectorField vertical_field(int dim);

// Contact one-forms on R^4: omega (kernel span{X,Y}), theta (kernel
// span{Y,V}), eta (kernel span{X,V}); coefficient rows are V, X, Y.
const OneForm& contact_form_omega();
const OneForm& contact_form_theta();
const OneForm& contact_form_eta();

// Lie bracket of vector fields acting as derivations: [F,G] f = F(G f) -
// G(F f). For linear fields F(y) = A y, G(y) = B y this has matrix BA - AB.
LinearVectorField bracket(const LinearVectorField& f,
                          const LinearVectorField& g);

using FieldTable = std::map<std::pair<int, int>, LinearVectorField>;

// Half-commutators (1/2)[Y_i, Y_j] of the dim-8 frame for 1 <= i < j <= 7.
// Throws if any halved coefficient is not an integer.
FieldTable commutator_table(const std::vector<LinearVectorField>& frame);

// The same 21 fields, transcribed directly from their printed component
// formulas. Kept independent from commutator_table so the two can be
// compared coefficient-for-coefficient.
const FieldTable& tabulated_half_commutators();

// Fields used by the rank-6 decomposition argument: v41 + v42 = Y4,
// v51 + v52 = Y5. The last component of v52 is y2 d/dy7 (the variant ending
// in y0 d/dy7 breaks the decomposition identity and is not used).
LinearVectorField v41_field();
LinearVectorField v42_field();
LinearVectorField v51_field();
LinearVectorField v52_field();

Rational one_form_eval(const OneForm& w, const LinearVectorField& f,
                       const SpherePoint& p);
Rational gram(const LinearVectorField& f, const LinearVectorField& g,
              const SpherePoint& p);

// Dimensions [dim H^1_p, ..., dim H^max_depth_p] of the flag H^{r+1} =
// H^r + [H^r, H^1] evaluated at p. Every bracket evaluation is checked to
// be tangent at p (throws std::logic_error otherwise).
std::vector<int> flag_dimensions(const Distribution& d, const SpherePoint& p,
                                 int max_depth);

struct BracketGenerating {
  bool generating = false;
  int step = 0;  // least depth at which every point reaches full rank
};
BracketGenerating is_bracket_generating(const Distribution& d,
                                        const std::vector<SpherePoint>& points,
                                        int max_depth);

}  // namespace hopf
