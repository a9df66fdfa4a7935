#pragma once
// Almost complex structures on R^4/R^8 (complex coordinates interleaved as
// z_k = x_{2k} + i x_{2k+1}), holomorphic tangent spaces of the unit spheres,
// the tautological one-form in real coordinates, and the translation between
// complex coefficient fields and pairs of real fields.
#include "hopf/linalg.hpp"
#include "hopf/vectorfields.hpp"

#include <utility>
#include <vector>

namespace hopf {

struct AlmostComplexStructure {
  int dim = 0;   // even ambient dimension
  IntMat mat;    // squares to -identity; orthogonal
};

// J with J(d/dx_{2k}) = d/dx_{2k+1} and J(d/dx_{2k+1}) = -d/dx_{2k}.
AlmostComplexStructure almost_complex_structure(int dim);

struct Subspace {
  int ambient = 0;
  RatMat basis;  // rows, exactly independent
};

// Throws std::invalid_argument if the rows are dependent.
Subspace make_subspace(int ambient, RatMat basis);

int subspace_dim(const Subspace& s);
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& s, const RatVec& v);

// span(rows_a) intersected with span(rows_b), computed through orthogonal
// complements (the complement of the intersection is the sum of the
// complements).
Subspace subspace_intersection(int ambient, const RatMat& rows_a,
                               const RatMat& rows_b);

// Tangent space of the unit sphere at p: the orthogonal complement of p.
Subspace tangent_space(const SpherePoint& p);

// H_p = T_p intersect J(T_p), computed by exact intersection (not by the
// orthogonal-complement shortcut, so the two routes stay independent).
Subspace holomorphic_tangent(const SpherePoint& p);

// True iff holomorphic_tangent(p) equals {u in T_p : <u, V(p)> = 0}, where
// V is the vertical field (-y1, y0, -y3, y2, ...).
bool verify_orthocomplement(const SpherePoint& p);

// Exact matrix identities tying J to the invariant frames:
// dim 4: J*X = Y, J*Y = -X, J*V = -N, J*N = V; dim 8: J*V = -N, J*N = V;
// both dims: J*J = -I and J orthogonal.
bool j_structure_check(int dim);

// Evaluate the tautological form sum conj(z_k) dz_k on F(p). Returns
// (<F(p), N(p)>, <F(p), V(p)>); the complex-coordinate evaluation is
// recomputed independently and must agree (std::logic_error otherwise).
std::pair<Rational, Rational> cr_form_eval(const LinearVectorField& f,
                                           const SpherePoint& p);

// A field sum_k c_k d/dz_k + d_k d/dzbar_k whose complex coefficients are
// integer-linear in the real coordinates: c_k = <holo[k].first, x> +
// i <holo[k].second, x>, and likewise d_k from anti[k].
struct ComplexLinearField {
  int dim = 0;  // real ambient dimension (2 * complex dimension)
  std::vector<std::pair<std::vector<long>, std::vector<long>>> holo;
  std::vector<std::pair<std::vector<long>, std::vector<long>>> anti;
};

// Twice the real part and twice the imaginary part of the field, as real
// linear fields (doubling keeps every coefficient an integer since
// d/dz_k = (d/dx_{2k} - i d/dx_{2k+1}) / 2).
std::pair<LinearVectorField, LinearVectorField> complex_field_real_imag_doubled(
    const ComplexLinearField& f);

// The two printed S^3 identities: the field wbar d/dz - zbar d/dw equals
// (-X + iY)/2 and -w d/dzbar + z d/dwbar equals (X + iY)/2, checked as exact
// equalities of integer field matrices (after doubling).
bool complex_split_identities_check();

// The invariant-plane instance of the orthogonal-complement lemma: for
// W = span{V(p), N(p)}, J maps the orthogonal complement of W into itself.
bool j_invariant_complement_check(const SpherePoint& p);

}  // namespace hopf
