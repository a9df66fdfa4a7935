#pragma once
// Exact rational vectors/matrices and the small amount of linear algebra the
// verification checks need: rank, determinant, nullspace, span comparisons.
// Everything is over arbitrary-precision rationals; there are no tolerances.
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hopf {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;  // row-major, rectangular

// Construct a canonical rational (lowest terms, positive denominator).
Rational rat(long num, long den = 1);

// Serialize as "num/den" with the denominator always written ("3" -> "3/1").
std::string rat_str(const Rational& q);

Rational dot(const RatVec& a, const RatVec& b);
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat mat_transpose(const RatMat& m);
RatMat mat_add(const RatMat& a, const RatMat& b);
RatMat mat_sub(const RatMat& a, const RatMat& b);
RatMat mat_scale(const RatMat& m, const Rational& c);
RatMat identity_mat(int n);
bool is_zero_vec(const RatVec& v);
bool is_zero_mat(const RatMat& m);

// Exact Gaussian elimination. `rank` and `det` copy their argument.
int rank(RatMat m);
Rational det(RatMat m);

// Basis of {v : m v = 0}, deterministic (free columns in increasing order).
std::vector<RatVec> nullspace(const RatMat& m);

// Span predicates, all by exact rank comparisons of stacked bases.
bool in_span(const std::vector<RatVec>& basis, const RatVec& v);
bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b);
int span_dim(const std::vector<RatVec>& vecs);

// Basis of the orthogonal complement of span(vecs) inside R^ambient.
std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& vecs,
                                          int ambient);

}  // namespace hopf
