#include "hopf/crstructure.hpp"

#include <stdexcept>

namespace hopf {
namespace {

RatMat int_to_rat(const IntMat& m) {
  RatMat out(m.size());
  for (size_t r = 0; r < m.size(); ++r) {
    out[r].reserve(m[r].size());
    for (long e : m[r]) out[r].push_back(Rational(e));
  }
  return out;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  IntMat out(n, std::vector<long>(m, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      long acc = 0;
      for (size_t t = 0; t < k; ++t) acc += a[i][t] * b[t][j];
      out[i][j] = acc;
    }
  }
  return out;
}

IntMat int_identity(int n, long scale = 1) {
  IntMat out(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)][static_cast<size_t>(i)] = scale;
  return out;
}

IntMat int_scale(IntMat m, long c) {
  for (auto& row : m) {
    for (auto& e : row) e *= c;
  }
  return m;
}

}  // namespace

AlmostComplexStructure almost_complex_structure(int dim) {
  if (dim < 2 || dim % 2 != 0) {
    throw std::invalid_argument(
        "almost_complex_structure: dimension must be even");
  }
  AlmostComplexStructure j;
  j.dim = dim;
  j.mat = IntMat(static_cast<size_t>(dim),
                 std::vector<long>(static_cast<size_t>(dim), 0));
  for (int k = 0; 2 * k < dim; ++k) {
    j.mat[static_cast<size_t>(2 * k + 1)][static_cast<size_t>(2 * k)] = 1;
    j.mat[static_cast<size_t>(2 * k)][static_cast<size_t>(2 * k + 1)] = -1;
  }
  return j;
}

Subspace make_subspace(int ambient, RatMat basis) {
  for (const auto& row : basis) {
    if (static_cast<int>(row.size()) != ambient) {
      throw std::invalid_argument("make_subspace: row length mismatch");
    }
  }
  if (rank(basis) != static_cast<int>(basis.size())) {
    throw std::invalid_argument("make_subspace: basis rows are dependent");
  }
  Subspace s;
  s.ambient = ambient;
  s.basis = std::move(basis);
  return s;
}

int subspace_dim(const Subspace& s) {
  return static_cast<int>(s.basis.size());
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  return a.ambient == b.ambient && same_span(a.basis, b.basis);
}

bool subspace_contains(const Subspace& s, const RatVec& v) {
  return in_span(s.basis, v);
}

Subspace subspace_intersection(int ambient, const RatMat& rows_a,
                               const RatMat& rows_b) {
  std::vector<RatVec> ca = orthogonal_complement(rows_a, ambient);
  std::vector<RatVec> cb = orthogonal_complement(rows_b, ambient);
  RatMat stacked;
  stacked.reserve(ca.size() + cb.size());
  for (auto& v : ca) stacked.push_back(std::move(v));
  for (auto& v : cb) stacked.push_back(std::move(v));
  std::vector<RatVec> inter = orthogonal_complement(stacked, ambient);
  return make_subspace(ambient, RatMat(inter.begin(), inter.end()));
}

Subspace tangent_space(const SpherePoint& p) {
  std::vector<RatVec> basis = orthogonal_complement({p.coords}, p.dim);
  return make_subspace(p.dim, RatMat(basis.begin(), basis.end()));
}

Subspace holomorphic_tangent(const SpherePoint& p) {
  AlmostComplexStructure j = almost_complex_structure(p.dim);
  RatMat jm = int_to_rat(j.mat);
  Subspace t = tangent_space(p);
  RatMat jt;
  jt.reserve(t.basis.size());
  for (const auto& row : t.basis) jt.push_back(mat_vec(jm, row));
  return subspace_intersection(p.dim, t.basis, jt);
}

bool verify_orthocomplement(const SpherePoint& p) {
  Subspace h = holomorphic_tangent(p);
  RatVec v = eval_field(vertical_field(p.dim), p);
  std::vector<RatVec> target =
      orthogonal_complement({p.coords, v}, p.dim);
  return same_span(h.basis, RatMat(target.begin(), target.end()));
}

bool j_structure_check(int dim) {
  if (dim != 4 && dim != 8) return false;
  AlmostComplexStructure j = almost_complex_structure(dim);
  // J*J = -I and J^T = -J (with J*J = -I this gives orthogonality).
  if (int_mat_mul(j.mat, j.mat) != int_identity(dim, -1)) return false;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (j.mat[static_cast<size_t>(r)][static_cast<size_t>(c)] !=
          -j.mat[static_cast<size_t>(c)][static_cast<size_t>(r)]) {
        return false;
      }
    }
  }
  const LinearVectorField vert = vertical_field(dim);
  // J applied to a field with matrix A gives the field with matrix J*A.
  if (int_mat_mul(j.mat, int_identity(dim)) != vert.mat) return false;     // J N = V
  if (int_mat_mul(j.mat, vert.mat) != int_identity(dim, -1)) return false; // J V = -N
  if (dim == 4) {
    const auto& frame = invariant_frame(4);
    const IntMat& x = frame[2].mat;
    const IntMat& y = frame[3].mat;
    if (int_mat_mul(j.mat, x) != y) return false;                 // J X = Y
    if (int_mat_mul(j.mat, y) != int_scale(x, -1)) return false;  // J Y = -X
  }
  return true;
}

std::pair<Rational, Rational> cr_form_eval(const LinearVectorField& f,
                                           const SpherePoint& p) {
  if (f.dim != p.dim) {
    throw std::invalid_argument("cr_form_eval: dimension mismatch");
  }
  RatVec u = eval_field(f, p);
  // Complex route: sum_k conj(z_k) * dz_k(u) with z_k = x_{2k} + i x_{2k+1}.
  Rational re = 0, im = 0;
  for (int k = 0; 2 * k < p.dim; ++k) {
    const Rational& a = p.coords[static_cast<size_t>(2 * k)];
    const Rational& b = p.coords[static_cast<size_t>(2 * k + 1)];
    const Rational& c = u[static_cast<size_t>(2 * k)];
    const Rational& d = u[static_cast<size_t>(2 * k + 1)];
    re += a * c + b * d;  // Re((a - ib)(c + id))
    im += a * d - b * c;  // Im((a - ib)(c + id))
  }
  // Inner-product route: (<u, N(p)>, <u, V(p)>) with N(p) = p.
  Rational re2 = dot(u, p.coords);
  Rational im2 = dot(u, eval_field(vertical_field(p.dim), p));
  if (re != re2 || im != im2) {
    throw std::logic_error(
        "cr_form_eval: complex and inner-product evaluations disagree");
  }
  return {re, im};
}

std::pair<LinearVectorField, LinearVectorField> complex_field_real_imag_doubled(
    const ComplexLinearField& f) {
  if (f.dim % 2 != 0) {
    throw std::invalid_argument(
        "complex_field_real_imag_doubled: odd ambient dimension");
  }
  int n = f.dim / 2;
  if (static_cast<int>(f.holo.size()) > n ||
      static_cast<int>(f.anti.size()) > n) {
    throw std::invalid_argument(
        "complex_field_real_imag_doubled: too many coefficients");
  }
  LinearVectorField re, im;
  re.dim = im.dim = f.dim;
  re.name = "2*Re";
  im.name = "2*Im";
  re.mat = IntMat(static_cast<size_t>(f.dim),
                  std::vector<long>(static_cast<size_t>(f.dim), 0));
  im.mat = re.mat;
  auto add_row = [&](IntMat& m, int row, const std::vector<long>& coeffs,
                     long sign) {
    if (static_cast<int>(coeffs.size()) != f.dim) {
      throw std::invalid_argument(
          "complex_field_real_imag_doubled: coefficient row length");
    }
    for (int c = 0; c < f.dim; ++c) {
      m[static_cast<size_t>(row)][static_cast<size_t>(c)] +=
          sign * coeffs[static_cast<size_t>(c)];
    }
  };
  // c_k d/dz_k with 2 d/dz_k = d/dx_{2k} - i d/dx_{2k+1}:
  // 2 Re gains Re(c_k) at row 2k and Im(c_k) at row 2k+1;
  // 2 Im gains Im(c_k) at row 2k and -Re(c_k) at row 2k+1.
  for (size_t k = 0; k < f.holo.size(); ++k) {
    const auto& [cre, cim] = f.holo[k];
    int r0 = static_cast<int>(2 * k), r1 = r0 + 1;
    add_row(re.mat, r0, cre, +1);
    add_row(re.mat, r1, cim, +1);
    add_row(im.mat, r0, cim, +1);
    add_row(im.mat, r1, cre, -1);
  }
  // d_k d/dzbar_k with 2 d/dzbar_k = d/dx_{2k} + i d/dx_{2k+1}:
  // 2 Re gains Re(d_k) at row 2k and -Im(d_k) at row 2k+1;
  // 2 Im gains Im(d_k) at row 2k and Re(d_k) at row 2k+1.
  for (size_t k = 0; k < f.anti.size(); ++k) {
    const auto& [dre, dim_] = f.anti[k];
    int r0 = static_cast<int>(2 * k), r1 = r0 + 1;
    add_row(re.mat, r0, dre, +1);
    add_row(re.mat, r1, dim_, -1);
    add_row(im.mat, r0, dim_, +1);
    add_row(im.mat, r1, dre, +1);
  }
  return {re, im};
}

bool complex_split_identities_check() {
  const auto& frame = invariant_frame(4);
  const LinearVectorField& x = frame[2];
  const LinearVectorField& y = frame[3];

  // wbar d/dz - zbar d/dw: c_0 = x2 - i x3, c_1 = -x0 + i x1.
  ComplexLinearField f1;
  f1.dim = 4;
  f1.holo = {{{0, 0, 1, 0}, {0, 0, 0, -1}}, {{-1, 0, 0, 0}, {0, 1, 0, 0}}};
  auto [re1, im1] = complex_field_real_imag_doubled(f1);
  if (re1.mat != field_scale(x, -1).mat || im1.mat != y.mat) return false;

  // -w d/dzbar + z d/dwbar: d_0 = -x2 - i x3, d_1 = x0 + i x1.
  ComplexLinearField f2;
  f2.dim = 4;
  f2.anti = {{{0, 0, -1, 0}, {0, 0, 0, -1}}, {{1, 0, 0, 0}, {0, 1, 0, 0}}};
  auto [re2, im2] = complex_field_real_imag_doubled(f2);
  if (re2.mat != x.mat || im2.mat != y.mat) return false;

  return true;
}

bool j_invariant_complement_check(const SpherePoint& p) {
  AlmostComplexStructure j = almost_complex_structure(p.dim);
  RatMat jm = int_to_rat(j.mat);
  RatVec v = eval_field(vertical_field(p.dim), p);
  std::vector<RatVec> comp =
      orthogonal_complement({p.coords, v}, p.dim);
  for (const auto& u : comp) {
    if (!in_span(RatMat(comp.begin(), comp.end()), mat_vec(jm, u))) {
      return false;
    }
  }
  return true;
}

}  // namespace hopf
