#include "hopf/fibrations.hpp"

#include <cmath>
#include <stdexcept>

namespace hopf {
namespace {

IntMat zero_int_mat(int n) {
  return IntMat(static_cast<size_t>(n),
                std::vector<long>(static_cast<size_t>(n), 0));
}

// Symmetric matrix for a quadratic form given as a term list; a term
// (c, i, i) contributes c*x_i^2 and (c, i, j) with i != j contributes
// 2c*x_i*x_j (both matrix slots get c).
IntMat quad_form(int n, const std::vector<std::tuple<long, int, int>>& terms) {
  IntMat q = zero_int_mat(n);
  for (auto [c, i, j] : terms) {
    q[static_cast<size_t>(i)][static_cast<size_t>(j)] += c;
    if (i != j) q[static_cast<size_t>(j)][static_cast<size_t>(i)] += c;
  }
  return q;
}

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

std::vector<double> to_double_vec(const RatVec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_double(q));
  return out;
}

}  // namespace

RatVec quadratic_map_eval(const QuadraticMap& m, const RatVec& x) {
  if (static_cast<int>(x.size()) != m.in_dim) {
    throw std::invalid_argument("quadratic_map_eval: dimension mismatch");
  }
  RatVec out(static_cast<size_t>(m.out_dim), Rational(0));
  for (int c = 0; c < m.out_dim; ++c) {
    Rational acc = 0;
    const IntMat& q = m.q[static_cast<size_t>(c)];
    for (int i = 0; i < m.in_dim; ++i) {
      for (int j = 0; j < m.in_dim; ++j) {
        long e = q[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (e != 0) {
          acc += Rational(e) * x[static_cast<size_t>(i)] *
                 x[static_cast<size_t>(j)];
        }
      }
    }
    out[static_cast<size_t>(c)] = acc;
  }
  return out;
}

RatMat quadratic_map_jacobian(const QuadraticMap& m, const RatVec& x) {
  if (static_cast<int>(x.size()) != m.in_dim) {
    throw std::invalid_argument("quadratic_map_jacobian: dimension mismatch");
  }
  RatMat jac(static_cast<size_t>(m.out_dim),
             RatVec(static_cast<size_t>(m.in_dim), Rational(0)));
  for (int c = 0; c < m.out_dim; ++c) {
    const IntMat& q = m.q[static_cast<size_t>(c)];
    for (int j = 0; j < m.in_dim; ++j) {
      Rational acc = 0;
      for (int i = 0; i < m.in_dim; ++i) {
        long e = q[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (e != 0) acc += Rational(2 * e) * x[static_cast<size_t>(i)];
      }
      jac[static_cast<size_t>(c)][static_cast<size_t>(j)] = acc;
    }
  }
  return jac;
}

MultiPoly quadratic_component_poly(const QuadraticMap& m, int c) {
  MultiPoly p = mp_zero(m.in_dim);
  const IntMat& q = m.q[static_cast<size_t>(c)];
  for (int i = 0; i < m.in_dim; ++i) {
    for (int j = 0; j < m.in_dim; ++j) {
      long e = q[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (e != 0) {
        p = mp_add(p, mp_scale(mp_mul(mp_var(m.in_dim, i),
                                      mp_var(m.in_dim, j)),
                               Rational(e)));
      }
    }
  }
  return p;
}

bool quadratic_norm_identity_check(const QuadraticMap& m) {
  MultiPoly lhs = mp_zero(m.in_dim);
  for (int c = 0; c < m.out_dim; ++c) {
    MultiPoly comp = quadratic_component_poly(m, c);
    lhs = mp_add(lhs, mp_mul(comp, comp));
  }
  MultiPoly norm = mp_zero(m.in_dim);
  for (int i = 0; i < m.in_dim; ++i) {
    norm = mp_add(norm, mp_mul(mp_var(m.in_dim, i), mp_var(m.in_dim, i)));
  }
  return poly_identity_check(lhs, mp_mul(norm, norm));
}

bool quadratic_fd_jacobian_check(const QuadraticMap& m,
                                 const std::vector<SpherePoint>& points,
                                 double step, double tol) {
  auto eval_double = [&](const std::vector<double>& x, int c) {
    double acc = 0;
    const IntMat& q = m.q[static_cast<size_t>(c)];
    for (int i = 0; i < m.in_dim; ++i) {
      for (int j = 0; j < m.in_dim; ++j) {
        long e = q[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (e != 0) {
          acc += static_cast<double>(e) * x[static_cast<size_t>(i)] *
                 x[static_cast<size_t>(j)];
        }
      }
    }
    return acc;
  };
  for (const auto& p : points) {
    std::vector<double> x = to_double_vec(p.coords);
    RatMat jac = quadratic_map_jacobian(m, p.coords);
    for (int c = 0; c < m.out_dim; ++c) {
      for (int j = 0; j < m.in_dim; ++j) {
        std::vector<double> hi = x, lo = x;
        hi[static_cast<size_t>(j)] += step;
        lo[static_cast<size_t>(j)] -= step;
        double fd = (eval_double(hi, c) - eval_double(lo, c)) / (2 * step);
        double exact =
            to_double(jac[static_cast<size_t>(c)][static_cast<size_t>(j)]);
        if (std::fabs(fd - exact) > tol) return false;
      }
    }
  }
  return true;
}

const QuadraticMap& hopf_s3() {
  static const QuadraticMap m = [] {
    QuadraticMap q;
    q.in_dim = 4;
    q.out_dim = 3;
    q.q = {
        quad_form(4, {{1, 0, 0}, {1, 1, 1}, {-1, 2, 2}, {-1, 3, 3}}),
        quad_form(4, {{1, 0, 2}, {1, 1, 3}}),
        quad_form(4, {{1, 1, 2}, {-1, 0, 3}}),
    };
    return q;
  }();
  return m;
}

const QuadraticMap& quat_hopf() {
  static const QuadraticMap m = [] {
    QuadraticMap q;
    q.in_dim = 8;
    q.out_dim = 5;
    q.q = {
        quad_form(8, {{1, 0, 0}, {1, 1, 1}, {1, 2, 2}, {1, 3, 3},
                      {-1, 4, 4}, {-1, 5, 5}, {-1, 6, 6}, {-1, 7, 7}}),
        quad_form(8, {{1, 0, 4}, {1, 1, 5}, {1, 2, 6}, {1, 3, 7}}),
        quad_form(8, {{-1, 0, 5}, {1, 1, 4}, {-1, 2, 7}, {1, 3, 6}}),
        quad_form(8, {{-1, 0, 6}, {1, 1, 7}, {1, 2, 4}, {-1, 3, 5}}),
        quad_form(8, {{-1, 0, 7}, {-1, 1, 6}, {1, 2, 5}, {1, 3, 4}}),
    };
    return q;
  }();
  return m;
}

RatVec hopf_s3_map(const SpherePoint& p) {
  return quadratic_map_eval(hopf_s3(), p.coords);
}

JacobianInfo hopf_s3_jacobian(const SpherePoint& p) {
  JacobianInfo info;
  info.jac = quadratic_map_jacobian(hopf_s3(), p.coords);
  info.rank = rank(info.jac);
  if (info.rank != 3) {
    throw std::logic_error("hopf_s3_jacobian: rank is not 3 at a sphere point");
  }
  info.kernel = nullspace(info.jac);
  return info;
}

bool s3_minor_identity_check() {
  const QuadraticMap& m = hopf_s3();
  // Half-scaled Jacobian: row c, column j is x^T q[c] e_j (degree 1).
  PolyMatrix half = poly_matrix(3, 4, 4);
  for (int c = 0; c < 3; ++c) {
    for (int j = 0; j < 4; ++j) {
      MultiPoly e = mp_zero(4);
      for (int i = 0; i < 4; ++i) {
        long v = m.q[static_cast<size_t>(c)][static_cast<size_t>(i)]
                    [static_cast<size_t>(j)];
        if (v != 0) e = mp_add(e, mp_scale(mp_var(4, i), Rational(v)));
      }
      half.at(c, j) = e;
    }
  }
  MultiPoly sum = mp_zero(4);
  for (int drop = 0; drop < 4; ++drop) {
    PolyMatrix minor = poly_matrix(3, 3, 4);
    for (int r = 0; r < 3; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == drop) continue;
        minor.at(r, cc++) = half.at(r, c);
      }
    }
    MultiPoly d = poly_det(minor);
    sum = mp_add(sum, mp_mul(d, d));
  }
  MultiPoly norm = mp_zero(4);
  for (int i = 0; i < 4; ++i) {
    norm = mp_add(norm, mp_mul(mp_var(4, i), mp_var(4, i)));
  }
  return poly_identity_check(sum, mp_pow(norm, 3));
}

bool s3_equivariance_check(const SpherePoint& p) {
  static const std::vector<std::pair<Rational, Rational>> rotations = {
      {rat(3, 5), rat(4, 5)}, {rat(5, 13), rat(12, 13)}};
  RatVec base = hopf_s3_map(p);
  for (const auto& [c, s] : rotations) {
    RatVec r(4);
    r[0] = c * p.coords[0] - s * p.coords[1];
    r[1] = s * p.coords[0] + c * p.coords[1];
    r[2] = c * p.coords[2] - s * p.coords[3];
    r[3] = s * p.coords[2] + c * p.coords[3];
    SpherePoint q = sphere_point(std::move(r));
    if (hopf_s3_map(q) != base) return false;
  }
  return true;
}

bool fiber_curve_check(const SpherePoint& p, int samples) {
  if (p.dim != 4) {
    throw std::invalid_argument("fiber_curve_check: expected a 4d point");
  }
  if (samples < 4) {
    throw std::invalid_argument("fiber_curve_check: need at least 4 samples");
  }
  const double kConstTol = 1e-12;
  const double kVelTol = 1e-9;
  const double kStep = 1e-6;
  const double kTwoPi = 2.0 * std::acos(-1.0);

  std::vector<double> x = to_double_vec(p.coords);
  auto gamma = [&](double t) {
    double c = std::cos(kTwoPi * t), s = std::sin(kTwoPi * t);
    return std::vector<double>{c * x[0] - s * x[1], s * x[0] + c * x[1],
                               c * x[2] - s * x[3], s * x[2] + c * x[3]};
  };
  auto h_eval = [&](const std::vector<double>& v) {
    return std::vector<double>{
        v[0] * v[0] + v[1] * v[1] - v[2] * v[2] - v[3] * v[3],
        2 * (v[0] * v[2] + v[1] * v[3]), 2 * (v[1] * v[2] - v[0] * v[3])};
  };

  std::vector<double> h0 = h_eval(x);
  for (int k = 0; k <= samples; ++k) {
    double t = static_cast<double>(k) / samples;
    std::vector<double> g = gamma(t);
    std::vector<double> h = h_eval(g);
    for (int c = 0; c < 3; ++c) {
      if (std::fabs(h[static_cast<size_t>(c)] - h0[static_cast<size_t>(c)]) >
          kConstTol) {
        return false;
      }
    }
    // Periodicity at the endpoints: gamma(0) and gamma(1) both equal p.
    if (k == 0 || k == samples) {
      for (int c = 0; c < 4; ++c) {
        if (std::fabs(g[static_cast<size_t>(c)] - x[static_cast<size_t>(c)]) >
            kConstTol) {
          return false;
        }
      }
    }
    std::vector<double> hi = gamma(t + kStep), lo = gamma(t - kStep);
    // 2 pi V at gamma(t), with V = (-y1, y0, -y3, y2).
    std::vector<double> vel = {-g[1], g[0], -g[3], g[2]};
    for (int c = 0; c < 4; ++c) {
      double fd = (hi[static_cast<size_t>(c)] - lo[static_cast<size_t>(c)]) /
                  (2 * kStep);
      if (std::fabs(fd - kTwoPi * vel[static_cast<size_t>(c)]) > kVelTol) {
        return false;
      }
    }
  }
  return true;
}

namespace {

MultiPoly chart_num(int k) {
  // Numerators: (x0 x_{2k+2} + x1 x_{2k+3}, x0 x_{2k+3} - x1 x_{2k+2}).
  int u = 2 + 2 * (k / 2);
  MultiPoly x0 = mp_var(8, 0), x1 = mp_var(8, 1);
  MultiPoly xu = mp_var(8, u), xv = mp_var(8, u + 1);
  if (k % 2 == 0) return mp_add(mp_mul(x0, xu), mp_mul(x1, xv));
  return mp_sub(mp_mul(x0, xv), mp_mul(x1, xu));
}

MultiPoly chart_den() {
  MultiPoly x0 = mp_var(8, 0), x1 = mp_var(8, 1);
  return mp_add(mp_mul(x0, x0), mp_mul(x1, x1));
}

}  // namespace

const RationalMap& cp3_chart() {
  static const RationalMap m = [] {
    RationalMap r;
    r.in_dim = 8;
    r.out_dim = 6;
    for (int k = 0; k < 6; ++k) r.components.push_back({chart_num(k), chart_den()});
    return r;
  }();
  return m;
}

RatVec chart_map(const SpherePoint& p) {
  const RationalMap& m = cp3_chart();
  Rational den = mp_eval(m.components[0].second, p.coords);
  if (den == 0) {
    throw std::domain_error("chart_map: x0^2 + x1^2 = 0, outside the chart");
  }
  RatVec out;
  out.reserve(6);
  for (const auto& [num, d] : m.components) {
    out.push_back(mp_eval(num, p.coords) / den);
  }
  return out;
}

JacobianInfo chart_jacobian(const SpherePoint& p) {
  const RationalMap& m = cp3_chart();
  Rational den = mp_eval(m.components[0].second, p.coords);
  if (den == 0) {
    throw std::domain_error(
        "chart_jacobian: x0^2 + x1^2 = 0, outside the chart");
  }
  JacobianInfo info;
  info.jac = RatMat(6, RatVec(8, Rational(0)));
  Rational den2 = den * den;
  for (int r = 0; r < 6; ++r) {
    const MultiPoly& num = m.components[static_cast<size_t>(r)].first;
    const MultiPoly& d = m.components[static_cast<size_t>(r)].second;
    Rational num_val = mp_eval(num, p.coords);
    for (int c = 0; c < 8; ++c) {
      Rational dn = mp_eval(mp_derivative(num, c), p.coords);
      Rational dd = mp_eval(mp_derivative(d, c), p.coords);
      info.jac[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          (dn * den - num_val * dd) / den2;
    }
  }
  info.rank = rank(info.jac);
  info.kernel = nullspace(info.jac);
  return info;
}

namespace {

// Builders for the printed cleared-numerator entries (d = x0^2 + x1^2):
//   A(u,v) = (x1^2 - x0^2) x_u - 2 x0 x1 x_v
//   B(u,v) = (x0^2 - x1^2) x_u - 2 x0 x1 x_v
//   C(u,v) = (x1^2 - x0^2) x_u + 2 x0 x1 x_v
MultiPoly printed_entry(char kind, int u, int v) {
  MultiPoly x0 = mp_var(8, 0), x1 = mp_var(8, 1);
  MultiPoly sq_diff = mp_sub(mp_mul(x1, x1), mp_mul(x0, x0));
  if (kind == 'B') sq_diff = mp_neg(sq_diff);
  MultiPoly cross = mp_scale(mp_mul(mp_mul(x0, x1), mp_var(8, v)), rat(2));
  if (kind != 'C') cross = mp_neg(cross);
  return mp_add(mp_mul(sq_diff, mp_var(8, u)), cross);
}

MultiPoly printed_block_entry(int var, int sign) {
  // sign * x_var * (x0^2 + x1^2).
  return mp_scale(mp_mul(mp_var(8, var), chart_den()), rat(sign));
}

PolyMatrix printed_chart_matrix() {
  PolyMatrix m = poly_matrix(6, 8, 8);
  for (int k = 0; k < 3; ++k) {
    int u = 2 + 2 * k, v = u + 1;
    int r0 = 2 * k, r1 = r0 + 1;
    m.at(r0, 0) = printed_entry('A', u, v);
    m.at(r0, 1) = printed_entry('B', v, u);
    m.at(r0, u) = printed_block_entry(0, +1);
    m.at(r0, v) = printed_block_entry(1, +1);
    m.at(r1, 0) = printed_entry('C', v, u);
    m.at(r1, 1) = printed_entry('A', u, v);
    m.at(r1, u) = printed_block_entry(1, -1);
    m.at(r1, v) = printed_block_entry(0, +1);
  }
  return m;
}

}  // namespace

bool chart_printed_jacobian_check() {
  const RationalMap& m = cp3_chart();
  PolyMatrix printed = printed_chart_matrix();
  for (int r = 0; r < 6; ++r) {
    const MultiPoly& num = m.components[static_cast<size_t>(r)].first;
    const MultiPoly& den = m.components[static_cast<size_t>(r)].second;
    for (int c = 0; c < 8; ++c) {
      MultiPoly quotient_rule = mp_sub(mp_mul(mp_derivative(num, c), den),
                                       mp_mul(num, mp_derivative(den, c)));
      if (!poly_identity_check(printed.at(r, c), quotient_rule)) return false;
    }
  }
  return true;
}

bool chart_det_check(const SpherePoint& p) {
  JacobianInfo info = chart_jacobian(p);
  RatMat m = mat_mul(info.jac, mat_transpose(info.jac));
  Rational d = mp_eval(chart_den(), p.coords);
  Rational dd = d * d;                  // d^2
  Rational d8 = dd * dd * dd * dd;      // d^8
  return det(m) * d8 == 1;
}

RatVec quat_hopf_map(const SpherePoint& p) {
  return quadratic_map_eval(quat_hopf(), p.coords);
}

RatMat quat_hopf_jacobian(const SpherePoint& p) {
  return quadratic_map_jacobian(quat_hopf(), p.coords);
}

int quat_hopf_restricted_rank(const SpherePoint& p) {
  RatMat jac = quat_hopf_jacobian(p);
  std::vector<RatVec> tangent = orthogonal_complement({p.coords}, 8);
  RatMat images;
  images.reserve(tangent.size());
  for (const auto& t : tangent) images.push_back(mat_vec(jac, t));
  return rank(images);
}

const std::vector<LinearVectorField>& quat_vertical_fields() {
  static const std::vector<LinearVectorField> v = [] {
    const FieldTable& t = tabulated_half_commutators();
    return std::vector<LinearVectorField>{t.at({4, 5}), t.at({4, 6}),
                                          t.at({5, 6})};
  }();
  return v;
}

std::pair<bool, bool> quat_vertical_annihilation_check() {
  const QuadraticMap& m = quat_hopf();
  bool raw = true;
  bool holds = true;
  for (const auto& f : quat_vertical_fields()) {
    for (int c = 0; c < m.out_dim; ++c) {
      MultiPoly comp = quadratic_component_poly(m, c);
      MultiPoly image = mp_zero(8);
      for (int j = 0; j < 8; ++j) {
        image = mp_add(image, mp_mul(mp_derivative(comp, j),
                                     field_component_poly(f, j)));
      }
      if (!image.is_zero()) {
        raw = false;
        if (!poly_identity_check(image, mp_zero(8), /*mod_sphere=*/true)) {
          holds = false;
        }
      }
    }
  }
  return {holds, holds && raw};
}

namespace {

MultiPoly quad_terms_poly(const std::vector<std::tuple<long, int, int>>& terms) {
  // 2 * sum of sign * y_i * y_j, the shape of every off-diagonal coefficient.
  MultiPoly p = mp_zero(8);
  for (auto [s, i, j] : terms) {
    p = mp_add(p, mp_scale(mp_mul(mp_var(8, i), mp_var(8, j)),
                           Rational(2 * s)));
  }
  return p;
}

}  // namespace

const MultiPoly& hopf_coefficient_poly(int m, int k) {
  static const std::vector<std::vector<MultiPoly>> grid = [] {
    std::vector<std::vector<MultiPoly>> g(5, std::vector<MultiPoly>(5,
                                                                    mp_zero(8)));
    for (int d = 0; d < 5; ++d) {
      g[static_cast<size_t>(d)][static_cast<size_t>(d)] =
          quadratic_component_poly(quat_hopf(), d);
    }
    g[1][2] = quad_terms_poly({{-1, 0, 5}, {1, 1, 4}, {1, 2, 7}, {-1, 3, 6}});
    g[1][3] = quad_terms_poly({{-1, 0, 6}, {-1, 1, 7}, {1, 2, 4}, {1, 3, 5}});
    g[1][4] = quad_terms_poly({{1, 0, 7}, {-1, 1, 6}, {1, 2, 5}, {-1, 3, 4}});
    g[2][1] = quad_terms_poly({{1, 0, 4}, {1, 1, 5}, {-1, 2, 6}, {-1, 3, 7}});
    g[2][3] = quad_terms_poly({{-1, 0, 6}, {-1, 1, 7}, {-1, 2, 4}, {-1, 3, 5}});
    g[2][4] = quad_terms_poly({{-1, 0, 7}, {1, 1, 6}, {1, 2, 5}, {-1, 3, 4}});
    g[3][1] = quad_terms_poly({{-1, 0, 4}, {1, 1, 5}, {-1, 2, 6}, {1, 3, 7}});
    g[3][2] = quad_terms_poly({{-1, 0, 5}, {-1, 1, 4}, {1, 2, 7}, {1, 3, 6}});
    g[3][4] = quad_terms_poly({{-1, 0, 7}, {-1, 1, 6}, {-1, 2, 5}, {-1, 3, 4}});
    g[4][1] = quad_terms_poly({{1, 0, 4}, {-1, 1, 5}, {-1, 2, 6}, {1, 3, 7}});
    g[4][2] = quad_terms_poly({{-1, 0, 5}, {-1, 1, 4}, {-1, 2, 7}, {-1, 3, 6}});
    g[4][3] = quad_terms_poly({{1, 0, 6}, {-1, 1, 7}, {1, 2, 4}, {-1, 3, 5}});
    return g;
  }();
  if (m < 0 || m > 4 || k < 0 || k > 4 || (m == 0) != (k == 0)) {
    throw std::invalid_argument("hopf_coefficient_poly: bad index");
  }
  return grid[static_cast<size_t>(m)][static_cast<size_t>(k)];
}

HopfCoefficients hopf_coefficients(const SpherePoint& p) {
  HopfCoefficients c;
  c.a00 = mp_eval(hopf_coefficient_poly(0, 0), p.coords);
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 4; ++k) {
      c.amk[m - 1][k - 1] = mp_eval(hopf_coefficient_poly(m, k), p.coords);
    }
  }
  return c;
}

bool coefficient_identities_check() {
  MultiPoly one = mp_const(8, 1);
  MultiPoly diag_sum = mp_zero(8);
  for (int d = 0; d < 5; ++d) {
    const MultiPoly& a = hopf_coefficient_poly(d, d == 0 ? 0 : d);
    diag_sum = mp_add(diag_sum, mp_mul(a, a));
  }
  if (!poly_identity_check(diag_sum, one, /*mod_sphere=*/true)) return false;
  const MultiPoly& a00 = hopf_coefficient_poly(0, 0);
  for (int m = 1; m <= 4; ++m) {
    MultiPoly row = mp_mul(a00, a00);
    for (int k = 1; k <= 4; ++k) {
      const MultiPoly& a = hopf_coefficient_poly(m, k);
      row = mp_add(row, mp_mul(a, a));
    }
    if (!poly_identity_check(row, one, /*mod_sphere=*/true)) return false;
  }
  return true;
}

const std::vector<CoefficientPairing>& coefficient_pairings() {
  static const std::vector<CoefficientPairing> pairings = [] {
    std::vector<CoefficientPairing> out;
    // family fields: family 0 is {Y47, Y57, Y67}; family m in 1..4 is
    // {Y_{j4}..Y_{j7}} with j = 4 - m ((0,k) denotes the frame field Y_k).
    auto family_fields = [](int fam) -> std::vector<std::pair<int, int>> {
      if (fam == 0) return {{4, 7}, {5, 7}, {6, 7}};
      int j = 4 - fam;
      return {{j, 4}, {j, 5}, {j, 6}, {j, 7}};
    };
    // Printed nonzero expectations: per family, entries indexed by
    // (vertical, partner) with sign and coefficient (m, k).
    struct Printed {
      int fam, vertical;
      std::pair<int, int> partner;
      int sign, m, k;
    };
    static const Printed kPrinted[] = {
        {0, 0, {6, 7}, +1, 0, 0}, {0, 1, {5, 7}, -1, 0, 0},
        {0, 2, {4, 7}, +1, 0, 0},
        {1, 0, {3, 6}, +1, 1, 1}, {1, 1, {3, 5}, -1, 1, 1},
        {1, 2, {3, 4}, +1, 1, 1}, {1, 0, {3, 7}, +1, 1, 2},
        {1, 1, {3, 7}, +1, 1, 3}, {1, 2, {3, 7}, +1, 1, 4},
        {2, 0, {2, 6}, -1, 2, 2}, {2, 1, {2, 5}, +1, 2, 2},
        {2, 2, {2, 4}, -1, 2, 2}, {2, 0, {2, 7}, +1, 2, 1},
        {2, 1, {2, 7}, +1, 2, 4}, {2, 2, {2, 7}, +1, 2, 3},
        {3, 0, {1, 6}, +1, 3, 3}, {3, 1, {1, 5}, -1, 3, 3},
        {3, 2, {1, 4}, +1, 3, 3}, {3, 0, {1, 7}, +1, 3, 4},
        {3, 1, {1, 7}, +1, 3, 1}, {3, 2, {1, 7}, +1, 3, 2},
        {4, 0, {0, 6}, +1, 4, 4}, {4, 1, {0, 5}, -1, 4, 4},
        {4, 2, {0, 4}, +1, 4, 4}, {4, 0, {0, 7}, +1, 4, 3},
        {4, 1, {0, 7}, +1, 4, 2}, {4, 2, {0, 7}, +1, 4, 1},
    };
    for (int fam = 0; fam <= 4; ++fam) {
      for (int vert = 0; vert < 3; ++vert) {
        for (const auto& partner : family_fields(fam)) {
          CoefficientPairing cp;
          cp.family = fam;
          cp.vertical = vert;
          cp.partner = partner;
          cp.sign = 0;
          for (const Printed& pr : kPrinted) {
            if (pr.fam == fam && pr.vertical == vert &&
                pr.partner == partner) {
              cp.sign = pr.sign;
              cp.m = pr.m;
              cp.k = pr.k;
              break;
            }
          }
          out.push_back(cp);
        }
      }
    }
    return out;
  }();
  return pairings;
}

namespace {

const LinearVectorField& field_by_index(const std::pair<int, int>& idx) {
  if (idx.first == 0) {
    return invariant_frame(8)[static_cast<size_t>(idx.second)];
  }
  return tabulated_half_commutators().at(idx);
}

}  // namespace

bool coefficient_pairing_check(const CoefficientPairing& cp) {
  const LinearVectorField& vert = quat_vertical_fields()[
      static_cast<size_t>(cp.vertical)];
  const LinearVectorField& partner = field_by_index(cp.partner);
  MultiPoly g = gram_poly(vert, partner);
  MultiPoly expected =
      cp.sign == 0
          ? mp_zero(8)
          : mp_scale(hopf_coefficient_poly(cp.m, cp.k), Rational(cp.sign));
  return poly_identity_check(g, expected, /*mod_sphere=*/true);
}

RegionTag region_tag(const SpherePoint& p) {
  if (p.dim != 8) {
    throw std::invalid_argument("region_tag: expected an 8d point");
  }
  Rational lo = 0, hi = 0;
  for (int i = 0; i < 4; ++i) lo += p.coords[static_cast<size_t>(i)] *
                                    p.coords[static_cast<size_t>(i)];
  for (int i = 4; i < 8; ++i) hi += p.coords[static_cast<size_t>(i)] *
                                    p.coords[static_cast<size_t>(i)];
  if (lo == rat(1, 2) && hi == rat(1, 2)) return RegionTag::S1;
  if ((lo == 0 && hi == 1) || (lo == 1 && hi == 0)) return RegionTag::S2;
  return RegionTag::GENERIC;
}

std::string region_tag_name(RegionTag t) {
  switch (t) {
    case RegionTag::S1: return "S1";
    case RegionTag::S2: return "S2";
    default: return "generic";
  }
}

Distribution horizontal_family(int m) {
  if (m < 1 || m > 4) {
    throw std::invalid_argument("horizontal_family: m must be in 1..4");
  }
  Distribution d;
  d.dim = 8;
  d.label = "H" + std::to_string(m);
  int j = 4 - m;
  for (int k = 4; k <= 7; ++k) {
    d.generators.push_back(field_by_index({j, k}));
  }
  return d;
}

Distribution horizontal_family0(int j) {
  if (j < 0 || j > 3) {
    throw std::invalid_argument("horizontal_family0: j must be in 0..3");
  }
  Distribution d;
  d.dim = 8;
  d.label = "H0+Y" + std::to_string(j) + "7";
  d.generators = {field_by_index({4, 7}), field_by_index({5, 7}),
                  field_by_index({6, 7}), field_by_index({j, 7})};
  return d;
}

bool transversality_check(const Distribution& d, const SpherePoint& p) {
  if (d.generators.size() != 4) {
    throw std::invalid_argument("transversality_check: need 4 generators");
  }
  RatMat stacked;
  for (const auto& g : d.generators) {
    RatVec v = eval_field(g, p);
    if (dot(v, p.coords) != 0) {
      throw std::logic_error(
          "transversality_check: generator is not tangent at the point");
    }
    stacked.push_back(std::move(v));
  }
  for (const auto& f : quat_vertical_fields()) {
    stacked.push_back(eval_field(f, p));
  }
  return rank(stacked) == 7;
}

EhresmannSelection ehresmann_select(const SpherePoint& p) {
  EhresmannSelection sel;
  sel.tag = region_tag(p);
  if (sel.tag != RegionTag::S1) {
    for (int m = 1; m <= 4; ++m) {
      Distribution d = horizontal_family(m);
      if (transversality_check(d, p)) {
        sel.found = true;
        sel.label = d.label;
        sel.chosen = std::move(d);
        return sel;
      }
    }
  } else {
    for (int j = 0; j <= 3; ++j) {
      Distribution d = horizontal_family0(j);
      if (transversality_check(d, p)) {
        sel.found = true;
        sel.label = d.label;
        sel.chosen = std::move(d);
        return sel;
      }
    }
  }
  sel.found = false;
  return sel;
}

}  // namespace hopf
