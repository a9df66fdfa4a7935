#include "hopf/vectorfields.hpp"

#include <stdexcept>

namespace hopf {
namespace {

using SV = std::pair<int, int>;  // {sign, variable index}; var -1 means 0

void check_dim48(int dim, const char* what) {
  if (dim != 4 && dim != 8) {
    throw std::invalid_argument(std::string(what) +
                                ": dimension must be 4 or 8");
  }
}

IntMat zero_int_mat(int dim) {
  return IntMat(static_cast<size_t>(dim),
                std::vector<long>(static_cast<size_t>(dim), 0));
}

}  // namespace

SpherePoint sphere_point(RatVec coords) {
  Rational s = 0;
  for (const auto& c : coords) s += c * c;
  if (s != 1) {
    throw std::invalid_argument(
        "sphere_point: coordinates do not have exact unit norm");
  }
  SpherePoint p;
  p.dim = static_cast<int>(coords.size());
  p.coords = std::move(coords);
  return p;
}

SpherePoint basis_point(int dim, int i, int sign) {
  RatVec c(static_cast<size_t>(dim), Rational(0));
  c[static_cast<size_t>(i)] = sign >= 0 ? 1 : -1;
  return sphere_point(std::move(c));
}

LinearVectorField field_from_components(
    int dim, const std::vector<std::pair<int, int>>& signed_vars,
    std::string name) {
  if (static_cast<int>(signed_vars.size()) != dim) {
    throw std::invalid_argument("field_from_components: component count");
  }
  LinearVectorField f;
  f.dim = dim;
  f.mat = zero_int_mat(dim);
  f.name = std::move(name);
  for (int c = 0; c < dim; ++c) {
    auto [s, v] = signed_vars[static_cast<size_t>(c)];
    if (v < 0) continue;
    f.mat[static_cast<size_t>(c)][static_cast<size_t>(v)] = s;
  }
  return f;
}

RatVec eval_field(const LinearVectorField& f, const RatVec& y) {
  if (static_cast<int>(y.size()) != f.dim) {
    throw std::invalid_argument("eval_field: dimension mismatch");
  }
  RatVec out(static_cast<size_t>(f.dim), Rational(0));
  for (int r = 0; r < f.dim; ++r) {
    Rational acc = 0;
    for (int c = 0; c < f.dim; ++c) {
      long m = f.mat[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (m != 0) acc += Rational(m) * y[static_cast<size_t>(c)];
    }
    out[static_cast<size_t>(r)] = acc;
  }
  return out;
}

RatVec eval_field(const LinearVectorField& f, const SpherePoint& p) {
  return eval_field(f, p.coords);
}

bool fields_equal(const LinearVectorField& a, const LinearVectorField& b) {
  return a.dim == b.dim && a.mat == b.mat;
}

LinearVectorField field_add(const LinearVectorField& a,
                            const LinearVectorField& b) {
  if (a.dim != b.dim) {
    throw std::invalid_argument("field_add: dimension mismatch");
  }
  LinearVectorField out = a;
  out.name = a.name + "+" + b.name;
  for (int r = 0; r < a.dim; ++r) {
    for (int c = 0; c < a.dim; ++c) {
      out.mat[static_cast<size_t>(r)][static_cast<size_t>(c)] +=
          b.mat[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
  }
  return out;
}

LinearVectorField field_scale(const LinearVectorField& a, long c) {
  LinearVectorField out = a;
  for (auto& row : out.mat) {
    for (auto& e : row) e *= c;
  }
  return out;
}

MultiPoly field_component_poly(const LinearVectorField& f, int c) {
  MultiPoly p = mp_zero(f.dim);
  for (int k = 0; k < f.dim; ++k) {
    long m = f.mat[static_cast<size_t>(c)][static_cast<size_t>(k)];
    if (m != 0) p = mp_add(p, mp_scale(mp_var(f.dim, k), Rational(m)));
  }
  return p;
}

MultiPoly gram_poly(const LinearVectorField& f, const LinearVectorField& g) {
  if (f.dim != g.dim) {
    throw std::invalid_argument("gram_poly: dimension mismatch");
  }
  MultiPoly acc = mp_zero(f.dim);
  for (int c = 0; c < f.dim; ++c) {
    acc = mp_add(acc, mp_mul(field_component_poly(f, c),
                             field_component_poly(g, c)));
  }
  return acc;
}

namespace {

// Right-translation differential patterns: entry (r, c) is sign * y_var.
// Transcribed from the printed matrices for quaternionic (dim 4) and
// octonionic (dim 8) right multiplication.
constexpr SV kRight4[4][4] = {
    {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
    {{-1, 1}, {+1, 0}, {-1, 3}, {+1, 2}},
    {{-1, 2}, {+1, 3}, {+1, 0}, {-1, 1}},
    {{-1, 3}, {-1, 2}, {+1, 1}, {+1, 0}},
};

constexpr SV kRight8[8][8] = {
    {{+1, 0}, {-1, 1}, {-1, 2}, {-1, 3}, {-1, 4}, {-1, 5}, {-1, 6}, {-1, 7}},
    {{+1, 1}, {+1, 0}, {+1, 3}, {-1, 2}, {+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}},
    {{+1, 2}, {-1, 3}, {+1, 0}, {+1, 1}, {+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}},
    {{+1, 3}, {+1, 2}, {-1, 1}, {+1, 0}, {+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}},
    {{+1, 4}, {-1, 5}, {-1, 6}, {-1, 7}, {+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
    {{+1, 5}, {+1, 4}, {-1, 7}, {+1, 6}, {-1, 1}, {+1, 0}, {-1, 3}, {+1, 2}},
    {{+1, 6}, {+1, 7}, {+1, 4}, {-1, 5}, {-1, 2}, {+1, 3}, {+1, 0}, {-1, 1}},
    {{+1, 7}, {-1, 6}, {+1, 5}, {+1, 4}, {-1, 3}, {-1, 2}, {+1, 1}, {+1, 0}},
};

std::vector<LinearVectorField> make_frame4() {
  return {
      field_from_components(4, {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}}, "N"),
      field_from_components(4, {{-1, 1}, {+1, 0}, {-1, 3}, {+1, 2}}, "V"),
      field_from_components(4, {{-1, 2}, {+1, 3}, {+1, 0}, {-1, 1}}, "X"),
      field_from_components(4, {{-1, 3}, {-1, 2}, {+1, 1}, {+1, 0}}, "Y"),
  };
}

std::vector<LinearVectorField> make_frame8() {
  return {
      field_from_components(8,
                            {{+1, 0},
                             {+1, 1},
                             {+1, 2},
                             {+1, 3},
                             {+1, 4},
                             {+1, 5},
                             {+1, 6},
                             {+1, 7}},
                            "Y0"),
      field_from_components(8,
                            {{-1, 1},
                             {+1, 0},
                             {-1, 3},
                             {+1, 2},
                             {-1, 5},
                             {+1, 4},
                             {-1, 7},
                             {+1, 6}},
                            "Y1"),
      field_from_components(8,
                            {{-1, 2},
                             {+1, 3},
                             {+1, 0},
                             {-1, 1},
                             {-1, 6},
                             {+1, 7},
                             {+1, 4},
                             {-1, 5}},
                            "Y2"),
      field_from_components(8,
                            {{-1, 3},
                             {-1, 2},
                             {+1, 1},
                             {+1, 0},
                             {+1, 7},
                             {+1, 6},
                             {-1, 5},
                             {-1, 4}},
                            "Y3"),
      field_from_components(8,
                            {{-1, 4},
                             {+1, 5},
                             {+1, 6},
                             {-1, 7},
                             {+1, 0},
                             {-1, 1},
                             {-1, 2},
                             {+1, 3}},
                            "Y4"),
      field_from_components(8,
                            {{-1, 5},
                             {-1, 4},
                             {-1, 7},
                             {-1, 6},
                             {+1, 1},
                             {+1, 0},
                             {+1, 3},
                             {+1, 2}},
                            "Y5"),
      field_from_components(8,
                            {{-1, 6},
                             {+1, 7},
                             {-1, 4},
                             {+1, 5},
                             {+1, 2},
                             {-1, 3},
                             {+1, 0},
                             {-1, 1}},
                            "Y6"),
      field_from_components(8,
                            {{-1, 7},
                             {-1, 6},
                             {+1, 5},
                             {+1, 4},
                             {-1, 3},
                             {-1, 2},
                             {+1, 1},
                             {+1, 0}},
                            "Y7"),
  };
}

}  // namespace

RatMat right_translation_matrix(const RatVec& y) {
  int dim = static_cast<int>(y.size());
  check_dim48(dim, "right_translation_matrix");
  RatMat m(static_cast<size_t>(dim), RatVec(static_cast<size_t>(dim), 0));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      SV sv = dim == 4 ? kRight4[r][c] : kRight8[r][c];
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          Rational(sv.first) * y[static_cast<size_t>(sv.second)];
    }
  }
  return m;
}

PolyMatrix right_translation_poly_matrix(int dim) {
  check_dim48(dim, "right_translation_poly_matrix");
  PolyMatrix m = poly_matrix(dim, dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      SV sv = dim == 4 ? kRight4[r][c] : kRight8[r][c];
      m.at(r, c) = mp_scale(mp_var(dim, sv.second), Rational(sv.first));
    }
  }
  return m;
}

const std::vector<LinearVectorField>& invariant_frame(int dim) {
  check_dim48(dim, "invariant_frame");
  static const std::vector<LinearVectorField> f4 = make_frame4();
  static const std::vector<LinearVectorField> f8 = make_frame8();
  return dim == 4 ? f4 : f8;
}

LinearVectorField vertical_field(int dim) {
  if (dim < 2 || dim % 2 != 0) {
    throw std::invalid_argument("vertical_field: dimension must be even");
  }
  std::vector<SV> comps;
  comps.reserve(static_cast<size_t>(dim));
  for (int j = 0; j * 2 < dim; ++j) {
    comps.push_back({-1, 2 * j + 1});
    comps.push_back({+1, 2 * j});
  }
  return field_from_components(dim, comps, "Vvert");
}

namespace {

OneForm one_form_from_field(const LinearVectorField& f, std::string name) {
  OneForm w;
  w.dim = f.dim;
  w.name = std::move(name);
  w.mat = zero_int_mat(f.dim);
  // Coefficient row of the form is the field itself: the value on u at y is
  // <f(y), u> = y^T A^T u, so the stored matrix is A^T.
  for (int r = 0; r < f.dim; ++r) {
    for (int c = 0; c < f.dim; ++c) {
      w.mat[static_cast<size_t>(c)][static_cast<size_t>(r)] =
          f.mat[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
  }
  return w;
}

}  // namespace

const OneForm& contact_form_omega() {
  static const OneForm w = one_form_from_field(invariant_frame(4)[1], "omega");
  return w;
}

const OneForm& contact_form_theta() {
  static const OneForm w = one_form_from_field(invariant_frame(4)[2], "theta");
  return w;
}

const OneForm& contact_form_eta() {
  static const OneForm w = one_form_from_field(invariant_frame(4)[3], "eta");
  return w;
}

LinearVectorField bracket(const LinearVectorField& f,
                          const LinearVectorField& g) {
  if (f.dim != g.dim) {
    throw std::invalid_argument("bracket: dimension mismatch");
  }
  // [F,G] h = F(G h) - G(F h); with F(y) = A y and G(y) = B y the resulting
  // field is (BA - AB) y.
  LinearVectorField out;
  out.dim = f.dim;
  out.name = "[" + f.name + "," + g.name + "]";
  out.mat = zero_int_mat(f.dim);
  for (int r = 0; r < f.dim; ++r) {
    for (int c = 0; c < f.dim; ++c) {
      long acc = 0;
      for (int k = 0; k < f.dim; ++k) {
        acc += g.mat[static_cast<size_t>(r)][static_cast<size_t>(k)] *
                   f.mat[static_cast<size_t>(k)][static_cast<size_t>(c)] -
               f.mat[static_cast<size_t>(r)][static_cast<size_t>(k)] *
                   g.mat[static_cast<size_t>(k)][static_cast<size_t>(c)];
      }
      out.mat[static_cast<size_t>(r)][static_cast<size_t>(c)] = acc;
    }
  }
  return out;
}

FieldTable commutator_table(const std::vector<LinearVectorField>& frame) {
  if (frame.size() != 8) {
    throw std::invalid_argument("commutator_table: expected 8 frame fields");
  }
  FieldTable table;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      LinearVectorField b = bracket(frame[static_cast<size_t>(i)],
                                    frame[static_cast<size_t>(j)]);
      for (auto& row : b.mat) {
        for (auto& e : row) {
          if (e % 2 != 0) {
            throw std::logic_error(
                "commutator_table: bracket coefficient is odd");
          }
          e /= 2;
        }
      }
      b.name = "Y" + std::to_string(i) + std::to_string(j);
      table[{i, j}] = std::move(b);
    }
  }
  return table;
}

const FieldTable& tabulated_half_commutators() {
  static const FieldTable table = [] {
    struct Row {
      int i, j;
      SV comps[8];
    };
    static const Row kRows[21] = {
        {1, 2, {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}, {+1, 7}, {+1, 6}, {-1, 5}, {-1, 4}}},
        {1, 3, {{-1, 2}, {+1, 3}, {+1, 0}, {-1, 1}, {+1, 6}, {-1, 7}, {-1, 4}, {+1, 5}}},
        {1, 4, {{+1, 5}, {+1, 4}, {-1, 7}, {-1, 6}, {-1, 1}, {-1, 0}, {+1, 3}, {+1, 2}}},
        {1, 5, {{-1, 4}, {+1, 5}, {-1, 6}, {+1, 7}, {+1, 0}, {-1, 1}, {+1, 2}, {-1, 3}}},
        {1, 6, {{+1, 7}, {+1, 6}, {+1, 5}, {+1, 4}, {-1, 3}, {-1, 2}, {-1, 1}, {-1, 0}}},
        {1, 7, {{-1, 6}, {+1, 7}, {+1, 4}, {-1, 5}, {-1, 2}, {+1, 3}, {+1, 0}, {-1, 1}}},
        {2, 3, {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}, {-1, 5}, {+1, 4}, {-1, 7}, {+1, 6}}},
        {2, 4, {{+1, 6}, {+1, 7}, {+1, 4}, {+1, 5}, {-1, 2}, {-1, 3}, {-1, 0}, {-1, 1}}},
        {2, 5, {{-1, 7}, {+1, 6}, {+1, 5}, {-1, 4}, {+1, 3}, {-1, 2}, {-1, 1}, {+1, 0}}},
        {2, 6, {{-1, 4}, {-1, 5}, {+1, 6}, {+1, 7}, {+1, 0}, {+1, 1}, {-1, 2}, {-1, 3}}},
        {2, 7, {{+1, 5}, {-1, 4}, {+1, 7}, {-1, 6}, {+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}}},
        {3, 4, {{-1, 7}, {+1, 6}, {-1, 5}, {+1, 4}, {-1, 3}, {+1, 2}, {-1, 1}, {+1, 0}}},
        {3, 5, {{-1, 6}, {-1, 7}, {+1, 4}, {+1, 5}, {-1, 2}, {-1, 3}, {+1, 0}, {+1, 1}}},
        {3, 6, {{+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}, {+1, 1}, {-1, 0}, {-1, 3}, {+1, 2}}},
        {3, 7, {{+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}, {-1, 0}, {-1, 1}, {-1, 2}, {-1, 3}}},
        {4, 5, {{+1, 1}, {-1, 0}, {-1, 3}, {+1, 2}, {+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}}},
        {4, 6, {{+1, 2}, {+1, 3}, {-1, 0}, {-1, 1}, {+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}}},
        {4, 7, {{-1, 3}, {+1, 2}, {-1, 1}, {+1, 0}, {+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}}},
        {5, 6, {{-1, 3}, {+1, 2}, {-1, 1}, {+1, 0}, {-1, 7}, {+1, 6}, {-1, 5}, {+1, 4}}},
        {5, 7, {{-1, 2}, {-1, 3}, {+1, 0}, {+1, 1}, {+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}}},
        {6, 7, {{+1, 1}, {-1, 0}, {-1, 3}, {+1, 2}, {-1, 5}, {+1, 4}, {+1, 7}, {-1, 6}}},
    };
    FieldTable t;
    for (const Row& r : kRows) {
      std::vector<SV> comps(r.comps, r.comps + 8);
      t[{r.i, r.j}] = field_from_components(
          8, comps, "Y" + std::to_string(r.i) + std::to_string(r.j));
    }
    return t;
  }();
  return table;
}

LinearVectorField v41_field() {
  return field_from_components(8,
                               {{-1, 4},
                                {+1, 5},
                                {0, -1},
                                {0, -1},
                                {+1, 0},
                                {-1, 1},
                                {0, -1},
                                {0, -1}},
                               "v41");
}

LinearVectorField v42_field() {
  return field_from_components(8,
                               {{0, -1},
                                {0, -1},
                                {+1, 6},
                                {-1, 7},
                                {0, -1},
                                {0, -1},
                                {-1, 2},
                                {+1, 3}},
                               "v42");
}

LinearVectorField v51_field() {
  return field_from_components(8,
                               {{-1, 5},
                                {-1, 4},
                                {0, -1},
                                {0, -1},
                                {+1, 1},
                                {+1, 0},
                                {0, -1},
                                {0, -1}},
                               "v51");
}

LinearVectorField v52_field() {
  return field_from_components(8,
                               {{0, -1},
                                {0, -1},
                                {-1, 7},
                                {-1, 6},
                                {0, -1},
                                {0, -1},
                                {+1, 3},
                                {+1, 2}},
                               "v52");
}

Rational one_form_eval(const OneForm& w, const LinearVectorField& f,
                       const SpherePoint& p) {
  if (w.dim != f.dim || w.dim != p.dim) {
    throw std::invalid_argument("one_form_eval: dimension mismatch");
  }
  RatVec u = eval_field(f, p);
  Rational acc = 0;
  for (int r = 0; r < w.dim; ++r) {
    for (int c = 0; c < w.dim; ++c) {
      long m = w.mat[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (m != 0) {
        acc += p.coords[static_cast<size_t>(r)] * Rational(m) *
               u[static_cast<size_t>(c)];
      }
    }
  }
  return acc;
}

Rational gram(const LinearVectorField& f, const LinearVectorField& g,
              const SpherePoint& p) {
  return dot(eval_field(f, p), eval_field(g, p));
}

std::vector<int> flag_dimensions(const Distribution& d, const SpherePoint& p,
                                 int max_depth) {
  if (max_depth < 1) {
    throw std::invalid_argument("flag_dimensions: max_depth must be >= 1");
  }
  if (d.dim != p.dim) {
    throw std::invalid_argument("flag_dimensions: dimension mismatch");
  }
  auto check_tangent = [&](const LinearVectorField& f) {
    if (dot(eval_field(f, p), p.coords) != 0) {
      throw std::logic_error(
          "flag_dimensions: bracket evaluation is not tangent at the point");
    }
  };
  for (const auto& g : d.generators) check_tangent(g);

  std::vector<LinearVectorField> level = d.generators;
  RatMat evals;
  for (const auto& g : level) evals.push_back(eval_field(g, p));

  std::vector<int> dims;
  dims.push_back(span_dim(evals));
  int full = d.dim - 1;
  std::vector<LinearVectorField> prev = level;
  for (int depth = 2; depth <= max_depth; ++depth) {
    if (dims.back() == full) {
      dims.push_back(full);
      continue;
    }
    std::vector<LinearVectorField> next;
    for (const auto& f : prev) {
      for (const auto& g : d.generators) {
        LinearVectorField b = bracket(f, g);
        if (is_zero_int_mat(b.mat)) continue;
        check_tangent(b);
        next.push_back(std::move(b));
      }
    }
    for (const auto& b : next) evals.push_back(eval_field(b, p));
    dims.push_back(span_dim(evals));
    prev = std::move(next);
  }
  return dims;
}

BracketGenerating is_bracket_generating(const Distribution& d,
                                        const std::vector<SpherePoint>& points,
                                        int max_depth) {
  if (points.empty()) {
    throw std::invalid_argument("is_bracket_generating: no sample points");
  }
  BracketGenerating out;
  int full = d.dim - 1;
  int worst = 0;
  for (const auto& p : points) {
    std::vector<int> dims = flag_dimensions(d, p, max_depth);
    int step = 0;
    for (int r = 0; r < static_cast<int>(dims.size()); ++r) {
      if (dims[static_cast<size_t>(r)] == full) {
        step = r + 1;
        break;
      }
    }
    if (step == 0) {
      out.generating = false;
      out.step = 0;
      return out;
    }
    if (step > worst) worst = step;
  }
  out.generating = true;
  out.step = worst;
  return out;
}

bool is_zero_int_mat(const IntMat& m) {
  for (const auto& row : m) {
    for (long e : row) {
      if (e != 0) return false;
    }
  }
  return true;
}

}  // namespace hopf
