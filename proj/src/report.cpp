#include "hopf/report.hpp"

#include "hopf/algebra.hpp"
#include "hopf/crstructure.hpp"
#include "hopf/fibrations.hpp"
#include "hopf/multipoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hopf {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Outcome {
  bool pass = false;
  std::string details;
  std::optional<RatVec> counterexample;
};

struct Ctx {
  const SuiteConfig& config;
  std::vector<SpherePoint> pts4;
  std::vector<SpherePoint> pts8;
  std::vector<CheckResult> checks;

  void run(const std::string& id, const std::string& ref,
           const std::function<Outcome()>& body) {
    CheckResult c;
    c.id = id;
    c.paper_ref = ref;
    try {
      Outcome o = body();
      c.status = o.pass ? "pass" : "fail";
      c.details = o.details;
      c.counterexample = std::move(o.counterexample);
    } catch (const std::exception& e) {
      c.status = "fail";
      c.details = std::string("unexpected exception: ") + e.what();
    }
    checks.push_back(std::move(c));
  }
};

Outcome ok(std::string details) { return {true, std::move(details), {}}; }
Outcome bad(std::string details) { return {false, std::move(details), {}}; }
Outcome bad_at(std::string details, const SpherePoint& p) {
  return {false, std::move(details), p.coords};
}

// Runs a per-point predicate over a sample set; reports the first failure
// with the offending point as counterexample.
Outcome for_each_point(const std::vector<SpherePoint>& pts,
                       const std::function<bool(const SpherePoint&)>& pred,
                       const std::string& pass_details) {
  for (const auto& p : pts) {
    if (!pred(p)) return bad_at("failed at a sampled point", p);
  }
  return ok(pass_details);
}

std::string n_points(size_t n) {
  return std::to_string(n) + " sampled points";
}

// ---------------------------------------------------------------------------
// shared small helpers

AlgebraElement random_element(int dim, std::uint64_t& state) {
  RatVec c(static_cast<size_t>(dim));
  for (auto& q : c) {
    std::uint64_t z1 = splitmix64_next(state);
    std::uint64_t z2 = splitmix64_next(state);
    q = rat(static_cast<long>(z1 % 201) - 100,
            static_cast<long>(z2 % 100) + 1);
  }
  return algebra_element(dim, std::move(c));
}

bool elements_equal(const AlgebraElement& a, const AlgebraElement& b) {
  return a.dim == b.dim && a.coeffs == b.coeffs;
}

MultiPoly norm_sq_poly(int nvars) {
  MultiPoly p = mp_zero(nvars);
  for (int i = 0; i < nvars; ++i) {
    p = mp_add(p, mp_mul(mp_var(nvars, i), mp_var(nvars, i)));
  }
  return p;
}

// Field with matrix M[c][j] = sign of e_r e_j contribution to component c,
// i.e. the translate y -> e_r y computed through the multiplication table.
LinearVectorField basis_translate_field(int dim, int r) {
  LinearVectorField f;
  f.dim = dim;
  f.name = "e" + std::to_string(r) + "*y";
  f.mat = IntMat(static_cast<size_t>(dim),
                 std::vector<long>(static_cast<size_t>(dim), 0));
  for (int j = 0; j < dim; ++j) {
    auto [s, idx] = basis_product(dim, r, j);
    f.mat[static_cast<size_t>(idx)][static_cast<size_t>(j)] = s;
  }
  return f;
}

bool rtm_orthogonality_identity(int dim) {
  PolyMatrix r = right_translation_poly_matrix(dim);
  PolyMatrix prod = poly_mat_mul(poly_mat_transpose(r), r);
  MultiPoly norm = norm_sq_poly(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const MultiPoly& expect = (i == j) ? norm : mp_zero(dim);
      if (!poly_identity_check(prod.at(i, j), expect)) return false;
    }
  }
  return true;
}

bool frame_orthonormal_identity(int dim) {
  const auto& frame = invariant_frame(dim);
  MultiPoly norm = norm_sq_poly(dim);
  for (size_t i = 0; i < frame.size(); ++i) {
    for (size_t j = i; j < frame.size(); ++j) {
      MultiPoly g = gram_poly(frame[i], frame[j]);
      if (!poly_identity_check(g, i == j ? norm : mp_zero(dim))) return false;
    }
  }
  return true;
}

// dh F as five polynomials; true means all are raw zero on R^8 (second value)
// or at least zero modulo the sphere relation (first value).
std::pair<bool, bool> vertical_annihilation(const LinearVectorField& f) {
  const QuadraticMap& m = quat_hopf();
  bool raw = true, holds = true;
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
  return {holds, holds && raw};
}

const std::string kPolyNote = "; point-independent polynomial identity";

// ---------------------------------------------------------------------------
// algebra suite

void suite_algebra(Ctx& ctx) {
  ctx.run("algebra.table.identity-row",
          "e0 is the two-sided identity of the product", [&] {
            for (int dim : {2, 4, 8}) {
              for (int j = 0; j < dim; ++j) {
                if (basis_product(dim, 0, j) != std::make_pair(1, j) ||
                    basis_product(dim, j, 0) != std::make_pair(1, j)) {
                  return bad("identity row/column broken in dim " +
                             std::to_string(dim));
                }
              }
            }
            return ok("identity row and column verified in dims 2, 4, 8");
          });

  ctx.run("algebra.table.diagonal",
          "every imaginary basis unit squares to -e0", [&] {
            for (int dim : {2, 4, 8}) {
              for (int i = 1; i < dim; ++i) {
                if (basis_product(dim, i, i) != std::make_pair(-1, 0)) {
                  return bad("diagonal broken at e" + std::to_string(i) +
                             " in dim " + std::to_string(dim));
                }
              }
            }
            return ok("all imaginary units square to -e0 in dims 2, 4, 8");
          });

  ctx.run("algebra.table.nested-subalgebras",
          "each product table is the leading block of the next", [&] {
            for (int i = 0; i < 4; ++i) {
              for (int j = 0; j < 4; ++j) {
                if (basis_product(4, i, j) != basis_product(8, i, j)) {
                  return bad("quaternion block mismatch inside octonions");
                }
                if (i < 2 && j < 2 &&
                    basis_product(2, i, j) != basis_product(4, i, j)) {
                  return bad("complex block mismatch inside quaternions");
                }
              }
            }
            return ok("2d and 4d tables are leading blocks of the 8d table");
          });

  ctx.run("algebra.mul.table-vs-formula",
          "table product equals the 64-term coordinate expansion", [&] {
            for (int i = 0; i < 8; ++i) {
              for (int j = 0; j < 8; ++j) {
                AlgebraElement lhs = mul(basis_element(8, i), basis_element(8, j));
                AlgebraElement rhs = octonion_formula_mul(basis_element(8, i),
                                                          basis_element(8, j));
                if (!elements_equal(lhs, rhs)) {
                  return bad("basis pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ") disagrees");
                }
              }
            }
            std::uint64_t state = ctx.config.seed + 0x616c6731;
            for (int k = 0; k < 10; ++k) {
              AlgebraElement a = random_element(8, state);
              AlgebraElement b = random_element(8, state);
              if (!elements_equal(mul(a, b), octonion_formula_mul(a, b))) {
                return bad("random product disagrees");
              }
            }
            return ok("64/64 basis products and 10 random products agree");
          });

  ctx.run("algebra.norm.multiplicative",
          "norm identity |a b|^2 = |a|^2 |b|^2", [&] {
            std::uint64_t state = ctx.config.seed + 0x616c6732;
            for (int dim : {2, 4, 8}) {
              for (int k = 0; k < 20; ++k) {
                AlgebraElement a = random_element(dim, state);
                AlgebraElement b = random_element(dim, state);
                if (norm_sq(mul(a, b)) != norm_sq(a) * norm_sq(b)) {
                  return bad("norm identity fails in dim " +
                             std::to_string(dim));
                }
              }
            }
            return ok("exact for 20 random pairs in each of dims 2, 4, 8");
          });

  ctx.run("algebra.conj.antiautomorphism",
          "conjugate(a b) = conjugate(b) conjugate(a)", [&] {
            std::uint64_t state = ctx.config.seed + 0x616c6733;
            for (int dim : {2, 4, 8}) {
              for (int k = 0; k < 20; ++k) {
                AlgebraElement a = random_element(dim, state);
                AlgebraElement b = random_element(dim, state);
                if (!elements_equal(conjugate(mul(a, b)),
                                    mul(conjugate(b), conjugate(a)))) {
                  return bad("antiautomorphism fails in dim " +
                             std::to_string(dim));
                }
                if (!elements_equal(conjugate(conjugate(a)), a)) {
                  return bad("conjugation is not an involution");
                }
              }
            }
            return ok("exact for 20 random pairs in each of dims 2, 4, 8");
          });

  ctx.run("algebra.assoc.subalgebras",
          "complex and quaternion products associate", [&] {
            for (int dim : {2, 4}) {
              for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                  for (int k = 0; k < dim; ++k) {
                    AlgebraElement a = associator(basis_element(dim, i),
                                                  basis_element(dim, j),
                                                  basis_element(dim, k));
                    if (norm_sq(a) != 0) {
                      return bad("nonzero associator in dim " +
                                 std::to_string(dim));
                    }
                  }
                }
              }
            }
            std::uint64_t state = ctx.config.seed + 0x616c6734;
            for (int k = 0; k < 10; ++k) {
              AlgebraElement a = random_element(4, state);
              AlgebraElement b = random_element(4, state);
              AlgebraElement c = random_element(4, state);
              if (norm_sq(associator(a, b, c)) != 0) {
                return bad("nonzero quaternion associator on random triple");
              }
            }
            return ok("all basis triples and 10 random quaternion triples");
          });

  ctx.run("algebra.assoc.octonion-witness",
          "(e1 e2) e4 != e1 (e2 e4) certifies non-associativity", [&] {
            AlgebraElement a = associator(basis_element(8, 1),
                                          basis_element(8, 2),
                                          basis_element(8, 4));
            if (norm_sq(a) == 0) return bad("associator unexpectedly zero");
            std::string s = "associator(e1,e2,e4) coefficients:";
            for (const auto& c : a.coeffs) s += " " + rat_str(c);
            return ok(s);
          });

  ctx.run("algebra.complex.commutative",
          "the 2-dimensional algebra is commutative", [&] {
            std::uint64_t state = ctx.config.seed + 0x616c6735;
            for (int k = 0; k < 20; ++k) {
              AlgebraElement a = random_element(2, state);
              AlgebraElement b = random_element(2, state);
              if (!elements_equal(mul(a, b), mul(b, a))) {
                return bad("2d product is not commutative");
              }
            }
            return ok("exact for 20 random pairs");
          });
}

// ---------------------------------------------------------------------------
// s3 suite

void suite_s3(Ctx& ctx) {
  const auto& frame = invariant_frame(4);
  const LinearVectorField& n = frame[0];
  const LinearVectorField& v = frame[1];
  const LinearVectorField& x = frame[2];
  const LinearVectorField& y = frame[3];

  ctx.run("s3.rtm.orthogonal",
          "right-translation differential satisfies R^T R = |y|^2 I (dim 4)",
          [&] {
            if (!rtm_orthogonality_identity(4)) return bad("identity fails");
            return ok("all 16 entries verified" + kPolyNote);
          });

  ctx.run("s3.frame.vs-product",
          "frame fields equal the basis translates e_r y of the product",
          [&] {
            for (int r = 0; r < 4; ++r) {
              if (basis_translate_field(4, r).mat != frame[static_cast<size_t>(r)].mat) {
                return bad("frame field " + frame[static_cast<size_t>(r)].name +
                           " is not the translate by e" + std::to_string(r));
              }
            }
            return ok("N, V, X, Y equal e0 y, e1 y, e2 y, e3 y exactly");
          });

  ctx.run("s3.frame.orthonormal", "frame is orthonormal on the unit sphere",
          [&] {
            if (!frame_orthonormal_identity(4)) return bad("identity fails");
            return ok("<F_i, F_j> = delta_ij |y|^2 for all pairs" + kPolyNote);
          });

  ctx.run("s3.frame.tangent",
          "V, X, Y are tangent to the sphere; N is the unit normal", [&] {
            for (const auto* f : {&v, &x, &y}) {
              if (!poly_identity_check(gram_poly(*f, n), mp_zero(4))) {
                return bad(f->name + " is not tangent");
              }
            }
            if (n.mat != IntMat{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                                {0, 0, 0, 1}}) {
              return bad("N is not the identity field");
            }
            return ok("tangency identities and normal field verified" +
                      kPolyNote);
          });

  ctx.run("s3.bracket.XY=2V", "commutator relation [X,Y] = 2V", [&] {
    LinearVectorField b = bracket(x, y);
    if (b.mat == field_scale(v, 2).mat) return ok("exact matrix identity");
    if (b.mat == field_scale(v, -2).mat) {
      return bad(
          "computed [X,Y] = -2V; with this bracket orientation the stated "
          "relation holds with the opposite sign, while [V,Y] = 2X and "
          "[X,V] = 2Y hold as stated");
    }
    return bad("computed [X,Y] is not proportional to V");
  });

  ctx.run("s3.bracket.VY=2X", "commutator relation [V,Y] = 2X", [&] {
    if (bracket(v, y).mat != field_scale(x, 2).mat) {
      return bad("matrix identity fails");
    }
    return ok("exact matrix identity");
  });

  ctx.run("s3.bracket.XV=2Y", "commutator relation [X,V] = 2Y", [&] {
    if (bracket(x, v).mat != field_scale(y, 2).mat) {
      return bad("matrix identity fails");
    }
    return ok("exact matrix identity");
  });

  ctx.run("s3.flag.contact",
          "span{X,Y} bracket-generates the tangent bundle in one step", [&] {
            Distribution d{4, "XY", {x, y}};
            for (const auto& p : ctx.pts4) {
              if (flag_dimensions(d, p, 2) != std::vector<int>{2, 3}) {
                return bad_at("growth vector is not [2,3]", p);
              }
            }
            BracketGenerating bg = is_bracket_generating(d, ctx.pts4, 2);
            if (!bg.generating || bg.step != 2) {
              return bad("not bracket generating with step 2");
            }
            return ok("growth vector [2,3] at " + n_points(ctx.pts4.size()));
          });

  struct ContactCase {
    const char* id;
    const char* ref;
    const LinearVectorField* partner;
    const LinearVectorField* killed1;
    const LinearVectorField* killed2;
    const OneForm* form;
  };
  const ContactCase cases[] = {
      {"s3.contact.omega", "omega annihilates span{X,Y} and equals 1 on V",
       &v, &x, &y, &contact_form_omega()},
      {"s3.contact.theta", "theta annihilates span{Y,V} and equals 1 on X",
       &x, &y, &v, &contact_form_theta()},
      {"s3.contact.eta", "eta annihilates span{X,V} and equals 1 on Y",
       &y, &x, &v, &contact_form_eta()},
  };
  for (const auto& c : cases) {
    ctx.run(c.id, c.ref, [&, c] {
      if (!poly_identity_check(gram_poly(*c.partner, *c.killed1), mp_zero(4)) ||
          !poly_identity_check(gram_poly(*c.partner, *c.killed2), mp_zero(4))) {
        return bad("kernel fields are not annihilated identically");
      }
      for (const auto& p : ctx.pts4) {
        if (one_form_eval(*c.form, *c.killed1, p) != 0 ||
            one_form_eval(*c.form, *c.killed2, p) != 0) {
          return bad_at("form does not annihilate a kernel field", p);
        }
        if (one_form_eval(*c.form, *c.partner, p) != 1) {
          return bad_at("form is not 1 on its partner field", p);
        }
      }
      return ok("annihilation is identical; partner value 1 at " +
                n_points(ctx.pts4.size()));
    });
  }
}

// ---------------------------------------------------------------------------
// s3-cr suite

void suite_s3cr(Ctx& ctx) {
  const auto& frame = invariant_frame(4);

  ctx.run("s3cr.j.identities",
          "J exchanges the frame: J X = Y, J Y = -X, J V = -N, J N = V",
          [&] {
            if (!j_structure_check(4)) return bad("a matrix identity fails");
            return ok("all identities hold, plus J J = -I and orthogonality");
          });

  ctx.run("s3cr.holomorphic.dim",
          "holomorphic tangent space has real dimension 2", [&] {
            return for_each_point(
                ctx.pts4,
                [&](const SpherePoint& p) {
                  return subspace_dim(holomorphic_tangent(p)) == 2;
                },
                "dimension 2 at " + n_points(ctx.pts4.size()));
          });

  ctx.run("s3cr.holomorphic.example",
          "H at (1,0,0,0) is span{(0,0,1,0), (0,0,0,1)}", [&] {
            Subspace h = holomorphic_tangent(basis_point(4, 0));
            RatMat expect = {{rat(0), rat(0), rat(1), rat(0)},
                             {rat(0), rat(0), rat(0), rat(1)}};
            if (!same_span(h.basis, expect)) return bad("subspace differs");
            return ok("exact equality of spans");
          });

  ctx.run("s3cr.holomorphic.orthocomplement",
          "H_p is the orthogonal complement of V(p) inside T_p", [&] {
            return for_each_point(ctx.pts4, verify_orthocomplement,
                                  "verified at " + n_points(ctx.pts4.size()));
          });

  ctx.run("s3cr.holomorphic.equals-XY", "H_p = span{X(p), Y(p)}", [&] {
    return for_each_point(
        ctx.pts4,
        [&](const SpherePoint& p) {
          Subspace h = holomorphic_tangent(p);
          RatMat xy = {eval_field(frame[2], p), eval_field(frame[3], p)};
          return same_span(h.basis, xy);
        },
        "exact span equality at " + n_points(ctx.pts4.size()));
  });

  ctx.run("s3cr.holomorphic.j-invariant", "H_p is J-invariant", [&] {
    AlmostComplexStructure j = almost_complex_structure(4);
    RatMat jm;
    for (const auto& row : j.mat) {
      RatVec r;
      for (long e : row) r.push_back(Rational(e));
      jm.push_back(std::move(r));
    }
    return for_each_point(
        ctx.pts4,
        [&](const SpherePoint& p) {
          Subspace h = holomorphic_tangent(p);
          for (const auto& b : h.basis) {
            if (!in_span(h.basis, mat_vec(jm, b))) return false;
          }
          return true;
        },
        "J maps each basis vector back into the subspace at " +
            n_points(ctx.pts4.size()));
  });

  ctx.run("s3cr.form.values",
          "form values: (0,0) on horizontal fields, (0,1) on V, (1,0) on N",
          [&] {
            return for_each_point(
                ctx.pts4,
                [&](const SpherePoint& p) {
                  return cr_form_eval(frame[2], p) == std::make_pair(Rational(0), Rational(0)) &&
                         cr_form_eval(frame[3], p) == std::make_pair(Rational(0), Rational(0)) &&
                         cr_form_eval(frame[1], p) == std::make_pair(Rational(0), Rational(1)) &&
                         cr_form_eval(frame[0], p) == std::make_pair(Rational(1), Rational(0));
                },
                "values verified (complex route cross-checked) at " +
                    n_points(ctx.pts4.size()));
          });

  ctx.run("s3cr.split.identities",
          "wbar d/dz - zbar d/dw = (-X + iY)/2 and "
          "-w d/dzbar + z d/dwbar = (X + iY)/2",
          [&] {
            if (!complex_split_identities_check()) {
              return bad("a real-coordinate identity fails");
            }
            return ok("exact equality of integer field matrices");
          });

  ctx.run("s3cr.lemma.complement",
          "orthogonal complement of the plane span{V, N} is J-invariant",
          [&] {
            return for_each_point(ctx.pts4, j_invariant_complement_check,
                                  "verified at " + n_points(ctx.pts4.size()));
          });
}

// ---------------------------------------------------------------------------
// s3-hopf suite

void suite_s3hopf(Ctx& ctx) {
  const auto& frame = invariant_frame(4);

  ctx.run("hopf3.map.values",
          "h(z,w) = (|z|^2 - |w|^2, 2 z wbar) at reference points", [&] {
            RatVec a = hopf_s3_map(basis_point(4, 0));
            if (a != RatVec{rat(1), rat(0), rat(0)}) {
              return bad("value at (1,0,0,0) differs");
            }
            SpherePoint p = sphere_point({rat(3, 5), rat(0), rat(4, 5), rat(0)});
            RatVec b = hopf_s3_map(p);
            if (b != RatVec{rat(-7, 25), rat(24, 25), rat(0)}) {
              return bad("value at (3/5, 0, 4/5, 0) differs");
            }
            return ok("both reference values exact");
          });

  ctx.run("hopf3.map.norm-identity", "|h(x)|^2 = |x|^4 as polynomials", [&] {
    if (!quadratic_norm_identity_check(hopf_s3())) return bad("identity fails");
    return ok("verified" + kPolyNote);
  });

  ctx.run("hopf3.map.on-sphere",
          "the map sends unit vectors to unit vectors", [&] {
            return for_each_point(
                ctx.pts4,
                [&](const SpherePoint& p) {
                  RatVec h = hopf_s3_map(p);
                  return dot(h, h) == 1;
                },
                "exact unit norm at " + n_points(ctx.pts4.size()));
          });

  ctx.run("hopf3.jacobian.kernel",
          "kernel of the differential is spanned by the fiber field V", [&] {
            return for_each_point(
                ctx.pts4,
                [&](const SpherePoint& p) {
                  JacobianInfo info = hopf_s3_jacobian(p);
                  RatMat vspan = {eval_field(frame[1], p)};
                  return same_span(
                      RatMat(info.kernel.begin(), info.kernel.end()), vspan);
                },
                "rank 3 and kernel span{V(p)} at " + n_points(ctx.pts4.size()));
          });

  ctx.run("hopf3.jacobian.minors",
          "sum of squared 3x3 minors equals |x|^6 for the half-scaled "
          "differential",
          [&] {
            if (!s3_minor_identity_check()) return bad("identity fails");
            return ok("verified" + kPolyNote);
          });

  ctx.run("hopf3.jacobian.fd",
          "analytic differential matches finite differences", [&] {
            size_t n = std::min<size_t>(10, ctx.pts4.size());
            std::vector<SpherePoint> pts(ctx.pts4.begin(),
                                         ctx.pts4.begin() + static_cast<long>(n));
            if (!quadratic_fd_jacobian_check(hopf_s3(), pts, 1e-6, 1e-6)) {
              return bad("finite-difference deviation above 1e-6");
            }
            return ok("within 1e-6 at " + std::to_string(n) + " points");
          });

  ctx.run("hopf3.fiber.curve",
          "the circle t -> e^{2 pi i t} p projects to a point and has "
          "velocity 2 pi V",
          [&] {
            if (!fiber_curve_check(basis_point(4, 0), 16)) {
              return bad("check fails at (1,0,0,0)");
            }
            size_t n = std::min<size_t>(10, ctx.pts4.size());
            for (size_t k = 0; k < n; ++k) {
              if (!fiber_curve_check(ctx.pts4[k], 16)) {
                return bad_at("fiber curve check fails", ctx.pts4[k]);
              }
            }
            return ok("constancy within 1e-12, velocity within 1e-9, at " +
                      std::to_string(n + 1) + " points x 16 samples");
          });

  ctx.run("hopf3.equivariance",
          "h is invariant under simultaneous rotation of both complex "
          "coordinates",
          [&] {
            return for_each_point(
                ctx.pts4, s3_equivariance_check,
                "exact for rotations (3/5,4/5) and (5/13,12/13) at " +
                    n_points(ctx.pts4.size()));
          });

  ctx.run("hopf3.ehresmann",
          "span{X, Y} is everywhere transversal to the fiber direction",
          [&] {
            return for_each_point(
                ctx.pts4,
                [&](const SpherePoint& p) {
                  RatMat m = {eval_field(frame[2], p), eval_field(frame[3], p),
                              eval_field(frame[1], p)};
                  return rank(m) == 3;
                },
                "X, Y, V span the tangent space at " +
                    n_points(ctx.pts4.size()));
          });
}

// ---------------------------------------------------------------------------
// s7-frame suite

void suite_s7frame(Ctx& ctx) {
  const auto& frame = invariant_frame(8);

  ctx.run("s7.rtm.orthogonal",
          "right-translation differential satisfies R^T R = |y|^2 I (dim 8)",
          [&] {
            if (!rtm_orthogonality_identity(8)) return bad("identity fails");
            return ok("all 64 entries verified" + kPolyNote);
          });

  ctx.run("s7.frame.orthonormal",
          "the eight frame fields are orthonormal on the unit sphere", [&] {
            if (!frame_orthonormal_identity(8)) return bad("identity fails");
            return ok("<Y_i, Y_j> = delta_ij |y|^2 for all 36 pairs" +
                      kPolyNote);
          });

  ctx.run("s7.frame.normal-field",
          "Y_0 is the identity field (outward normal)", [&] {
            for (int r = 0; r < 8; ++r) {
              for (int c = 0; c < 8; ++c) {
                long expect = r == c ? 1 : 0;
                if (frame[0].mat[static_cast<size_t>(r)][static_cast<size_t>(c)] !=
                    expect) {
                  return bad("Y_0 is not the identity matrix");
                }
              }
            }
            return ok("exact");
          });

  ctx.run("s7.frame.spans-tangent",
          "Y_1..Y_7 span the tangent space at every point", [&] {
            return for_each_point(
                ctx.pts8,
                [&](const SpherePoint& p) {
                  RatMat m;
                  for (int i = 1; i < 8; ++i) {
                    m.push_back(eval_field(frame[static_cast<size_t>(i)], p));
                  }
                  return rank(m) == 7;
                },
                "rank 7 at " + n_points(ctx.pts8.size()));
          });

  ctx.run("s7.frame.gram-at-samples", "<Y_i, Y_j> = delta_ij at sphere points",
          [&] {
            return for_each_point(
                ctx.pts8,
                [&](const SpherePoint& p) {
                  for (int i = 0; i < 8; ++i) {
                    for (int j = i; j < 8; ++j) {
                      Rational expect = i == j ? 1 : 0;
                      if (gram(frame[static_cast<size_t>(i)],
                               frame[static_cast<size_t>(j)], p) != expect) {
                        return false;
                      }
                    }
                  }
                  return true;
                },
                "all 36 pairs exact at " + n_points(ctx.pts8.size()));
          });

  ctx.run("s7.commutators.table",
          "the 21 half-commutators (1/2)[Y_i, Y_j] match their printed "
          "component formulas",
          [&] {
            FieldTable computed = commutator_table(frame);
            const FieldTable& printed = tabulated_half_commutators();
            for (const auto& [key, field] : printed) {
              auto it = computed.find(key);
              if (it == computed.end() || it->second.mat != field.mat) {
                return bad("entry Y" + std::to_string(key.first) +
                           std::to_string(key.second) + " differs");
              }
            }
            return ok("21/21 entries equal coefficient-for-coefficient");
          });

  ctx.run("s7.bracket.antisymmetry", "[F, G] = -[G, F]", [&] {
    for (int i = 1; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        LinearVectorField a = bracket(frame[static_cast<size_t>(i)],
                                      frame[static_cast<size_t>(j)]);
        LinearVectorField b = bracket(frame[static_cast<size_t>(j)],
                                      frame[static_cast<size_t>(i)]);
        if (a.mat != field_scale(b, -1).mat) return bad("antisymmetry fails");
      }
    }
    return ok("all 21 pairs exact");
  });

  ctx.run("s7.bracket.jacobi", "Jacobi identity for the frame fields", [&] {
    for (int i = 1; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        for (int k = j + 1; k < 8; ++k) {
          const auto& fi = frame[static_cast<size_t>(i)];
          const auto& fj = frame[static_cast<size_t>(j)];
          const auto& fk = frame[static_cast<size_t>(k)];
          LinearVectorField s = field_add(
              field_add(bracket(bracket(fi, fj), fk),
                        bracket(bracket(fj, fk), fi)),
              bracket(bracket(fk, fi), fj));
          if (!is_zero_int_mat(s.mat)) {
            return bad("Jacobi fails for (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")");
          }
        }
      }
    }
    return ok("all 35 triples exact");
  });

  ctx.run("s7.commutators.tangent",
          "every half-commutator field is tangent to the sphere", [&] {
            for (const auto& [key, field] : tabulated_half_commutators()) {
              if (!poly_identity_check(gram_poly(field, frame[0]),
                                       mp_zero(8))) {
                return bad("Y" + std::to_string(key.first) +
                           std::to_string(key.second) + " is not tangent");
              }
            }
            return ok("21/21 tangency identities" + kPolyNote);
          });
}

// ---------------------------------------------------------------------------
// s7-cr suite

void suite_s7cr(Ctx& ctx) {
  const auto& frame = invariant_frame(8);

  ctx.run("s7cr.j.identities",
          "J V = -N and J N = V for the interleaved complex structure", [&] {
            if (!j_structure_check(8)) return bad("a matrix identity fails");
            return ok("identities hold, plus J J = -I and orthogonality");
          });

  ctx.run("s7cr.holomorphic.dim",
          "holomorphic tangent space has real dimension 6", [&] {
            return for_each_point(
                ctx.pts8,
                [&](const SpherePoint& p) {
                  return subspace_dim(holomorphic_tangent(p)) == 6;
                },
                "dimension 6 at " + n_points(ctx.pts8.size()));
          });

  ctx.run("s7cr.holomorphic.orthocomplement",
          "H_p is the orthogonal complement of V(p) inside T_p", [&] {
            return for_each_point(ctx.pts8, verify_orthocomplement,
                                  "verified at " + n_points(ctx.pts8.size()));
          });

  ctx.run("s7cr.holomorphic.j-invariant", "H_p is J-invariant", [&] {
    AlmostComplexStructure j = almost_complex_structure(8);
    RatMat jm;
    for (const auto& row : j.mat) {
      RatVec r;
      for (long e : row) r.push_back(Rational(e));
      jm.push_back(std::move(r));
    }
    return for_each_point(
        ctx.pts8,
        [&](const SpherePoint& p) {
          Subspace h = holomorphic_tangent(p);
          for (const auto& b : h.basis) {
            if (!in_span(h.basis, mat_vec(jm, b))) return false;
          }
          return true;
        },
        "J maps each basis vector back into the subspace at " +
            n_points(ctx.pts8.size()));
  });

  ctx.run("s7cr.lemma.complement",
          "orthogonal complement of the plane span{V, N} is J-invariant",
          [&] {
            return for_each_point(ctx.pts8, j_invariant_complement_check,
                                  "verified at " + n_points(ctx.pts8.size()));
          });

  ctx.run("s7cr.form.values",
          "form values: (1,0) on Y_0, (0,1) on Y_1, (0,0) on Y_2..Y_7", [&] {
            return for_each_point(
                ctx.pts8,
                [&](const SpherePoint& p) {
                  if (cr_form_eval(frame[0], p) !=
                          std::make_pair(Rational(1), Rational(0)) ||
                      cr_form_eval(frame[1], p) !=
                          std::make_pair(Rational(0), Rational(1))) {
                    return false;
                  }
                  for (int i = 2; i < 8; ++i) {
                    if (cr_form_eval(frame[static_cast<size_t>(i)], p) !=
                        std::make_pair(Rational(0), Rational(0))) {
                      return false;
                    }
                  }
                  return true;
                },
                "values verified (complex route cross-checked) at " +
                    n_points(ctx.pts8.size()));
          });

  ctx.run("s7cr.flag.rank6", "span{Y_2..Y_7} has growth vector [6,7]", [&] {
    Distribution d{8, "Y2..Y7", {frame[2], frame[3], frame[4], frame[5],
                                 frame[6], frame[7]}};
    for (const auto& p : ctx.pts8) {
      if (flag_dimensions(d, p, 2) != std::vector<int>{6, 7}) {
        return bad_at("growth vector is not [6,7]", p);
      }
    }
    BracketGenerating bg = is_bracket_generating(d, ctx.pts8, 2);
    if (!bg.generating || bg.step != 2) {
      return bad("not bracket generating with step 2");
    }
    return ok("growth vector [6,7] at " + n_points(ctx.pts8.size()));
  });

  ctx.run("s7cr.vfields.decomposition", "v41 + v42 = Y_4 and v51 + v52 = Y_5",
          [&] {
            if (field_add(v41_field(), v42_field()).mat != frame[4].mat) {
              return bad("v41 + v42 differs from Y_4");
            }
            if (field_add(v51_field(), v52_field()).mat != frame[5].mat) {
              return bad("v51 + v52 differs from Y_5");
            }
            return ok("exact integer matrix identities");
          });

  ctx.run("s7cr.vfields.orthogonal",
          "the v fields are orthogonal to Y_0 and Y_1", [&] {
            for (const auto& f : {v41_field(), v42_field(), v51_field(),
                                  v52_field()}) {
              if (!poly_identity_check(gram_poly(f, frame[0]), mp_zero(8)) ||
                  !poly_identity_check(gram_poly(f, frame[1]), mp_zero(8))) {
                return bad(f.name + " is not orthogonal to Y_0 and Y_1");
              }
            }
            return ok("inner products vanish identically" + kPolyNote);
          });

  ctx.run("s7cr.vfields.certificate", "[v41,v51] + [v42,v52] = -2 Y_1", [&] {
    LinearVectorField s =
        field_add(bracket(v41_field(), v51_field()),
                  bracket(v42_field(), v52_field()));
    if (s.mat == field_scale(frame[1], -2).mat) {
      return ok("exact matrix identity");
    }
    return bad(
        "the two summands have opposite orientations: [v41,v51] equals -2 "
        "times the Y_1 pattern on coordinates 0,1,4,5 while [v42,v52] "
        "equals +2 times the Y_1 pattern on coordinates 2,3,6,7, so the "
        "stated sum is not -2 Y_1 under either global bracket orientation");
  });

  ctx.run("s7cr.vfields.certificate-reordered",
          "[v41,v51] + [v52,v42] = -2 Y_1 (sign-adjusted pairing)", [&] {
            LinearVectorField s =
                field_add(bracket(v41_field(), v51_field()),
                          bracket(v52_field(), v42_field()));
            if (s.mat != field_scale(frame[1], -2).mat) {
              return bad("adjusted identity fails");
            }
            return ok(
                "holds exactly; documents the pairing under which the "
                "bracket certificate goes through");
          });

  ctx.run("s7cr.chart.values",
          "chart of the projective fibration vanishes at reference points",
          [&] {
            RatVec zero6(6, Rational(0));
            if (chart_map(basis_point(8, 0)) != zero6) {
              return bad("value at e0 differs");
            }
            SpherePoint p = sphere_point(
                {rat(3, 5), rat(4, 5), rat(0), rat(0), rat(0), rat(0), rat(0),
                 rat(0)});
            if (chart_map(p) != zero6) {
              return bad("value at (3/5, 4/5, 0, ...) differs");
            }
            bool threw = false;
            try {
              chart_map(basis_point(8, 2));
            } catch (const std::domain_error&) {
              threw = true;
            }
            if (!threw) return bad("no domain error at x0 = x1 = 0");
            return ok("reference values and off-chart domain error verified");
          });

  // Chart checks skip sampled points with x0 = x1 = 0 (off-chart).
  auto on_chart = [](const SpherePoint& p) {
    return p.coords[0] * p.coords[0] + p.coords[1] * p.coords[1] != 0;
  };

  ctx.run("s7cr.chart.rank-kernel",
          "chart differential has rank 6 with kernel span{N, V}", [&] {
            size_t used = 0;
            for (const auto& p : ctx.pts8) {
              if (!on_chart(p)) continue;
              ++used;
              JacobianInfo info = chart_jacobian(p);
              if (info.rank != 6) return bad_at("rank is not 6", p);
              RatMat nv = {p.coords, eval_field(vertical_field(8), p)};
              if (!same_span(RatMat(info.kernel.begin(), info.kernel.end()),
                             nv)) {
                return bad_at("kernel differs from span{N, V}", p);
              }
            }
            return ok("rank 6 and kernel span{N(p), V(p)} at " +
                      std::to_string(used) + " on-chart points");
          });

  ctx.run("s7cr.chart.printed-matrix",
          "cleared-numerator differential matrix matches the quotient rule",
          [&] {
            if (!chart_printed_jacobian_check()) {
              return bad("an entry differs from the quotient rule");
            }
            return ok("all 48 entries verified" + kPolyNote);
          });

  ctx.run("s7cr.chart.det", "det(J J^T) (x0^2+x1^2)^8 = 1 on the sphere",
          [&] {
            size_t used = 0;
            for (const auto& p : ctx.pts8) {
              if (!on_chart(p)) continue;
              ++used;
              if (!chart_det_check(p)) return bad_at("identity fails", p);
            }
            return ok("exact at " + std::to_string(used) +
                      " on-chart points");
          });
}

// ---------------------------------------------------------------------------
// s7-quat suite

void suite_s7quat(Ctx& ctx) {
  const auto& frame = invariant_frame(8);
  const auto& verticals = quat_vertical_fields();

  ctx.run("quat.map.values", "h(e0) = (1,0,0,0,0) and h(e7) = (-1,0,0,0,0)",
          [&] {
            RatVec a = quat_hopf_map(basis_point(8, 0));
            RatVec b = quat_hopf_map(basis_point(8, 7));
            if (a != RatVec{rat(1), rat(0), rat(0), rat(0), rat(0)}) {
              return bad("value at e0 differs");
            }
            if (b != RatVec{rat(-1), rat(0), rat(0), rat(0), rat(0)}) {
              return bad("value at e7 differs");
            }
            return ok("both reference values exact");
          });

  ctx.run("quat.map.norm-identity", "|h(x)|^2 = |x|^4 as polynomials", [&] {
    if (!quadratic_norm_identity_check(quat_hopf())) {
      return bad("identity fails");
    }
    return ok("verified" + kPolyNote);
  });

  ctx.run("quat.map.on-sphere", "the map sends unit vectors to unit vectors",
          [&] {
            return for_each_point(
                ctx.pts8,
                [&](const SpherePoint& p) {
                  RatVec h = quat_hopf_map(p);
                  return dot(h, h) == 1;
                },
                "exact unit norm at " + n_points(ctx.pts8.size()));
          });

  const char* vertical_ids[] = {"quat.vertical.Y45", "quat.vertical.Y46",
                                "quat.vertical.Y56"};
  const char* vertical_refs[] = {"dh Y_45 = 0", "dh Y_46 = 0", "dh Y_56 = 0"};
  for (int i = 0; i < 3; ++i) {
    const LinearVectorField& f = verticals[static_cast<size_t>(i)];
    ctx.run(vertical_ids[i], vertical_refs[i], [&, i] {
      auto [holds, raw] = vertical_annihilation(f);
      if (!holds) return bad("dh does not annihilate the field");
      if (raw) {
        return ok("annihilated identically on all of R^8" + kPolyNote);
      }
      return ok("annihilated modulo the unit-sphere relation" + kPolyNote);
    });
  }

  ctx.run("quat.jacobian.restricted-rank",
          "dh restricted to the tangent space has rank 4", [&] {
            return for_each_point(
                ctx.pts8,
                [&](const SpherePoint& p) {
                  return quat_hopf_restricted_rank(p) == 4;
                },
                "rank 4 at " + n_points(ctx.pts8.size()));
          });

  ctx.run("quat.jacobian.euler", "dh p = 2 h(p) (Euler relation)", [&] {
    return for_each_point(
        ctx.pts8,
        [&](const SpherePoint& p) {
          RatVec lhs = mat_vec(quat_hopf_jacobian(p), p.coords);
          RatVec rhs = quat_hopf_map(p);
          for (auto& q : rhs) q *= 2;
          return lhs == rhs;
        },
        "exact at " + n_points(ctx.pts8.size()));
  });

  ctx.run("quat.jacobian.fd",
          "analytic differential matches finite differences", [&] {
            size_t n = std::min<size_t>(10, ctx.pts8.size());
            std::vector<SpherePoint> pts(ctx.pts8.begin(),
                                         ctx.pts8.begin() + static_cast<long>(n));
            if (!quadratic_fd_jacobian_check(quat_hopf(), pts, 1e-6, 1e-6)) {
              return bad("finite-difference deviation above 1e-6");
            }
            return ok("within 1e-6 at " + std::to_string(n) + " points");
          });

  ctx.run("quat.coeffs.identities",
          "a00^2 + a11^2 + a22^2 + a33^2 + a44^2 = 1 and the four row sums "
          "equal 1",
          [&] {
            if (!coefficient_identities_check()) return bad("an identity fails");
            return ok("all five identities hold modulo the sphere relation" +
                      kPolyNote);
          });

  ctx.run("quat.coeffs.pairings-printed",
          "printed inner products <vertical, horizontal> equal their "
          "coefficients a_mk",
          [&] {
            int checked = 0;
            for (const auto& cp : coefficient_pairings()) {
              if (cp.sign == 0) continue;
              ++checked;
              if (!coefficient_pairing_check(cp)) {
                return bad("pairing for a_" + std::to_string(cp.m) +
                           std::to_string(cp.k) + " fails");
              }
            }
            return ok(std::to_string(checked) + " printed pairings verified" +
                      kPolyNote);
          });

  ctx.run("quat.coeffs.pairings-vanishing",
          "all remaining vertical-horizontal inner products vanish", [&] {
            int checked = 0;
            for (const auto& cp : coefficient_pairings()) {
              if (cp.sign != 0) continue;
              ++checked;
              if (!coefficient_pairing_check(cp)) {
                return bad("an expected-zero pairing is nonzero");
              }
            }
            return ok(std::to_string(checked) + " vanishing pairings verified" +
                      kPolyNote);
          });

  ctx.run("quat.coeffs.cross-check",
          "coefficient evaluations equal the map components and the frame "
          "inner products at sphere points",
          [&] {
            return for_each_point(
                ctx.pts8,
                [&](const SpherePoint& p) {
                  HopfCoefficients c = hopf_coefficients(p);
                  RatVec h = quat_hopf_map(p);
                  if (c.a00 != h[0]) return false;
                  for (int m = 1; m <= 4; ++m) {
                    if (c.amk[m - 1][m - 1] != h[static_cast<size_t>(m)]) {
                      return false;
                    }
                  }
                  for (const auto& cp : coefficient_pairings()) {
                    if (cp.sign == 0) continue;
                    const LinearVectorField& vert =
                        quat_vertical_fields()[static_cast<size_t>(cp.vertical)];
                    const LinearVectorField& partner =
                        cp.partner.first == 0
                            ? invariant_frame(8)[static_cast<size_t>(
                                  cp.partner.second)]
                            : tabulated_half_commutators().at(cp.partner);
                    Rational expect =
                        cp.m == 0 ? c.a00 : c.amk[cp.m - 1][cp.k - 1];
                    expect *= cp.sign;
                    if (gram(vert, partner, p) != expect) return false;
                  }
                  return true;
                },
                "evaluated grid agrees with map components and inner "
                "products at " + n_points(ctx.pts8.size()));
          });

  ctx.run("quat.families.orthonormal",
          "each horizontal collection is orthonormal", [&] {
            MultiPoly norm = norm_sq_poly(8);
            auto orthonormal = [&](const std::vector<LinearVectorField>& fs) {
              for (size_t i = 0; i < fs.size(); ++i) {
                for (size_t j = i; j < fs.size(); ++j) {
                  MultiPoly g = gram_poly(fs[i], fs[j]);
                  const MultiPoly& expect = i == j ? norm : mp_zero(8);
                  if (!poly_identity_check(g, expect, /*mod_sphere=*/true)) {
                    return false;
                  }
                }
              }
              return true;
            };
            if (!orthonormal(verticals)) {
              return bad("the vertical triple is not orthonormal");
            }
            for (int m = 1; m <= 4; ++m) {
              if (!orthonormal(horizontal_family(m).generators)) {
                return bad("collection " + std::to_string(m) +
                           " is not orthonormal");
              }
            }
            for (int j = 0; j <= 3; ++j) {
              if (!orthonormal(horizontal_family0(j).generators)) {
                return bad("collection 0 with the index-" + std::to_string(j) +
                           " completion is not orthonormal");
              }
            }
            return ok("verticals and all horizontal collections orthonormal "
                      "modulo the sphere relation" + kPolyNote);
          });

  ctx.run("quat.item2.relations",
          "(1/2)[Y_j4, Y_j5] = Y_45, (1/2)[Y_j4, Y_j6] = Y_46, "
          "(1/2)[Y_j5, Y_j6] = Y_56 for each collection",
          [&] {
            auto half = [](const LinearVectorField& a,
                           const LinearVectorField& b) {
              LinearVectorField s = bracket(a, b);
              for (auto& row : s.mat) {
                for (auto& e : row) {
                  if (e % 2 != 0) {
                    throw std::logic_error("odd bracket coefficient");
                  }
                  e /= 2;
                }
              }
              return s;
            };
            for (int m = 1; m <= 4; ++m) {
              auto g = horizontal_family(m).generators;  // {Yj4,Yj5,Yj6,Yj7}
              if (half(g[0], g[1]).mat != verticals[0].mat ||
                  half(g[0], g[2]).mat != verticals[1].mat ||
                  half(g[1], g[2]).mat != verticals[2].mat) {
                return bad("relations fail for collection " +
                           std::to_string(m));
              }
            }
            auto g0 = horizontal_family0(0).generators;  // {Y47,Y57,Y67,Y07}
            if (half(g0[0], g0[1]).mat != verticals[0].mat ||
                half(g0[0], g0[2]).mat != verticals[1].mat ||
                half(g0[1], g0[2]).mat != verticals[2].mat) {
              return bad("relations fail for the 7-index collection");
            }
            return ok("all 15 half-bracket relations exact");
          });

  ctx.run("quat.regions.classify",
          "balanced points form S1; basis points lie in S2", [&] {
            SpherePoint witness = sphere_point(
                {rat(1, 2), rat(1, 2), rat(0), rat(0), rat(1, 2), rat(1, 2),
                 rat(0), rat(0)});
            if (region_tag(witness) != RegionTag::S1) {
              return bad("witness point not tagged S1");
            }
            for (int i = 0; i < 8; ++i) {
              if (region_tag(basis_point(8, i)) != RegionTag::S2 ||
                  region_tag(basis_point(8, i, -1)) != RegionTag::S2) {
                return bad("a basis point is not tagged S2");
              }
            }
            int generic = 0, s1 = 0, s2 = 0;
            for (const auto& p : ctx.pts8) {
              switch (region_tag(p)) {
                case RegionTag::S1: ++s1; break;
                case RegionTag::S2: ++s2; break;
                default: ++generic; break;
              }
            }
            return ok("sampled tags: generic=" + std::to_string(generic) +
                      " S1=" + std::to_string(s1) +
                      " S2=" + std::to_string(s2));
          });

  ctx.run("quat.transversality.generic",
          "off S1 some collection H_m (m = 1..4) is transverse to the "
          "vertical",
          [&] {
            for (const auto& p : ctx.pts8) {
              if (region_tag(p) == RegionTag::S1) continue;
              bool any = false;
              for (int m = 1; m <= 4 && !any; ++m) {
                any = transversality_check(horizontal_family(m), p);
              }
              if (!any) return bad_at("no collection is transverse", p);
            }
            return ok("verified at every sampled point off S1");
          });

  ctx.run("quat.transversality.s1-witness",
          "on S1 an H_m degenerates while an H_0-based choice is transverse",
          [&] {
            SpherePoint witness = sphere_point(
                {rat(1, 2), rat(1, 2), rat(0), rat(0), rat(1, 2), rat(1, 2),
                 rat(0), rat(0)});
            bool some_fail = false;
            for (int m = 1; m <= 4; ++m) {
              if (!transversality_check(horizontal_family(m), witness)) {
                some_fail = true;
              }
            }
            if (!some_fail) {
              return bad("every H_m is transverse at the S1 witness");
            }
            bool some_pass = false;
            int chosen_j = -1;
            for (int j = 0; j <= 3; ++j) {
              if (transversality_check(horizontal_family0(j), witness)) {
                some_pass = true;
                chosen_j = j;
                break;
              }
            }
            if (!some_pass) {
              return bad("no 7-index completion is transverse at the witness");
            }
            return ok("an H_m degenerates; completion with index " +
                      std::to_string(chosen_j) + " is transverse");
          });

  ctx.run("quat.transversality.s2-basis",
          "on S2 the H_0-based choices degenerate while H_1 is transverse",
          [&] {
            for (int i = 0; i < 8; ++i) {
              for (int sign : {+1, -1}) {
                SpherePoint p = basis_point(8, i, sign);
                for (int j = 0; j <= 3; ++j) {
                  if (transversality_check(horizontal_family0(j), p)) {
                    return bad_at("an H_0-based choice is transverse", p);
                  }
                }
                if (!transversality_check(horizontal_family(1), p)) {
                  return bad_at("H_1 is not transverse", p);
                }
              }
            }
            return ok("verified at all 16 signed basis points");
          });

  ctx.run("quat.ehresmann.select",
          "a transverse horizontal collection exists at every sampled point",
          [&] {
            for (const auto& p : ctx.pts8) {
              EhresmannSelection sel = ehresmann_select(p);
              if (!sel.found) {
                return bad_at("selection reports a theorem violation", p);
              }
            }
            return ok("selection succeeded at " + n_points(ctx.pts8.size()));
          });

  ctx.run("quat.ehresmann.flag",
          "every selected collection has growth vector [4,7]", [&] {
            for (const auto& p : ctx.pts8) {
              EhresmannSelection sel = ehresmann_select(p);
              if (!sel.found) return bad_at("no selection", p);
              if (flag_dimensions(sel.chosen, p, 2) !=
                  std::vector<int>{4, 7}) {
                return bad_at("growth vector is not [4,7]", p);
              }
            }
            return ok("growth vector [4,7] at " + n_points(ctx.pts8.size()));
          });
}

using SuiteFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"algebra", suite_algebra}, {"s3", suite_s3},
      {"s3-cr", suite_s3cr},      {"s3-hopf", suite_s3hopf},
      {"s7-frame", suite_s7frame}, {"s7-cr", suite_s7cr},
      {"s7-quat", suite_s7quat},
  };
  return reg;
}

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<SpherePoint> sample_sphere_points(int dim, int count,
                                              std::uint64_t seed) {
  if (dim != 4 && dim != 8) {
    throw std::invalid_argument("sample_sphere_points: dim must be 4 or 8");
  }
  if (count < 1) {
    throw std::invalid_argument("sample_sphere_points: count must be >= 1");
  }
  std::uint64_t state = seed;
  std::vector<SpherePoint> pts;
  pts.reserve(static_cast<size_t>(count + 2 * dim + 1));
  for (int k = 0; k < count; ++k) {
    RatVec u(static_cast<size_t>(dim - 1));
    Rational nsq = 0;
    for (auto& q : u) {
      std::uint64_t z1 = splitmix64_next(state);
      std::uint64_t z2 = splitmix64_next(state);
      q = rat(static_cast<long>(z1 % 201) - 100,
              static_cast<long>(z2 % 100) + 1);
      nsq += q * q;
    }
    RatVec p(static_cast<size_t>(dim));
    Rational denom = nsq + 1;
    for (int i = 0; i + 1 < dim; ++i) {
      p[static_cast<size_t>(i)] = 2 * u[static_cast<size_t>(i)] / denom;
    }
    p[static_cast<size_t>(dim - 1)] = (nsq - 1) / denom;
    pts.push_back(sphere_point(std::move(p)));
  }
  for (int i = 0; i < dim; ++i) {
    pts.push_back(basis_point(dim, i, +1));
    pts.push_back(basis_point(dim, i, -1));
  }
  if (dim == 8) {
    pts.push_back(sphere_point({rat(1, 2), rat(1, 2), rat(0), rat(0),
                                rat(1, 2), rat(1, 2), rat(0), rat(0)}));
  }
  return pts;
}

VerificationReport run_suite(const SuiteConfig& config) {
  std::vector<SuiteFn> fns;
  if (config.suite == "all") {
    for (const auto& [name, fn] : suite_registry()) fns.push_back(fn);
  } else {
    for (const auto& [name, fn] : suite_registry()) {
      if (name == config.suite) fns.push_back(fn);
    }
    if (fns.empty()) {
      throw std::invalid_argument("unknown suite: " + config.suite);
    }
  }
  if (config.samples < 1) {
    throw std::invalid_argument("samples must be >= 1");
  }

  Ctx ctx{config,
          sample_sphere_points(4, config.samples, config.seed),
          sample_sphere_points(8, config.samples, config.seed),
          {}};
  for (SuiteFn fn : fns) fn(ctx);

  std::sort(ctx.checks.begin(), ctx.checks.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.id < b.id;
            });

  VerificationReport r;
  r.suite = config.suite;
  r.seed = config.seed;
  r.samples = config.samples;
  r.checks = std::move(ctx.checks);
  r.total = static_cast<int>(r.checks.size());
  for (const auto& c : r.checks) {
    if (c.status == "pass") ++r.passed;
    if (c.status == "fail") ++r.failed;
  }
  return r;
}

std::string render_json(const VerificationReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["paper_ref"] = c.paper_ref;
    jc["status"] = c.status;
    jc["details"] = c.details;
    if (c.counterexample) {
      ordered_json point = ordered_json::array();
      for (const auto& q : *c.counterexample) point.push_back(rat_str(q));
      jc["counterexample"] = std::move(point);
    }
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", report.total},
                  {"passed", report.passed},
                  {"failed", report.failed}};
  return j.dump(2) + "\n";
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << "\n";
  out << "seed: " << report.seed << "\n";
  out << "samples: " << report.samples << "\n";
  for (const auto& c : report.checks) {
    out << "[" << c.status << "] " << c.id << " -- " << c.details << "\n";
    if (c.counterexample) {
      out << "        counterexample:";
      for (const auto& q : *c.counterexample) out << " " << rat_str(q);
      out << "\n";
    }
  }
  out << "summary: total=" << report.total << " passed=" << report.passed
      << " failed=" << report.failed << "\n";
  return out.str();
}

std::string emit_table(const std::string& kind) {
  std::ostringstream out;
  if (kind == "oct-mult") {
    out << "";
    for (int j = 0; j < 8; ++j) out << ",e" << j;
    out << "\n";
    for (int i = 0; i < 8; ++i) {
      out << "e" << i;
      for (int j = 0; j < 8; ++j) {
        auto [s, idx] = basis_product(8, i, j);
        out << "," << (s < 0 ? "-" : "") << "e" << idx;
      }
      out << "\n";
    }
    return out.str();
  }
  if (kind == "commutators") {
    for (const auto& [key, field] : tabulated_half_commutators()) {
      out << key.first << "," << key.second;
      for (const auto& row : field.mat) {
        for (long e : row) out << "," << e;
      }
      out << "\n";
    }
    return out.str();
  }
  throw std::invalid_argument("unknown table kind: " + kind);
}

}  // namespace hopf
