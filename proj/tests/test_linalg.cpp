#include "hopf/linalg.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hopf;

TEST_CASE("rationals are canonicalized and serialized with denominators") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(rat(-3, -6) == rat(1, 2));
  CHECK(rat_str(rat(3)) == "3/1");
  CHECK(rat_str(rat(-1, 2)) == "-1/2");
  CHECK(rat_str(rat(0)) == "0/1");
}

TEST_CASE("dot and matrix-vector products are exact") {
  RatVec a = {rat(1, 2), rat(1, 3)};
  RatVec b = {rat(2), rat(3)};
  CHECK(dot(a, b) == 2);

  RatMat m = {{rat(1), rat(2)}, {rat(3), rat(4)}};
  RatVec v = {rat(1), rat(-1)};
  CHECK(mat_vec(m, v) == RatVec{rat(-1), rat(-1)});
}

TEST_CASE("matrix algebra identities on small examples") {
  RatMat a = {{rat(1), rat(2)}, {rat(0), rat(1)}};
  RatMat b = {{rat(2), rat(0)}, {rat(1), rat(1)}};
  CHECK(mat_mul(a, b) == RatMat{{rat(4), rat(2)}, {rat(1), rat(1)}});
  CHECK(mat_transpose(mat_mul(a, b)) ==
        mat_mul(mat_transpose(b), mat_transpose(a)));
  CHECK(mat_mul(a, identity_mat(2)) == a);
  CHECK(is_zero_mat(mat_sub(a, a)));
  CHECK(mat_scale(a, rat(2)) == mat_add(a, a));
}

TEST_CASE("rank by exact elimination") {
  CHECK(rank({{rat(1), rat(2)}, {rat(2), rat(4)}}) == 1);
  CHECK(rank({{rat(1), rat(0)}, {rat(0), rat(1)}}) == 2);
  CHECK(rank({{rat(1), rat(2), rat(3), rat(4)},
              {rat(2), rat(4), rat(6), rat(8)},
              {rat(0), rat(0), rat(1), rat(0)}}) == 2);
  CHECK(rank({{rat(0), rat(0)}, {rat(0), rat(0)}}) == 0);
}

TEST_CASE("determinants of small matrices") {
  CHECK(det({{rat(1), rat(2)}, {rat(3), rat(4)}}) == -2);
  CHECK(det({{rat(2), rat(0), rat(0)},
             {rat(0), rat(3), rat(0)},
             {rat(0), rat(0), rat(4)}}) == 24);
  CHECK(det({{rat(1), rat(2)}, {rat(2), rat(4)}}) == 0);
  CHECK(det({{rat(1, 2), rat(1, 3)}, {rat(1, 4), rat(1, 5)}}) ==
        rat(1, 10) - rat(1, 12));
}

TEST_CASE("nullspace basis is deterministic with unit free coordinates") {
  auto ns = nullspace({{rat(1), rat(2)}, {rat(2), rat(4)}});
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == RatVec{rat(-2), rat(1)});

  auto full = nullspace({{rat(1), rat(0)}, {rat(0), rat(1)}});
  CHECK(full.empty());

  // Two free columns, increasing order.
  auto two = nullspace({{rat(1), rat(1), rat(1)}});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == RatVec{rat(-1), rat(1), rat(0)});
  CHECK(two[1] == RatVec{rat(-1), rat(0), rat(1)});
}

TEST_CASE("span predicates") {
  RatMat basis = {{rat(1), rat(0)}, {rat(0), rat(1)}};
  CHECK(in_span(basis, {rat(5), rat(-7)}));
  CHECK_FALSE(in_span({{rat(1), rat(0), rat(0)}}, {rat(0), rat(0), rat(1)}));
  CHECK(same_span(basis, {{rat(1), rat(1)}, {rat(1), rat(-1)}}));
  CHECK_FALSE(same_span({{rat(1), rat(0)}}, basis));
  CHECK(span_dim({{rat(1), rat(2), rat(3)},
                  {rat(2), rat(4), rat(6)},
                  {rat(0), rat(0), rat(1)}}) == 2);
}

TEST_CASE("orthogonal complement in R^4") {
  auto oc = orthogonal_complement({{rat(1), rat(0), rat(0), rat(0)},
                                   {rat(0), rat(1), rat(0), rat(0)}},
                                  4);
  REQUIRE(oc.size() == 2);
  for (const auto& w : oc) {
    CHECK(w[0] == 0);
    CHECK(w[1] == 0);
  }
  CHECK(same_span(oc, {{rat(0), rat(0), rat(1), rat(0)},
                       {rat(0), rat(0), rat(0), rat(1)}}));

  // Complement of a full basis is empty; complement of nothing is everything.
  CHECK(orthogonal_complement(identity_mat(3), 3).empty());
  CHECK(span_dim(orthogonal_complement({}, 3)) == 3);
}
