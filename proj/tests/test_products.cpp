#include <doctest.h>

#include <vector>

#include "ucx/errors.hpp"
#include "ucx/products.hpp"
#include "ucx/universal.hpp"

using namespace ucx;

namespace {

FpVec vec(std::initializer_list<int> entries) {
  FpVec v;
  for (int e : entries) v.push_back(static_cast<uint8_t>(e));
  return v;
}

}  // namespace

TEST_SUITE("products") {

TEST_CASE("join condition on span-additive families") {
  // antipodal pairs along the two coordinates of F_3^2
  std::vector<std::vector<FpVec>> pairs = {{vec({1, 0}), vec({2, 0})},
                                           {vec({0, 1}), vec({0, 2})}};
  CHECK(join_condition(3, pairs));

  // two dependent line triples in F_5^4 spanning complementary planes
  std::vector<std::vector<FpVec>> triples = {
      {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({1, 1, 0, 0})},
      {vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), vec({0, 0, 1, 1})}};
  CHECK(join_condition(5, triples));

  // a single part is always additive
  CHECK(join_condition(3, {{vec({1, 2}), vec({2, 1})}}));
}

TEST_CASE("join condition rejects overlapping spans") {
  // the shared vector e_1 forces 1 + 2 > 2 = dim of the union span
  std::vector<std::vector<FpVec>> parts = {{vec({1, 0})},
                                           {vec({1, 1}), vec({1, 0})}};
  CHECK_FALSE(join_condition(3, parts));

  // distinct vectors, same span
  CHECK_FALSE(join_condition(3, {{vec({1, 0})}, {vec({2, 0})}}));
}

TEST_CASE("join condition input validation") {
  CHECK_THROWS_AS(join_condition(3, {}), PreconditionError);
  CHECK_THROWS_AS(join_condition(3, {{vec({1, 0})}, {}}), PreconditionError);
  CHECK_THROWS_AS(join_condition(3, {{vec({1, 0}), vec({1, 0, 0})}}),
                  PreconditionError);
  CHECK_THROWS_AS(join_condition(3, {{vec({1, 3})}}), PreconditionError);
  CHECK_THROWS_AS(join_condition(4, {{vec({1, 0})}}), PreconditionError);
}

TEST_CASE("degree upper bound") {
  CHECK(cup_length_upper(build_X(3, 2).complex) == 2);
  CHECK(cup_length_upper(build_X(5, 1).complex) == 1);
  CHECK(cup_length_upper(build_K(3, 2).complex) == 1);
  CHECK(cup_length_upper(build_X(2, 2).complex) == 1);
  CHECK(cup_length_upper(build_K(3, 4).complex) == 2);
  CHECK(cup_length_upper(build_X(2, 4).complex) == 2);

  // a simplex has no nonsimplex at all
  CHECK(cup_length_upper(SimplicialComplex::skeleton_of_simplex(5, 4)) == 0);
  // discrete complex: missing edges, dimension 0
  CHECK(cup_length_upper(SimplicialComplex::skeleton_of_simplex(5, 0)) == 1);
  CHECK(cup_length_upper(SimplicialComplex()) == 0);

  auto ghost = SimplicialComplex::from_vertex_lists(3, {{0, 1}});
  CHECK_THROWS_AS(cup_length_upper(ghost), PreconditionError);
}

TEST_CASE("coordinate witness lower bound") {
  auto u32 = build_X(3, 2);
  auto [lo32, w32] = cup_length_lower(u32);
  CHECK(lo32 == 2);
  CHECK(w32.parts.size() == 2);
  for (const auto& part : w32.parts) CHECK(part.count() == 2);
  CHECK(w32.sphere_dims == std::vector<int>{0, 0});
  CHECK(validate_join_witness(u32, w32));

  CHECK(cup_length_lower(build_X(3, 3)).first == 3);
  CHECK(cup_length_lower(build_X(5, 2)).first == 2);
  CHECK(cup_length_lower(build_K(3, 2)).first == 1);
  CHECK(cup_length_lower(build_K(3, 3)).first == 1);

  // over F_2 both families coincide and use the line triples
  for (int n = 2; n <= 4; ++n) {
    auto u = build_X(2, n);
    auto [lo, w] = cup_length_lower(u);
    CHECK(lo == n / 2);
    CHECK(w.sphere_dims == std::vector<int>(n / 2, 1));
    CHECK(validate_join_witness(u, w));
  }
}

TEST_CASE("witness validation rejects bad certificates") {
  auto u = build_X(3, 2);
  auto [lo, good] = cup_length_lower(u);
  REQUIRE(good.parts.size() == 2);

  JoinWitness overlap = good;
  overlap.parts[1] = overlap.parts[0];
  CHECK_FALSE(validate_join_witness(u, overlap));

  JoinWitness wrong_dim = good;
  wrong_dim.sphere_dims[0] = 1;
  CHECK_FALSE(validate_join_witness(u, wrong_dim));

  // a face spans a contractible subcomplex, not a sphere
  JoinWitness face_part = good;
  face_part.parts[0] = VertexSet::of({2, 4});  // e_1, e_1 + 2e_2: a face
  CHECK_FALSE(validate_join_witness(u, face_part));

  JoinWitness mismatched = good;
  mismatched.sphere_dims.pop_back();
  CHECK_FALSE(validate_join_witness(u, mismatched));

  CHECK(validate_join_witness(u, JoinWitness{}));

  // more than 24 vertices in the union is out of budget
  auto big = build_X(2, 5);
  JoinWitness wide;
  for (int v = 0; v < 25; ++v) {
    wide.parts.push_back(VertexSet::single(v));
    wide.sphere_dims.push_back(0);
  }
  CHECK_THROWS_AS(validate_join_witness(big, wide), ResourceError);
}

TEST_CASE("bounds meet on the universal families") {
  for (int p : {3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      auto b = cup_length(build_X(p, n));
      CHECK(b.lower == n);
      CHECK(b.upper == n);
      CHECK(b.note == "bounds agree; the value is exact");
    }
  }
  for (int p : {2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      auto b = cup_length(build_K(p, n));
      CHECK(b.lower == n / 2);
      CHECK(b.upper == n / 2);
    }
  }
}

TEST_CASE("category interval") {
  auto b = cup_length(build_X(3, 2));
  CHECK(b.ls_lower == 2);
  // half of (vertices + dimension + 1), the simply connected estimate
  CHECK(b.ls_upper == 5);

  auto b2 = cup_length(build_X(2, 4));
  CHECK(b2.lower == 2);
  CHECK(b2.ls_lower == 2);
  CHECK(b2.ls_upper == (15 + 3 + 1) / 2);
  CHECK(b2.note ==
        "bounds agree; the value is exact; X over F_2 equals K, the "
        "line-triple family applies");
}

}  // TEST_SUITE
