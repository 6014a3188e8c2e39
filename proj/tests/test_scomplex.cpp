#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "ucx/errors.hpp"
#include "ucx/scomplex.hpp"

using namespace ucx;

namespace {

FVector fv_of(std::vector<long> counts) {
  FVector fv;
  for (long c : counts) fv.counts.emplace_back(c);
  return fv;
}

// brute membership straight from the definition
bool brute_face(const SimplicialComplex& k, const VertexSet& s) {
  if (s.empty()) return true;
  for (const auto& f : k.facets())
    if (f.contains(s)) return true;
  return false;
}

// 6-vertex triangulation of the real projective plane; every edge lies in
// exactly two triangles
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_vertex_lists(
      6, {{0, 1, 2},
          {0, 1, 3},
          {0, 2, 4},
          {0, 3, 5},
          {0, 4, 5},
          {1, 2, 5},
          {1, 3, 4},
          {1, 4, 5},
          {2, 3, 4},
          {2, 3, 5}});
}

SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
  int nf = 1 + static_cast<int>(rng() % 6);
  std::vector<VertexSet> facets;
  for (int i = 0; i < nf; ++i)
    facets.push_back(VertexSet::from_word(rng() & ((1ull << m) - 1)));
  return SimplicialComplex::from_facets(m, std::move(facets));
}

}  // namespace

TEST_SUITE("scomplex") {

TEST_CASE("triangle boundary") {
  auto k = SimplicialComplex::from_vertex_lists(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(k.vertex_count() == 3);
  CHECK(k.dim() == 1);
  CHECK(k.is_pure());
  CHECK(k.f_vector() == fv_of({1, 3, 3}));
  CHECK(k.euler_characteristic() == 0);
  CHECK(k.reduced_euler_characteristic() == -1);
  CHECK(k.is_simplex(VertexSet::of({0, 1})));
  CHECK_FALSE(k.is_simplex(VertexSet::of({0, 1, 2})));
  CHECK(k.is_simplex(VertexSet()));
  CHECK(k.minimal_nonsimplices(1).empty());
  auto mns = k.minimal_nonsimplices(2);
  REQUIRE(mns.size() == 1);
  CHECK(mns[0] == VertexSet::of({0, 1, 2}));
  CHECK(k.is_matroid());
  CHECK(k.matroid_rank() == 2);
  CHECK(k.adjacency(0) == VertexSet::of({1, 2}));
}

TEST_CASE("construction canonicalizes the facet list") {
  auto k = SimplicialComplex::from_vertex_lists(
      3, {{0, 1}, {0}, {2}, {0, 1}, {}});
  REQUIRE(k.facets().size() == 2);
  CHECK(k.facets()[0] == VertexSet::of({0, 1}));
  CHECK(k.facets()[1] == VertexSet::of({2}));
  CHECK(k.dim() == 1);
  CHECK_FALSE(k.is_pure());
  CHECK_THROWS_AS(k.matroid_rank(), PreconditionError);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {VertexSet::single(5)}),
                  PreconditionError);
}

TEST_CASE("the complex with only the empty face") {
  for (int m : {0, 3}) {
    auto k = SimplicialComplex::from_facets(m, {});
    CHECK(k.dim() == -1);
    CHECK(k.f_vector() == fv_of({1}));
    CHECK(k.euler_characteristic() == 0);
    CHECK(k.reduced_euler_characteristic() == -1);
    CHECK(k.is_simplex(VertexSet()));
    CHECK(k.vertices().empty());
    CHECK(k.is_pure());
  }
  // a single empty facet means the same complex
  auto k = SimplicialComplex::from_facets(2, {VertexSet()});
  CHECK(k.dim() == -1);
  CHECK(k.facets().empty());
}

TEST_CASE("ghost vertices are not faces") {
  auto k = SimplicialComplex::from_vertex_lists(4, {{1}});
  CHECK(k.f_vector() == fv_of({1, 1}));
  CHECK_FALSE(k.is_simplex(VertexSet::single(0)));
  CHECK(k.is_simplex(VertexSet::single(1)));
  CHECK(k.minimal_nonsimplices(1).empty());
  CHECK(k.vertices() == VertexSet::single(1));
}

TEST_CASE("full simplex and its boundary") {
  auto full = SimplicialComplex::from_vertex_lists(4, {{0, 1, 2, 3}});
  CHECK(full.f_vector() == fv_of({1, 4, 6, 4, 1}));
  CHECK(full.euler_characteristic() == 1);
  for (int j = 1; j <= 4; ++j) CHECK(full.minimal_nonsimplices(j).empty());
  CHECK(full.is_matroid());
  CHECK(full.matroid_rank() == 4);

  auto bd = SimplicialComplex::skeleton_of_simplex(4, 2);
  CHECK(bd.f_vector() == fv_of({1, 4, 6, 4}));
  CHECK(bd.euler_characteristic() == 2);  // a 2-sphere
  auto mns = bd.minimal_nonsimplices(3);
  REQUIRE(mns.size() == 1);
  CHECK(mns[0] == VertexSet::full(4));
  CHECK(bd.is_matroid());
}

TEST_CASE("two disjoint edges are pure but not a matroid") {
  auto k = SimplicialComplex::from_vertex_lists(4, {{0, 1}, {2, 3}});
  CHECK(k.is_pure());
  CHECK_FALSE(k.is_matroid());
}

TEST_CASE("skeletons of a simplex") {
  auto u24 = SimplicialComplex::skeleton_of_simplex(4, 1);
  CHECK(u24.f_vector() == fv_of({1, 4, 6}));
  CHECK(u24.is_matroid());
  auto triples = u24.minimal_nonsimplices(2);
  CHECK(triples.size() == 4);
  CHECK(std::is_sorted(triples.begin(), triples.end()));

  CHECK(SimplicialComplex::skeleton_of_simplex(4, 3).f_vector() ==
        fv_of({1, 4, 6, 4, 1}));
  CHECK(SimplicialComplex::skeleton_of_simplex(4, -1).dim() == -1);
  CHECK(SimplicialComplex::skeleton_of_simplex(0, -1).dim() == -1);
  CHECK_THROWS_AS(SimplicialComplex::skeleton_of_simplex(4, 4),
                  PreconditionError);
  CHECK_THROWS_AS(SimplicialComplex::skeleton_of_simplex(-1, 0),
                  PreconditionError);
  CHECK_THROWS_AS(SimplicialComplex::skeleton_of_simplex(128, 63),
                  ResourceError);

  // a larger skeleton has binomial face counts
  auto sk = SimplicialComplex::skeleton_of_simplex(16, 7);
  auto fv = sk.f_vector();
  REQUIRE(fv.counts.size() == 9);
  long expect[9] = {1, 16, 120, 560, 1820, 4368, 8008, 11440, 12870};
  for (int i = 0; i < 9; ++i) CHECK(fv.counts[i] == expect[i]);
}

TEST_CASE("full subcomplexes") {
  auto cyc = SimplicialComplex::from_vertex_lists(3, {{0, 1}, {0, 2}, {1, 2}});
  auto sub = cyc.full_subcomplex(VertexSet::of({0, 1}));
  CHECK(sub.vertex_map == std::vector<int>{0, 1});
  REQUIRE(sub.complex.facets().size() == 1);
  CHECK(sub.complex.facets()[0] == VertexSet::of({0, 1}));

  auto single = cyc.full_subcomplex(VertexSet::single(2));
  CHECK(single.vertex_map == std::vector<int>{2});
  CHECK(single.complex.f_vector() == fv_of({1, 1}));

  CHECK(cyc.full_subcomplex(VertexSet()).complex.dim() == -1);

  // a facet of the boundary sphere survives as a full simplex
  auto bd = SimplicialComplex::skeleton_of_simplex(4, 2);
  auto tri = bd.full_subcomplex(VertexSet::of({0, 2, 3}));
  CHECK(tri.vertex_map == std::vector<int>{0, 2, 3});
  CHECK(tri.complex.f_vector() == fv_of({1, 3, 3, 1}));

  CHECK_THROWS_AS(cyc.full_subcomplex(VertexSet::single(7)),
                  PreconditionError);
}

TEST_CASE("links") {
  auto cyc = SimplicialComplex::from_vertex_lists(3, {{0, 1}, {0, 2}, {1, 2}});
  auto lk = cyc.link(VertexSet::single(0));
  CHECK(lk.vertex_map == std::vector<int>{1, 2});
  CHECK(lk.complex.f_vector() == fv_of({1, 2}));

  auto bd = SimplicialComplex::skeleton_of_simplex(4, 2);
  auto lke = bd.link(VertexSet::of({0, 1}));
  CHECK(lke.vertex_map == std::vector<int>{2, 3});
  CHECK(lke.complex.f_vector() == fv_of({1, 2}));

  // the link of the empty face reproduces the complex
  auto whole = cyc.link(VertexSet());
  CHECK(whole.complex == cyc);

  // the link of a facet is {∅}
  auto top = cyc.link(VertexSet::of({1, 2}));
  CHECK(top.complex.dim() == -1);
  CHECK(top.vertex_map.empty());

  CHECK_THROWS_AS(cyc.link(VertexSet::of({0, 1, 2})), PreconditionError);
}

TEST_CASE("projective plane fixture") {
  auto rp = projective_plane();
  CHECK(rp.f_vector() == fv_of({1, 6, 15, 10}));
  CHECK(rp.euler_characteristic() == 1);
  CHECK(rp.is_pure());
  CHECK_FALSE(rp.is_matroid());
  // every edge lies in exactly two triangles
  auto levels = rp.faces_by_card();
  for (const auto& e : levels[2]) {
    int cnt = 0;
    for (const auto& f : rp.facets())
      if (f.contains(e)) ++cnt;
    CHECK(cnt == 2);
  }
}

TEST_CASE("face enumeration is sorted and complete") {
  auto rp = projective_plane();
  std::vector<VertexSet> faces;
  rp.for_each_face([&](const VertexSet& f, int d) {
    CHECK(f.count() == d + 1);
    faces.push_back(f);
  });
  CHECK(faces.size() == 32);
  CHECK(std::is_sorted(faces.begin(), faces.end()));
  CHECK(std::adjacent_find(faces.begin(), faces.end()) == faces.end());
}

TEST_CASE("membership and enumeration agree with brute force") {
  std::mt19937_64 rng(900132);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 4 + static_cast<int>(rng() % 7);
    auto k = random_complex(rng, m);
    std::vector<long> counts(m + 2, 0);
    counts[0] = 1;
    for (uint64_t w = 1; w < (1ull << m); ++w) {
      VertexSet s = VertexSet::from_word(w);
      bool expect = brute_face(k, s);
      CHECK(k.is_simplex(s) == expect);
      if (expect) ++counts[s.count()];
    }
    FVector fv = k.f_vector();
    REQUIRE(static_cast<int>(fv.counts.size()) == k.dim() + 2);
    for (size_t i = 0; i < fv.counts.size(); ++i) CHECK(fv.counts[i] == counts[i]);
    for (size_t i = fv.counts.size(); i < counts.size(); ++i) CHECK(counts[i] == 0);
  }
}

TEST_CASE("minimal nonsimplices agree with brute force") {
  std::mt19937_64 rng(712001);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 4 + static_cast<int>(rng() % 6);
    auto k = random_complex(rng, m);
    for (int j = 1; j <= 4; ++j) {
      std::vector<VertexSet> expect;
      for (uint64_t w = 1; w < (1ull << m); ++w) {
        VertexSet s = VertexSet::from_word(w);
        if (s.count() != j + 1 || brute_face(k, s)) continue;
        bool minimal = true;
        for (uint64_t t = (w - 1) & w; minimal; t = (t - 1) & w) {
          if (t != w && !brute_face(k, VertexSet::from_word(t))) minimal = false;
          if (t == 0) break;
        }
        if (minimal) expect.push_back(s);
      }
      std::sort(expect.begin(), expect.end());
      auto got = k.minimal_nonsimplices(j);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(got == expect);
    }
  }
  CHECK_THROWS_AS(projective_plane().minimal_nonsimplices(0), PreconditionError);
}

TEST_CASE("full subcomplex matches face restriction") {
  std::mt19937_64 rng(331900);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 4 + static_cast<int>(rng() % 6);
    auto k = random_complex(rng, m);
    VertexSet j_set = VertexSet::from_word(rng() & ((1ull << m) - 1));
    auto sub = k.full_subcomplex(j_set);
    std::vector<int> new_of_old(m, -1);
    for (size_t i = 0; i < sub.vertex_map.size(); ++i)
      new_of_old[sub.vertex_map[i]] = static_cast<int>(i);
    for (uint64_t w = 0; w < (1ull << m); ++w) {
      VertexSet s = VertexSet::from_word(w);
      bool inside = j_set.contains(s) && brute_face(k, s);
      VertexSet t;
      if (j_set.contains(s))
        s.for_each([&](int v) { t.set(new_of_old[v]); });
      CHECK((j_set.contains(s) && sub.complex.is_simplex(t)) == inside);
    }
  }
}

TEST_CASE("membership without the subset table") {
  // 23 vertices disables the table, exercising the facet-scan path
  auto k = SimplicialComplex::from_vertex_lists(
      23, {{0, 1, 2, 3}, {3, 4, 5, 6}, {20, 21, 22}, {0, 4}, {2, 4}});
  CHECK(k.f_vector() == fv_of({1, 10, 17, 9, 2}));
  CHECK(k.is_simplex(VertexSet::of({0, 3})));
  CHECK(k.is_simplex(VertexSet::of({20, 22})));
  CHECK(k.is_simplex(VertexSet::of({2, 4})));
  CHECK_FALSE(k.is_simplex(VertexSet::of({1, 4})));
  CHECK_FALSE(k.is_simplex(VertexSet::of({0, 21})));
  CHECK(k.minimal_nonsimplices(1).size() == 28);
  // triples whose pairs are all edges but which span two facets
  auto mns = k.minimal_nonsimplices(2);
  REQUIRE(mns.size() == 3);
  CHECK(mns[0] == VertexSet::of({0, 2, 4}));
  CHECK(mns[1] == VertexSet::of({0, 3, 4}));
  CHECK(mns[2] == VertexSet::of({2, 3, 4}));
}

}  // TEST_SUITE
