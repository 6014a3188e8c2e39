#include <doctest.h>

#include <random>
#include <vector>

#include "ucx/cohomology.hpp"
#include "ucx/errors.hpp"
#include "ucx/scomplex.hpp"

using namespace ucx;

namespace {

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

bool all_zero(const CohomologyResult& r) {
  for (int v : r.reduced_rank)
    if (v != 0) return false;
  return true;
}

// number of invariant factors divisible by p in degree d
int p_torsion(const CohomologyResult& r, int d, int p) {
  int i = d + 1;
  if (i < 0 || i >= static_cast<int>(r.torsion.size())) return 0;
  int cnt = 0;
  for (const auto& f : r.torsion[i])
    if (f % p == 0) ++cnt;
  return cnt;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
  int nf = 1 + static_cast<int>(rng() % 5);
  std::vector<VertexSet> facets;
  for (int i = 0; i < nf; ++i)
    facets.push_back(VertexSet::from_word(rng() & ((1ull << m) - 1)));
  return SimplicialComplex::from_facets(m, std::move(facets));
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("the complex with only the empty face") {
  auto k = SimplicialComplex::from_facets(0, {});
  for (auto coeff : {Coefficients::Rationals, Coefficients::Integers}) {
    auto r = reduced_cohomology(k, coeff);
    CHECK(r.rank(-1) == 1);
    CHECK(r.torsion_free());
  }
  CHECK(reduced_cohomology(k, Coefficients::ModP, 2).rank(-1) == 1);
}

TEST_CASE("contractible complexes are acyclic") {
  auto pt = SimplicialComplex::from_vertex_lists(1, {{0}});
  CHECK(all_zero(reduced_cohomology(pt, Coefficients::Integers)));
  auto full = SimplicialComplex::from_vertex_lists(4, {{0, 1, 2, 3}});
  CHECK(all_zero(reduced_cohomology(full, Coefficients::Rationals)));
  CHECK(all_zero(reduced_cohomology(full, Coefficients::ModP, 3)));
}

TEST_CASE("spheres") {
  auto two_points = SimplicialComplex::from_vertex_lists(2, {{0}, {1}});
  auto r0 = reduced_cohomology(two_points, Coefficients::Integers);
  CHECK(r0.rank(0) == 1);
  CHECK(r0.rank(-1) == 0);
  CHECK(r0.torsion_free());

  auto circle = SimplicialComplex::from_vertex_lists(3, {{0, 1}, {0, 2}, {1, 2}});
  auto r1 = reduced_cohomology(circle, Coefficients::Integers);
  CHECK(r1.rank(0) == 0);
  CHECK(r1.rank(1) == 1);
  CHECK(r1.torsion_free());

  auto sphere = SimplicialComplex::skeleton_of_simplex(4, 2);
  auto r2 = reduced_cohomology(sphere, Coefficients::Integers);
  CHECK(r2.rank(1) == 0);
  CHECK(r2.rank(2) == 1);
  CHECK(r2.torsion_free());
}

TEST_CASE("two disjoint circles") {
  auto k = SimplicialComplex::from_vertex_lists(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  auto r = reduced_cohomology(k, Coefficients::Rationals);
  CHECK(r.rank(0) == 1);
  CHECK(r.rank(1) == 2);
}

TEST_CASE("projective plane torsion") {
  auto rp = projective_plane();

  auto z = reduced_cohomology(rp, Coefficients::Integers);
  CHECK(all_zero(z));
  CHECK_FALSE(z.torsion_free());
  REQUIRE(z.torsion[3].size() == 1);  // degree 2
  CHECK(z.torsion[3][0] == 2);
  CHECK(z.torsion[1].empty());
  CHECK(z.torsion[2].empty());

  CHECK(all_zero(reduced_cohomology(rp, Coefficients::Rationals)));

  auto f2 = reduced_cohomology(rp, Coefficients::ModP, 2);
  CHECK(f2.rank(0) == 0);
  CHECK(f2.rank(1) == 1);
  CHECK(f2.rank(2) == 1);

  CHECK(all_zero(reduced_cohomology(rp, Coefficients::ModP, 3)));
}

TEST_CASE("mod-p argument validation") {
  auto pt = SimplicialComplex::from_vertex_lists(1, {{0}});
  CHECK_THROWS_AS(reduced_cohomology(pt, Coefficients::ModP, 0),
                  PreconditionError);
  CHECK_THROWS_AS(reduced_cohomology(pt, Coefficients::ModP, 6),
                  PreconditionError);
}

TEST_CASE("euler-poincare for every coefficient choice") {
  std::mt19937_64 rng(551007);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 3 + static_cast<int>(rng() % 6);
    auto k = random_complex(rng, m);
    mpz_class chi = k.reduced_euler_characteristic();
    for (int p : {0, 2, 3}) {
      auto r = p == 0 ? reduced_cohomology(k, Coefficients::Rationals)
                      : reduced_cohomology(k, Coefficients::ModP, p);
      mpz_class alt = 0;
      for (int d = -1; d <= k.dim(); ++d)
        alt += (d % 2 == 0 ? 1 : -1) * r.rank(d);
      CHECK(alt == chi);
    }
  }
}

TEST_CASE("integral result predicts mod-p ranks") {
  std::mt19937_64 rng(98441);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 3 + static_cast<int>(rng() % 6);
    auto k = random_complex(rng, m);
    auto z = reduced_cohomology(k, Coefficients::Integers);
    auto q = reduced_cohomology(k, Coefficients::Rationals);
    for (int d = -1; d <= k.dim(); ++d) CHECK(z.rank(d) == q.rank(d));
    for (int p : {2, 3}) {
      auto fp = reduced_cohomology(k, Coefficients::ModP, p);
      for (int d = -1; d <= k.dim(); ++d) {
        int expect = z.rank(d) + p_torsion(z, d, p) + p_torsion(z, d + 1, p);
        CHECK(fp.rank(d) == expect);
      }
    }
  }
}

}  // TEST_SUITE
