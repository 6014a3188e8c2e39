#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "ucx/buchstaber.hpp"
#include "ucx/errors.hpp"
#include "ucx/universal.hpp"

using namespace ucx;

namespace {

SimplicialComplex cycle(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_vertex_lists(n, edges);
}

SimplicialComplex path_graph(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return SimplicialComplex::from_vertex_lists(n, edges);
}

SimplicialComplex complete_graph(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return SimplicialComplex::from_vertex_lists(n, edges);
}

SimplicialComplex complete_bipartite(int a, int b) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return SimplicialComplex::from_vertex_lists(a + b, edges);
}

SimplicialComplex petersen() {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
    edges.push_back({i, i + 5});
  }
  return SimplicialComplex::from_vertex_lists(10, edges);
}

/** All labeled connected graphs on n vertices, as 1-dim complexes. */
std::vector<SimplicialComplex> connected_graphs(int n) {
  std::vector<SimplicialComplex> out;
  if (n == 1) {
    out.push_back(SimplicialComplex::from_vertex_lists(1, {{0}}));
    return out;
  }
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const uint32_t total = uint32_t{1} << slots.size();
  for (uint32_t mask = 0; mask < total; ++mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int components = n;
    std::vector<std::vector<int>> edges;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      edges.push_back({slots[i].first, slots[i].second});
      int a = find(slots[i].first), b = find(slots[i].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1)
      out.push_back(SimplicialComplex::from_vertex_lists(n, edges));
  }
  return out;
}

FpVec vec(std::initializer_list<int> entries) {
  FpVec v;
  for (int e : entries) v.push_back(static_cast<uint8_t>(e));
  return v;
}

const SkeletonEntry& entry_at(const SkeletonReport& rep, int sm, int sk) {
  for (const auto& e : rep.entries)
    if (e.simplex_dim == sm && e.skeleton_dim == sk) return e;
  REQUIRE(false);
  return rep.entries.front();
}

}  // namespace

TEST_SUITE("buchstaber") {

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(build_K(2, 2).complex) == 3);
  CHECK(chromatic_number(complete_graph(5)) == 5);
  CHECK(chromatic_number(petersen()) == 3);
  CHECK(chromatic_number(complete_bipartite(3, 3)) == 2);
  CHECK(chromatic_number(SimplicialComplex::skeleton_of_simplex(4, 0)) == 1);
  CHECK(chromatic_number(SimplicialComplex()) == 0);
  // higher faces do not matter, only the edges
  CHECK(chromatic_number(SimplicialComplex::skeleton_of_simplex(5, 3)) == 5);
}

TEST_CASE("nondegenerate assignments") {
  auto u = build_K(3, 2);
  CHECK(is_nondegenerate(u.complex, 3, 2, u.labels));

  auto edge = SimplicialComplex::from_vertex_lists(2, {{0, 1}});
  CHECK_FALSE(is_nondegenerate(edge, 2, 1, {vec({1}), vec({1})}));
  CHECK(is_nondegenerate(edge, 2, 2, {vec({1, 0}), vec({0, 1})}));

  auto tri = cycle(3);
  CHECK(is_nondegenerate(tri, 2, 2,
                         {vec({1, 0}), vec({0, 1}), vec({1, 1})}));
  // two vertices on the same line kill the edge between them
  CHECK_FALSE(is_nondegenerate(tri, 3, 2,
                               {vec({1, 0}), vec({2, 0}), vec({0, 1})}));

  CHECK_THROWS_AS(is_nondegenerate(tri, 2, 2, {vec({1, 0})}),
                  PreconditionError);
  CHECK_THROWS_AS(is_nondegenerate(tri, 2, 2,
                                   {vec({1, 0}), vec({0, 1}), vec({1})}),
                  PreconditionError);
  CHECK_THROWS_AS(is_nondegenerate(tri, 2, 2,
                                   {vec({1, 0}), vec({0, 1}), vec({2, 0})}),
                  PreconditionError);
  CHECK_THROWS_AS(is_nondegenerate(tri, 4, 2,
                                   {vec({1, 0}), vec({0, 1}), vec({1, 1})}),
                  PreconditionError);
}

TEST_CASE("small graph invariants") {
  auto c3 = s_p(cycle(3), 2);
  CHECK(c3.exact);
  CHECK(c3.value == 1);
  CHECK(c3.gamma == 3);
  CHECK(c3.attained_rank == 2);
  CHECK(is_nondegenerate(cycle(3), 2, 2, c3.assignment));

  CHECK(s_p(cycle(5), 2).value == 3);
  CHECK(s_p(complete_graph(4), 2).value == 1);
  CHECK(s_p(complete_graph(4), 3).value == 2);

  auto pet = s_p(petersen(), 2);
  CHECK(pet.value == 8);
  CHECK(pet.gamma == 3);
  CHECK(pet.attained_rank == 2);
}

TEST_CASE("budget exhaustion degrades to bounds") {
  auto rep = s_p(cycle(3), 2, 1);
  CHECK_FALSE(rep.exact);
  CHECK(rep.value == -1);
  CHECK(rep.budget_exhausted);
  CHECK(rep.s_lower == 0);
  CHECK(rep.s_upper == 1);
  // the fallback witness colors vertices with basis lines
  CHECK(rep.attained_rank == 3);
  CHECK(is_nondegenerate(cycle(3), 2, 3, rep.assignment));
}

TEST_CASE("universal complexes attain the dimension bound") {
  const std::pair<int, int> cases[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3},
                                       {5, 2}};
  for (auto [p, n] : cases) {
    CAPTURE(p);
    CAPTURE(n);
    auto u = build_K(p, n);
    const int m = u.complex.vertex_count();
    auto rep = s_p(u.complex, p);
    CHECK(rep.exact);
    CHECK(rep.value == m - n);
    CHECK(rep.attained_rank == n);
    CHECK(rep.upper_from_dimension == m - n);
    CHECK(is_nondegenerate(u.complex, p, n, rep.assignment));
    CHECK(injectivity_check(u, p, n, rep.assignment));
  }
}

TEST_CASE("graph formula matches the search") {
  const int expected_counts[] = {0, 1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    auto graphs = connected_graphs(n);
    CHECK(static_cast<int>(graphs.size()) == expected_counts[n]);
    for (int p : {2, 3}) {
      for (const auto& g : graphs) {
        auto rep = s_p(g, p);
        REQUIRE(rep.exact);
        CHECK(rep.value == s_p_graph_formula(g, p));
        CHECK(is_nondegenerate(g, p, rep.attained_rank, rep.assignment));
      }
    }
  }
}

TEST_CASE("searchless bounds") {
  auto sphere = bounds_report(SimplicialComplex::skeleton_of_simplex(4, 2), 2);
  CHECK(sphere.s_lower == 0);
  CHECK(sphere.s_upper == 1);
  CHECK(sphere.upper_from_dimension == 1);
  CHECK(sphere.upper_from_line_count == 1);
  CHECK_FALSE(sphere.exact);

  auto discrete = bounds_report(SimplicialComplex::skeleton_of_simplex(5, 0), 2);
  CHECK(discrete.exact);
  CHECK(discrete.value == 4);

  auto full = bounds_report(SimplicialComplex::skeleton_of_simplex(4, 3), 3);
  CHECK(full.exact);
  CHECK(full.value == 0);

  auto x23 = bounds_report(build_X(2, 3).complex, 2);
  CHECK(x23.upper_from_dimension == 4);
  CHECK(x23.s_lower == 0);
  CHECK(x23.s_upper == 4);
}

TEST_CASE("skeleton grid chain") {
  for (int p : {2, 3}) {
    auto rep = skeleton_checks(p, 3);
    CHECK(rep.complete);
    CHECK(rep.chain_holds);
    for (int sm = 0; sm <= 3; ++sm) {
      // discrete skeleton: one color, rank 1
      CHECK(entry_at(rep, sm, 0).s_value == sm);
      // full simplex: a facet needs a full basis
      CHECK(entry_at(rep, sm, sm).s_value == 0);
    }
    CHECK(entry_at(rep, 2, 1).s_value == 1);
  }
  CHECK(entry_at(skeleton_checks(3, 3), 3, 1).s_value == 2);

  auto deep2 = skeleton_checks(2, 5);
  CHECK(deep2.complete);
  CHECK(deep2.chain_holds);
  // six points of the eight-point affine cap of PG(3,2) give rank 4
  CHECK(entry_at(deep2, 5, 2).s_value == 2);

  auto deep3 = skeleton_checks(3, 5);
  CHECK(deep3.complete);
  CHECK(deep3.chain_holds);
  CHECK(entry_at(deep3, 5, 2).s_value == 2);
  CHECK(entry_at(deep3, 5, 3).s_value == 1);
}

TEST_CASE("line-to-line target ranks") {
  const std::pair<int, int> same[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}};
  for (auto [p, n] : same) {
    CAPTURE(p);
    CAPTURE(n);
    auto rep = omega(p, p, n);
    CHECK(rep.searched);
    CHECK(rep.exact);
    CHECK(rep.value == n);
    CHECK(rep.lower == n);
    CHECK(rep.upper == n);
  }

  CHECK(omega(2, 3, 2).value == 2);
  CHECK(omega(3, 2, 2).value == 3);

  // exact values are nondecreasing in n
  int prev = 0;
  for (int n = 1; n <= 3; ++n) {
    auto rep = omega(2, 3, n);
    REQUIRE(rep.exact);
    CHECK(rep.value >= prev);
    CHECK(rep.value >= n);
    CHECK(mpz_class(rep.value) <= rep.upper);
    prev = rep.value;
  }

  // too large to build: counting bounds only
  auto big = omega(2, 2, 7);
  CHECK_FALSE(big.searched);
  CHECK_FALSE(big.exact);
  CHECK(big.value == -1);
  CHECK(big.lower == 7);
  CHECK(big.upper == 127);

  CHECK_THROWS_AS(omega(4, 3, 2), PreconditionError);
  CHECK_THROWS_AS(omega(3, 3, 0), PreconditionError);
}

TEST_CASE("integral target bounds") {
  auto t32 = theta_bounds(3, 2);
  CHECK(t32.lower == 3);
  CHECK(t32.upper == 4);

  auto t23 = theta_bounds(2, 3);
  CHECK(t23.lower == 3);
  CHECK(t23.upper == 7);

  auto t25 = theta_bounds(2, 5);
  CHECK(t25.lower == 5);
  CHECK(t25.upper == 31);

  auto t52 = theta_bounds(5, 2);
  CHECK(t52.lower == 3);
  CHECK(t52.upper == 6);

  CHECK_THROWS_AS(theta_bounds(6, 2), PreconditionError);
  CHECK_THROWS_AS(theta_bounds(2, 0), PreconditionError);
}

TEST_CASE("injectivity coincides with nondegeneracy on complete skeletons") {
  auto u = build_K(2, 2);
  auto lines = enumerate_lines(2, 3);
  REQUIRE(lines.size() == 4);
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b)
      for (size_t c = 0; c < 4; ++c) {
        std::vector<FpVec> assignment = {lines[a], lines[b], lines[c]};
        CHECK(injectivity_check(u, 3, 2, assignment) ==
              is_nondegenerate(u.complex, 3, 2, assignment));
      }

  auto u32 = build_K(3, 2);
  CHECK(injectivity_check(u32, 3, 2, u32.labels));

  // non-canonical representatives still name distinct lines
  CHECK(injectivity_check(u, 3, 2, {vec({0, 2}), vec({1, 0}), vec({1, 1})}));
  CHECK_FALSE(
      injectivity_check(u, 3, 2, {vec({0, 1}), vec({0, 2}), vec({1, 0})}));

  auto x22 = build_X(2, 2);
  CHECK(injectivity_check(x22, 2, 2, x22.labels));
  CHECK_THROWS_AS(injectivity_check(build_X(3, 2), 3, 2, build_X(3, 2).labels),
                  PreconditionError);
}

TEST_CASE("vertex deletion shifts the invariant by at most one") {
  auto whole = s_p(cycle(5), 2);
  auto subgraph = s_p(path_graph(4), 2);
  REQUIRE(whole.exact);
  REQUIRE(subgraph.exact);
  CHECK(subgraph.value == 2);
  CHECK(whole.value <= subgraph.value + 1);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(s_p(cycle(3), 4), PreconditionError);
  CHECK_THROWS_AS(s_p_graph_formula(SimplicialComplex::skeleton_of_simplex(4, 2), 2),
                  PreconditionError);
  CHECK_THROWS_AS(s_p_graph_formula(SimplicialComplex(), 2),
                  PreconditionError);
  CHECK_THROWS_AS(
      min_target_rank(SimplicialComplex::skeleton_of_simplex(65, 0), 2),
      ResourceError);
  CHECK_THROWS_AS(skeleton_checks(2, 9), ResourceError);
  CHECK_THROWS_AS(skeleton_checks(2, -1), PreconditionError);
}

TEST_CASE("face counts grow with the field") {
  auto small = f_vector_closed(Family::K, 2, 2);
  auto large = f_vector_closed(Family::K, 3, 2);
  REQUIRE(small.counts.size() == large.counts.size());
  for (size_t i = 0; i < small.counts.size(); ++i)
    CHECK(small.counts[i] <= large.counts[i]);
  CHECK(vertex_count_K(2, 3) < vertex_count_K(3, 3));
}

}  // TEST_SUITE
