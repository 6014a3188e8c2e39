#include "ucx/selfcheck.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "ucx/buchstaber.hpp"
#include "ucx/cohomology.hpp"
#include "ucx/fp_linalg.hpp"
#include "ucx/json_io.hpp"
#include "ucx/products.hpp"
#include "ucx/tor.hpp"
#include "ucx/universal.hpp"
#include "ucx/z_lattice.hpp"

namespace ucx {
namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

void run(std::vector<CheckResult>& out, const std::string& name,
         const std::function<void()>& body) {
  CheckResult r;
  r.name = name;
  try {
    body();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_vertex_lists(
      6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
          {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

void check_lines_and_ranks() {
  expect(enumerate_lines(2, 3).size() == 4, "line count of F_3^2");
  expect(enumerate_lines(3, 2).size() == 7, "line count of F_2^3");
  expect(enumerate_lines(2, 5).size() == 6, "line count of F_5^2");
  FpMat rows = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
  expect(rank_fp(rows, 2) == 2, "rank of a dependent triple over F_2");
  expect(rank_fp(rows, 3) == 3, "rank of the same triple over F_3");
  expect(canonical_line({0, 2}, 3) == FpVec{0, 1}, "canonical representative");
}

void check_lattice() {
  ZMat rows = {{2, 3, 1}, {1, 1, 1}};
  expect(is_unimodular_z(rows), "unimodular pair");
  ZMat basis = extend_to_basis_z(rows);
  mpz_class d = det_bareiss(basis);
  expect(d == 1 || d == -1, "completion determinant");
  expect(basis[0] == rows[0] && basis[1] == rows[1],
         "completion keeps the input rows");
  auto smith = smith_normal_form({{2, 0}, {0, 4}});
  expect(smith.divisors == std::vector<mpz_class>{2, 4}, "smith divisors");
}

void check_complex_structure() {
  auto skel = SimplicialComplex::skeleton_of_simplex(6, 2);
  auto fv = skel.f_vector();
  expect(fv.counts == std::vector<mpz_class>{1, 6, 15, 20},
         "f-vector of a skeleton");
  expect(skel.is_matroid(), "uniform matroid passes exchange");
  auto split = SimplicialComplex::from_vertex_lists(4, {{0, 1}, {2, 3}});
  expect(!split.is_matroid(), "disjoint edges fail exchange");
  expect(split.minimal_nonsimplices(1).size() == 4,
         "missing edges of the disjoint pair");
}

void check_universal_families() {
  const struct {
    Family fam;
    int p, n;
  } cases[] = {{Family::X, 2, 3}, {Family::X, 3, 2}, {Family::K, 3, 2},
               {Family::K, 2, 3}};
  for (const auto& c : cases) {
    auto u = c.fam == Family::X ? build_X(c.p, c.n) : build_K(c.p, c.n);
    expect(f_vector_closed(c.fam, c.p, c.n) == u.complex.f_vector(),
           "closed f-vector against enumeration");
    expect(u.complex.is_matroid(), "universal complex is a matroid");
  }
  auto u = build_X(2, 3);
  auto link = u.complex.link(VertexSet::single(0));
  expect(link_f_vector_closed(Family::X, 2, 3, 0) ==
             link.complex.f_vector(),
         "closed link f-vector against enumeration");
}

void check_wedge_counts() {
  auto x = build_X(2, 3);
  auto coh = reduced_cohomology(x.complex, Coefficients::Rationals);
  expect(wedge_count(Family::X, 2, 3).value == coh.rank(2),
         "wedge count of X against top cohomology");
  expect(coh.rank(0) == 0 && coh.rank(1) == 0, "lower degrees vanish");
  auto k = build_K(3, 2);
  auto kcoh = reduced_cohomology(k.complex, Coefficients::Rationals);
  expect(wedge_count(Family::K, 3, 2).value == kcoh.rank(1),
         "wedge count of K against top cohomology");
}

void check_torsion() {
  expect(torsion_check(build_X(2, 3).complex).torsion_free,
         "X(F_2^3) subcomplexes are torsion-free");
  auto rp = torsion_check(projective_plane());
  expect(!rp.torsion_free, "projective plane control has torsion");
  expect(rp.factors == std::vector<mpz_class>{2},
         "projective plane torsion factor");
}

void check_betti_routes() {
  auto x = build_X(2, 3);
  auto morse = betti_via_morse(x.complex);
  expect(morse == betti_recursion(Family::X, 2, 3),
         "morse vs recursion on X(F_2^3)");
  expect(morse == betti_via_hochster_euler(x.complex),
         "morse vs euler route on X(F_2^3)");
  expect(morse == betti_via_cohomology(x.complex),
         "morse vs cohomology route on X(F_2^3)");
  expect(morse.total() == 112, "entry total of X(F_2^3)");

  auto k = build_K(3, 2);
  auto km = betti_via_morse(k.complex);
  expect(km == betti_recursion(Family::K, 3, 2) &&
             km == betti_via_hochster_euler(k.complex) &&
             km == betti_via_cohomology(k.complex),
         "all routes on K(F_3^2)");

  auto small = betti_recursion(Family::X, 2, 2);
  expect(small.at(1, 3) == 1 && small.total() == 2,
         "unique nonzero entry of X(F_2^2)");
}

void check_morse_matching() {
  expect(verify_matching(build_X(2, 3).complex), "matching on X(F_2^3)");
  expect(verify_matching(build_K(3, 2).complex), "matching on K(F_3^2)");
  expect(verify_matching(SimplicialComplex::skeleton_of_simplex(6, 1)),
         "matching on U_{2,6}");
}

void check_cup_length() {
  auto a = cup_length(build_X(3, 2));
  expect(a.lower == 2 && a.upper == 2, "cup length of X(F_3^2)");
  auto b = cup_length(build_K(3, 3));
  expect(b.lower == 1 && b.upper == 1, "cup length of K(F_3^3)");
  auto c = cup_length(build_X(2, 4));
  expect(c.lower == 2 && c.upper == 2, "cup length of X(F_2^4)");
}

void check_buchstaber() {
  for (int p : {2, 3}) {
    // every simple graph on four vertices, isolated vertices kept as faces
    for (int mask = 0; mask < 64; ++mask) {
      std::vector<std::vector<int>> lists = {{0}, {1}, {2}, {3}};
      int bit = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j, ++bit)
          if (mask >> bit & 1) lists.push_back({i, j});
      auto g = SimplicialComplex::from_vertex_lists(4, lists);
      auto rep = s_p(g, p);
      expect(rep.exact, "graph search is exact");
      expect(rep.value == s_p_graph_formula(g, p),
             "search agrees with the graph formula");
    }
    auto u = build_K(p, 2);
    auto rep = s_p(u.complex, p);
    expect(rep.value == u.complex.vertex_count() - 2,
           "K(F_p^2) attains the dimension bound");
  }
  auto grid = skeleton_checks(2, 3);
  expect(grid.complete && grid.chain_holds, "skeleton chain");
  expect(omega(2, 3, 2).value == 2, "omega(2,3,2)");
  expect(omega(3, 2, 2).value == 3, "omega(3,2,2)");
}

void check_serialization() {
  auto u = build_K(3, 2);
  auto j = complex_to_json(u);
  auto k = complex_from_json(j);
  expect(k == u.complex, "complex survives a JSON round trip");
  auto plain = complex_to_json(k);
  expect(complex_to_json(complex_from_json(plain)).dump(2) == plain.dump(2),
         "plain complex artifact is byte-stable");

  auto t = betti_recursion(Family::X, 2, 3);
  expect(betti_from_json(betti_to_json(t)) == t,
         "betti table survives a JSON round trip");
  expect(from_decimal(to_decimal(mpz_class("123456789012345678901234567890"))) ==
             mpz_class("123456789012345678901234567890"),
         "decimal big integer round trip");
}

}  // namespace

std::vector<CheckResult> run_selfchecks() {
  std::vector<CheckResult> out;
  run(out, "finite field lines and ranks", check_lines_and_ranks);
  run(out, "integer lattice routines", check_lattice);
  run(out, "complex structure and exchange", check_complex_structure);
  run(out, "universal family closed forms", check_universal_families);
  run(out, "wedge counts", check_wedge_counts);
  run(out, "torsion sweep and control", check_torsion);
  run(out, "betti number routes", check_betti_routes);
  run(out, "morse matching audit", check_morse_matching);
  run(out, "cup length bounds", check_cup_length);
  run(out, "buchstaber search and formula", check_buchstaber);
  run(out, "serialization round trips", check_serialization);
  return out;
}

}  // namespace ucx
