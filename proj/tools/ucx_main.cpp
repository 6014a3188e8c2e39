#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ucx/buchstaber.hpp"
#include "ucx/errors.hpp"
#include "ucx/json_io.hpp"
#include "ucx/products.hpp"
#include "ucx/selfcheck.hpp"
#include "ucx/tor.hpp"
#include "ucx/universal.hpp"

namespace {

using namespace ucx;

struct Options {
  std::string family = "X";
  int p = 2;
  int n = 2;
  int q = 2;
  std::string method = "recursion";
  std::string complex_file;
  std::string out;
  std::string csv;
  std::string out_dir = ".";
  std::string cache_dir;
  bool no_cache = false;
  bool links = false;
  bool bounds_only = false;
  int threads = 1;
  int max_vertices = 16;
  long long budget = kDefaultNodeBudget;
};

Family parse_family(const std::string& s) {
  return s == "K" ? Family::K : Family::X;
}

std::string family_display(const std::string& family, int p, int n) {
  std::ostringstream os;
  os << family << "(F_" << p << "^" << n << ")";
  return os.str();
}

UniversalComplex build_family(const Options& opt) {
  return parse_family(opt.family) == Family::K ? build_K(opt.p, opt.n)
                                               : build_X(opt.p, opt.n);
}

SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(Json::parse(read_text_file(path)));
}

Cache make_cache(const Options& opt) {
  if (opt.no_cache) return Cache{};
  if (!opt.cache_dir.empty()) return Cache{opt.cache_dir};
  std::string env = Cache::dir_from_env();
  return Cache{env.empty() ? std::string(".ucx-cache") : env};
}

void emit_artifact(const Json& artifact, const std::string& out,
                   bool stdout_fallback) {
  const std::string bytes = artifact.dump(2) + "\n";
  if (!out.empty()) {
    write_text_file(out, bytes);
    std::cout << "wrote " << out << "\n";
  } else if (stdout_fallback) {
    std::cout << bytes;
  }
}

Json vertex_set_json(const VertexSet& s) {
  Json arr = Json::array();
  s.for_each([&](int v) { arr.push_back(v + 1); });
  return arr;
}

Json assignment_json(const std::vector<FpVec>& assignment) {
  Json arr = Json::array();
  for (const auto& v : assignment) {
    Json one = Json::array();
    for (uint8_t c : v) one.push_back(static_cast<int>(c));
    arr.push_back(std::move(one));
  }
  return arr;
}

std::string fvector_display(const FVector& fv) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < fv.counts.size(); ++i) {
    if (i) os << ", ";
    os << fv.counts[i];
  }
  os << ")";
  return os.str();
}

void print_betti_table(const BettiTable& t, int rows, int columns) {
  size_t width = 1;
  for (int l = 1; l <= rows; ++l)
    for (int i = 1; i <= columns; ++i)
      width = std::max(width, to_decimal(t.at(i - l, i)).size());
  for (int i = columns; i > 0; i /= 10) ++width;
  width = std::max(width, to_decimal(mpz_class(columns)).size() + 1);

  std::cout << "l\\i";
  for (int i = 1; i <= columns; ++i)
    std::cout << std::setw(static_cast<int>(width)) << i;
  std::cout << "\n";
  for (int l = 1; l <= rows; ++l) {
    std::cout << std::setw(3) << l;
    for (int i = 1; i <= columns; ++i)
      std::cout << std::setw(static_cast<int>(width))
                << to_decimal(t.at(i - l, i));
    std::cout << "\n";
  }
}

int table_rows(const BettiTable& t) {
  int rows = 1;
  for (const auto& [key, value] : t.entries)
    rows = std::max(rows, key.second - key.first);
  return rows;
}

int mpz_to_columns(const mpz_class& m) {
  if (m > 100000)
    throw ResourceError("betti: table too wide to lay out");
  return static_cast<int>(m.get_si());
}

BettiTable compute_betti(const Options& opt, const SimplicialComplex& k) {
  if (opt.method == "morse") return betti_via_morse(k, opt.threads);
  if (opt.method == "euler") return betti_via_hochster_euler(k);
  if (opt.method == "cohomology") return betti_via_cohomology(k);
  throw PreconditionError("betti: unknown method " + opt.method);
}

int cmd_generate(const Options& opt) {
  auto u = build_family(opt);
  emit_artifact(complex_to_json(u), opt.out, true);
  return 0;
}

int cmd_fvector(const Options& opt) {
  Family fam = parse_family(opt.family);
  auto fv = f_vector_closed(fam, opt.p, opt.n);
  std::cout << "f " << family_display(opt.family, opt.p, opt.n) << " = "
            << fvector_display(fv) << "\n";
  Json j;
  j["schema"] = "ucx/fvector/v1";
  j["family"] = opt.family;
  j["p"] = opt.p;
  j["n"] = opt.n;
  j["f_vector"] = fvector_to_json(fv);
  if (opt.links) {
    Json links = Json::array();
    for (int d = 0; d < fv.dim(); ++d) {
      auto lv = link_f_vector_closed(fam, opt.p, opt.n, d);
      std::cout << "  link of a " << d << "-face: " << fvector_display(lv)
                << "\n";
      Json row;
      row["face_dim"] = d;
      row["f_vector"] = fvector_to_json(lv);
      links.push_back(std::move(row));
    }
    j["links"] = std::move(links);
  }
  emit_artifact(j, opt.out, false);
  return 0;
}

int cmd_betti(const Options& opt) {
  BettiTable table;
  std::string bytes;
  int rows = 0, columns = 0;
  Json meta;

  if (!opt.complex_file.empty()) {
    if (opt.method == "recursion")
      throw PreconditionError("betti: recursion needs a family instance");
    auto k = load_complex(opt.complex_file);
    table = compute_betti(opt, k);
    meta["source"] = opt.complex_file;
    rows = table_rows(table);
    columns = k.vertex_count();
    bytes = betti_to_json(table, meta).dump(2) + "\n";
  } else {
    Family fam = parse_family(opt.family);
    rows = opt.n;
    columns = mpz_to_columns(fam == Family::K ? vertex_count_K(opt.p, opt.n)
                                              : vertex_count_X(opt.p, opt.n));
    meta["family"] = opt.family;
    meta["p"] = opt.p;
    meta["n"] = opt.n;

    Cache cache = make_cache(opt);
    CacheKey key{"betti", opt.family, opt.p, opt.n, opt.method};
    std::string warning;
    if (auto hit = cache.get(key, &warning)) {
      bytes = *hit;
      table = betti_from_json(Json::parse(bytes));
    } else {
      if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
      if (opt.method == "recursion") {
        table = betti_recursion(fam, opt.p, opt.n);
      } else {
        table = compute_betti(opt, build_family(opt).complex);
      }
      bytes = betti_to_json(table, meta).dump(2) + "\n";
      cache.put(key, bytes);
    }
  }

  std::cout << "bigraded Betti numbers (" << table.method << ")\n";
  print_betti_table(table, rows, columns);
  auto max = table.max_entry();
  std::cout << "total " << table.total() << ", max " << max.value
            << " in bidegree (-" << max.i << "," << 2 * max.j << ")\n";

  if (!opt.csv.empty()) {
    write_text_file(opt.csv, betti_csv(table, rows, columns));
    std::cout << "wrote " << opt.csv << "\n";
  }
  if (!opt.out.empty()) {
    write_text_file(opt.out, bytes);
    std::cout << "wrote " << opt.out << "\n";
  }
  return 0;
}

int cmd_torsion(const Options& opt) {
  SimplicialComplex k;
  Json j;
  j["schema"] = "ucx/torsion/v1";
  if (!opt.complex_file.empty()) {
    k = load_complex(opt.complex_file);
    j["source"] = opt.complex_file;
  } else {
    k = build_family(opt).complex;
    j["family"] = opt.family;
    j["p"] = opt.p;
    j["n"] = opt.n;
  }
  auto rep = torsion_check(k, opt.max_vertices);
  if (rep.torsion_free) {
    std::cout << "torsion-free: every full subcomplex has torsion-free "
                 "integral cohomology\n";
  } else {
    std::cout << "torsion found on vertex set {";
    bool first = true;
    rep.witness.for_each([&](int v) {
      std::cout << (first ? "" : ", ") << v + 1;
      first = false;
    });
    std::cout << "} with invariant factors";
    for (const auto& f : rep.factors) std::cout << " " << f;
    std::cout << "\n";
  }
  j["max_vertices"] = opt.max_vertices;
  j["torsion_free"] = rep.torsion_free;
  j["witness"] = vertex_set_json(rep.witness);
  Json factors = Json::array();
  for (const auto& f : rep.factors) factors.push_back(to_decimal(f));
  j["factors"] = std::move(factors);
  emit_artifact(j, opt.out, false);
  return 0;
}

int cmd_cup_length(const Options& opt) {
  auto u = build_family(opt);
  auto b = cup_length(u);
  std::cout << "cup length of the moment-angle complex over "
            << family_display(opt.family, opt.p, opt.n) << ": ["
            << b.lower << ", " << b.upper << "]\n";
  std::cout << "  witness: " << b.witness.parts.size() << " spheres";
  for (size_t t = 0; t < b.witness.parts.size(); ++t)
    std::cout << (t ? ", " : " of dimension ") << b.witness.sphere_dims[t];
  std::cout << "\n  LS category in [" << b.ls_lower << ", " << b.ls_upper
            << "]\n  " << b.note << "\n";

  Json j;
  j["schema"] = "ucx/cup/v1";
  j["family"] = opt.family;
  j["p"] = opt.p;
  j["n"] = opt.n;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["ls_lower"] = b.ls_lower;
  j["ls_upper"] = b.ls_upper;
  j["note"] = b.note;
  Json witness;
  Json parts = Json::array();
  for (const auto& part : b.witness.parts) parts.push_back(vertex_set_json(part));
  witness["parts"] = std::move(parts);
  witness["sphere_dims"] = b.witness.sphere_dims;
  j["witness"] = std::move(witness);
  emit_artifact(j, opt.out, false);
  return 0;
}

int cmd_buchstaber(const Options& opt) {
  SimplicialComplex k;
  Json j;
  j["schema"] = "ucx/buchstaber/v1";
  if (!opt.complex_file.empty()) {
    k = load_complex(opt.complex_file);
    j["source"] = opt.complex_file;
  } else {
    k = build_family(opt).complex;
    j["family"] = opt.family;
    j["n"] = opt.n;
  }
  j["p"] = opt.p;

  InvariantReport rep =
      opt.bounds_only ? bounds_report(k, opt.p) : s_p(k, opt.p, opt.budget);
  std::cout << "vertex count " << rep.vertex_count << ", reduction prime "
            << rep.p << ", chromatic number " << rep.gamma << "\n";
  if (rep.exact) {
    std::cout << "s_" << opt.p << " = " << rep.value;
    if (rep.attained_rank >= 0)
      std::cout << " (witness at target rank " << rep.attained_rank << ")";
    std::cout << "\n";
  } else {
    std::cout << "s_" << opt.p << " in [" << rep.s_lower << ", "
              << rep.s_upper << "]"
              << (rep.budget_exhausted ? " (node budget exhausted)" : "")
              << "\n";
  }
  std::cout << "  bounds: coloring " << rep.lower_from_coloring
            << ", dimension " << rep.upper_from_dimension << ", line count "
            << rep.upper_from_line_count << "\n";

  j["vertex_count"] = rep.vertex_count;
  j["gamma"] = rep.gamma;
  j["lower_from_coloring"] = rep.lower_from_coloring;
  j["upper_from_dimension"] = rep.upper_from_dimension;
  j["upper_from_line_count"] = rep.upper_from_line_count;
  j["s_lower"] = rep.s_lower;
  j["s_upper"] = rep.s_upper;
  j["value"] = rep.value;
  j["exact"] = rep.exact;
  j["attained_rank"] = rep.attained_rank;
  j["nodes"] = rep.nodes;
  j["budget_exhausted"] = rep.budget_exhausted;
  j["assignment"] = assignment_json(rep.assignment);
  emit_artifact(j, opt.out, false);
  return 0;
}

int cmd_omega(const Options& opt) {
  auto rep = omega(opt.p, opt.q, opt.n, opt.budget);
  std::cout << "least nondegenerate target rank for K(F_" << opt.p << "^"
            << opt.n << ") into lines of F_" << opt.q << ":\n";
  if (rep.exact) {
    std::cout << "  value " << rep.value << " (searched, " << rep.nodes
              << " nodes)\n";
  } else if (rep.searched) {
    std::cout << "  in [" << rep.lower << ", " << rep.upper
              << "] (search hit the node budget)\n";
  } else {
    std::cout << "  in [" << rep.lower << ", " << rep.upper
              << "] (instance too large to search; counting bounds)\n";
  }

  Json j;
  j["schema"] = "ucx/omega/v1";
  j["p"] = opt.p;
  j["q"] = opt.q;
  j["n"] = opt.n;
  j["lower"] = rep.lower;
  j["upper"] = to_decimal(rep.upper);
  j["value"] = rep.value;
  j["exact"] = rep.exact;
  j["searched"] = rep.searched;
  j["nodes"] = rep.nodes;
  j["assignment"] = assignment_json(rep.assignment);
  emit_artifact(j, opt.out, false);
  return 0;
}

int cmd_verify(const Options& opt) {
  auto results = run_selfchecks();
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[ ok ] " : "[FAIL] ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
    all = all && r.passed;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";

  Json j;
  j["schema"] = "ucx/verify/v1";
  j["passed"] = all;
  Json checks = Json::array();
  for (const auto& r : results) {
    Json c;
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  emit_artifact(j, opt.out, false);
  return all ? 0 : 1;
}

// reference values for the two tables, rows l = 1..n, columns i = 1..m
const long kTableX23[3][7] = {
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 7, 0, 0, 0, 0},
    {0, 0, 0, 7, 42, 42, 13},
};
const long kTableX24[4][15] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 35, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 105, 630, 630, 195, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 168, 4480, 27420, 79695, 140140, 163548, 130725, 71225,
     25410, 5370, 511},
};

template <int R, int C>
bool diff_table(const BettiTable& t, const long (&expected)[R][C],
                const std::string& label) {
  bool ok = true;
  for (int l = 1; l <= R; ++l)
    for (int i = 1; i <= C; ++i)
      if (t.at(i - l, i) != expected[l - 1][i - 1]) {
        std::cout << "  " << label << " mismatch at l=" << l << " i=" << i
                  << ": computed " << t.at(i - l, i) << ", expected "
                  << expected[l - 1][i - 1] << "\n";
        ok = false;
      }
  // nothing outside the grid: the entries must add up
  mpz_class sum = 1;  // the (0,0) entry
  for (int l = 1; l <= R; ++l)
    for (int i = 1; i <= C; ++i) sum += expected[l - 1][i - 1];
  if (t.total() != sum || t.at(0, 0) != 1) {
    std::cout << "  " << label << " has entries outside the reference grid\n";
    ok = false;
  }
  std::cout << (ok ? "  " + label + " matches the reference\n" : "");
  return ok;
}

int cmd_reproduce_tables(const Options& opt) {
  bool ok = true;

  auto x23 = build_X(2, 3);
  auto t1_recursion = betti_recursion(Family::X, 2, 3);
  auto t1_morse = betti_via_morse(x23.complex, opt.threads);
  auto t1_euler = betti_via_hochster_euler(x23.complex);
  if (t1_morse != t1_recursion || t1_euler != t1_recursion) {
    std::cout << "  methods disagree on X(F_2^3)\n";
    ok = false;
  }
  ok = diff_table(t1_recursion, kTableX23, "X(F_2^3)") && ok;

  auto t2_recursion = betti_recursion(Family::X, 2, 4);
  ok = diff_table(t2_recursion, kTableX24, "X(F_2^4)") && ok;

  Json meta1;
  meta1["family"] = "X";
  meta1["p"] = 2;
  meta1["n"] = 3;
  write_text_file(opt.out_dir + "/table1.csv", betti_csv(t1_recursion, 3, 7));
  write_text_file(opt.out_dir + "/table1.json",
                  betti_to_json(t1_recursion, meta1).dump(2) + "\n");
  Json meta2;
  meta2["family"] = "X";
  meta2["p"] = 2;
  meta2["n"] = 4;
  write_text_file(opt.out_dir + "/table2.csv", betti_csv(t2_recursion, 4, 15));
  write_text_file(opt.out_dir + "/table2.json",
                  betti_to_json(t2_recursion, meta2).dump(2) + "\n");
  std::cout << "wrote " << opt.out_dir << "/table{1,2}.{csv,json}\n";
  std::cout << (ok ? "tables reproduced" : "tables DIFFER") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"universal simplicial complexes of finite vector spaces:\n"
               "f-vectors, bigraded Betti numbers, torsion, cup length and\n"
               "Buchstaber-type invariants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kCodeVersion);

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "family, X or K")
        ->check(CLI::IsMember({"X", "K"}));
    sub->add_option("--p", opt.p, "field characteristic (a prime)");
    sub->add_option("--n", opt.n, "dimension of the vector space");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "write the JSON artifact here");
  };

  auto* generate = app.add_subcommand(
      "generate", "build a complex and print its JSON artifact");
  add_family(generate);
  add_out(generate);

  auto* fvector =
      app.add_subcommand("fvector", "face counts from the closed forms");
  add_family(fvector);
  add_out(fvector);
  fvector->add_flag("--links", opt.links, "include link face counts");

  auto* betti = app.add_subcommand(
      "betti", "bigraded Betti numbers of the face ring");
  add_family(betti);
  add_out(betti);
  betti->add_option("--method", opt.method,
                    "morse, recursion, euler or cohomology")
      ->check(CLI::IsMember({"morse", "recursion", "euler", "cohomology"}));
  betti->add_option("--complex", opt.complex_file,
                    "JSON complex file instead of a family instance");
  betti->add_option("--csv", opt.csv, "write the table as CSV here");
  betti->add_option("--threads", opt.threads, "worker cap for morse")
      ->check(CLI::Range(1, 256));
  betti->add_option("--cache-dir", opt.cache_dir,
                    "artifact cache directory (default $UCX_CACHE_DIR or "
                    ".ucx-cache)");
  betti->add_flag("--no-cache", opt.no_cache, "bypass the artifact cache");

  auto* torsion = app.add_subcommand(
      "torsion", "integral torsion sweep over full subcomplexes");
  add_family(torsion);
  add_out(torsion);
  torsion->add_option("--complex", opt.complex_file,
                      "JSON complex file instead of a family instance");
  torsion->add_option("--max-vertices", opt.max_vertices,
                      "refuse instances with more vertices")
      ->check(CLI::Range(0, 20));

  auto* cup = app.add_subcommand(
      "cup-length", "cup-length bounds of the moment-angle complex");
  add_family(cup);
  add_out(cup);

  auto* buch = app.add_subcommand(
      "buchstaber", "mod-p invariant by exact rank search");
  add_family(buch);
  add_out(buch);
  buch->add_option("--complex", opt.complex_file,
                   "JSON complex file instead of a family instance");
  buch->add_option("--budget", opt.budget, "search node budget");
  buch->add_flag("--bounds-only", opt.bounds_only,
                 "report the searchless bounds and skip the search");

  auto* om = app.add_subcommand(
      "omega", "least nondegenerate target rank between line complexes");
  om->add_option("--p", opt.p, "source field characteristic");
  om->add_option("--q", opt.q, "target field characteristic");
  om->add_option("--n", opt.n, "source dimension");
  om->add_option("--budget", opt.budget, "search node budget");
  add_out(om);

  auto* verify = app.add_subcommand(
      "verify", "run the cross-module consistency suite");
  add_out(verify);

  auto* tables = app.add_subcommand(
      "reproduce-tables",
      "emit the two reference Betti tables and diff them");
  tables->add_option("--out-dir", opt.out_dir, "directory for the artifacts");
  tables->add_option("--threads", opt.threads, "worker cap for morse")
      ->check(CLI::Range(1, 256));

  int rc = 0;
  try {
    app.parse(argc, argv);
    if (generate->parsed()) rc = cmd_generate(opt);
    if (fvector->parsed()) rc = cmd_fvector(opt);
    if (betti->parsed()) rc = cmd_betti(opt);
    if (torsion->parsed()) rc = cmd_torsion(opt);
    if (cup->parsed()) rc = cmd_cup_length(opt);
    if (buch->parsed()) rc = cmd_buchstaber(opt);
    if (om->parsed()) rc = cmd_omega(opt);
    if (verify->parsed()) rc = cmd_verify(opt);
    if (tables->parsed()) rc = cmd_reproduce_tables(opt);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
