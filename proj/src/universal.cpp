#include "ucx/universal.hpp"

#include <algorithm>
#include <unordered_map>

#include "ucx/bigint.hpp"
#include "ucx/errors.hpp"

namespace ucx {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate_family_args(int p, int n) {
  if (!is_prime(p) || p > 251)
    throw PreconditionError("universal complex: p must be a small prime");
  if (n < 1) throw PreconditionError("universal complex: n must be >= 1");
}

/** All facets: independent n-subsets of the given labels, by ascending
 * vertex DFS with incremental elimination. */
std::vector<VertexSet> independent_facets(const std::vector<FpVec>& labels,
                                          int p, int n) {
  const int m = static_cast<int>(labels.size());
  std::vector<VertexSet> facets;
  FpEliminator elim(n, p);
  VertexSet cur;
  std::function<void(int)> rec = [&](int start) {
    int depth = elim.rank();
    if (depth == n) {
      facets.push_back(cur);
      return;
    }
    // not enough vertices left to finish a basis
    for (int v = start; v <= m - (n - depth); ++v) {
      if (!elim.push(labels[v])) continue;
      cur.set(v);
      rec(v + 1);
      cur.reset(v);
      elim.pop();
    }
  };
  rec(0);
  return facets;
}

UniversalComplex build_family(Family fam, int p, int n, const BuildCaps& caps) {
  validate_family_args(p, n);
  mpz_class m_mpz =
      fam == Family::X ? vertex_count_X(p, n) : vertex_count_K(p, n);
  if (m_mpz > caps.max_vertices)
    throw ResourceError("universal complex: vertex cap exceeded");
  if (m_mpz > VertexSet::kMaxVertices)
    throw ResourceError(
        "universal complex: ground set exceeds the 128-vertex representation");
  FVector fv = f_vector_closed(fam, p, n);
  if (fv.counts[n] > caps.max_facets)
    throw ResourceError("universal complex: facet cap exceeded");

  const int m = static_cast<int>(m_mpz.get_ui());
  UniversalComplex u;
  u.family = fam;
  u.p = p;
  u.n = n;
  if (fam == Family::X) {
    u.labels.reserve(m);
    for (int v = 0; v < m; ++v) u.labels.push_back(vec_of_code(v + 1, n, p));
  } else {
    u.labels = enumerate_lines(n, p);
  }
  u.complex =
      SimplicialComplex::from_facets(m, independent_facets(u.labels, p, n));
  return u;
}

}  // namespace

mpz_class vertex_count_X(int p, int n) {
  validate_family_args(p, n);
  return pow_mpz(p, n) - 1;
}

mpz_class vertex_count_K(int p, int n) {
  validate_family_args(p, n);
  return exact_div(pow_mpz(p, n) - 1, p - 1);
}

UniversalComplex build_X(int p, int n, const BuildCaps& caps) {
  return build_family(Family::X, p, n, caps);
}

UniversalComplex build_K(int p, int n, const BuildCaps& caps) {
  return build_family(Family::K, p, n, caps);
}

FVector f_vector_closed(Family fam, int p, int n) {
  validate_family_args(p, n);
  FVector fv;
  fv.counts.assign(n + 1, 0);
  fv.counts[0] = 1;
  const mpz_class pn = pow_mpz(p, n);
  mpz_class prod = 1;
  for (int d = 0; d < n; ++d) {
    prod *= pn - pow_mpz(p, d);
    mpz_class denom = factorial(d + 1);
    if (fam == Family::K) denom *= pow_mpz(p - 1, d + 1);
    fv.counts[d + 1] = exact_div(prod, denom);
  }
  return fv;
}

FVector link_f_vector_closed(Family fam, int p, int n, int face_dim) {
  validate_family_args(p, n);
  if (face_dim < -1 || face_dim > n - 1)
    throw PreconditionError("link_f_vector_closed: face_dim out of range");
  FVector fv;
  fv.counts.assign(n - face_dim, 0);
  fv.counts[0] = 1;
  const mpz_class pn = pow_mpz(p, n);
  mpz_class prod = 1;
  for (int i = 0; i <= n - 2 - face_dim; ++i) {
    prod *= pn - pow_mpz(p, face_dim + 1 + i);
    mpz_class denom = factorial(i + 1);
    if (fam == Family::K) denom *= pow_mpz(p - 1, i + 1);
    fv.counts[i + 1] = exact_div(prod, denom);
  }
  return fv;
}

WedgeCount wedge_count(Family fam, int p, int n) {
  validate_family_args(p, n);
  if (fam == Family::K && n == 1) return {0, true};
  FVector fv = f_vector_closed(fam, p, n);
  mpz_class value = (n % 2 == 0) ? 1 : -1;
  for (int i = 0; i < n; ++i) {
    if ((n - 1 - i) % 2 == 0)
      value += fv.counts[i + 1];
    else
      value -= fv.counts[i + 1];
  }
  return {value, false};
}

mpz_class count_minimal_nonsimplices_closed(int p, int n, int j) {
  validate_family_args(p, n);
  if (n < 2 || j < 1 || j > n)
    throw PreconditionError(
        "count_minimal_nonsimplices_closed: need n >= 2 and 1 <= j <= n");
  const mpz_class pn = pow_mpz(p, n);
  if (j == 1) return exact_div((pn - 1) * (p - 2), 2);
  mpz_class prod = 1;
  for (int t = 0; t < j; ++t) prod *= pn - pow_mpz(p, t);
  return exact_div(prod * pow_mpz(p - 1, j), factorial(j + 1));
}

mpz_class count_minimal_nonsimplices_enumerated(const UniversalComplex& u,
                                                int j) {
  if (j < 1) throw PreconditionError(
      "count_minimal_nonsimplices_enumerated: j must be >= 1");
  const int p = u.p;
  const int n = u.n;
  if (j > n) return 0;

  // vertex lookup by label code
  std::unordered_map<uint64_t, int> code_index;
  for (size_t v = 0; v < u.labels.size(); ++v)
    code_index.emplace(code_of_vec(u.labels[v], p), static_cast<int>(v));

  mpz_class generated = 0;
  u.complex.for_each_face([&](const VertexSet& sigma, int d) {
    if (d != j - 1) return;
    std::vector<const FpVec*> vecs;
    vecs.reserve(j);
    sigma.for_each([&](int v) { vecs.push_back(&u.labels[v]); });

    // odometer over coefficient tuples in {1, ..., p-1}^j
    std::vector<int> a(j, 1);
    while (true) {
      FpVec w(n, 0);
      for (int t = 0; t < j; ++t)
        for (int c = 0; c < n; ++c)
          w[c] = static_cast<uint8_t>((w[c] + a[t] * (*vecs[t])[c]) % p);
      const FpVec key = u.family == Family::K ? canonical_line(w, p) : w;
      int v = code_index.at(code_of_vec(key, p));
      if (!sigma.test(v)) generated += 1;

      int t = j - 1;
      while (t >= 0 && a[t] == p - 1) a[t--] = 1;
      if (t < 0) break;
      ++a[t];
    }
  });

  mpz_class multiplicity = j + 1;
  if (u.family == Family::K) multiplicity *= p - 1;
  return exact_div(generated, multiplicity);
}

int rank_of(const UniversalComplex& u, const VertexSet& s) {
  FpEliminator elim(u.n, u.p);
  s.for_each([&](int v) { elim.push(u.labels[v]); });
  return elim.rank();
}

int line_of(const UniversalComplex& x, const UniversalComplex& k, int v) {
  FpVec rep = canonical_line(x.labels[v], x.p);
  uint64_t code = code_of_vec(rep, x.p);
  // K labels are sorted by code
  int lo = 0, hi = static_cast<int>(k.labels.size()) - 1;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (code_of_vec(k.labels[mid], k.p) < code)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

int representative_of(const UniversalComplex& x, const UniversalComplex& k,
                      int l) {
  if (x.p != k.p || x.n != k.n)
    throw PreconditionError("representative_of: mismatched families");
  return static_cast<int>(code_of_vec(k.labels[l], k.p)) - 1;
}

bool check_structure_maps(const UniversalComplex& x,
                          const UniversalComplex& k) {
  if (x.family != Family::X || k.family != Family::K) return false;
  if (x.p != k.p || x.n != k.n) return false;

  const int mk = static_cast<int>(k.labels.size());
  std::vector<bool> hit(static_cast<size_t>(mk), false);
  for (int l = 0; l < mk; ++l) {
    int v = representative_of(x, k, l);
    if (v < 0 || v >= static_cast<int>(x.labels.size())) return false;
    if (x.labels[v] != k.labels[l]) return false;  // representative is literal
    int back = line_of(x, k, v);
    if (back != l) return false;  // line-of-representative is the identity
    if (hit[l]) return false;
    hit[l] = true;
  }

  // representative map preserves simplices
  for (const auto& f : k.complex.facets()) {
    VertexSet image;
    f.for_each([&](int l) { image.set(representative_of(x, k, l)); });
    if (image.count() != f.count()) return false;
    if (!x.complex.is_simplex(image)) return false;
  }
  // line map preserves simplices
  for (const auto& f : x.complex.facets()) {
    VertexSet image;
    f.for_each([&](int v) { image.set(line_of(x, k, v)); });
    if (image.count() != f.count()) return false;
    if (!k.complex.is_simplex(image)) return false;
  }
  return true;
}

}  // namespace ucx
