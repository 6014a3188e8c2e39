#include "ucx/products.hpp"

#include <algorithm>
#include <stdexcept>

#include "ucx/cohomology.hpp"
#include "ucx/errors.hpp"

namespace ucx {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate_parts(int p, const std::vector<std::vector<FpVec>>& parts) {
  if (!is_prime(p))
    throw PreconditionError("join_condition: p must be a prime");
  if (parts.empty()) throw PreconditionError("join_condition: no parts given");
  size_t n = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw PreconditionError("join_condition: empty part");
    for (const auto& v : part) {
      if (n == 0) n = v.size();
      if (v.empty() || v.size() != n)
        throw PreconditionError("join_condition: mismatched label lengths");
      for (uint8_t c : v)
        if (c >= p)
          throw PreconditionError("join_condition: label entry out of range");
    }
  }
}

std::vector<FpVec> labels_of(const UniversalComplex& u, const VertexSet& s) {
  std::vector<FpVec> out;
  out.reserve(s.count());
  s.for_each([&](int v) { out.push_back(u.labels[v]); });
  return out;
}

/** Vertex of u carrying the given label; the labels are sorted by code. */
int vertex_by_label(const UniversalComplex& u, const FpVec& v) {
  uint64_t code = code_of_vec(v, u.p);
  auto it = std::lower_bound(
      u.labels.begin(), u.labels.end(), code,
      [&](const FpVec& a, uint64_t c) { return code_of_vec(a, u.p) < c; });
  if (it == u.labels.end() || code_of_vec(*it, u.p) != code)
    throw std::logic_error("vertex_by_label: label not present");
  return static_cast<int>(it - u.labels.begin());
}

FpVec basis_vec(int n, int j, uint8_t value = 1) {
  FpVec v(n, 0);
  v[j] = value;
  return v;
}

/** The always-available part of the lower bound: the coordinate family.
 * X with p > 2 packs n antipodal pairs; K (and X over F_2, which is the
 * same complex) packs a dependent line triple per coordinate pair. */
JoinWitness coordinate_witness(const UniversalComplex& u) {
  JoinWitness w;
  const int n = u.n;
  if (u.family == Family::X && u.p > 2) {
    for (int j = 0; j < n; ++j) {
      VertexSet part;
      part.set(vertex_by_label(u, basis_vec(n, j, 1)));
      part.set(vertex_by_label(u, basis_vec(n, j, 2)));
      w.parts.push_back(part);
      w.sphere_dims.push_back(0);
    }
    return w;
  }
  for (int t = 0; 2 * t + 1 < n; ++t) {
    FpVec sum = basis_vec(n, 2 * t, 1);
    sum[2 * t + 1] = 1;
    VertexSet part;
    part.set(vertex_by_label(u, basis_vec(n, 2 * t, 1)));
    part.set(vertex_by_label(u, basis_vec(n, 2 * t + 1, 1)));
    part.set(vertex_by_label(u, sum));
    w.parts.push_back(part);
    w.sphere_dims.push_back(1);
  }
  return w;
}

/** True when adding cand keeps the span sums additive. */
bool extends_additively(const UniversalComplex& u,
                        const std::vector<VertexSet>& parts,
                        const VertexSet& cand) {
  std::vector<std::vector<FpVec>> lists;
  lists.reserve(parts.size() + 1);
  for (const auto& part : parts) lists.push_back(labels_of(u, part));
  lists.push_back(labels_of(u, cand));
  return join_condition(u.p, lists);
}

}  // namespace

bool join_condition(int p, const std::vector<std::vector<FpVec>>& parts) {
  validate_parts(p, parts);
  FpMat all;
  int dim_sum = 0;
  for (const auto& part : parts) {
    dim_sum += rank_fp(part, p);
    all.insert(all.end(), part.begin(), part.end());
  }
  return rank_fp(std::move(all), p) == dim_sum;
}

int cup_length_upper(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  if (m == 0) return 0;
  if (k.vertices() != VertexSet::full(m))
    throw PreconditionError("cup_length_upper: ghost vertices unsupported");
  const int dim = k.dim();
  // smallest nonsimplex of cardinality 2: some vertex misses a neighbor
  for (int v = 0; v < m; ++v) {
    VertexSet seen = k.adjacency(v);
    seen.set(v);
    if (seen != VertexSet::full(m)) return dim + 1;
  }
  auto levels = k.faces_by_card();
  for (int c = 3; c <= dim + 2; ++c) {
    for (const auto& face : levels[c - 1]) {
      for (int v = face.highest() + 1; v < m; ++v) {
        VertexSet cand = face;
        cand.set(v);
        if (!k.is_simplex(cand)) return (dim + 1) / (c - 1);
      }
    }
  }
  return 0;
}

bool validate_join_witness(const UniversalComplex& u, const JoinWitness& w) {
  if (w.parts.size() != w.sphere_dims.size()) return false;
  const int m = u.complex.vertex_count();
  VertexSet all;
  for (const auto& part : w.parts) {
    if (part.empty() || part.highest() >= m) return false;
    if (all.intersects(part)) return false;
    all |= part;
  }
  if (w.parts.empty()) return true;
  if (all.count() > 24)
    throw ResourceError("validate_join_witness: witness too large");

  int degree_sum = 0;
  for (size_t t = 0; t < w.parts.size(); ++t) {
    auto sub = u.complex.full_subcomplex(w.parts[t]);
    auto coh = reduced_cohomology(sub.complex, Coefficients::Rationals);
    for (int d = -1; d <= sub.complex.dim(); ++d) {
      int want = (d == w.sphere_dims[t]) ? 1 : 0;
      if (coh.rank(d) != want) return false;
    }
    degree_sum += w.sphere_dims[t];
  }

  std::vector<std::vector<FpVec>> lists;
  lists.reserve(w.parts.size());
  for (const auto& part : w.parts) lists.push_back(labels_of(u, part));
  if (!join_condition(u.p, lists)) return false;

  auto sub = u.complex.full_subcomplex(all);
  auto coh = reduced_cohomology(sub.complex, Coefficients::Rationals);
  int top = degree_sum + static_cast<int>(w.parts.size()) - 1;
  return coh.rank(top) >= 1;
}

std::pair<int, JoinWitness> cup_length_lower(const UniversalComplex& u) {
  JoinWitness w = coordinate_witness(u);
  if (!validate_join_witness(u, w)) w = JoinWitness{};

  // pack further small spheres while the spans stay independent
  const int upper = cup_length_upper(u.complex);
  const int m = u.complex.vertex_count();
  if (static_cast<int>(w.parts.size()) < upper && m <= 40) {
    JoinWitness extended = w;
    VertexSet used;
    for (const auto& part : extended.parts) used |= part;
    for (int j = 1; j <= 3; ++j) {
      for (const auto& cand : u.complex.minimal_nonsimplices(j)) {
        if (used.intersects(cand)) continue;
        if (!extends_additively(u, extended.parts, cand)) continue;
        extended.parts.push_back(cand);
        extended.sphere_dims.push_back(j - 1);
        used |= cand;
      }
    }
    if (extended.parts.size() > w.parts.size() &&
        validate_join_witness(u, extended))
      w = extended;
  }
  return {static_cast<int>(w.parts.size()), w};
}

CupLengthBounds cup_length(const UniversalComplex& u) {
  CupLengthBounds out;
  auto [lower, witness] = cup_length_lower(u);
  out.lower = lower;
  out.witness = std::move(witness);
  out.upper = cup_length_upper(u.complex);
  if (out.lower > out.upper)
    throw std::logic_error("cup_length: bounds crossed");
  const int m = u.complex.vertex_count();
  out.ls_lower = out.lower;
  out.ls_upper = (m + u.complex.dim() + 1) / 2;
  out.note = out.lower == out.upper ? "bounds agree; the value is exact"
                                    : "bounds differ; lower is certified";
  if (u.family == Family::X && u.p == 2)
    out.note += "; X over F_2 equals K, the line-triple family applies";
  return out;
}

}  // namespace ucx
