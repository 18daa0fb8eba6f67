// Copyright 2026 The perc-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "percforge/edge_vectors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "percforge/subgrid.hpp"

namespace percforge {

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

RationalVector concat(const RationalVector& a, std::size_t wa, const RationalVector* b, std::size_t wb, std::size_t total) {
  RationalVector out(total);
  for (std::size_t i = 0; i < wa; ++i) out[i] = a[i];
  if (b)
    for (std::size_t i = 0; i < wb; ++i) out[wa + i] = (*b)[i];
  return out;
}

EdgeVectorFamily zero_family(const GridSpec& spec, int r, const SupportSubspace& x, CoordinateKind kind) {
  EdgeVectorFamily f{spec, r, 0, std::vector<RationalVector>(spec.edge_count()), x, kind};
  return f;
}

EdgeVectorFamily basis_family(const GridSpec& spec, int r, const SupportSubspace& x, CoordinateKind kind) {
  const auto m = static_cast<std::size_t>(spec.edge_count());
  EdgeVectorFamily f{spec, r, m, std::vector<RationalVector>(m, RationalVector(m)), x, kind};
  for (std::size_t e = 0; e < m; ++e) f.vectors[e][e] = 1;
  return f;
}

void expect_shape(const SupportSubspace& x, std::size_t k, std::size_t ell, const char* what) {
  if (x.k != k || x.ell != ell || x.basis.rows() != k - ell)
    throw std::logic_error(std::string("derived subspace ") + what + " has the wrong dimension");
}

void maybe_certify(const SupportSubspace& x, const GridSpec& spec, const FamilyOptions& options, const char* what) {
  if (!options.recertify) return;
  std::optional<std::size_t> sample;
  if (spec.edge_count() > options.full_check_edges) sample = options.sample_checks;
  if (!certify_support(x, sample).ok)
    throw std::logic_error(std::string("derived subspace ") + what + " lost its support property");
}

/// Support vectors of X memoized by support set.
class SupportCache {
 public:
  explicit SupportCache(const SupportSubspace& x) : x_(x) {}
  const RationalVector& get(const std::vector<std::size_t>& t) {
    auto it = cache_.find(t);
    if (it == cache_.end()) it = cache_.emplace(t, find_support_vector(x_, t)).first;
    return it->second;
  }

 private:
  const SupportSubspace& x_;
  std::map<std::vector<std::size_t>, RationalVector> cache_;
};

int coord_to_label(CoordinateKind kind, std::size_t j) {
  return kind == CoordinateKind::kDirections ? odd_label(static_cast<int>(j)) : static_cast<int>(j) + 1;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t m = c.size();
  for (std::size_t i = m; i-- > 0;) {
    if (c[i] < n - m + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

EdgeVectorFamily build_edge_vectors_hypercube(int d, int r, const FamilyOptions& options) {
  if (d < 0 || r < 0 || r > d) throw std::domain_error("build_edge_vectors_hypercube needs d >= r >= 0");
  return build_edge_vectors_hypercube(
      d, r, build_support_subspace(static_cast<std::size_t>(d), static_cast<std::size_t>(r)), options);
}

EdgeVectorFamily build_edge_vectors_hypercube(int d, int r, const SupportSubspace& x, const FamilyOptions& options) {
  if (d < 0 || r < 0 || r > d) throw std::domain_error("build_edge_vectors_hypercube needs d >= r >= 0");
  const GridSpec spec = GridSpec::hypercube(d);
  const auto du = static_cast<std::size_t>(d);
  const auto ru = static_cast<std::size_t>(r);
  expect_shape(x, du, ru, "X");
  if (r == 0) return zero_family(spec, r, x, CoordinateKind::kDirections);
  if (r == d) return basis_family(spec, r, x, CoordinateKind::kDirections);

  const std::size_t split = du - 1;
  const RationalVector z = find_support_vector(x, lex_first_subset(iota_vec(du), ru + 1, split));
  const std::vector<std::size_t> keep = iota_vec(du - 1);
  const SupportSubspace x0 = shear_project(x, z, split, keep);
  const SupportSubspace x1 = project(x, keep);
  expect_shape(x0, du - 1, ru, "X_0");
  expect_shape(x1, du - 1, ru - 1, "X_1");
  maybe_certify(x0, spec, options, "X_0");
  maybe_certify(x1, spec, options, "X_1");

  const EdgeVectorFamily f0 = build_edge_vectors_hypercube(d - 1, r, x0, options);
  const EdgeVectorFamily f1 = build_edge_vectors_hypercube(d - 1, r - 1, x1, options);
  const std::size_t w = f0.w + f1.w;
  EdgeVectorFamily out{spec, r, w, std::vector<RationalVector>(spec.edge_count()), x, CoordinateKind::kDirections};

  const int axis = d - 1;
  const auto low = SubgridEmbedding::layer(spec, axis, 0);
  const auto high = SubgridEmbedding::layer(spec, axis, 1);
  for (EdgeIndex e = 0; e < low.sub().edge_count(); ++e)
    out.vectors[low.edge(e)] = concat(f0.vectors[e], f0.w, nullptr, 0, w);
  const Rational scale = -1 / z[split];
  for (VertexIndex u = 0; u < low.sub().vertex_count(); ++u) {
    const VertexIndex v = low.vertex(u);
    RationalVector f(w);
    for (std::size_t i = 0; i < split; ++i)
      if (sgn(z[i]) != 0) axpy(f, scale * z[i], out.vectors[spec.edge_index(spec.resolve_label(v, odd_label(static_cast<int>(i))))]);
    out.vectors[spec.edge_index(EdgeId{v, axis})] = std::move(f);
  }
  for (EdgeIndex e = 0; e < high.sub().edge_count(); ++e)
    out.vectors[high.edge(e)] = concat(f0.vectors[e], f0.w, &f1.vectors[e], f1.w, w);
  return out;
}

EdgeVectorFamily build_edge_vectors_grid(const std::vector<int>& dims, int r, const FamilyOptions& options) {
  const auto d = dims.size();
  if (r < 0 || static_cast<std::size_t>(r) > 2 * d) throw std::domain_error("build_edge_vectors_grid needs 0 <= r <= 2d");
  return build_edge_vectors_grid(dims, r, build_support_subspace(2 * d, static_cast<std::size_t>(r)), options);
}

EdgeVectorFamily build_edge_vectors_grid(const std::vector<int>& dims, int r, const SupportSubspace& x,
                                         const FamilyOptions& options) {
  const GridSpec spec(dims);
  const int d = spec.d();
  const auto du = static_cast<std::size_t>(d);
  if (r < 0 || r > 2 * d) throw std::domain_error("build_edge_vectors_grid needs 0 <= r <= 2d");
  const auto ru = static_cast<std::size_t>(r);
  expect_shape(x, 2 * du, ru, "X");
  if (r == 0) return zero_family(spec, r, x, CoordinateKind::kLabels);
  if (r == 2 * d) return basis_family(spec, r, x, CoordinateKind::kLabels);
  if (spec.is_hypercube()) {
    if (r > d) return basis_family(spec, r, x, CoordinateKind::kLabels);
    // Only odd labels occur, so the relations only see vectors of X
    // supported on odd coordinates.
    std::vector<std::size_t> odd, even;
    for (std::size_t j = 0; j < du; ++j) {
      odd.push_back(2 * j);
      even.push_back(2 * j + 1);
    }
    const SupportSubspace xo = restrict_zero(x, even, odd);
    expect_shape(xo, du, ru, "X'");
    maybe_certify(xo, spec, options, "X'");
    EdgeVectorFamily f = build_edge_vectors_hypercube(d, r, xo, options);
    f.subspace = x;
    f.coords = CoordinateKind::kLabels;
    return f;
  }

  int axis = d - 1;
  while (spec.side(axis) < 3) --axis;
  const int top = spec.side(axis) - 1;
  const int tau = (top % 2 == 1) ? odd_label(axis) : even_label(axis);
  const int tau_bar = (top % 2 == 1) ? even_label(axis) : odd_label(axis);
  const auto g1 = SubgridEmbedding::shrink(spec, axis);
  const auto g2 = SubgridEmbedding::layer(spec, axis, top);

  const auto tbar = static_cast<std::size_t>(tau_bar - 1);
  const RationalVector z = find_support_vector(x, lex_first_subset(iota_vec(2 * du), ru + 1, tbar));
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < 2 * du; ++j)
    if (label_axis(static_cast<int>(j) + 1) != axis) keep.push_back(j);
  const SupportSubspace x2 = shear_project(x, z, tbar, keep);
  expect_shape(x2, 2 * du - 2, ru - 1, "X_2");
  maybe_certify(x2, spec, options, "X_2");

  const EdgeVectorFamily f1 = build_edge_vectors_grid(g1.sub().dims(), r, x, options);
  const EdgeVectorFamily f2 = build_edge_vectors_grid(g2.sub().dims(), r - 1, x2, options);

  const auto stride = static_cast<VertexIndex>(spec.stride(axis));
  std::vector<VertexIndex> layer;  // top layer of G_1
  std::vector<char> in_y;
  std::size_t y = 0;
  for (VertexIndex u = 0; u < g2.sub().vertex_count(); ++u) {
    const VertexIndex v = g2.vertex(u) - stride;
    layer.push_back(v);
    in_y.push_back(spec.degree(v) - 1 < r ? 1 : 0);
    y += static_cast<std::size_t>(in_y.back());
  }
  const std::size_t w = f1.w + f2.w + y;
  EdgeVectorFamily out{spec, r, w, std::vector<RationalVector>(spec.edge_count()), x, CoordinateKind::kLabels};

  for (EdgeIndex e = 0; e < g1.sub().edge_count(); ++e)
    out.vectors[g1.edge(e)] = concat(f1.vectors[e], f1.w, nullptr, 0, w);

  SupportCache cache(x);
  std::size_t yi = 0;
  const auto t_idx = static_cast<std::size_t>(tau - 1);
  for (std::size_t k = 0; k < layer.size(); ++k) {
    const VertexIndex v = layer[k];
    RationalVector f(w);
    if (in_y[k]) {
      f[f1.w + f2.w + yi++] = 1;
    } else {
      std::vector<std::size_t> pool;
      for (int l : spec.incident_labels(v).labels) pool.push_back(static_cast<std::size_t>(l - 1));
      const RationalVector& zv = cache.get(lex_first_subset(pool, ru + 1, t_idx));
      const Rational scale = -1 / zv[t_idx];
      for (std::size_t j : pool)
        if (j != t_idx && sgn(zv[j]) != 0)
          axpy(f, scale * zv[j], out.vectors[spec.edge_index(spec.resolve_label(v, static_cast<int>(j) + 1))]);
    }
    out.vectors[spec.edge_index(EdgeId{v, axis})] = std::move(f);
  }

  for (EdgeIndex e = 0; e < g2.sub().edge_count(); ++e) {
    const EdgeId parent = g2.edge(g2.sub().edge_at(e));
    const EdgeIndex below = spec.edge_index(EdgeId{parent.lower - stride, parent.axis});
    RationalVector f = out.vectors[below];
    for (std::size_t i = 0; i < f2.w; ++i) f[f1.w + i] = f2.vectors[e][i];
    out.vectors[spec.edge_index(parent)] = std::move(f);
  }
  return out;
}

RationalMatrix family_matrix(const EdgeVectorFamily& family) {
  RationalMatrix m(family.w, family.vectors.size());
  for (std::size_t e = 0; e < family.vectors.size(); ++e)
    for (std::size_t i = 0; i < family.w; ++i) m(i, e) = family.vectors[e][i];
  return m;
}

RelationCheck verify_relations(const EdgeVectorFamily& family) {
  RelationCheck out;
  const GridSpec& spec = family.spec;
  const std::size_t size = static_cast<std::size_t>(family.r) + 1;
  if (family.vectors.size() != spec.edge_count()) return {false, 0, "family does not cover every edge"};
  for (const auto& f : family.vectors)
    if (f.size() != family.w) return {false, 0, "edge vector has the wrong length"};
  SupportCache cache(family.subspace);
  for (VertexIndex v = 0; v < spec.vertex_count(); ++v) {
    std::vector<std::size_t> pool;
    for (int l : spec.incident_labels(v).labels) {
      if (family.coords == CoordinateKind::kDirections) {
        if (!label_is_odd(l)) return {false, out.relations, "direction coordinates on a non-hypercube"};
        pool.push_back(static_cast<std::size_t>(label_axis(l)));
      } else {
        pool.push_back(static_cast<std::size_t>(l - 1));
      }
    }
    if (pool.size() < size) continue;
    std::vector<std::size_t> pick = iota_vec(size);
    do {
      std::vector<std::size_t> t;
      for (std::size_t p : pick) t.push_back(pool[p]);
      const RationalVector& x = cache.get(t);
      RationalVector sum(family.w);
      for (std::size_t j : t) {
        if (sgn(x[j]) == 0) return {false, out.relations, "zero coefficient inside a star"};
        const EdgeId e = spec.resolve_label(v, coord_to_label(family.coords, j));
        axpy(sum, x[j], family.vectors[spec.edge_index(e)]);
      }
      ++out.relations;
      if (!is_zero(sum))
        return {false, out.relations, "star relation fails at vertex " + std::to_string(v)};
    } while (next_combination(pick, pool.size()));
  }
  return out;
}

RankCertificate assemble_lower_bound(const GridSpec& spec, int r, const FamilyOptions& options) {
  const int d = spec.d();
  if (r < 0 || r > 2 * d) throw std::domain_error("assemble_lower_bound needs 0 <= r <= 2d");
  RankCertificate cert;
  if (spec.is_hypercube() && r <= d) {
    cert.family = build_edge_vectors_hypercube(d, r, options);
  } else {
    cert.family = build_edge_vectors_grid(spec.dims(), r, options);
  }
  const RelationCheck rel = verify_relations(cert.family);
  if (!rel.ok) throw std::runtime_error("relation check failed after " + std::to_string(rel.relations) + " relations: " + rel.reason);
  cert.relations_checked = rel.relations;
  const RankResult rk = rank(family_matrix(cert.family));
  if (rk.rank != cert.family.w)
    throw std::runtime_error("family rank " + std::to_string(rk.rank) + " differs from its dimension " + std::to_string(cert.family.w));
  cert.rank = rk.rank;
  cert.pivot_edges.assign(rk.pivot_columns.begin(), rk.pivot_columns.end());
  cert.wsat_lower = static_cast<unsigned long>(cert.rank);
  cert.m_lower = r == 0 ? BigInt(0) : ceil(Rational(cert.wsat_lower, BigInt(r)));
  return cert;
}

RecheckResult recheck_rank_certificate(const RankCertificate& cert) {
  const EdgeVectorFamily& f = cert.family;
  const std::size_t k = f.coords == CoordinateKind::kDirections ? static_cast<std::size_t>(f.spec.d())
                                                                : 2 * static_cast<std::size_t>(f.spec.d());
  if (f.subspace.k != k || f.subspace.ell != static_cast<std::size_t>(f.r)) return {false, "subspace has the wrong shape"};
  const SupportCheck sc = certify_support(f.subspace);
  if (!sc.ok) return {false, "subspace fails the support certification"};
  const RelationCheck rel = verify_relations(f);
  if (!rel.ok) return {false, rel.reason};
  if (cert.pivot_edges.size() != cert.rank) return {false, "pivot edge count differs from the rank"};
  std::vector<std::size_t> cols;
  for (EdgeIndex e : cert.pivot_edges) {
    if (e >= f.spec.edge_count()) return {false, "pivot edge out of range"};
    cols.push_back(static_cast<std::size_t>(e));
  }
  const RationalMatrix m = family_matrix(f);
  if (rank(m.select_columns(cols)).rank != cert.rank) return {false, "pivot edges are dependent"};
  if (rank(m).rank != cert.rank) return {false, "family rank differs from the certificate"};
  if (cert.wsat_lower != static_cast<unsigned long>(cert.rank)) return {false, "wsat bound differs from the rank"};
  const BigInt m_lower = f.r == 0 ? BigInt(0) : ceil(Rational(cert.wsat_lower, BigInt(f.r)));
  if (cert.m_lower != m_lower) return {false, "m bound is not ceil(rank / r)"};
  return {};
}

}  // namespace percforge
