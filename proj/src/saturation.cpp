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

#include "percforge/saturation.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

#include "percforge/subgrid.hpp"
#include "percforge/wsat_numbers.hpp"

namespace percforge {

namespace {

struct Incident {
  int label;
  EdgeIndex edge;
};

/// Edges at v with their labels, ascending by label.
std::vector<Incident> incident_edges(const GridSpec& spec, VertexIndex v) {
  std::vector<Incident> out;
  for (int k = 0; k < spec.d(); ++k) {
    const int c = spec.coord0(v, k);
    const auto stride = static_cast<VertexIndex>(spec.stride(k));
    if (c > 0) {
      const EdgeId e{v - stride, k};
      out.push_back({spec.edge_label(e, v).label, spec.edge_index(e)});
    }
    if (c + 1 < spec.side(k)) {
      const EdgeId e{v, k};
      out.push_back({spec.edge_label(e, v).label, spec.edge_index(e)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Incident& a, const Incident& b) { return a.label < b.label; });
  return out;
}

SaturationCertificate empty_base(const GridSpec& spec, int r) {
  SaturationCertificate cert{spec, r + 1, {}, {}};
  for (EdgeIndex e = 0; e < spec.edge_count(); ++e) {
    if (r == 0) {
      cert.additions.push_back({e, spec.edge_at(e).lower, {}});
    } else {
      cert.base_edges.push_back(e);
    }
  }
  return cert;
}

void append_mapped(SaturationCertificate& out, const SaturationCertificate& sub, const SubgridEmbedding& emb,
                   int extra_label) {
  for (const auto& add : sub.additions) {
    StarAddition mapped{emb.edge(add.edge), emb.vertex(add.center), {}};
    for (int l : add.labels) mapped.labels.push_back(emb.label(l));
    if (extra_label > 0) mapped.labels.push_back(extra_label);
    std::sort(mapped.labels.begin(), mapped.labels.end());
    out.additions.push_back(std::move(mapped));
  }
}

void append_base(std::vector<EdgeIndex>& out, const SaturationCertificate& sub, const SubgridEmbedding& emb) {
  for (EdgeIndex e : sub.base_edges) out.push_back(emb.edge(e));
}

void check_r(int d, int r, int limit) {
  if (r < 0 || r > limit)
    throw std::domain_error("star size out of range for d=" + std::to_string(d) + ", r=" + std::to_string(r));
}

}  // namespace

EdgeSet edge_set_of(const GridSpec& spec, const std::vector<EdgeIndex>& edges) {
  EdgeSet out(static_cast<std::size_t>(spec.edge_count()));
  for (EdgeIndex e : edges) out.set(static_cast<std::size_t>(e));
  return out;
}

VerifyResult verify_certificate(const SaturationCertificate& cert) {
  const GridSpec& spec = cert.spec;
  const EdgeIndex m = spec.edge_count();
  const int r = cert.star_size - 1;
  if (r < 0) return {false, VerifyResult{}.index, "star_size must be at least 1"};
  EdgeSet present(static_cast<std::size_t>(m));
  for (EdgeIndex e : cert.base_edges) {
    if (e >= m) return {false, VerifyResult{}.index, "base edge " + std::to_string(e) + " out of range"};
    if (present.test(e)) return {false, VerifyResult{}.index, "duplicate base edge " + std::to_string(e)};
    present.set(e);
  }
  for (std::size_t k = 0; k < cert.additions.size(); ++k) {
    const StarAddition& add = cert.additions[k];
    auto fail = [&](const std::string& why) { return VerifyResult{false, k, why}; };
    if (add.edge >= m) return fail("edge out of range");
    if (present.test(add.edge)) return fail("edge already present");
    const EdgeId e = spec.edge_at(add.edge);
    if (add.center != e.lower && add.center != spec.upper(e)) return fail("center is not an endpoint of the edge");
    if (static_cast<int>(add.labels.size()) != r) return fail("star needs exactly " + std::to_string(r) + " other edges");
    const int own = spec.edge_label(e, add.center).label;
    for (std::size_t j = 0; j < add.labels.size(); ++j) {
      const int l = add.labels[j];
      if (l == own) return fail("witness repeats the added edge");
      for (std::size_t i = 0; i < j; ++i)
        if (add.labels[i] == l) return fail("repeated witness label");
      const auto w = spec.try_resolve_label(add.center, l);
      if (!w) return fail("label " + std::to_string(l) + " does not exist at the center");
      if (!present.test(spec.edge_index(*w))) return fail("witness edge with label " + std::to_string(l) + " is missing");
    }
    present.set(add.edge);
  }
  if (!present.all()) return {false, cert.additions.size(), "base and additions do not cover every edge"};
  return {};
}

SaturationCertificate build_wsat_hypercube(int d, int r) {
  if (d < 0 || r < 0 || r > d) throw std::domain_error("build_wsat_hypercube needs d >= r >= 0");
  const GridSpec spec = GridSpec::hypercube(d);
  if (r == 0 || r == d) return empty_base(spec, r);

  const int axis = d - 1;
  const auto low = SubgridEmbedding::layer(spec, axis, 0);
  const auto high = SubgridEmbedding::layer(spec, axis, 1);
  const SaturationCertificate c0 = build_wsat_hypercube(d - 1, r);
  const SaturationCertificate c1 = build_wsat_hypercube(d - 1, r - 1);

  SaturationCertificate cert{spec, r + 1, {}, {}};
  append_base(cert.base_edges, c0, low);
  append_base(cert.base_edges, c1, high);
  std::sort(cert.base_edges.begin(), cert.base_edges.end());

  append_mapped(cert, c0, low, 0);
  std::vector<int> star;
  for (int k = 0; k < r; ++k) star.push_back(odd_label(k));
  for (VertexIndex u = 0; u < low.sub().vertex_count(); ++u) {
    const VertexIndex v = low.vertex(u);
    cert.additions.push_back({spec.edge_index(EdgeId{v, axis}), v, star});
  }
  append_mapped(cert, c1, high, odd_label(axis));
  return cert;
}

SaturationCertificate build_wsat_grid(const std::vector<int>& dims, int r) {
  const GridSpec spec(dims);
  const int d = spec.d();
  check_r(d, r, 2 * d);
  if (r == 0 || r == 2 * d) return empty_base(spec, r);
  if (spec.is_hypercube()) {
    if (r > d) return empty_base(spec, r);
    return build_wsat_hypercube(d, r);
  }

  int axis = d - 1;
  while (spec.side(axis) < 3) --axis;
  const int top = spec.side(axis) - 1;
  const auto g1 = SubgridEmbedding::shrink(spec, axis);
  const auto g2 = SubgridEmbedding::layer(spec, axis, top);
  const SaturationCertificate c1 = build_wsat_grid(g1.sub().dims(), r);
  const SaturationCertificate c2 = build_wsat_grid(g2.sub().dims(), r - 1);
  // The cross edge between G_1 and G_2 has 1-based lower coordinate `top`.
  const int tau = (top % 2 == 1) ? odd_label(axis) : even_label(axis);

  SaturationCertificate cert{spec, r + 1, {}, {}};
  append_base(cert.base_edges, c1, g1);
  append_base(cert.base_edges, c2, g2);

  std::vector<StarAddition> cross;
  std::size_t deficient = 0;
  for (VertexIndex w = 0; w < g2.sub().vertex_count(); ++w) {
    const VertexIndex v = g2.vertex(w) - static_cast<VertexIndex>(spec.stride(axis));
    const EdgeIndex e = spec.edge_index(EdgeId{v, axis});
    // d_{G_1}(v): the parent degree minus the cross edge.
    const int deg1 = spec.degree(v) - 1;
    if (deg1 < r) {
      cert.base_edges.push_back(e);
      ++deficient;
    } else {
      std::vector<int> labels;
      for (const auto& inc : incident_edges(spec, v)) {
        if (inc.label == tau) continue;
        if (static_cast<int>(labels.size()) == r) break;
        labels.push_back(inc.label);
      }
      cross.push_back({e, v, std::move(labels)});
    }
  }
  if (BigInt(static_cast<unsigned long>(deficient)) != deficient_layer_count(dims, axis, r))
    throw std::logic_error("deficient layer count mismatch");
  std::sort(cert.base_edges.begin(), cert.base_edges.end());

  append_mapped(cert, c1, g1, 0);
  cert.additions.insert(cert.additions.end(), cross.begin(), cross.end());
  append_mapped(cert, c2, g2, tau);
  return cert;
}

GreedyResult greedy_saturate(const GridSpec& spec, const EdgeSet& base, int star_size) {
  if (star_size < 1) throw std::invalid_argument("star_size must be at least 1");
  const int r = star_size - 1;
  const auto m = static_cast<std::size_t>(spec.edge_count());
  if (base.size() != m) throw std::invalid_argument("edge set size does not match the grid");

  GreedyResult result;
  result.certificate = SaturationCertificate{spec, star_size, {}, {}};
  EdgeSet present = base;
  for (std::size_t e : base.indices()) result.certificate.base_edges.push_back(e);

  std::vector<int> deg(spec.vertex_count(), 0);
  for (std::size_t e : base.indices()) {
    const EdgeId id = spec.edge_at(e);
    ++deg[id.lower];
    ++deg[spec.upper(id)];
  }
  std::priority_queue<EdgeIndex, std::vector<EdgeIndex>, std::greater<>> heap;
  std::vector<char> queued(m, 0);
  auto offer_at = [&](VertexIndex v) {
    for (const auto& inc : incident_edges(spec, v))
      if (!present.test(inc.edge) && !queued[inc.edge]) {
        queued[inc.edge] = 1;
        heap.push(inc.edge);
      }
  };
  for (VertexIndex v = 0; v < spec.vertex_count(); ++v)
    if (deg[v] >= r) offer_at(v);

  while (!heap.empty()) {
    const EdgeIndex e = heap.top();
    heap.pop();
    const EdgeId id = spec.edge_at(e);
    const VertexIndex hi = spec.upper(id);
    const VertexIndex center = deg[id.lower] >= r ? id.lower : hi;
    StarAddition add{e, center, {}};
    for (const auto& inc : incident_edges(spec, center)) {
      if (static_cast<int>(add.labels.size()) == r) break;
      if (present.test(inc.edge)) add.labels.push_back(inc.label);
    }
    result.certificate.additions.push_back(std::move(add));
    present.set(e);
    if (++deg[id.lower] == r) offer_at(id.lower);
    if (++deg[hi] == r) offer_at(hi);
  }
  result.success = present.all();
  if (!result.success)
    for (std::size_t e = 0; e < m; ++e)
      if (!present.test(e)) result.frontier.push_back(e);
  return result;
}

SmallGraph SmallGraph::from_grid(const GridSpec& spec) {
  SmallGraph g;
  g.vertices = spec.vertex_count();
  for (EdgeIndex e = 0; e < spec.edge_count(); ++e) {
    const EdgeId id = spec.edge_at(e);
    g.edges.emplace_back(id.lower, spec.upper(id));
  }
  return g;
}

bool small_weakly_saturated(const SmallGraph& graph, std::uint32_t present, int star_size) {
  const int r = star_size - 1;
  const std::size_t m = graph.edges.size();
  const std::uint32_t all = m == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1);
  std::vector<int> deg(graph.vertices, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (present >> i & 1U) {
      ++deg[graph.edges[i].first];
      ++deg[graph.edges[i].second];
    }
  bool grew = true;
  while (grew && present != all) {
    grew = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (present >> i & 1U) continue;
      const auto [u, v] = graph.edges[i];
      if (deg[u] >= r || deg[v] >= r) {
        present |= std::uint32_t{1} << i;
        ++deg[u];
        ++deg[v];
        grew = true;
      }
    }
  }
  return present == all;
}

WsatOracleResult brute_force_wsat(const SmallGraph& graph, int star_size) {
  const std::size_t m = graph.edges.size();
  if (m > kOracleEdgeLimit)
    throw std::length_error("brute-force oracle is limited to " + std::to_string(kOracleEdgeLimit) + " edges");
  if (star_size < 1) throw std::invalid_argument("star_size must be at least 1");
  WsatOracleResult out{graph, star_size - 1, 0, {}};
  for (std::size_t k = 0; k <= m; ++k) {
    if (k == 0) {
      if (small_weakly_saturated(graph, 0, star_size)) return out;
      continue;
    }
    // Gosper's hack over k-subsets of m bits, ascending numeric order.
    std::uint32_t s = (std::uint32_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (s < limit) {
      if (small_weakly_saturated(graph, s, star_size)) {
        out.min_edges = k;
        for (std::size_t i = 0; i < m; ++i)
          if (s >> i & 1U) out.witness.push_back(i);
        return out;
      }
      const std::uint32_t c = s & (~s + 1);
      const std::uint64_t rr = static_cast<std::uint64_t>(s) + c;
      if (rr >= limit) break;
      s = static_cast<std::uint32_t>((((rr ^ s) >> 2) / c) | rr);
    }
  }
  out.min_edges = m;
  return out;
}

VertexSet derived_initial_set(const GridSpec& spec, const EdgeSet& base, int r) {
  std::vector<int> deg(spec.vertex_count(), 0);
  for (std::size_t e : base.indices()) {
    const EdgeId id = spec.edge_at(e);
    ++deg[id.lower];
    ++deg[spec.upper(id)];
  }
  VertexSet out(spec.vertex_count());
  for (VertexIndex v = 0; v < spec.vertex_count(); ++v)
    if (deg[v] >= std::min(r, spec.degree(v))) out.set(v);
  return out;
}

}  // namespace percforge
