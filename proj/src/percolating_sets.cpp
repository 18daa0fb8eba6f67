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

#include "percforge/percolating_sets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string_view>

#include "percforge/bootstrap.hpp"

namespace percforge {

namespace {

// Each entry lists subsets of [d] by concatenated elements ("134" = {1,3,4}).
const std::array<std::vector<std::string_view>, 9> kR3Table = {{
    {},
    {},
    {},
    {"1", "2", "3", "123"},
    {"1", "2", "123", "134", "4", "234"},
    {"1", "2", "123", "4", "234", "135", "245", "12345"},
    {"1", "2", "123", "4", "234", "12345", "346", "12356", "456", "23456"},
    {"1", "2", "123", "4", "234", "12345", "12356", "456", "23456", "13457", "24567", "12367", "1234567"},
    {"1", "2", "123", "4", "234", "12345", "12356", "456", "23456", "12367", "1234567", "34568", "1234578", "34678",
     "25678", "2345678"},
}};

VertexIndex decode_subset(std::string_view digits, int d) {
  VertexIndex v = 0;
  for (char c : digits) {
    const int i = c - '0';
    if (i < 1 || i > d) throw std::logic_error("subset element out of range");
    v |= VertexIndex{1} << (d - i);
  }
  return v;
}

PercolatingWitness finish(int d, int r, std::vector<VertexIndex> vertices, std::string provenance) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::logic_error(provenance + " construction produced a repeated vertex");
  PercolatingWitness w{GridSpec::hypercube(d), r, std::move(vertices), 0, std::move(provenance)};
  w.claimed_size = w.vertices.size();
  std::string reason;
  if (!check_witness(w, &reason))
    throw std::logic_error(w.provenance + " set for Q" + std::to_string(d) + ", r=" + std::to_string(r) + " failed: " + reason);
  return w;
}

/// Vertices with first k coordinates `prefix` and the rest drawn from `block`.
void place(std::vector<VertexIndex>& out, int d, int k, VertexIndex prefix, const std::vector<VertexIndex>& block) {
  for (VertexIndex s : block) out.push_back((prefix << (d - k)) | s);
}

}  // namespace

VertexSet PercolatingWitness::set() const { return make_vertex_set(spec, vertices); }

std::size_t r3_target_size(int d) { return static_cast<std::size_t>((d * (d + 3) + 5) / 6 + 1); }

bool check_witness(const PercolatingWitness& w, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (w.vertices.size() != w.claimed_size) return fail("set size differs from the claimed size");
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (!w.spec.valid_vertex(w.vertices[i])) return fail("vertex " + std::to_string(w.vertices[i]) + " is not in the grid");
    if (i > 0 && w.vertices[i - 1] >= w.vertices[i]) return fail("vertices must be strictly ascending");
  }
  if (!percolates(w.spec, make_vertex_set(w.spec, w.vertices), w.r)) return fail("the set does not percolate");
  return true;
}

PercolatingWitness explicit_r3_set(int d) {
  if (d < 3 || d > 8) throw std::domain_error("explicit r=3 sets exist for 3 <= d <= 8");
  std::vector<VertexIndex> vs;
  for (auto s : kR3Table[static_cast<std::size_t>(d)]) vs.push_back(decode_subset(s, d));
  return finish(d, 3, std::move(vs), "explicit-table");
}

PercolatingWitness base_set(int d, int t) {
  if (d < 0 || t < 1) throw std::domain_error("base_set needs d >= 0 and t >= 1");
  const VertexIndex n = VertexIndex{1} << d;
  std::vector<VertexIndex> vs;
  if (t > d) {
    for (VertexIndex v = 0; v < n; ++v) vs.push_back(v);
    return finish(d, t, std::move(vs), "base-all");
  }
  if (t == 1) return finish(d, t, {0}, "base-r1");
  if (t == 2) {
    vs.push_back(0);
    // Pair coordinates (1,2), (3,4), ...; an odd d reuses coordinate d-1.
    for (int i = 1; i + 1 <= d; i += 2) vs.push_back(VertexIndex{3} << (d - i - 1));
    if (d % 2 == 1 && d >= 3) vs.push_back((VertexIndex{1} << 1) | VertexIndex{1});
    return finish(d, t, std::move(vs), "base-r2");
  }
  if (t == d) {
    for (VertexIndex v = 0; v < n; ++v)
      if (std::popcount(v) % 2 == 0) vs.push_back(v);
    return finish(d, t, std::move(vs), "base-diag");
  }
  throw std::domain_error("no base construction for t=" + std::to_string(t) + " on Q" + std::to_string(d));
}

PercolatingWitness best_set(int d, int t) {
  if (t > d || t <= 2 || t == d) return base_set(d, t);
  if (t == 3) return build_r3(d);
  return build_recursive(d, t);
}

RecursiveSizes recursive_size(int d, int r) {
  if (r < 1 || d < r) throw std::domain_error("the level recursion needs d >= r >= 1");
  RecursiveSizes out;
  out.block_sizes.assign(static_cast<std::size_t>(r) + 1, 0);
  for (int t = 1; t <= r; ++t) out.block_sizes[static_cast<std::size_t>(t)] = best_set(d - r, t).vertices.size();
  out.total = out.block_sizes[static_cast<std::size_t>(r)];
  if (r >= 2) out.total += static_cast<std::size_t>(r - 1) * out.block_sizes[static_cast<std::size_t>(r - 1)];
  for (int j = 1; j <= (r + 1) / 2 - 1; ++j) {
    std::size_t c = 1;  // C(r, 2j+1)
    for (int i = 0; i < 2 * j + 1; ++i) c = c * static_cast<std::size_t>(r - i) / static_cast<std::size_t>(i + 1);
    out.total += c * out.block_sizes[static_cast<std::size_t>(r - 2 * j)];
  }
  return out;
}

PercolatingWitness build_recursive(int d, int r) {
  if (r < 1 || d < r) throw std::domain_error("the level recursion needs d >= r >= 1");
  const int rest = d - r;
  std::vector<std::vector<VertexIndex>> blocks(static_cast<std::size_t>(r) + 1);
  for (int t = 1; t <= r; ++t) blocks[static_cast<std::size_t>(t)] = best_set(rest, t).vertices;
  const VertexIndex first = VertexIndex{1} << (r - 1);  // (1,0,...,0)
  std::vector<VertexIndex> vs;
  for (VertexIndex p = 0; p < (VertexIndex{1} << r); ++p) {
    const int level = std::popcount(p);
    if (level == 1) {
      place(vs, d, r, p, blocks[static_cast<std::size_t>(p == first ? r : r - 1)]);
    } else if (level % 2 == 1) {
      place(vs, d, r, p, blocks[static_cast<std::size_t>(r - (level - 1))]);
    }
  }
  return finish(d, r, std::move(vs), "level-recursive");
}

PercolatingWitness build_r3(int d) {
  if (d < 3) throw std::domain_error("build_r3 needs d >= 3");
  if (d <= 8) return explicit_r3_set(d);
  if (d % 2 == 1) return build_recursive(d, 3);
  const int rest = d - 6;
  const auto b3 = best_set(rest, 3).vertices;
  const auto b2 = best_set(rest, 2).vertices;
  const auto b1 = best_set(rest, 1).vertices;
  const VertexIndex special = decode_subset("346", 6);
  std::vector<VertexIndex> vs;
  for (auto s : kR3Table[6]) {
    const VertexIndex p = decode_subset(s, 6);
    const bool x5 = (p >> 1) & 1U;
    const bool x6 = p & 1U;
    if (p == special) {
      place(vs, d, 6, p, b3);
    } else if (x5) {
      place(vs, d, 6, p, b2);
    } else if (!x6) {
      place(vs, d, 6, p, b1);
    }
  }
  return finish(d, 3, std::move(vs), "even-d-step");
}

}  // namespace percforge
