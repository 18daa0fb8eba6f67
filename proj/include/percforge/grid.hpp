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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "percforge/bitset.hpp"

namespace percforge {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint64_t;

/// Largest supported vertex count of a grid.
inline constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 28;

/// An edge in canonical form: the endpoint with the smaller coordinate on
/// `axis` (0-based), plus the axis.
struct EdgeId {
  VertexIndex lower = 0;
  int axis = 0;
  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

/// The label e(v, j). Labels are 1-based in [2d]: an edge on axis i (0-based)
/// is labelled 2i+1 when the smaller endpoint coordinate (1-based) is odd and
/// 2i+2 otherwise. Every hypercube edge is odd.
struct EdgeLabel {
  VertexIndex vertex = 0;
  int label = 0;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

struct IncidentLabelSet {
  VertexIndex vertex = 0;
  std::vector<int> labels;  // ascending
};

inline int label_axis(int label) { return (label - 1) / 2; }
inline bool label_is_odd(int label) { return label % 2 == 1; }
inline int odd_label(int axis) { return 2 * axis + 1; }
inline int even_label(int axis) { return 2 * axis + 2; }

/// The grid graph [a_1] x ... x [a_d]. Vertices are indexed row-major with
/// the last axis fastest; coordinates are 1-based at the public surface.
/// Edges are enumerated axis-major, then by lower-endpoint index.
class GridSpec {
 public:
  GridSpec() = default;
  explicit GridSpec(std::vector<int> dims);

  static GridSpec hypercube(int d) { return GridSpec(std::vector<int>(static_cast<std::size_t>(d), 2)); }
  /// Accepts "a1xa2x...xad" or the shorthand "Qd".
  static GridSpec parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& dims() const { return dims_; }
  int d() const { return static_cast<int>(dims_.size()); }
  int side(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
  std::uint64_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(vertex_count_); }
  EdgeIndex edge_count() const { return edge_offsets_.back(); }
  bool is_hypercube() const;

  bool valid_vertex(std::uint64_t v) const { return v < vertex_count_; }
  /// 0-based coordinate of v on axis.
  int coord0(VertexIndex v, int axis) const {
    return static_cast<int>((v / strides_[static_cast<std::size_t>(axis)]) % static_cast<std::uint64_t>(side(axis)));
  }
  std::vector<int> coords(VertexIndex v) const;                 // 1-based
  VertexIndex index_of(const std::vector<int>& coords) const;   // 1-based
  int degree(VertexIndex v) const;

  std::vector<VertexIndex> neighbors(VertexIndex v) const;

  EdgeIndex edge_index(const EdgeId& e) const;
  EdgeId edge_at(EdgeIndex index) const;
  VertexIndex upper(const EdgeId& e) const { return e.lower + static_cast<VertexIndex>(stride(e.axis)); }
  /// Canonical id of the edge {u, v}; throws if u and v are not adjacent.
  EdgeId edge_between(VertexIndex u, VertexIndex v) const;

  EdgeLabel edge_label(const EdgeId& e, VertexIndex endpoint) const;
  std::optional<EdgeId> try_resolve_label(VertexIndex v, int label) const;
  EdgeId resolve_label(VertexIndex v, int label) const;
  IncidentLabelSet incident_labels(VertexIndex v) const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) { return a.dims_ == b.dims_; }

 private:
  void check_vertex(std::uint64_t v) const;

  std::vector<int> dims_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t vertex_count_ = 1;
  std::vector<EdgeIndex> edge_offsets_{0};  // size d+1
};

}  // namespace percforge
