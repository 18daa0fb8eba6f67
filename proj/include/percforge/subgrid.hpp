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

#include <vector>

#include "percforge/grid.hpp"

namespace percforge {

/// Embeds a sub-grid into a parent grid, preserving coordinate values (so
/// edge parities, and hence labels, carry over unchanged).
class SubgridEmbedding {
 public:
  /// The parent with `axis` shortened by one; the top coordinate is dropped.
  static SubgridEmbedding shrink(const GridSpec& parent, int axis) {
    std::vector<int> dims = parent.dims();
    dims[static_cast<std::size_t>(axis)] -= 1;
    std::vector<int> axis_map(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) axis_map[k] = static_cast<int>(k);
    return SubgridEmbedding(parent, GridSpec(std::move(dims)), std::move(axis_map), 0);
  }

  /// The layer of the parent where `axis` has 0-based coordinate `coord0`.
  static SubgridEmbedding layer(const GridSpec& parent, int axis, int coord0) {
    std::vector<int> dims;
    std::vector<int> axis_map;
    for (int k = 0; k < parent.d(); ++k) {
      if (k == axis) continue;
      dims.push_back(parent.side(k));
      axis_map.push_back(k);
    }
    const VertexIndex base = static_cast<VertexIndex>(static_cast<std::uint64_t>(coord0) * parent.stride(axis));
    return SubgridEmbedding(parent, GridSpec(std::move(dims)), std::move(axis_map), base);
  }

  const GridSpec& parent() const { return parent_; }
  const GridSpec& sub() const { return sub_; }
  VertexIndex vertex(VertexIndex u) const { return vertex_map_[u]; }
  int axis(int sub_axis) const { return axis_map_[static_cast<std::size_t>(sub_axis)]; }
  int label(int sub_label) const {
    const int a = axis(label_axis(sub_label));
    return label_is_odd(sub_label) ? odd_label(a) : even_label(a);
  }
  EdgeId edge(const EdgeId& e) const { return EdgeId{vertex(e.lower), axis(e.axis)}; }
  EdgeIndex edge(EdgeIndex sub_edge) const { return parent_.edge_index(edge(sub_.edge_at(sub_edge))); }

 private:
  SubgridEmbedding(const GridSpec& parent, GridSpec sub, std::vector<int> axis_map, VertexIndex base)
      : parent_(parent), sub_(std::move(sub)), axis_map_(std::move(axis_map)) {
    vertex_map_.resize(sub_.vertex_count());
    for (std::size_t u = 0; u < sub_.vertex_count(); ++u) {
      std::uint64_t v = base;
      for (int k = 0; k < sub_.d(); ++k)
        v += static_cast<std::uint64_t>(sub_.coord0(static_cast<VertexIndex>(u), k)) * parent_.stride(axis(k));
      vertex_map_[u] = static_cast<VertexIndex>(v);
    }
  }

  GridSpec parent_;
  GridSpec sub_;
  std::vector<int> axis_map_;
  std::vector<VertexIndex> vertex_map_;
};

}  // namespace percforge
