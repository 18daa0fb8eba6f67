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

#include "percforge/grid.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace percforge {

GridSpec::GridSpec(std::vector<int> dims) : dims_(std::move(dims)) {
  const auto d = dims_.size();
  strides_.assign(d, 1);
  vertex_count_ = 1;
  for (std::size_t i = d; i-- > 0;) {
    if (dims_[i] < 2) throw std::invalid_argument("grid side lengths must be at least 2");
    strides_[i] = vertex_count_;
    vertex_count_ *= static_cast<std::uint64_t>(dims_[i]);
    if (vertex_count_ > kMaxVertices) throw std::invalid_argument("grid exceeds the 2^28 vertex limit");
  }
  edge_offsets_.assign(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const auto per_axis = vertex_count_ / static_cast<std::uint64_t>(dims_[i]) * static_cast<std::uint64_t>(dims_[i] - 1);
    edge_offsets_[i + 1] = edge_offsets_[i] + per_axis;
  }
}

GridSpec GridSpec::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("bad grid spec '" + std::string(text) + "'");
    return value;
  };
  if (text.empty()) throw std::invalid_argument("empty grid spec");
  if (text.front() == 'Q' || text.front() == 'q') {
    const int d = parse_int(text.substr(1));
    if (d < 0 || d > 28) throw std::invalid_argument("hypercube dimension out of range in '" + std::string(text) + "'");
    return hypercube(d);
  }
  std::vector<int> dims;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('x', start);
    dims.push_back(parse_int(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return GridSpec(std::move(dims));
}

std::string GridSpec::to_string() const {
  if (dims_.empty()) return "Q0";
  std::string out;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(dims_[i]);
  }
  return out;
}

bool GridSpec::is_hypercube() const {
  return std::all_of(dims_.begin(), dims_.end(), [](int a) { return a == 2; });
}

void GridSpec::check_vertex(std::uint64_t v) const {
  if (!valid_vertex(v)) throw std::out_of_range("vertex index " + std::to_string(v) + " outside " + to_string());
}

std::vector<int> GridSpec::coords(VertexIndex v) const {
  check_vertex(v);
  std::vector<int> out(dims_.size());
  for (int i = 0; i < d(); ++i) out[static_cast<std::size_t>(i)] = coord0(v, i) + 1;
  return out;
}

VertexIndex GridSpec::index_of(const std::vector<int>& c) const {
  if (c.size() != dims_.size()) throw std::invalid_argument("coordinate arity mismatch");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1 || c[i] > dims_[i]) throw std::out_of_range("coordinate out of range");
    v += static_cast<std::uint64_t>(c[i] - 1) * strides_[i];
  }
  return static_cast<VertexIndex>(v);
}

int GridSpec::degree(VertexIndex v) const {
  check_vertex(v);
  int deg = 0;
  for (int i = 0; i < d(); ++i) {
    const int c = coord0(v, i);
    deg += (c > 0) + (c < side(i) - 1);
  }
  return deg;
}

std::vector<VertexIndex> GridSpec::neighbors(VertexIndex v) const {
  check_vertex(v);
  std::vector<VertexIndex> out;
  for (int i = 0; i < d(); ++i) {
    const int c = coord0(v, i);
    const auto s = static_cast<VertexIndex>(stride(i));
    if (c > 0) out.push_back(v - s);
    if (c < side(i) - 1) out.push_back(v + s);
  }
  return out;
}

EdgeIndex GridSpec::edge_index(const EdgeId& e) const {
  if (e.axis < 0 || e.axis >= d()) throw std::out_of_range("edge axis out of range");
  check_vertex(e.lower);
  const auto a = static_cast<std::uint64_t>(side(e.axis));
  const auto s = stride(e.axis);
  if (coord0(e.lower, e.axis) >= side(e.axis) - 1) throw std::out_of_range("edge lower endpoint sits on the upper boundary");
  const std::uint64_t high = e.lower / (a * s);
  const std::uint64_t rem = e.lower % (a * s);
  return edge_offsets_[static_cast<std::size_t>(e.axis)] + high * ((a - 1) * s) + rem;
}

EdgeId GridSpec::edge_at(EdgeIndex index) const {
  if (index >= edge_count()) throw std::out_of_range("edge index out of range");
  const auto it = std::upper_bound(edge_offsets_.begin(), edge_offsets_.end(), index);
  const int axis = static_cast<int>(it - edge_offsets_.begin()) - 1;
  const auto a = static_cast<std::uint64_t>(side(axis));
  const auto s = stride(axis);
  const std::uint64_t compact = index - edge_offsets_[static_cast<std::size_t>(axis)];
  const std::uint64_t high = compact / ((a - 1) * s);
  const std::uint64_t rem = compact % ((a - 1) * s);
  return EdgeId{static_cast<VertexIndex>(high * a * s + rem), axis};
}

EdgeId GridSpec::edge_between(VertexIndex u, VertexIndex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  for (int i = 0; i < d(); ++i) {
    if (v - u == stride(i) && coord0(u, i) + 1 == coord0(v, i)) return EdgeId{u, i};
  }
  throw std::invalid_argument("vertices are not adjacent");
}

EdgeLabel GridSpec::edge_label(const EdgeId& e, VertexIndex endpoint) const {
  if (endpoint != e.lower && endpoint != upper(e)) throw std::invalid_argument("endpoint is not incident to edge");
  edge_index(e);  // validates
  const int min_coord = coord0(e.lower, e.axis) + 1;
  return EdgeLabel{endpoint, min_coord % 2 == 1 ? odd_label(e.axis) : even_label(e.axis)};
}

std::optional<EdgeId> GridSpec::try_resolve_label(VertexIndex v, int label) const {
  check_vertex(v);
  if (label < 1 || label > 2 * d()) return std::nullopt;
  const int axis = label_axis(label);
  const int c = coord0(v, axis) + 1;  // 1-based
  // The edge toward c+1 has min coordinate c; the edge toward c-1 has c-1.
  const bool want_odd = label_is_odd(label);
  if (c < side(axis) && (c % 2 == 1) == want_odd) return EdgeId{v, axis};
  if (c > 1 && ((c - 1) % 2 == 1) == want_odd) return EdgeId{v - static_cast<VertexIndex>(stride(axis)), axis};
  return std::nullopt;
}

EdgeId GridSpec::resolve_label(VertexIndex v, int label) const {
  auto e = try_resolve_label(v, label);
  if (!e) throw std::invalid_argument("label " + std::to_string(label) + " not incident to vertex " + std::to_string(v));
  return *e;
}

IncidentLabelSet GridSpec::incident_labels(VertexIndex v) const {
  check_vertex(v);
  IncidentLabelSet out{v, {}};
  for (int j = 1; j <= 2 * d(); ++j)
    if (try_resolve_label(v, j)) out.labels.push_back(j);
  return out;
}

}  // namespace percforge
