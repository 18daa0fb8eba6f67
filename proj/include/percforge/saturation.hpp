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

// Weakly (G, S_{r+1})-saturated spanning subgraphs of grids: recursive
// constructions, edge-addition certificates, their verifier, and a
// brute-force oracle for tiny graphs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "percforge/bitset.hpp"
#include "percforge/grid.hpp"

namespace percforge {

/// One edge addition. `labels` name the r edges at `center`, other than the
/// added edge, that together with it form the completed star.
struct StarAddition {
  EdgeIndex edge = 0;
  VertexIndex center = 0;
  std::vector<int> labels;
  friend bool operator==(const StarAddition&, const StarAddition&) = default;
};

struct SaturationCertificate {
  GridSpec spec;
  int star_size = 1;  // r + 1 leaves
  std::vector<EdgeIndex> base_edges;
  std::vector<StarAddition> additions;
};

struct VerifyResult {
  bool ok = true;
  /// Index of the first bad addition; additions.size() for a coverage
  /// failure; npos when ok or when the base edge list itself is malformed.
  std::size_t index = static_cast<std::size_t>(-1);
  std::string reason;
};

VerifyResult verify_certificate(const SaturationCertificate& cert);

/// Recursive construction splitting off the last axis: F_0 on the x_d = 0
/// layer (star r+1), F_1 on the x_d = 1 layer (star r), no axis-d edges.
SaturationCertificate build_wsat_hypercube(int d, int r);

/// Recursive construction on the highest axis with a_i >= 3: G_1 shrinks that
/// axis by one, G_2 is the removed top layer, and the cross edges kept in F are
/// those at G_1 vertices of too-small degree.
SaturationCertificate build_wsat_grid(const std::vector<int>& dims, int r);

struct GreedyResult {
  bool success = false;
  SaturationCertificate certificate;   // additions performed (complete iff success)
  std::vector<EdgeIndex> frontier;     // missing edges when stuck
};

/// Adds the lowest-indexed addable edge until none is left.
GreedyResult greedy_saturate(const GridSpec& spec, const EdgeSet& base, int star_size);

/// Explicit simple graph for the brute-force oracle.
struct SmallGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;

  static SmallGraph from_grid(const GridSpec& spec);
};

/// Greedy decision procedure on an explicit graph; `present` bit i marks edge i.
bool small_weakly_saturated(const SmallGraph& graph, std::uint32_t present, int star_size);

struct WsatOracleResult {
  SmallGraph graph;
  int r = 0;
  std::size_t min_edges = 0;
  std::vector<std::size_t> witness;  // indices into graph.edges
};

inline constexpr std::size_t kOracleEdgeLimit = 24;

/// Exact wsat(G, S_{star_size}) by enumerating edge subsets in increasing size.
WsatOracleResult brute_force_wsat(const SmallGraph& graph, int star_size);

/// {v : d_F(v) >= min(r, d_G(v))}.
VertexSet derived_initial_set(const GridSpec& spec, const EdgeSet& base, int r);

EdgeSet edge_set_of(const GridSpec& spec, const std::vector<EdgeIndex>& edges);

}  // namespace percforge
