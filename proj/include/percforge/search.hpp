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

// Exact minimum percolating sets on grids with at most 64 vertices, by
// orderly generation of canonical vertex sets layer by layer.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "percforge/grid.hpp"
#include "percforge/percolating_sets.hpp"
#include "percforge/symmetry.hpp"

namespace percforge {

inline constexpr std::size_t kSearchVertexLimit = 64;

struct SearchConfig {
  GridSpec spec;
  int r = 1;
  std::optional<std::size_t> size_budget;    // largest layer to try
  std::optional<std::uint64_t> node_budget;  // total search nodes
  bool symmetry = true;
  std::optional<std::size_t> seed_lower;  // defaults to the wsat bound
  std::optional<std::size_t> seed_upper;  // defaults to the best construction
  unsigned threads = 1;
};

struct LayerOptions {
  bool symmetry = true;
  /// Skip adding a vertex the current set already infects. Sound only when
  /// no set of size k - 1 percolates.
  bool prune_dominated = false;
  std::optional<std::uint64_t> node_budget;
  unsigned threads = 1;
};

struct LayerOutcome {
  std::size_t k = 0;
  bool found = false;
  bool exhausted = false;  // the whole layer was decided within budget
  std::vector<VertexIndex> witness;
  std::uint64_t nodes = 0;               // candidate sets examined
  std::uint64_t canonical_visited = 0;   // canonical sets expanded
};

/// Is there a percolating set of size at most k? Complete over canonical
/// representatives unless the node budget runs out.
LayerOutcome exhaust_layer(const GridSpec& spec, int r, std::size_t k, const LayerOptions& options = {});

struct SearchResult {
  std::optional<std::size_t> exact_m;
  std::optional<PercolatingWitness> witness;  // best set found or supplied
  std::size_t lower = 0;                      // best proven lower bound
  std::uint64_t nodes_explored = 0;
  bool proof_of_optimality = false;  // layer exact_m - 1 exhausted
  std::uint64_t group_order = 1;
  std::vector<LayerOutcome> layers;
  std::string status;  // "exact" or "budget-limited"
};

SearchResult exact_min(const SearchConfig& config);

/// Plain enumeration of all subsets by size, without symmetry or pruning.
std::size_t naive_min_percolating(const GridSpec& spec, int r);

}  // namespace percforge
