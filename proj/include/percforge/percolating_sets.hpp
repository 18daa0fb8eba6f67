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

// Explicit percolating sets in hypercubes. Vertex x of Q_d has coordinate
// x_1 in the most significant bit, so the "first k coordinates" of x are its
// top k bits. Every constructor simulates its output before returning it.

#include <cstddef>
#include <string>
#include <vector>

#include "percforge/bitset.hpp"
#include "percforge/grid.hpp"

namespace percforge {

struct PercolatingWitness {
  GridSpec spec;
  int r = 0;
  std::vector<VertexIndex> vertices;  // ascending
  std::size_t claimed_size = 0;
  /// explicit-table, level-recursive, even-d-step, base-r1, base-r2,
  /// base-diag (t = d), base-all (t > d) or search.
  std::string provenance;

  VertexSet set() const;
};

/// The tabulated r = 3 sets for 3 <= d <= 8, decoded from subset notation.
PercolatingWitness explicit_r3_set(int d);

/// Simple sets for threshold t on Q_d: a single vertex (t = 1), the origin
/// plus coordinate pairs (t = 2), the even-weight vertices (t = d), or
/// everything (t > d). Other t are rejected.
PercolatingWitness base_set(int d, int t);

/// The smallest set this module knows for Q_d and threshold t >= 1.
PercolatingWitness best_set(int d, int t);

/// Level placement on the first r coordinates with blocks on Q_{d-r}: the
/// vertex (1,0,..,0) carries B_r, the rest of level 1 carries B_{r-1}, and
/// level 2j+1 carries B_{r-2j}. Blocks come from best_set.
PercolatingWitness build_recursive(int d, int r);

struct RecursiveSizes {
  std::size_t total = 0;
  std::vector<std::size_t> block_sizes;  // |B_t| by t, index 0 unused
};

/// The recursion's size identity evaluated on the blocks best_set achieves.
RecursiveSizes recursive_size(int d, int r);

/// r = 3: the table for d <= 8, the recursion for odd d, and the
/// six-coordinate construction over the d = 6 table for even d >= 10.
PercolatingWitness build_r3(int d);

/// ceil(d(d+3)/6) + 1.
std::size_t r3_target_size(int d);

/// Re-simulates a witness: right size, valid vertices, percolates.
bool check_witness(const PercolatingWitness& w, std::string* reason = nullptr);

}  // namespace percforge
