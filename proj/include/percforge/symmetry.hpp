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

// Automorphisms of small grids (at most 64 vertices) acting on vertex sets
// stored as one 64-bit word. Sets are ordered lexicographically as sorted
// vertex lists; the canonical form is the least image.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "percforge/bitset.hpp"
#include "percforge/grid.hpp"

namespace percforge {

using SmallSet = std::uint64_t;

/// a < b as sorted vertex lists, for sets of equal size: the smallest
/// element of a ^ b lies in a.
inline bool lex_less(SmallSet a, SmallSet b) {
  const SmallSet diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

/// Hypercube: coordinate permutations times coordinate flips (d! 2^d
/// elements). Other grids: permutations of equal-length axes times per-axis
/// reversals.
class SymmetryGroup {
 public:
  explicit SymmetryGroup(const GridSpec& spec);

  std::uint64_t order() const { return order_; }
  SmallSet apply(std::uint64_t element, SmallSet set) const;
  SmallSet canonical(SmallSet set) const;
  /// True iff no image of `set` is lexicographically smaller.
  bool is_canonical(SmallSet set) const;

 private:
  SmallSet flip(SmallSet set, unsigned t) const;
  SmallSet permute(std::size_t p, SmallSet set) const;

  GridSpec spec_;
  std::uint64_t order_ = 1;
  bool hypercube_ = false;
  int d_ = 0;
  // Hypercube: per coordinate permutation, its action on vertex indices and
  // byte-wise lookup tables for whole sets.
  std::vector<std::vector<std::uint8_t>> vertex_perm_;
  std::vector<std::array<std::array<SmallSet, 256>, 8>> tables_;
  // Other grids: explicit vertex maps, one per element.
  std::vector<std::vector<std::uint8_t>> maps_;
};

/// Least image of `set` under the grid's symmetry group.
VertexSet canonical_form(const GridSpec& spec, const VertexSet& set);

SmallSet to_small(const VertexSet& set);
VertexSet from_small(const GridSpec& spec, SmallSet set);

}  // namespace percforge
