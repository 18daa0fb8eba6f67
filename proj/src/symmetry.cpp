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

#include "percforge/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace percforge {

namespace {

// Bit positions whose index has bit j clear.
constexpr std::array<SmallSet, 6> kLowHalf = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                              0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

}  // namespace

SymmetryGroup::SymmetryGroup(const GridSpec& spec) : spec_(spec), d_(spec.d()) {
  const std::size_t n = spec.vertex_count();
  if (n > 64) throw std::invalid_argument("symmetry reduction supports at most 64 vertices");
  hypercube_ = spec.is_hypercube();
  std::vector<int> perm(static_cast<std::size_t>(d_));
  std::iota(perm.begin(), perm.end(), 0);

  if (hypercube_) {
    do {
      // Coordinate k of the image is coordinate perm[k] of the source.
      std::vector<std::uint8_t> vp(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t img = 0;
        for (int k = 0; k < d_; ++k) {
          const int src = perm[static_cast<std::size_t>(k)];
          if ((v >> (d_ - 1 - src)) & 1U) img |= std::size_t{1} << (d_ - 1 - k);
        }
        vp[v] = static_cast<std::uint8_t>(img);
      }
      std::array<std::array<SmallSet, 256>, 8> table{};
      for (std::size_t byte = 0; byte < 8; ++byte)
        for (std::size_t value = 0; value < 256; ++value) {
          SmallSet out = 0;
          for (std::size_t b = 0; b < 8; ++b) {
            const std::size_t v = byte * 8 + b;
            if (v < n && ((value >> b) & 1U)) out |= SmallSet{1} << vp[v];
          }
          table[byte][value] = out;
        }
      vertex_perm_.push_back(std::move(vp));
      tables_.push_back(table);
    } while (std::next_permutation(perm.begin(), perm.end()));
    order_ = static_cast<std::uint64_t>(vertex_perm_.size()) << d_;
    return;
  }

  do {
    bool ok = true;
    for (int k = 0; k < d_; ++k)
      if (spec.side(k) != spec.side(perm[static_cast<std::size_t>(k)])) ok = false;
    if (!ok) continue;
    for (std::uint32_t flips = 0; flips < (1U << d_); ++flips) {
      std::vector<std::uint8_t> map(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> c(static_cast<std::size_t>(d_));
        for (int k = 0; k < d_; ++k) {
          const int src = perm[static_cast<std::size_t>(k)];
          int x = spec.coord0(static_cast<VertexIndex>(v), src);
          if ((flips >> k) & 1U) x = spec.side(k) - 1 - x;
          c[static_cast<std::size_t>(k)] = x + 1;
        }
        map[v] = static_cast<std::uint8_t>(spec.index_of(c));
      }
      maps_.push_back(std::move(map));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Reversing an axis of length 1 would be the identity; sides are >= 2 so
  // every element above is distinct.
  order_ = maps_.size();
}

SmallSet SymmetryGroup::flip(SmallSet set, unsigned t) const {
  for (int j = 0; j < d_; ++j) {
    if (!((t >> j) & 1U)) continue;
    const unsigned s = 1U << j;
    const SmallSet low = kLowHalf[static_cast<std::size_t>(j)];
    set = ((set & low) << s) | ((set >> s) & low);
  }
  return set;
}

SmallSet SymmetryGroup::permute(std::size_t p, SmallSet set) const {
  const auto& table = tables_[p];
  SmallSet out = 0;
  for (std::size_t byte = 0; set != 0; ++byte, set >>= 8) out |= table[byte][set & 0xFF];
  return out;
}

SmallSet SymmetryGroup::apply(std::uint64_t element, SmallSet set) const {
  if (element >= order_) throw std::out_of_range("group element out of range");
  if (hypercube_) {
    const auto p = static_cast<std::size_t>(element >> d_);
    const auto t = static_cast<unsigned>(element & ((std::uint64_t{1} << d_) - 1));
    return flip(permute(p, set), t);
  }
  SmallSet out = 0;
  const auto& map = maps_[static_cast<std::size_t>(element)];
  for (SmallSet s = set; s != 0; s &= s - 1) out |= SmallSet{1} << map[static_cast<std::size_t>(std::countr_zero(s))];
  return out;
}

SmallSet SymmetryGroup::canonical(SmallSet set) const {
  SmallSet best = set;
  for (std::uint64_t g = 0; g < order_; ++g) {
    const SmallSet img = apply(g, set);
    if (lex_less(img, best)) best = img;
  }
  return best;
}

bool SymmetryGroup::is_canonical(SmallSet set) const {
  if (set == 0) return true;
  if (!hypercube_) {
    for (std::uint64_t g = 0; g < order_; ++g)
      if (lex_less(apply(g, set), set)) return false;
    return true;
  }
  // Some flip moves any element of the set to vertex 0, so a least image
  // contains 0; only the flips doing that can produce a smaller image.
  if (!(set & 1U)) return false;
  for (std::size_t p = 0; p < tables_.size(); ++p) {
    const SmallSet image = permute(p, set);
    const auto& vp = vertex_perm_[p];
    for (SmallSet s = set; s != 0; s &= s - 1) {
      const unsigned t = vp[static_cast<std::size_t>(std::countr_zero(s))];
      if (lex_less(flip(image, t), set)) return false;
    }
  }
  return true;
}

SmallSet to_small(const VertexSet& set) {
  if (set.size() > 64) throw std::invalid_argument("set has more than 64 vertices");
  return set.word_count() == 0 ? 0 : set.words()[0];
}

VertexSet from_small(const GridSpec& spec, SmallSet set) {
  VertexSet out(spec.vertex_count());
  if (out.word_count() > 0) out.words()[0] = set;
  out.trim();
  return out;
}

VertexSet canonical_form(const GridSpec& spec, const VertexSet& set) {
  const SymmetryGroup group(spec);
  return from_small(spec, group.canonical(to_small(set)));
}

}  // namespace percforge
