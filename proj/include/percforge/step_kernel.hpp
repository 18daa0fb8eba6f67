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

// Word-parallel bootstrap step.
//
// For every neighbour direction (axis, +/-) the infected bitmap is shifted by
// the axis stride and masked to the vertices that have a neighbour in that
// direction. The shifted bitmaps feed a saturating unary counter
// (ge[k] = "at least k infected neighbours", capped at r) kept per word, so a
// step touches each word of the state once per direction and never loops
// over individual vertices.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "percforge/bitset.hpp"
#include "percforge/grid.hpp"

namespace percforge::kernels {

enum class KernelKind { kAuto, kScalar, kAvx2 };

/// Largest neighbour count a grid vertex can have (2d, d <= 28).
inline constexpr int kMaxCounter = 56;

std::string_view kernel_name(KernelKind kind);
KernelKind parse_kernel(std::string_view name);

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available();
/// Resolves kAuto to the best available variant; an unavailable explicit
/// request falls back to scalar.
KernelKind resolve(KernelKind requested);

/// Per-direction shift and validity mask. Hypercubes use closed-form masks,
/// other grids store one mask word per state word.
struct Direction {
  int axis = 0;
  bool plus = false;       // neighbour is v + stride
  std::uint64_t shift = 0; // == stride
  int pattern_bit = -1;    // hypercube: log2(stride); -1 means explicit mask
  std::vector<Word> mask;  // explicit mode only
};

/// Immutable description of a grid's neighbour structure for the kernel.
class StepPlan {
 public:
  explicit StepPlan(const GridSpec& spec);

  std::size_t vertex_count() const { return vertices_; }
  std::size_t words() const { return words_; }
  /// Guard words required on each side of the state buffer.
  std::size_t padding() const { return padding_; }
  Word tail_mask() const { return tail_mask_; }
  const std::vector<Direction>& directions() const { return directions_; }

 private:
  std::size_t vertices_ = 0;
  std::size_t words_ = 0;
  std::size_t padding_ = 1;
  Word tail_mask_ = ~Word{0};
  std::vector<Direction> directions_;
};

/// Validity mask word `w` for a direction.
inline Word direction_mask(const Direction& dir, std::size_t w) {
  if (dir.pattern_bit < 0) return dir.mask[w];
  static constexpr Word kLowPatterns[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  Word low;  // vertices whose bit `pattern_bit` is 0
  if (dir.pattern_bit < 6) {
    low = kLowPatterns[dir.pattern_bit];
  } else {
    low = ((w >> (dir.pattern_bit - 6)) & 1u) ? Word{0} : ~Word{0};
  }
  return dir.plus ? low : ~low;
}

/// Arguments of one synchronous step. `cur` points at the first state word of
/// a buffer with plan.padding() zero guard words on both sides.
struct StepArgs {
  const StepPlan* plan = nullptr;
  const Word* cur = nullptr;
  Word* next = nullptr;
  int r = 0;
};

/// Writes cur | {v : |N(v) & cur| >= r} into next for words [begin, end).
void step_scalar_range(const StepArgs& args, std::size_t begin, std::size_t end);
void step_scalar(const StepArgs& args);
#if defined(PERCFORGE_HAVE_AVX2)
void step_avx2(const StepArgs& args);
#endif

/// Dispatches to the requested variant. Returns true if any bit changed.
bool step(const StepArgs& args, KernelKind kind);

/// Zero-padded state buffer sized for a plan.
class StateBuffer {
 public:
  explicit StateBuffer(const StepPlan& plan)
      : padding_(plan.padding()), words_(plan.words()), data_(plan.words() + 2 * plan.padding(), 0) {}
  Word* state() { return data_.data() + padding_; }
  const Word* state() const { return data_.data() + padding_; }
  std::span<Word> span() { return {state(), words_}; }
  std::span<const Word> span() const { return {state(), words_}; }

 private:
  std::size_t padding_;
  std::size_t words_;
  std::vector<Word> data_;
};

/// One-word plan for grids with at most 64 vertices; used by the search hot path.
class SmallStepPlan {
 public:
  explicit SmallStepPlan(const GridSpec& spec);
  /// One synchronous step on a <= 64 vertex state.
  Word step(Word infected, int r) const;
  /// Closure fixpoint.
  Word closure(Word infected, int r) const;
  Word all() const { return all_; }

 private:
  struct Dir {
    std::uint64_t shift;
    bool plus;
    Word mask;
  };
  std::vector<Dir> dirs_;
  Word all_ = 0;
};

}  // namespace percforge::kernels
