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

#include <algorithm>
#include <stdexcept>

#include "percforge/step_kernel.hpp"

namespace percforge::kernels {

StepPlan::StepPlan(const GridSpec& spec)
    : vertices_(spec.vertex_count()), words_((spec.vertex_count() + kWordBits - 1) / kWordBits) {
  if (vertices_ % kWordBits) tail_mask_ = (Word{1} << (vertices_ % kWordBits)) - 1;
  const bool cube = spec.is_hypercube();
  std::uint64_t max_shift = 0;
  for (int axis = 0; axis < spec.d(); ++axis) {
    const auto s = spec.stride(axis);
    max_shift = std::max(max_shift, s);
    for (bool plus : {true, false}) {
      Direction dir;
      dir.axis = axis;
      dir.plus = plus;
      dir.shift = s;
      if (cube) {
        dir.pattern_bit = std::countr_zero(s);
      } else {
        dir.mask.assign(words_, 0);
        const int last = spec.side(axis) - 1;
        for (std::size_t v = 0; v < vertices_; ++v) {
          const int c = spec.coord0(static_cast<VertexIndex>(v), axis);
          if (plus ? c < last : c > 0) dir.mask[v / kWordBits] |= Word{1} << (v % kWordBits);
        }
      }
      directions_.push_back(std::move(dir));
    }
  }
  // Shifted reads touch words up to ceil(max_shift / 64) + 1 away; the AVX2
  // path reads one more.
  padding_ = static_cast<std::size_t>(max_shift / kWordBits) + 2;
}

namespace {

inline Word shifted_word(const Word* cur, std::ptrdiff_t w, const Direction& dir) {
  const auto q = static_cast<std::ptrdiff_t>(dir.shift / kWordBits);
  const unsigned b = static_cast<unsigned>(dir.shift % kWordBits);
  if (dir.plus) {
    // bit v receives bit v + shift
    const Word lo = cur[w + q];
    if (b == 0) return lo;
    return (lo >> b) | (cur[w + q + 1] << (kWordBits - b));
  }
  const Word hi = cur[w - q];
  if (b == 0) return hi;
  return (hi << b) | (cur[w - q - 1] >> (kWordBits - b));
}

}  // namespace

void step_scalar_range(const StepArgs& args, std::size_t begin, std::size_t end) {
  const StepPlan& plan = *args.plan;
  const int r = args.r;
  const auto& dirs = plan.directions();
  const int ndirs = static_cast<int>(dirs.size());
  if (r > ndirs) {
    std::copy(args.cur + begin, args.cur + end, args.next + begin);
    return;
  }
  Word ge[kMaxCounter + 1];
  for (std::size_t w = begin; w < end; ++w) {
    for (int k = 1; k <= r; ++k) ge[k] = 0;
    for (int i = 0; i < ndirs; ++i) {
      const Direction& dir = dirs[static_cast<std::size_t>(i)];
      const Word n = shifted_word(args.cur, static_cast<std::ptrdiff_t>(w), dir) & direction_mask(dir, w);
      for (int k = std::min(r, i + 1); k >= 2; --k) ge[k] |= ge[k - 1] & n;
      ge[1] |= n;
    }
    args.next[w] = args.cur[w] | ge[r];
  }
}

void step_scalar(const StepArgs& args) { step_scalar_range(args, 0, args.plan->words()); }

SmallStepPlan::SmallStepPlan(const GridSpec& spec) {
  if (spec.vertex_count() > 64) throw std::invalid_argument("SmallStepPlan needs at most 64 vertices");
  const auto n = spec.vertex_count();
  all_ = n == 64 ? ~Word{0} : (Word{1} << n) - 1;
  for (int axis = 0; axis < spec.d(); ++axis) {
    for (bool plus : {true, false}) {
      Dir dir{spec.stride(axis), plus, 0};
      const int last = spec.side(axis) - 1;
      for (std::size_t v = 0; v < n; ++v) {
        const int c = spec.coord0(static_cast<VertexIndex>(v), axis);
        if (plus ? c < last : c > 0) dir.mask |= Word{1} << v;
      }
      dirs_.push_back(dir);
    }
  }
}

Word SmallStepPlan::step(Word infected, int r) const {
  if (r <= 0) return all_;
  const int ndirs = static_cast<int>(dirs_.size());
  if (r > ndirs) return infected;
  Word ge[kMaxCounter + 1];
  for (int k = 1; k <= r; ++k) ge[k] = 0;
  for (int i = 0; i < ndirs; ++i) {
    const Dir& dir = dirs_[static_cast<std::size_t>(i)];
    const Word n = (dir.plus ? infected >> dir.shift : infected << dir.shift) & dir.mask;
    for (int k = std::min(r, i + 1); k >= 2; --k) ge[k] |= ge[k - 1] & n;
    ge[1] |= n;
  }
  return (infected | ge[r]) & all_;
}

Word SmallStepPlan::closure(Word infected, int r) const {
  while (true) {
    const Word next = step(infected, r);
    if (next == infected) return infected;
    infected = next;
  }
}

}  // namespace percforge::kernels
