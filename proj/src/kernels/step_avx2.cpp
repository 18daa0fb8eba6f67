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

// This file is compiled with -mavx2; dispatch only calls it after a runtime
// CPU check.

#include <immintrin.h>

#include <algorithm>

#include "percforge/step_kernel.hpp"

namespace percforge::kernels {

namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline __m256i shifted(const Word* cur, std::ptrdiff_t w, const Direction& dir) {
  const auto q = static_cast<std::ptrdiff_t>(dir.shift / kWordBits);
  const auto b = static_cast<long long>(dir.shift % kWordBits);
  // Shift counts >= 64 yield zero for the variable-count forms, so b == 0
  // needs no special case.
  const __m128i nb = _mm_cvtsi64_si128(b);
  const __m128i cb = _mm_cvtsi64_si128(static_cast<long long>(kWordBits) - b);
  if (dir.plus) {
    const __m256i lo = load(cur + w + q);
    const __m256i hi = load(cur + w + q + 1);
    return _mm256_or_si256(_mm256_srl_epi64(lo, nb), _mm256_sll_epi64(hi, cb));
  }
  const __m256i hi = load(cur + w - q);
  const __m256i lo = load(cur + w - q - 1);
  return _mm256_or_si256(_mm256_sll_epi64(hi, nb), _mm256_srl_epi64(lo, cb));
}

inline __m256i mask4(const Direction& dir, std::size_t w) {
  if (dir.pattern_bit < 0) return load(dir.mask.data() + w);
  if (dir.pattern_bit < 6) {
    const Word m = direction_mask(dir, 0);
    return _mm256_set1_epi64x(static_cast<long long>(m));
  }
  const auto base = static_cast<long long>(w);
  const __m256i idx = _mm256_setr_epi64x(base, base + 1, base + 2, base + 3);
  const __m256i bit = _mm256_and_si256(_mm256_srl_epi64(idx, _mm_cvtsi64_si128(dir.pattern_bit - 6)),
                                       _mm256_set1_epi64x(1));
  const __m256i low = _mm256_cmpeq_epi64(bit, _mm256_setzero_si256());
  return dir.plus ? low : _mm256_xor_si256(low, _mm256_set1_epi64x(-1));
}

}  // namespace

void step_avx2(const StepArgs& args) {
  const StepPlan& plan = *args.plan;
  const int r = args.r;
  const auto& dirs = plan.directions();
  const int ndirs = static_cast<int>(dirs.size());
  const std::size_t words = plan.words();
  if (r > ndirs) {
    std::copy(args.cur, args.cur + words, args.next);
    return;
  }
  const std::size_t vec_end = words - words % 4;
  __m256i ge[kMaxCounter + 1];
  for (std::size_t w = 0; w < vec_end; w += 4) {
    for (int k = 1; k <= r; ++k) ge[k] = _mm256_setzero_si256();
    for (int i = 0; i < ndirs; ++i) {
      const Direction& dir = dirs[static_cast<std::size_t>(i)];
      const __m256i n = _mm256_and_si256(shifted(args.cur, static_cast<std::ptrdiff_t>(w), dir), mask4(dir, w));
      for (int k = std::min(r, i + 1); k >= 2; --k) ge[k] = _mm256_or_si256(ge[k], _mm256_and_si256(ge[k - 1], n));
      ge[1] = _mm256_or_si256(ge[1], n);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(args.next + w), _mm256_or_si256(load(args.cur + w), ge[r]));
  }
  step_scalar_range(args, vec_end, words);
}

}  // namespace percforge::kernels
