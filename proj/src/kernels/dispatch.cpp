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

#include <stdexcept>
#include <string>

#include "percforge/step_kernel.hpp"

namespace percforge::kernels {

std::string_view kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::kAuto: return "auto";
    case KernelKind::kScalar: return "scalar";
    case KernelKind::kAvx2: return "avx2";
  }
  return "unknown";
}

KernelKind parse_kernel(std::string_view name) {
  if (name == "auto") return KernelKind::kAuto;
  if (name == "scalar") return KernelKind::kScalar;
  if (name == "avx2") return KernelKind::kAvx2;
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

bool avx2_available() {
#if defined(PERCFORGE_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

KernelKind resolve(KernelKind requested) {
  if (requested == KernelKind::kScalar) return KernelKind::kScalar;
  return avx2_available() ? KernelKind::kAvx2 : KernelKind::kScalar;
}

bool step(const StepArgs& args, KernelKind kind) {
  const StepPlan& plan = *args.plan;
  const std::size_t words = plan.words();
  if (words == 0) return false;
  if (args.r <= 0) {
    for (std::size_t w = 0; w < words; ++w) args.next[w] = ~Word{0};
  } else {
#if defined(PERCFORGE_HAVE_AVX2)
    if (resolve(kind) == KernelKind::kAvx2) {
      step_avx2(args);
    } else {
      step_scalar(args);
    }
#else
    (void)kind;
    step_scalar(args);
#endif
  }
  args.next[words - 1] &= plan.tail_mask();
  Word diff = 0;
  for (std::size_t w = 0; w < words; ++w) diff |= args.next[w] ^ args.cur[w];
  return diff != 0;
}

}  // namespace percforge::kernels
