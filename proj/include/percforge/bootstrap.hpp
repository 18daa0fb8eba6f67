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

#include <cstddef>
#include <vector>

#include "percforge/bitset.hpp"
#include "percforge/grid.hpp"
#include "percforge/step_kernel.hpp"

namespace percforge {

struct InfectionState {
  GridSpec spec;
  VertexSet infected;
  std::size_t round = 0;
};

struct InfectionTrace {
  GridSpec spec;
  int r = 0;
  VertexSet initial;
  std::vector<VertexSet> rounds;  // newly infected vertices per productive round
  VertexSet final_state;
  bool percolated = false;
};

/// r-neighbour bootstrap process on one grid. Holds the precomputed kernel
/// plan; all methods are const and safe to call concurrently.
class BootstrapSimulator {
 public:
  explicit BootstrapSimulator(GridSpec spec, kernels::KernelKind kernel = kernels::KernelKind::kAuto);

  const GridSpec& spec() const { return spec_; }
  kernels::KernelKind kernel() const { return kernel_; }

  InfectionState step(const InfectionState& state, int r) const;
  InfectionTrace closure(const VertexSet& initial, int r) const;
  /// Fixpoint only, without the per-round record.
  VertexSet closure_set(const VertexSet& initial, int r) const;
  bool percolates(const VertexSet& initial, int r) const;

 private:
  void check(const VertexSet& set, int r) const;

  GridSpec spec_;
  kernels::KernelKind kernel_;
  kernels::StepPlan plan_;
};

InfectionState step(const InfectionState& state, int r);
InfectionTrace closure(const GridSpec& spec, const VertexSet& initial, int r);
bool percolates(const GridSpec& spec, const VertexSet& initial, int r);

/// Builds a vertex set from explicit indices.
VertexSet make_vertex_set(const GridSpec& spec, const std::vector<VertexIndex>& vertices);

}  // namespace percforge
