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

#include "percforge/bootstrap.hpp"

#include <algorithm>
#include <stdexcept>

namespace percforge {

BootstrapSimulator::BootstrapSimulator(GridSpec spec, kernels::KernelKind kernel)
    : spec_(std::move(spec)), kernel_(kernels::resolve(kernel)), plan_(spec_) {}

void BootstrapSimulator::check(const VertexSet& set, int r) const {
  if (set.size() != spec_.vertex_count()) throw std::invalid_argument("vertex set does not match grid size");
  if (r < 0) throw std::invalid_argument("threshold r must be non-negative");
}

InfectionState BootstrapSimulator::step(const InfectionState& state, int r) const {
  check(state.infected, r);
  kernels::StateBuffer cur(plan_);
  std::copy(state.infected.words().begin(), state.infected.words().end(), cur.state());
  InfectionState out{spec_, VertexSet(spec_.vertex_count()), state.round};
  const bool changed = kernels::step({&plan_, cur.state(), out.infected.words().data(), r}, kernel_);
  if (changed) ++out.round;
  return out;
}

InfectionTrace BootstrapSimulator::closure(const VertexSet& initial, int r) const {
  check(initial, r);
  InfectionTrace trace{spec_, r, initial, {}, initial, false};
  kernels::StateBuffer a(plan_), b(plan_);
  std::copy(initial.words().begin(), initial.words().end(), a.state());
  kernels::StateBuffer* cur = &a;
  kernels::StateBuffer* next = &b;
  while (kernels::step({&plan_, cur->state(), next->state(), r}, kernel_)) {
    VertexSet fresh(spec_.vertex_count());
    auto fw = fresh.words();
    for (std::size_t w = 0; w < fw.size(); ++w) fw[w] = next->state()[w] & ~cur->state()[w];
    trace.rounds.push_back(std::move(fresh));
    std::swap(cur, next);
  }
  std::copy(cur->span().begin(), cur->span().end(), trace.final_state.words().begin());
  trace.percolated = trace.final_state.all();
  return trace;
}

VertexSet BootstrapSimulator::closure_set(const VertexSet& initial, int r) const {
  check(initial, r);
  kernels::StateBuffer a(plan_), b(plan_);
  std::copy(initial.words().begin(), initial.words().end(), a.state());
  kernels::StateBuffer* cur = &a;
  kernels::StateBuffer* next = &b;
  while (kernels::step({&plan_, cur->state(), next->state(), r}, kernel_)) std::swap(cur, next);
  VertexSet out(spec_.vertex_count());
  std::copy(cur->span().begin(), cur->span().end(), out.words().begin());
  return out;
}

bool BootstrapSimulator::percolates(const VertexSet& initial, int r) const {
  return closure_set(initial, r).all();
}

InfectionState step(const InfectionState& state, int r) { return BootstrapSimulator(state.spec).step(state, r); }

InfectionTrace closure(const GridSpec& spec, const VertexSet& initial, int r) {
  return BootstrapSimulator(spec).closure(initial, r);
}

bool percolates(const GridSpec& spec, const VertexSet& initial, int r) {
  return BootstrapSimulator(spec).percolates(initial, r);
}

VertexSet make_vertex_set(const GridSpec& spec, const std::vector<VertexIndex>& vertices) {
  VertexSet s(spec.vertex_count());
  for (VertexIndex v : vertices) {
    if (!spec.valid_vertex(v)) throw std::out_of_range("vertex index out of range");
    s.set(v);
  }
  return s;
}

}  // namespace percforge
