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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "percforge/bootstrap.hpp"

using namespace percforge;

namespace {

std::vector<bool> to_bools(const VertexSet& s) {
  std::vector<bool> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s.test(i);
  return out;
}

VertexSet random_set(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

const std::vector<std::vector<int>> kShapes = {{2},          {7},       {2, 2},       {3, 3},    {5, 4},
                                               {2, 2, 2},    {3, 2, 4}, {2, 2, 2, 2}, {9, 9},    {70},
                                               {5, 5, 5},    {2, 33},   {3, 3, 3, 3}, {12, 11}, {2, 2, 2, 2, 2, 2, 2},
                                               {4, 4, 4, 4}, {17, 16},  {2, 2, 2, 2, 2, 2, 2, 2, 2}};

std::vector<kernels::KernelKind> kinds() {
  std::vector<kernels::KernelKind> out{kernels::KernelKind::kScalar};
  if (kernels::avx2_available()) out.push_back(kernels::KernelKind::kAvx2);
  return out;
}

}  // namespace

TEST_CASE("synchronous step matches the naive step for every kernel") {
  std::mt19937_64 rng(11);
  for (const auto& dims : kShapes) {
    const GridSpec spec(dims);
    const oracle::Grid o{dims};
    for (auto kind : kinds()) {
      const BootstrapSimulator sim(spec, kind);
      for (int trial = 0; trial < 6; ++trial)
        for (int r = 0; r <= 2 * spec.d() + 1; ++r) {
          const VertexSet s = random_set(spec.vertex_count(), 0.15 + 0.1 * trial, rng);
          const InfectionState next = sim.step({spec, s, 0}, r);
          CHECK(to_bools(next.infected) == oracle::step(o, to_bools(s), r));
        }
    }
  }
}

TEST_CASE("scalar and AVX2 kernels agree on closures") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not available; only the scalar kernel is exercised");
    return;
  }
  std::mt19937_64 rng(12);
  for (const auto& dims : kShapes) {
    const GridSpec spec(dims);
    const BootstrapSimulator scalar(spec, kernels::KernelKind::kScalar);
    const BootstrapSimulator avx(spec, kernels::KernelKind::kAvx2);
    for (int trial = 0; trial < 10; ++trial) {
      const int r = 1 + trial % (2 * spec.d());
      const VertexSet s = random_set(spec.vertex_count(), 0.05 * (trial + 1), rng);
      const auto a = scalar.closure(s, r);
      const auto b = avx.closure(s, r);
      CHECK(a.final_state == b.final_state);
      CHECK(a.rounds == b.rounds);
    }
  }
}

TEST_CASE("closure matches the sweep oracle and is a fixpoint") {
  std::mt19937_64 rng(13);
  for (const auto& dims : kShapes) {
    const GridSpec spec(dims);
    const oracle::Grid o{dims};
    if (o.n() > 600) continue;
    for (int r = 1; r <= 2 * spec.d(); ++r) {
      const VertexSet s = random_set(spec.vertex_count(), 0.3, rng);
      const InfectionTrace t = closure(spec, s, r);
      CHECK(to_bools(t.final_state) == oracle::closure(o, to_bools(s), r));
      CHECK(t.percolated == t.final_state.all());
      CHECK(t.rounds.size() <= spec.vertex_count());
      VertexSet acc = s;
      for (const auto& round : t.rounds) {
        CHECK_FALSE(round.none());
        CHECK((round & acc).none());
        acc |= round;
      }
      CHECK(acc == t.final_state);
      CHECK(step({spec, t.final_state, 0}, r).infected == t.final_state);
    }
  }
}

TEST_CASE("edge thresholds") {
  const GridSpec spec = GridSpec::hypercube(3);
  const VertexSet empty(spec.vertex_count());
  CHECK(percolates(spec, empty, 0));
  CHECK_FALSE(percolates(spec, empty, 1));
  CHECK(percolates(spec, make_vertex_set(spec, {5}), 1));
  CHECK_FALSE(percolates(spec, make_vertex_set(spec, {0, 7}), 2));
  CHECK_FALSE(percolates(spec, make_vertex_set(spec, {0, 3}), 2));
  CHECK(percolates(spec, make_vertex_set(spec, {0, 3, 5}), 2));
  // r above the maximum degree: only the initial set stays infected.
  const auto t = closure(spec, make_vertex_set(spec, {0, 1, 2, 3, 4, 5, 6}), 4);
  CHECK_FALSE(t.percolated);
  CHECK(t.rounds.empty());
  CHECK_THROWS(make_vertex_set(spec, {8}));
  CHECK_THROWS(closure(spec, VertexSet(7), 1));
  CHECK_THROWS(closure(spec, empty, -1));
}

TEST_CASE("kernel names") {
  CHECK(kernels::parse_kernel("scalar") == kernels::KernelKind::kScalar);
  CHECK(kernels::parse_kernel("avx2") == kernels::KernelKind::kAvx2);
  CHECK(kernels::parse_kernel("auto") == kernels::KernelKind::kAuto);
  CHECK_THROWS(kernels::parse_kernel("sse"));
  CHECK(kernels::resolve(kernels::KernelKind::kAuto) != kernels::KernelKind::kAuto);
}

TEST_CASE("small plan agrees with the general simulator") {
  std::mt19937_64 rng(14);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2, 2, 2, 2, 2}, {4, 4, 4}, {8, 8}, {3, 3, 2}, {5}}) {
    const GridSpec spec(dims);
    const kernels::SmallStepPlan plan(spec);
    for (int trial = 0; trial < 200; ++trial) {
      const int r = 1 + trial % (2 * spec.d());
      const VertexSet s = random_set(spec.vertex_count(), 0.2, rng);
      Word w = s.words()[0];
      CHECK(plan.closure(w, r) == closure(spec, s, r).final_state.words()[0]);
      CHECK(plan.step(w, r) == step({spec, s, 0}, r).infected.words()[0]);
    }
  }
}
