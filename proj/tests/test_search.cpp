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
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "percforge/bootstrap.hpp"
#include "percforge/search.hpp"
#include "percforge/symmetry.hpp"

using namespace percforge;

namespace {

std::vector<std::size_t> sorted_list(SmallSet s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if ((s >> i) & 1u) out.push_back(i);
  return out;
}

SmallSet random_small(std::size_t n, std::mt19937_64& rng) {
  const SmallSet all = n == 64 ? ~SmallSet{0} : (SmallSet{1} << n) - 1;
  return rng() & rng() & all;
}

/// Image of each single vertex: the element as a permutation.
std::vector<std::size_t> as_permutation(const SymmetryGroup& g, std::uint64_t element, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t v = 0; v < n; ++v) {
    const SmallSet img = g.apply(element, SmallSet{1} << v);
    REQUIRE(std::popcount(img) == 1);
    p[v] = static_cast<std::size_t>(std::countr_zero(img));
  }
  return p;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("lexicographic order on vertex sets") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const SmallSet a = random_small(20, rng);
    SmallSet b = trial % 5 == 0 ? a : random_small(20, rng);
    // Canonical forms only ever compare sets of equal size.
    while (std::popcount(b) > std::popcount(a)) b &= b - 1;
    if (std::popcount(b) < std::popcount(a)) continue;
    CHECK(lex_less(a, b) == (sorted_list(a) < sorted_list(b)));
  }
}

TEST_CASE("group elements are graph automorphisms") {
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 2, 2}, {3, 3}, {4, 2}, {3, 3, 3}, {2, 3, 2}}) {
    const GridSpec spec(dims);
    const SymmetryGroup g(spec);
    const oracle::Grid o{dims};
    const auto edges = o.edges();
    std::vector<std::vector<std::size_t>> seen;
    for (std::uint64_t el = 0; el < g.order(); ++el) {
      const auto p = as_permutation(g, el, o.n());
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) REQUIRE(sorted[i] == i);
      for (const auto& [u, v] : edges) {
        const auto nb = o.neighbors(p[u]);
        CHECK(std::binary_search(nb.begin(), nb.end(), p[v]));
      }
      seen.push_back(p);
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
  CHECK(SymmetryGroup(GridSpec::hypercube(5)).order() == factorial(5) * 32);
  CHECK(SymmetryGroup(GridSpec({3, 3})).order() == 8);
  CHECK(SymmetryGroup(GridSpec({4, 3})).order() == 4);
  CHECK(SymmetryGroup(GridSpec({3, 3, 2})).order() == 16);
}

TEST_CASE("canonicalization soundness on random sets") {
  std::mt19937_64 rng(42);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2, 2, 2}, {2, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2}, {3, 3}, {4, 4}, {3, 3, 3}}) {
    const GridSpec spec(dims);
    const SymmetryGroup g(spec);
    for (int trial = 0; trial < 200; ++trial) {
      const SmallSet s = random_small(spec.vertex_count(), rng);
      const SmallSet c = g.canonical(s);
      const SmallSet image = g.apply(rng() % g.order(), s);
      CHECK(g.canonical(image) == c);
      CHECK(std::popcount(c) == std::popcount(s));
      CHECK(g.is_canonical(c));
      CHECK(g.is_canonical(s) == (s == c));
      CHECK_FALSE(lex_less(s, c));
      const int r = 1 + trial % 3;
      CHECK(percolates(spec, from_small(spec, s), r) == percolates(spec, from_small(spec, c), r));
    }
  }
}

TEST_CASE("exact search agrees with exhaustive subsets") {
  const std::vector<std::vector<int>> shapes = {{2, 2}, {2, 2, 2}, {2, 2, 2, 2}, {3, 3}, {3, 2}, {4, 3}, {2, 2, 3}, {5}};
  for (const auto& dims : shapes) {
    const GridSpec spec(dims);
    const oracle::Grid o{dims};
    for (int r = 1; r <= 2 * spec.d(); ++r) {
      INFO(spec.to_string(), " r=", r);
      const std::size_t expect = oracle::min_percolating(o, r);
      for (bool symmetry : {true, false}) {
        SearchConfig config;
        config.spec = spec;
        config.r = r;
        config.symmetry = symmetry;
        const SearchResult res = exact_min(config);
        REQUIRE(res.exact_m.has_value());
        CHECK(*res.exact_m == expect);
        CHECK(res.status == "exact");
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->vertices.size() == expect);
        CHECK(check_witness(*res.witness));
        CHECK(res.lower == expect);
      }
      if (o.n() <= 12) CHECK(naive_min_percolating(spec, r) == expect);
    }
  }
}

TEST_CASE("layer exhaustion") {
  const GridSpec q4 = GridSpec::hypercube(4);
  const LayerOutcome below = exhaust_layer(q4, 3, 5);
  CHECK_FALSE(below.found);
  CHECK(below.exhausted);
  const LayerOutcome at = exhaust_layer(q4, 3, 6);
  CHECK(at.found);
  CHECK(at.witness.size() == 6);
  CHECK(percolates(q4, make_vertex_set(q4, at.witness), 3));
  LayerOptions pruned;
  pruned.prune_dominated = true;
  CHECK(exhaust_layer(q4, 3, 6, pruned).found);
  LayerOptions plain;
  plain.symmetry = false;
  CHECK_FALSE(exhaust_layer(q4, 3, 5, plain).found);
}

TEST_CASE("thread count does not change the answer") {
  SearchConfig config;
  config.spec = GridSpec::hypercube(5);
  config.r = 3;
  const SearchResult one = exact_min(config);
  config.threads = 3;
  const SearchResult three = exact_min(config);
  CHECK(one.exact_m == three.exact_m);
  REQUIRE(one.witness);
  REQUIRE(three.witness);
  CHECK(one.witness->vertices == three.witness->vertices);
  CHECK(*one.exact_m == 8);
}

TEST_CASE("budgets and bad requests") {
  SearchConfig config;
  config.spec = GridSpec::hypercube(5);
  config.r = 3;
  config.node_budget = 5;
  const SearchResult res = exact_min(config);
  CHECK(res.status == "budget-limited");
  CHECK_FALSE(res.proof_of_optimality);

  SearchConfig big;
  big.spec = GridSpec::hypercube(7);
  big.r = 3;
  CHECK_THROWS_AS(exact_min(big), std::invalid_argument);

  SearchConfig seeds;
  seeds.spec = GridSpec::hypercube(3);
  seeds.r = 2;
  seeds.seed_lower = 4;
  seeds.seed_upper = 3;
  CHECK_THROWS_AS(exact_min(seeds), std::invalid_argument);

  SearchConfig zero;
  zero.spec = GridSpec::hypercube(3);
  zero.r = 0;
  CHECK(exact_min(zero).exact_m == std::size_t{0});
}
