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
#include "percforge/grid.hpp"
#include "percforge/subgrid.hpp"

using namespace percforge;

namespace {

const std::vector<std::vector<int>> kShapes = {{}, {2}, {5}, {2, 2}, {3, 3}, {2, 3, 4}, {4, 2, 3}, {2, 2, 2, 2, 2}, {3, 5, 2}};

}  // namespace

TEST_CASE("parse and print") {
  CHECK(GridSpec::parse("Q5").dims() == std::vector<int>(5, 2));
  CHECK(GridSpec::parse("q0").d() == 0);
  CHECK(GridSpec::parse("3x4x2").dims() == std::vector<int>{3, 4, 2});
  CHECK(GridSpec::parse("7").dims() == std::vector<int>{7});
  CHECK(GridSpec::parse("3x4").to_string() == "3x4");
  CHECK(GridSpec::parse("Q0").to_string() == "Q0");
  for (const char* bad : {"", "Q", "3x", "x3", "3xx4", "3x1", "Q-1", "Q29", "abc", "3 x 4", "3x4 "})
    CHECK_THROWS_AS(GridSpec::parse(bad), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(std::vector<int>{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(std::vector<int>(29, 2)), std::invalid_argument);
}

TEST_CASE("hypercube detection") {
  CHECK(GridSpec::hypercube(4).is_hypercube());
  CHECK(GridSpec::parse("2x2").is_hypercube());
  CHECK_FALSE(GridSpec::parse("2x3").is_hypercube());
}

TEST_CASE("coordinates and neighbours match the coordinate oracle") {
  for (const auto& dims : kShapes) {
    const GridSpec g(dims);
    const oracle::Grid o{dims};
    REQUIRE(g.vertex_count() == o.n());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      auto c = g.coords(v);
      for (auto& x : c) x -= 1;
      CHECK(c == o.coords(v));
      CHECK(g.index_of(g.coords(v)) == v);
      auto nb = g.neighbors(v);
      std::sort(nb.begin(), nb.end());
      const auto expect = o.neighbors(v);
      CHECK(std::equal(nb.begin(), nb.end(), expect.begin(), expect.end()));
      CHECK(g.degree(v) == static_cast<int>(expect.size()));
    }
  }
}

TEST_CASE("edge enumeration order and round trip") {
  for (const auto& dims : kShapes) {
    const GridSpec g(dims);
    const auto expect = oracle::Grid{dims}.edges();
    REQUIRE(g.edge_count() == expect.size());
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
      const EdgeId e = g.edge_at(i);
      CHECK(e.lower == expect[i].first);
      CHECK(g.upper(e) == expect[i].second);
      CHECK(g.edge_index(e) == i);
      CHECK(g.edge_between(static_cast<VertexIndex>(expect[i].second), static_cast<VertexIndex>(expect[i].first)) == e);
    }
  }
  const GridSpec g({3, 3});
  CHECK_THROWS(g.edge_between(0, 4));
  CHECK_THROWS(g.edge_between(0, 0));
}

TEST_CASE("labels follow the parity of the smaller coordinate") {
  for (const auto& dims : kShapes) {
    const GridSpec g(dims);
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
      const EdgeId e = g.edge_at(i);
      const int lower1 = g.coords(e.lower)[static_cast<std::size_t>(e.axis)];
      const int expect = lower1 % 2 == 1 ? 2 * e.axis + 1 : 2 * e.axis + 2;
      CHECK(g.edge_label(e, e.lower).label == expect);
      CHECK(g.edge_label(e, g.upper(e)).label == expect);
      CHECK(g.resolve_label(e.lower, expect) == e);
      CHECK(g.resolve_label(g.upper(e), expect) == e);
    }
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      const auto labels = g.incident_labels(v).labels;
      CHECK(std::is_sorted(labels.begin(), labels.end()));
      CHECK(static_cast<int>(labels.size()) == g.degree(v));
      CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
      for (int label = 1; label <= 2 * g.d(); ++label)
        CHECK(g.try_resolve_label(v, label).has_value() == std::binary_search(labels.begin(), labels.end(), label));
    }
  }
  const GridSpec q = GridSpec::hypercube(4);
  for (EdgeIndex i = 0; i < q.edge_count(); ++i) CHECK(label_is_odd(q.edge_label(q.edge_at(i), q.edge_at(i).lower).label));
  CHECK_THROWS(q.resolve_label(0, 2));
  CHECK_THROWS(q.resolve_label(16, 1));
}

TEST_CASE("subgrid embeddings keep coordinates and labels") {
  const GridSpec g({4, 3, 5});
  for (int axis = 0; axis < g.d(); ++axis) {
    const auto shrink = SubgridEmbedding::shrink(g, axis);
    CHECK(shrink.sub().side(axis) == g.side(axis) - 1);
    for (VertexIndex u = 0; u < shrink.sub().vertex_count(); ++u)
      CHECK(shrink.sub().coords(u) == g.coords(shrink.vertex(u)));
    for (EdgeIndex e = 0; e < shrink.sub().edge_count(); ++e) {
      const EdgeId se = shrink.sub().edge_at(e);
      const EdgeId pe = g.edge_at(shrink.edge(e));
      CHECK(g.edge_label(pe, pe.lower).label == shrink.label(shrink.sub().edge_label(se, se.lower).label));
    }
    const auto top = SubgridEmbedding::layer(g, axis, g.side(axis) - 1);
    CHECK(top.sub().d() == g.d() - 1);
    for (VertexIndex u = 0; u < top.sub().vertex_count(); ++u)
      CHECK(g.coord0(top.vertex(u), axis) == g.side(axis) - 1);
  }
}
