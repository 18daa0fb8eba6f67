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

#include "percforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <thread>

#include "percforge/step_kernel.hpp"
#include "percforge/wsat_numbers.hpp"

namespace percforge {

namespace {

std::vector<VertexIndex> members(SmallSet s) {
  std::vector<VertexIndex> out;
  for (; s != 0; s &= s - 1) out.push_back(static_cast<VertexIndex>(std::countr_zero(s)));
  return out;
}

struct Node {
  SmallSet set = 0;
  SmallSet closure = 0;
  int size = 0;
  int last = -1;  // largest vertex in the set
};

/// A unit of work: a node to expand, or a node already known to percolate.
struct Item {
  Node node;
  bool accepted = false;
};

struct ItemResult {
  bool found = false;
  SmallSet witness = 0;
  std::uint64_t nodes = 0;
  std::uint64_t canonical = 0;
  bool complete = false;
};

class LayerSearch {
 public:
  LayerSearch(const GridSpec& spec, int r, std::size_t k, const LayerOptions& options)
      : plan_(spec), r_(r),
        k_(static_cast<int>(k)), n_(static_cast<int>(spec.vertex_count())), all_(plan_.all()), options_(options) {
    if (options.symmetry) group_.emplace(spec);
  }

  LayerOutcome run() {
    LayerOutcome out;
    out.k = static_cast<std::size_t>(k_);
    const Node root{0, plan_.closure(0, r_), 0, -1};
    std::vector<Item> items;
    ItemResult top;
    collect(root, std::min(k_, 2), items, top);

    std::vector<ItemResult> results(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size() || aborted_.load()) return;
        if (i > winner.load()) continue;
        ItemResult& res = results[i];
        if (items[i].accepted) {
          res = ItemResult{true, items[i].node.set, 0, 0, true};
        } else {
          res.complete = true;
          res.found = expand(items[i].node, res, winner, i);
          if (aborted_.load()) res.complete = false;
        }
        if (res.found) {
          std::size_t w = winner.load();
          while (i < w && !winner.compare_exchange_weak(w, i)) {
          }
        }
      }
    };
    const unsigned threads = std::max(1U, options_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    out.nodes = top.nodes;
    out.canonical_visited = top.canonical;
    const std::size_t win = winner.load();
    bool complete = !top_aborted_;
    for (std::size_t i = 0; i < items.size() && i <= win; ++i) {
      out.nodes += results[i].nodes;
      out.canonical_visited += results[i].canonical;
      if (!results[i].complete) complete = false;
    }
    if (win != std::numeric_limits<std::size_t>::max() && complete) {
      out.found = true;
      out.exhausted = true;
      out.witness = members(results[win].witness);
    } else {
      out.exhausted = complete;
    }
    return out;
  }

 private:
  bool charge(std::uint64_t& counter) {
    ++counter;
    if (options_.node_budget && total_.fetch_add(1) + 1 > *options_.node_budget) {
      aborted_.store(true);
      return false;
    }
    return true;
  }

  /// Children of `node` that survive the filters, in vertex order.
  template <typename Visit>
  bool children(const Node& node, std::uint64_t& nodes, Visit&& visit) {
    for (int m = node.last + 1; m < n_; ++m) {
      if (!charge(nodes)) return false;
      const SmallSet bit = SmallSet{1} << m;
      if (options_.prune_dominated && (node.closure & bit)) continue;
      const SmallSet set = node.set | bit;
      if (group_ && !group_->is_canonical(set)) continue;
      const Node child{set, plan_.closure(node.closure | bit, r_), node.size + 1, m};
      if (visit(child)) return true;
    }
    return false;
  }

  /// Whether to look below `node`: false once it percolates or is full, or
  /// when adding every later vertex still cannot percolate.
  bool worth_expanding(const Node& node) const {
    if (node.size >= k_) return false;
    const SmallSet later = node.last + 1 >= n_ ? 0 : all_ & ~((SmallSet{1} << (node.last + 1)) - 1);
    return plan_.closure(node.closure | later, r_) == all_;
  }

  void collect(const Node& node, int depth, std::vector<Item>& items, ItemResult& top) {
    if (aborted_.load()) {
      top_aborted_ = true;
      return;
    }
    ++top.canonical;
    if (node.closure == all_) {
      items.push_back({node, true});
      return;
    }
    if (node.size == depth) {
      items.push_back({node, false});
      return;
    }
    if (!worth_expanding(node)) return;
    children(node, top.nodes, [&](const Node& child) {
      collect(child, depth, items, top);
      return false;
    });
    if (aborted_.load()) top_aborted_ = true;
  }

  bool expand(const Node& node, ItemResult& res, const std::atomic<std::size_t>& winner, std::size_t index) {
    ++res.canonical;
    if (node.closure == all_) {
      res.witness = node.set;
      return true;
    }
    if (aborted_.load() || index > winner.load()) return false;
    if (!worth_expanding(node)) return false;
    return children(node, res.nodes, [&](const Node& child) { return expand(child, res, winner, index); });
  }

  kernels::SmallStepPlan plan_;
  std::optional<SymmetryGroup> group_;
  int r_;
  int k_;
  int n_;
  SmallSet all_;
  LayerOptions options_;
  std::atomic<std::uint64_t> total_{0};
  std::atomic<bool> aborted_{false};
  bool top_aborted_ = false;
};

void check_small(const GridSpec& spec) {
  if (spec.vertex_count() > kSearchVertexLimit)
    throw std::invalid_argument("exact search supports grids with at most 64 vertices");
}

}  // namespace

LayerOutcome exhaust_layer(const GridSpec& spec, int r, std::size_t k, const LayerOptions& options) {
  check_small(spec);
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  LayerSearch search(spec, r, k, options);
  return search.run();
}

SearchResult exact_min(const SearchConfig& config) {
  const GridSpec& spec = config.spec;
  check_small(spec);
  const int r = config.r;
  const int d = spec.d();
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  SearchResult result;
  result.group_order = config.symmetry ? SymmetryGroup(spec).order() : 1;
  const std::size_t n = spec.vertex_count();

  if (r == 0) {
    result.exact_m = 0;
    result.witness = PercolatingWitness{spec, 0, {}, 0, "search"};
    result.proof_of_optimality = true;
    result.status = "exact";
    return result;
  }

  std::size_t lower = 0;
  bool proven_seed = true;
  if (config.seed_lower) {
    proven_seed = false;
    lower = *config.seed_lower;
  } else if (spec.is_hypercube() && r <= d) {
    lower = static_cast<std::size_t>(m_lower_hypercube(d, r).ceil_value.get_ui());
  } else if (r <= 2 * d) {
    lower = static_cast<std::size_t>(m_lower_grid(spec.dims(), r).ceil_value.get_ui());
  } else {
    lower = n;  // no vertex ever has r neighbours
  }

  PercolatingWitness best;
  if (spec.is_hypercube() && r <= d) {
    best = best_set(d, r);
  } else {
    std::vector<VertexIndex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<VertexIndex>(v);
    best = PercolatingWitness{spec, r, std::move(all), n, "base-all"};
  }
  if (config.seed_upper && lower > *config.seed_upper)
    throw std::invalid_argument("seed_lower exceeds seed_upper");

  std::size_t upper = best.vertices.size();
  long proven = -1;  // largest layer shown to contain no percolating set
  std::size_t k = lower > 0 ? lower - 1 : 0;
  k = std::min(k, upper > 0 ? upper - 1 : 0);
  bool limited = false;
  while (static_cast<std::size_t>(proven + 1) < upper) {
    if (config.size_budget && k > *config.size_budget) {
      limited = true;
      break;
    }
    LayerOptions opts;
    opts.symmetry = config.symmetry;
    opts.prune_dominated = proven == static_cast<long>(k) - 1;
    opts.threads = config.threads;
    if (config.node_budget) {
      if (result.nodes_explored >= *config.node_budget) {
        limited = true;
        break;
      }
      opts.node_budget = *config.node_budget - result.nodes_explored;
    }
    LayerOutcome layer = exhaust_layer(spec, r, k, opts);
    result.nodes_explored += layer.nodes;
    result.layers.push_back(layer);
    if (!layer.exhausted) {
      limited = true;
      break;
    }
    if (layer.found) {
      best = PercolatingWitness{spec, r, layer.witness, layer.witness.size(), "search"};
      upper = layer.witness.size();
      if (upper == 0) break;
      k = upper - 1;
    } else {
      proven = static_cast<long>(k);
      ++k;
    }
  }

  std::string reason;
  if (!check_witness(best, &reason)) throw std::logic_error("search witness failed re-simulation: " + reason);
  result.witness = best;
  result.lower = static_cast<std::size_t>(proven + 1);
  if (proven_seed) result.lower = std::max(result.lower, lower);
  if (!limited && static_cast<std::size_t>(proven + 1) >= upper) {
    result.exact_m = upper;
    result.proof_of_optimality = proven + 1 == static_cast<long>(upper) && upper > 0;
    result.status = "exact";
  } else {
    result.status = "budget-limited";
  }
  return result;
}

std::size_t naive_min_percolating(const GridSpec& spec, int r) {
  check_small(spec);
  const kernels::SmallStepPlan plan(spec);
  const std::size_t n = spec.vertex_count();
  if (n > 24) throw std::invalid_argument("naive enumeration is limited to 24 vertices");
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      if (plan.closure(0, r) == plan.all()) return 0;
      continue;
    }
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (plan.closure(s, r) == plan.all()) return k;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t rr = s + c;
      s = (((rr ^ s) >> 2) / c) | rr;
    }
  }
  return n;
}

}  // namespace percforge
