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

// Deliberately plain reference implementations used as test oracles. They
// work from coordinates and explicit edge lists and share no code with the
// library beyond the number types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Coords = std::vector<int>;  // 0-based

struct Grid {
  std::vector<int> dims;

  std::size_t n() const {
    std::size_t p = 1;
    for (int a : dims) p *= static_cast<std::size_t>(a);
    return p;
  }
  // Row-major, last axis fastest.
  Coords coords(std::size_t v) const {
    Coords c(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
      c[i] = static_cast<int>(v % static_cast<std::size_t>(dims[i]));
      v /= static_cast<std::size_t>(dims[i]);
    }
    return c;
  }
  std::size_t index(const Coords& c) const {
    std::size_t v = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) v = v * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(c[i]);
    return v;
  }
  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    Coords c = coords(v);
    for (std::size_t i = 0; i < dims.size(); ++i) {
      for (int delta : {-1, 1}) {
        c[i] += delta;
        if (c[i] >= 0 && c[i] < dims[i]) out.push_back(index(c));
        c[i] -= delta;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  /// All edges as (lower, upper) pairs in the library's order: axis-major,
  /// then by lower endpoint.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < dims.size(); ++i)
      for (std::size_t v = 0; v < n(); ++v) {
        Coords c = coords(v);
        if (c[i] + 1 < dims[i]) {
          c[i] += 1;
          out.emplace_back(v, index(c));
        }
      }
    return out;
  }
};

/// Closure by sequential sweeps (each newly infected vertex counts at once).
inline std::vector<bool> closure(const Grid& g, std::vector<bool> infected, int r) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (infected[v]) continue;
      int k = 0;
      for (std::size_t u : g.neighbors(v)) k += infected[u] ? 1 : 0;
      if (k >= r) {
        infected[v] = true;
        changed = true;
      }
    }
  }
  return infected;
}

/// One synchronous step.
inline std::vector<bool> step(const Grid& g, const std::vector<bool>& infected, int r) {
  std::vector<bool> next = infected;
  for (std::size_t v = 0; v < g.n(); ++v) {
    int k = 0;
    for (std::size_t u : g.neighbors(v)) k += infected[u] ? 1 : 0;
    if (k >= r) next[v] = true;
  }
  return next;
}

inline bool percolates(const Grid& g, const std::vector<bool>& infected, int r) {
  const auto c = closure(g, infected, r);
  return std::all_of(c.begin(), c.end(), [](bool b) { return b; });
}

/// Weak saturation by repeated addition of any missing edge that completes
/// a star S_{r+1} at one of its endpoints. Returns the final edge set.
inline std::vector<bool> saturate(const Grid& g, std::vector<bool> present, int r) {
  const auto e = g.edges();
  std::vector<int> deg(g.n(), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (present[i]) {
      ++deg[e[i].first];
      ++deg[e[i].second];
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (present[i]) continue;
      if (deg[e[i].first] >= r || deg[e[i].second] >= r) {
        present[i] = true;
        ++deg[e[i].first];
        ++deg[e[i].second];
        changed = true;
      }
    }
  }
  return present;
}

inline bool weakly_saturated(const Grid& g, const std::vector<bool>& present, int r) {
  const auto s = saturate(g, present, r);
  return std::all_of(s.begin(), s.end(), [](bool b) { return b; });
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  // Pascal's triangle row by row.
  std::vector<mpz_class> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(static_cast<std::size_t>(i + 1), 1);
    for (long j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// The grid recurrence written out directly: the deficient count comes from
/// enumerating the top layer of the shrunken grid and reading off degrees.
inline mpz_class recurrence(std::vector<int> dims, int r, std::map<std::pair<std::vector<int>, int>, mpz_class>& memo) {
  const int d = static_cast<int>(dims.size());
  if (r == 0) return 0;
  const Grid g{dims};
  if (r == 2 * d) return static_cast<unsigned long>(g.edges().size());
  if (std::all_of(dims.begin(), dims.end(), [](int a) { return a == 2; })) {
    if (r >= d + 1) {
      mpz_class p = 1;
      for (int i = 0; i < d - 1; ++i) p *= 2;
      return d * p;
    }
    auto pow2 = [](int e) {
      mpz_class p = 1;
      for (int i = 0; i < e; ++i) p *= 2;
      return p;
    };
    mpz_class total = r * pow2(r - 1);
    for (int j = 1; j <= r - 1; ++j) total += binomial(d - j - 1, r - j) * j * pow2(j - 1);
    return total;
  }
  auto key = std::make_pair(dims, r);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::size_t split = 0;
  while (dims[split] < 3) ++split;
  std::vector<int> shrunk = dims;
  shrunk[split] -= 1;
  std::vector<int> layer = dims;
  layer.erase(layer.begin() + static_cast<long>(split));
  const Grid g1{shrunk};
  unsigned long deficient = 0;
  for (std::size_t v = 0; v < g1.n(); ++v) {
    const Coords c = g1.coords(v);
    if (c[split] != shrunk[split] - 1) continue;
    if (static_cast<int>(g1.neighbors(v).size()) < r) ++deficient;
  }
  mpz_class value = recurrence(shrunk, r, memo) + recurrence(layer, r - 1, memo) + deficient;
  memo.emplace(key, value);
  return value;
}

inline mpz_class recurrence(const std::vector<int>& dims, int r) {
  std::map<std::pair<std::vector<int>, int>, mpz_class> memo;
  return recurrence(dims, r, memo);
}

/// Rank of a rational matrix given as rows, by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rk = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
    std::size_t p = rk;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rk]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rk || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[rk][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

/// Minimum percolating set size by trying all subsets in increasing size.
inline std::size_t min_percolating(const Grid& g, int r) {
  const std::size_t n = g.n();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    std::sort(pick.begin(), pick.end());
    do {
      if (percolates(g, pick, r)) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n;
}

}  // namespace oracle
