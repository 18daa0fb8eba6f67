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

#include "percforge/wsat_numbers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace percforge {

namespace {

BigInt pow2(long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

void check_dims(const std::vector<int>& dims) {
  for (int a : dims)
    if (a < 2) throw std::domain_error("grid side lengths must be at least 2");
}

bool all_two(const std::vector<int>& dims) {
  return std::all_of(dims.begin(), dims.end(), [](int a) { return a == 2; });
}

BigInt edge_total(const std::vector<int>& dims) {
  BigInt total = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    BigInt term = dims[j] - 1;
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (i != j) term *= dims[i];
    total += term;
  }
  return total;
}

/// Coefficients of prod_j (c_j + x_j t) as a polynomial in t.
std::vector<BigInt> product_poly(const std::vector<std::pair<BigInt, BigInt>>& factors) {
  std::vector<BigInt> poly{1};
  for (const auto& [c, x] : factors) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t s = 0; s < poly.size(); ++s) {
      next[s] += poly[s] * c;
      next[s + 1] += poly[s] * x;
    }
    poly = std::move(next);
  }
  return poly;
}

using MemoKey = std::pair<std::vector<int>, int>;

BigInt recurrence(const std::vector<int>& dims, int r, ReductionAxis policy, std::map<MemoKey, BigInt>& memo) {
  const int d = static_cast<int>(dims.size());
  if (r == 0) return 0;
  if (r == 2 * d) return edge_total(dims);
  if (all_two(dims)) {
    if (r >= d + 1) return BigInt(d) * pow2(d - 1);
    return wsat_hypercube(d, r);
  }
  MemoKey key{dims, r};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int split = -1;
  if (policy == ReductionAxis::kLowest) {
    for (int i = 0; i < d && split < 0; ++i)
      if (dims[static_cast<std::size_t>(i)] >= 3) split = i;
  } else {
    for (int i = d - 1; i >= 0 && split < 0; --i)
      if (dims[static_cast<std::size_t>(i)] >= 3) split = i;
  }
  std::vector<int> shrunk = dims;
  shrunk[static_cast<std::size_t>(split)] -= 1;
  std::vector<int> layer = dims;
  layer.erase(layer.begin() + split);

  BigInt value = recurrence(shrunk, r, policy, memo) + recurrence(layer, r - 1, policy, memo) +
                 deficient_layer_count(dims, split, r);
  memo.emplace(std::move(key), value);
  return value;
}

}  // namespace

BigInt binomial(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt wsat_hypercube(int d, int r) {
  if (r < 0 || d < r) throw std::domain_error("wsat_hypercube needs d >= r >= 0 (got d=" + std::to_string(d) + ", r=" + std::to_string(r) + ")");
  if (r == 0) return 0;
  BigInt total = BigInt(r) * pow2(r - 1);
  for (int j = 1; j <= r - 1; ++j) total += binomial(d - j - 1, r - j) * j * pow2(j - 1);
  return total;
}

BigInt wsat_grid_closed(const std::vector<int>& dims, int r) {
  check_dims(dims);
  const int d = static_cast<int>(dims.size());
  if (r < 1 || d < r) throw std::domain_error("wsat_grid_closed needs d >= r >= 1");
  // Group the subsets S by size: e_s = sum_{|S| = s} prod_{i in S} (a_i - 2).
  std::vector<std::pair<BigInt, BigInt>> factors;
  for (int a : dims) factors.emplace_back(1, a - 2);
  const auto e = product_poly(factors);
  BigInt total = 0;
  for (int s = 0; s <= r - 1; ++s) {
    const int rr = r - s;
    const int dd = d - s;
    BigInt inner = BigInt(rr) * pow2(rr - 1);
    for (int j = 1; j <= rr - 1; ++j) inner += binomial(dd - j - 1, rr - j) * j * pow2(j - 1);
    total += e[static_cast<std::size_t>(s)] * inner;
  }
  return total;
}

BigInt w_recurrence(const std::vector<int>& dims, int r, ReductionAxis axis) {
  check_dims(dims);
  const int d = static_cast<int>(dims.size());
  if (r < 0 || r > 2 * d) throw std::domain_error("w_recurrence needs 0 <= r <= 2d");
  std::map<MemoKey, BigInt> memo;
  return recurrence(dims, r, axis, memo);
}

BigInt deficient_layer_count(const std::vector<int>& dims, int split_axis, int r) {
  const int d = static_cast<int>(dims.size());
  std::vector<std::pair<BigInt, BigInt>> factors;
  for (int j = 0; j < d; ++j)
    if (j != split_axis) factors.emplace_back(dims[static_cast<std::size_t>(j)] - 2, 2);
  const auto poly = product_poly(factors);
  BigInt total = 0;
  for (int s = std::max(0, 2 * d - r); s < static_cast<int>(poly.size()); ++s) total += poly[static_cast<std::size_t>(s)];
  return total;
}

ExactBound m_lower_hypercube(int d, int r) {
  if (r < 1 || d < r) throw std::domain_error("m_lower_hypercube needs d >= r >= 1");
  Rational value = Rational(pow2(r - 1));
  for (int j = 1; j <= r - 1; ++j) value += Rational(binomial(d - j - 1, r - j) * j * pow2(j - 1), BigInt(r));
  value.canonicalize();
  return ExactBound{value, ceil(value), BoundKind::kLower};
}

ExactBound m_lower_grid(const std::vector<int>& dims, int r) {
  check_dims(dims);
  const int d = static_cast<int>(dims.size());
  if (r < 1 || r > 2 * d) throw std::domain_error("m_lower_grid needs 1 <= r <= 2d");
  Rational value(w_recurrence(dims, r), BigInt(r));
  value.canonicalize();
  return ExactBound{value, ceil(value), BoundKind::kLower};
}

BigInt m_lower_grid_r2(const std::vector<int>& dims) {
  check_dims(dims);
  BigInt sum = 0;
  for (int a : dims) sum += a - 1;
  return ceil(Rational(sum, 2)) + 1;
}

}  // namespace percforge
