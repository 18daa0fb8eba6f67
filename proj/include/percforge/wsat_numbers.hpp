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

// Closed forms and the grid recurrence for weak saturation numbers of stars
// and the percolating-set lower bounds they imply. Everything is exact.

#include <vector>

#include "percforge/rational.hpp"

namespace percforge {

enum class BoundKind { kLower, kUpper, kExact };

struct ExactBound {
  Rational value;
  BigInt ceil_value;
  BoundKind kind = BoundKind::kLower;
};

/// C(n, k), zero when k < 0 or n < k.
BigInt binomial(long n, long k);

/// wsat(Q_d, S_{r+1}) for d >= r >= 0.
BigInt wsat_hypercube(int d, int r);

/// wsat(prod [a_i], S_{r+1}) by the subset-sum closed form, d >= r >= 1.
BigInt wsat_grid_closed(const std::vector<int>& dims, int r);

/// Which axis with a_i >= 3 the recurrence shrinks first.
enum class ReductionAxis { kLowest, kHighest };

/// w_r(a_1..a_d) for 0 <= r <= 2d. The hypercube bullet sums j up to r-1.
BigInt w_recurrence(const std::vector<int>& dims, int r, ReductionAxis axis = ReductionAxis::kLowest);

/// Number of vertices v in the top layer of G_1 (split along `split_axis`)
/// whose G_1-degree is below r:
/// sum over S subset of the other axes with |S| >= 2d - r of 2^|S| prod_{j not in S} (a_j - 2).
BigInt deficient_layer_count(const std::vector<int>& dims, int split_axis, int r);

/// Lower bound on m(Q_d, r): 2^{r-1} + sum_j C(d-j-1, r-j) j 2^{j-1} / r.
ExactBound m_lower_hypercube(int d, int r);

/// ceil(w_r(dims) / r) as a lower bound on m(prod [a_i], r), 1 <= r <= 2d.
ExactBound m_lower_grid(const std::vector<int>& dims, int r);

/// ceil(sum (a_i - 1) / 2) + 1.
BigInt m_lower_grid_r2(const std::vector<int>& dims);

}  // namespace percforge
