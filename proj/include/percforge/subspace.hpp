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

// Subspaces X of Q^k of codimension l in which every non-zero vector has
// support of size at least l + 1. All coordinate indices here are 0-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "percforge/rational.hpp"

namespace percforge {

struct SupportSubspace {
  std::size_t k = 0;
  std::size_t ell = 0;
  RationalMatrix basis;  // k - ell rows, primitive integer entries
};

/// Rows (i, i^2, ..., i^ell) followed by the i-th unit vector, i = 1..k-ell.
/// Throws std::logic_error if certification fails.
SupportSubspace build_support_subspace(std::size_t k, std::size_t ell);

struct SupportCheck {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::size_t> failing_set;  // the T whose complement lost rank
};

/// The basis has k - ell independent rows and, for every ell-set T (or
/// `sample` random ones), the columns outside T still have rank k - ell.
SupportCheck certify_support(const SupportSubspace& x, std::optional<std::size_t> sample = std::nullopt,
                             std::uint64_t seed = 1);

/// The vector of X supported exactly on T (|T| = ell + 1), scaled so its
/// first non-zero entry is 1. Throws std::logic_error if X is not in
/// general position on T.
RationalVector find_support_vector(const SupportSubspace& x, const std::vector<std::size_t>& t);

/// Lexicographically first `size`-subset of `pool` (ascending) containing `must`.
std::vector<std::size_t> lex_first_subset(const std::vector<std::size_t>& pool, std::size_t size, std::size_t must);

/// pi(T_z(X)) with T_z(x) = x - (x_p / z_p) z, pi keeping coordinates `keep`.
SupportSubspace shear_project(const SupportSubspace& x, const RationalVector& z, std::size_t p,
                              const std::vector<std::size_t>& keep);

/// pi(X) for the coordinates `keep`.
SupportSubspace project(const SupportSubspace& x, const std::vector<std::size_t>& keep);

/// {x in X : x_j = 0 for j in `zero`}, then projected to `keep`.
SupportSubspace restrict_zero(const SupportSubspace& x, const std::vector<std::size_t>& zero,
                              const std::vector<std::size_t>& keep);

/// c * B for a row vector c.
RationalVector combine_rows(const RationalVector& c, const RationalMatrix& b);

}  // namespace percforge
