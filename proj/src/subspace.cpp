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

#include "percforge/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace percforge {

namespace {

RationalVector to_rational(const std::vector<BigInt>& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

/// Independent rows of `rows`, rescaled to primitive integers.
SupportSubspace rebase(const std::vector<RationalVector>& rows, std::size_t k) {
  SupportSubspace out;
  out.k = k;
  if (rows.empty()) {
    out.ell = k;
    out.basis = RationalMatrix(0, k);
    return out;
  }
  const RationalMatrix m = RationalMatrix::from_rows(rows, k);
  const RankResult rr = rank(m.transpose());
  std::vector<RationalVector> kept;
  for (std::size_t i : rr.pivot_columns) kept.push_back(to_rational(primitive_integer(rows[i])));
  out.ell = k - kept.size();
  out.basis = RationalMatrix::from_rows(kept, k);
  return out;
}

std::vector<std::size_t> complement(std::size_t k, const std::vector<std::size_t>& t) {
  std::vector<bool> in(k, false);
  for (std::size_t j : t) in[j] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < k; ++j)
    if (!in[j]) out.push_back(j);
  return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t m = c.size();
  for (std::size_t i = m; i-- > 0;) {
    if (c[i] < n - m + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RationalVector combine_rows(const RationalVector& c, const RationalMatrix& b) {
  if (c.size() != b.rows()) throw std::invalid_argument("combine_rows length mismatch");
  RationalVector out(b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (sgn(c[i]) == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (sgn(b(i, j)) != 0) out[j] += c[i] * b(i, j);
  }
  return out;
}

SupportSubspace build_support_subspace(std::size_t k, std::size_t ell) {
  if (ell > k) throw std::domain_error("support subspace needs k >= ell");
  SupportSubspace x{k, ell, RationalMatrix(k - ell, k)};
  for (std::size_t i = 1; i <= k - ell; ++i) {
    BigInt power = 1;
    for (std::size_t j = 0; j < ell; ++j) {
      power *= static_cast<unsigned long>(i);
      x.basis(i - 1, j) = power;
    }
    x.basis(i - 1, ell + i - 1) = 1;
  }
  const SupportCheck check = certify_support(x);
  if (!check.ok) throw std::logic_error("support subspace failed certification");
  return x;
}

SupportCheck certify_support(const SupportSubspace& x, std::optional<std::size_t> sample, std::uint64_t seed) {
  SupportCheck out;
  const std::size_t dim = x.k - x.ell;
  if (x.basis.rows() != dim || x.basis.cols() != x.k || rank(x.basis.transpose()).rank != dim) {
    out.ok = false;
    return out;
  }
  auto check_one = [&](const std::vector<std::size_t>& t) {
    ++out.checks;
    if (rank(x.basis.select_columns(complement(x.k, t))).rank == dim) return true;
    out.ok = false;
    out.failing_set = t;
    return false;
  };
  if (sample) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> all(x.k);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t s = 0; s < *sample; ++s) {
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<std::size_t> t(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(x.ell));
      std::sort(t.begin(), t.end());
      if (!check_one(t)) return out;
    }
    return out;
  }
  std::vector<std::size_t> t(x.ell);
  std::iota(t.begin(), t.end(), 0);
  do {
    if (!check_one(t)) return out;
  } while (next_combination(t, x.k));
  return out;
}

RationalVector find_support_vector(const SupportSubspace& x, const std::vector<std::size_t>& t) {
  if (t.size() != x.ell + 1) throw std::invalid_argument("support set must have ell + 1 elements");
  const RationalMatrix off = x.basis.select_columns(complement(x.k, t));
  const RationalMatrix null = left_nullspace(off);
  if (null.rows() != 1) throw std::logic_error("subspace is not in general position on the requested support");
  RationalVector v = combine_rows(null.row(0), x.basis);
  std::size_t support = 0;
  Rational lead = 0;
  for (const auto& c : v)
    if (sgn(c) != 0) {
      if (support++ == 0) lead = c;
    }
  for (std::size_t j : t)
    if (sgn(v[j]) == 0) throw std::logic_error("support vector vanishes inside the requested support");
  if (support != t.size()) throw std::logic_error("support vector leaks outside the requested support");
  for (auto& c : v) c /= lead;
  return v;
}

std::vector<std::size_t> lex_first_subset(const std::vector<std::size_t>& pool, std::size_t size, std::size_t must) {
  std::vector<std::size_t> out{must};
  for (std::size_t j : pool) {
    if (out.size() == size) break;
    if (j != must) out.push_back(j);
  }
  if (out.size() != size || std::find(pool.begin(), pool.end(), must) == pool.end())
    throw std::invalid_argument("pool too small for the requested subset");
  std::sort(out.begin(), out.end());
  return out;
}

SupportSubspace shear_project(const SupportSubspace& x, const RationalVector& z, std::size_t p,
                              const std::vector<std::size_t>& keep) {
  if (sgn(z[p]) == 0) throw std::invalid_argument("shear pivot must lie in the support of z");
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < x.basis.rows(); ++i) {
    RationalVector b = x.basis.row(i);
    const Rational f = -b[p] / z[p];
    axpy(b, f, z);
    RationalVector kept;
    for (std::size_t j : keep) kept.push_back(b[j]);
    rows.push_back(std::move(kept));
  }
  return rebase(rows, keep.size());
}

SupportSubspace project(const SupportSubspace& x, const std::vector<std::size_t>& keep) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < x.basis.rows(); ++i) {
    RationalVector kept;
    for (std::size_t j : keep) kept.push_back(x.basis(i, j));
    rows.push_back(std::move(kept));
  }
  return rebase(rows, keep.size());
}

SupportSubspace restrict_zero(const SupportSubspace& x, const std::vector<std::size_t>& zero,
                              const std::vector<std::size_t>& keep) {
  const RationalMatrix null = left_nullspace(x.basis.select_columns(zero));
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < null.rows(); ++i) {
    const RationalVector v = combine_rows(null.row(i), x.basis);
    RationalVector kept;
    for (std::size_t j : keep) kept.push_back(v[j]);
    rows.push_back(std::move(kept));
  }
  return rebase(rows, keep.size());
}

}  // namespace percforge
