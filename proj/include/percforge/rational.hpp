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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace percforge {

using BigInt = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
Rational parse_rational(std::string_view text);

BigInt ceil(const Rational& q);

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;
  RationalMatrix transpose() const;
  /// Keeps the listed columns, in the given order.
  RationalMatrix select_columns(const std::vector<std::size_t>& cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankResult {
  std::size_t rank = 0;
  /// Columns not in the span of the columns before them (the pivot columns
  /// of the row echelon form), ascending.
  std::vector<std::size_t> pivot_columns;
};

/// Exact rank by fraction-free elimination on primitive integer vectors.
RankResult rank(const RationalMatrix& m);

/// Basis (as rows) of {c : c * m = 0}, one vector per free variable.
RationalMatrix left_nullspace(const RationalMatrix& m);

/// Scales a rational vector to a primitive integer vector (gcd 1, first
/// nonzero entry positive). The zero vector is returned unchanged.
std::vector<BigInt> primitive_integer(const RationalVector& v);

bool is_zero(const RationalVector& v);

/// Integer linear combination helpers.
RationalVector& axpy(RationalVector& y, const Rational& a, const RationalVector& x);  // y += a x

}  // namespace percforge
