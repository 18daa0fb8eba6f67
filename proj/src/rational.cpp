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

#include "percforge/rational.hpp"

#include <map>
#include <stdexcept>

namespace percforge {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

BigInt ceil(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
  return out;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

RationalVector& axpy(RationalVector& y, const Rational& a, const RationalVector& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy length mismatch");
  if (sgn(a) == 0) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  return y;
}

namespace {

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

}  // namespace

std::vector<BigInt> primitive_integer(const RationalVector& v) {
  BigInt lcm = 1;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
  }
  make_primitive(out);
  return out;
}

RankResult rank(const RationalMatrix& m) {
  RankResult result;
  // Echelon basis keyed by leading index; reducing in ascending key order
  // never reintroduces an entry at an already-processed pivot. The whole
  // vector is rescaled, including entries before the pivot.
  std::map<std::size_t, std::vector<BigInt>> basis;
  BigInt a, b;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<BigInt> v = primitive_integer(m.column(j));
    for (auto& [pivot, row] : basis) {
      if (sgn(v[pivot]) == 0) continue;
      a = row[pivot];
      b = v[pivot];
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0 && sgn(row[i]) == 0) continue;
        v[i] = a * v[i] - b * row[i];
      }
      make_primitive(v);
    }
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) {
        lead = i;
        break;
      }
    if (lead == v.size()) continue;
    basis.emplace(lead, std::move(v));
    result.pivot_columns.push_back(j);
  }
  result.rank = result.pivot_columns.size();
  return result;
}

RationalMatrix left_nullspace(const RationalMatrix& m) {
  // Solve m^T c = 0 by Gauss-Jordan elimination.
  RationalMatrix a = m.transpose();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    const Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(a(r, k)) != 0) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    out.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(out, cols);
}

}  // namespace percforge
