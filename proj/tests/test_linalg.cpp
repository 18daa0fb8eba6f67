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
#include "percforge/audit.hpp"
#include "percforge/edge_vectors.hpp"
#include "percforge/rational.hpp"
#include "percforge/subspace.hpp"
#include "percforge/wsat_numbers.hpp"

using namespace percforge;

namespace {

std::vector<RationalVector> rows_of(const RationalMatrix& m) {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const int roll = static_cast<int>(rng() % 10);
      if (roll < 4) continue;
      m(i, j) = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 4));
      m(i, j).canonicalize();
    }
  // Duplicate a row now and then to force dependence.
  if (rows >= 2 && rng() % 2) {
    for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 3 - m(1, j);
  }
  return m;
}

/// Rank of the columns of the basis outside T, by the test's own elimination.
std::size_t rank_outside(const SupportSubspace& x, const std::vector<std::size_t>& t) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < x.basis.rows(); ++i) {
    RationalVector row;
    for (std::size_t j = 0; j < x.k; ++j)
      if (!std::binary_search(t.begin(), t.end(), j)) row.push_back(x.basis(i, j));
    rows.push_back(row);
  }
  return oracle::rank(rows);
}

std::size_t support(const RationalVector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; }));
}

bool in_row_space(const RationalMatrix& basis, const RationalVector& v) {
  auto rows = rows_of(basis);
  const std::size_t before = oracle::rank(rows);
  rows.push_back(v);
  return oracle::rank(rows) == before;
}

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("49/4")) == "49/4");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-8/4")) == "-2");
  CHECK(to_string(parse_rational("0")) == "0");
  for (const char* bad : {"", "1/0", "abc", "1/", "1.5"}) CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  CHECK(ceil(Rational(49, 4)) == 13);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(ceil(Rational(12)) == 12);
}

TEST_CASE("rank and left nullspace against plain elimination") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    const RationalMatrix m = random_matrix(rows, cols, rng);
    const RankResult rk = rank(m);
    CHECK(rk.rank == oracle::rank(rows_of(m)));
    CHECK(rk.rank == rank(m.transpose()).rank);
    CHECK(rk.pivot_columns.size() == rk.rank);
    CHECK(oracle::rank(rows_of(m.select_columns(rk.pivot_columns).transpose())) == rk.rank);
    const RationalMatrix ns = left_nullspace(m);
    CHECK(ns.rows() == rows - rk.rank);
    for (std::size_t i = 0; i < ns.rows(); ++i) {
      RationalVector acc(cols, 0);
      for (std::size_t r = 0; r < rows; ++r) axpy(acc, ns(i, r), m.row(r));
      CHECK(is_zero(acc));
    }
    if (ns.rows() > 0) CHECK(oracle::rank(rows_of(ns)) == ns.rows());
  }
}

TEST_CASE("primitive integer scaling") {
  const auto v = primitive_integer({Rational(0), Rational(-2, 3), Rational(4, 9)});
  CHECK(v == std::vector<BigInt>{0, 3, -2});
  CHECK(primitive_integer({Rational(0), Rational(0)}) == std::vector<BigInt>{0, 0});
}

TEST_CASE("support subspaces are in general position") {
  for (std::size_t k = 0; k <= 9; ++k)
    for (std::size_t ell = 0; ell <= std::min<std::size_t>(k, 5); ++ell) {
      const SupportSubspace x = build_support_subspace(k, ell);
      CHECK(x.basis.rows() == k - ell);
      CHECK(certify_support(x).ok);
      // Independent check: every ell-subset leaves full rank.
      std::vector<bool> pick(k, false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(ell), true);
      std::sort(pick.begin(), pick.end());
      do {
        std::vector<std::size_t> t;
        for (std::size_t j = 0; j < k; ++j)
          if (pick[j]) t.push_back(j);
        CHECK(rank_outside(x, t) == k - ell);
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
}

TEST_CASE("a degenerate basis is caught") {
  SupportSubspace x{4, 1, RationalMatrix(3, 4)};
  // Rows e1, e2, e3: the vector e1 has support 1 < ell + 1.
  for (std::size_t i = 0; i < 3; ++i) x.basis(i, i) = 1;
  const SupportCheck c = certify_support(x);
  CHECK_FALSE(c.ok);
  CHECK(c.failing_set.size() == 1);
}

TEST_CASE("support vectors and derived subspaces") {
  const SupportSubspace x = build_support_subspace(7, 3);
  const std::vector<std::size_t> t{0, 2, 3, 6};
  const RationalVector z = find_support_vector(x, t);
  CHECK(support(z) == 4);
  for (std::size_t j : t) CHECK(z[j] != 0);
  CHECK(z[0] == 1);
  CHECK(in_row_space(x.basis, z));

  CHECK(lex_first_subset({1, 3, 4, 6, 8}, 3, 6) == std::vector<std::size_t>{1, 3, 6});
  CHECK(lex_first_subset({1, 3, 4, 6, 8}, 3, 1) == std::vector<std::size_t>{1, 3, 4});
  CHECK_THROWS(lex_first_subset({1, 3}, 3, 1));

  // Projection drops one coordinate: dimension stays, threshold drops by one.
  const std::vector<std::size_t> keep{0, 1, 2, 3, 4, 5};
  const SupportSubspace p = project(x, keep);
  CHECK(p.k == 6);
  CHECK(p.basis.rows() == 4);
  CHECK(p.ell == 2);
  CHECK(certify_support(p).ok);

  // Shear by z on pivot 6, then project: dimension drops by one.
  const SupportSubspace s = shear_project(x, z, 6, keep);
  CHECK(s.basis.rows() == 3);
  CHECK(certify_support(s).ok);
  for (std::size_t i = 0; i < s.basis.rows(); ++i) {
    // Every row lifts to a vector of X vanishing at the pivot.
    RationalVector lifted(7, 0);
    for (std::size_t j = 0; j < 6; ++j) lifted[j] = s.basis(i, j);
    CHECK(in_row_space(x.basis, lifted));
  }

  const SupportSubspace rz = restrict_zero(x, {6}, keep);
  CHECK(rz.basis.rows() == 3);
  CHECK(certify_support(rz).ok);
}

TEST_CASE("edge vector families reach the wsat rank") {
  for (const auto& dims : grid_shapes(40)) {
    const GridSpec spec(dims);
    if (spec.edge_count() > 60) continue;
    for (int r = 0; r <= 2 * spec.d(); ++r) {
      INFO(spec.to_string(), " r=", r);
      const RankCertificate cert = assemble_lower_bound(spec, r);
      const BigInt expect = oracle::recurrence(dims, r);
      CHECK(BigInt(static_cast<unsigned long>(cert.rank)) == expect);
      CHECK(cert.wsat_lower == expect);
      CHECK(verify_relations(cert.family).ok);
      // Rank by the test's own elimination over the columns f_e.
      const RationalMatrix m = family_matrix(cert.family);
      CHECK(oracle::rank(rows_of(m.transpose())) == cert.rank);
      CHECK(recheck_rank_certificate(cert).ok);
      if (r > 0) CHECK(cert.m_lower == ceil(Rational(expect, BigInt(r))));
    }
  }
}

TEST_CASE("tampered rank certificates are rejected") {
  const RankCertificate good = assemble_lower_bound(GridSpec({3, 3}), 2);
  REQUIRE(recheck_rank_certificate(good).ok);

  RankCertificate c = good;
  c.rank += 1;
  CHECK_FALSE(recheck_rank_certificate(c).ok);

  c = good;
  c.family.vectors[0][0] += 1;
  CHECK_FALSE(recheck_rank_certificate(c).ok);

  c = good;
  c.pivot_edges[0] = c.pivot_edges[1];
  CHECK_FALSE(recheck_rank_certificate(c).ok);

  c = good;
  c.family.subspace.basis(0, 0) = 0;
  c.family.subspace.basis(0, 1) = 0;
  c.family.subspace.basis(0, 2) = 0;
  CHECK_FALSE(recheck_rank_certificate(c).ok);
}
