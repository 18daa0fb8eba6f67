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

// Edge-vector families {f_e} in Q^w whose star relations come from a support
// subspace X, and the rank certificates built on them.

#include <cstddef>
#include <string>
#include <vector>

#include "percforge/grid.hpp"
#include "percforge/rational.hpp"
#include "percforge/subspace.hpp"

namespace percforge {

/// How the coordinates of X name the edges at a vertex: directions 0..d-1
/// (hypercube route, coordinate j is label 2j+1) or labels 1..2d (coordinate
/// j is label j+1).
enum class CoordinateKind { kDirections, kLabels };

struct EdgeVectorFamily {
  GridSpec spec;
  int r = 0;
  std::size_t w = 0;
  std::vector<RationalVector> vectors;  // by edge index, each of length w
  SupportSubspace subspace;
  CoordinateKind coords = CoordinateKind::kDirections;
};

struct FamilyOptions {
  /// Re-certify every derived child subspace (support threshold and
  /// dimension). Grids with more than `full_check_edges` edges are sampled.
  bool recertify = true;
  std::size_t full_check_edges = 256;
  std::size_t sample_checks = 64;
};

EdgeVectorFamily build_edge_vectors_hypercube(int d, int r, const FamilyOptions& options = {});
/// Uses the given X in Q^d (dimension d - r, supports at least r + 1).
EdgeVectorFamily build_edge_vectors_hypercube(int d, int r, const SupportSubspace& x, const FamilyOptions& options = {});

EdgeVectorFamily build_edge_vectors_grid(const std::vector<int>& dims, int r, const FamilyOptions& options = {});
/// Uses the given X in Q^{2d} (dimension 2d - r, supports at least r + 1).
EdgeVectorFamily build_edge_vectors_grid(const std::vector<int>& dims, int r, const SupportSubspace& x,
                                         const FamilyOptions& options = {});

/// The w x |E| matrix whose columns are the f_e.
RationalMatrix family_matrix(const EdgeVectorFamily& family);

struct RelationCheck {
  bool ok = true;
  std::size_t relations = 0;
  std::string reason;
};

/// For every vertex v and every (r+1)-subset T of the labels at v, the
/// support vector x of X on T has no zero on T and sum_{i in T} x_i f_{e(v,i)} = 0.
RelationCheck verify_relations(const EdgeVectorFamily& family);

struct RankCertificate {
  EdgeVectorFamily family;
  std::size_t rank = 0;
  std::vector<EdgeIndex> pivot_edges;
  BigInt wsat_lower = 0;
  BigInt m_lower = 0;  // ceil(rank / r), 0 when r = 0
  std::size_t relations_checked = 0;
};

/// Builds the family (hypercube route when the grid is a hypercube and r <= d,
/// grid route otherwise), checks every star relation and the rank, and
/// derives wsat >= rank and m >= ceil(rank / r). Throws std::runtime_error
/// with diagnostics when a relation or the rank check fails.
RankCertificate assemble_lower_bound(const GridSpec& spec, int r, const FamilyOptions& options = {});

struct RecheckResult {
  bool ok = true;
  std::string reason;
};

/// Independent replay: support certification of X, every star relation,
/// independence of the pivot edges and the overall rank.
RecheckResult recheck_rank_certificate(const RankCertificate& cert);

}  // namespace percforge
