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

// Self-audit: the cross-check matrix of formulas, constructions,
// certificates and searches at desk scale, plus replay of certificate files.

#include <cstddef>
#include <string>
#include <vector>

#include "percforge/io.hpp"

namespace percforge {

struct AuditRow {
  std::string check;
  std::string instance;
  std::string expected;
  std::string got;
  bool pass = true;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  bool pass() const;
};

struct AuditOptions {
  bool deep = false;  // adds the Q_5, r = 4 search
  std::vector<std::string> certificate_files;
  std::vector<std::string> rank_files;
  std::vector<std::string> witness_files;
};

AuditReport run_audit(const AuditOptions& options);
Json to_json(const AuditReport& report);

/// Side-length tuples (each >= 2, non-decreasing) with product at most
/// `max_vertices`, in lexicographic order, including the 0-dimensional grid.
std::vector<std::vector<int>> grid_shapes(std::size_t max_vertices);

/// Replays a file produced by wsat-build, certify or construct; the kind is
/// recognised from its fields.
AuditRow audit_file(const std::string& path);

}  // namespace percforge
