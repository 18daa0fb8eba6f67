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

#include <filesystem>
#include <set>

#include "doctest.h"
#include "percforge/audit.hpp"

using namespace percforge;

namespace {

std::string write_temp(const std::string& name, const Json& j) {
  const auto path = std::filesystem::temp_directory_path() / name;
  write_json_file(path.string(), j);
  return path.string();
}

}  // namespace

TEST_CASE("grid shapes") {
  const auto shapes = grid_shapes(16);
  // Brute force over non-decreasing tuples of sides >= 2.
  std::set<std::vector<int>> expect{{}};
  std::vector<std::vector<int>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& t : frontier)
      for (int a = t.empty() ? 2 : t.back(); a <= 16; ++a) {
        auto u = t;
        u.push_back(a);
        int p = 1;
        for (int x : u) p *= x;
        if (p <= 16 && expect.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  CHECK(std::set<std::vector<int>>(shapes.begin(), shapes.end()) == expect);
  CHECK(shapes.size() == expect.size());
  CHECK(std::is_sorted(shapes.begin(), shapes.end()));
}

TEST_CASE("file replay names the violating document") {
  const std::string good_cert = write_temp("pf_audit_cert.json", to_json(build_wsat_grid({3, 3}, 2)));
  CHECK(audit_file(good_cert).pass);

  Json bad = to_json(build_wsat_grid({3, 3}, 2));
  bad["additions"][0]["labels"][0] = 99;
  const std::string bad_cert = write_temp("pf_audit_bad.json", bad);
  const AuditRow row = audit_file(bad_cert);
  CHECK_FALSE(row.pass);
  CHECK(row.instance == bad_cert);
  CHECK(row.got.find("addition 0") != std::string::npos);

  const std::string rank = write_temp("pf_audit_rank.json", to_json(assemble_lower_bound(GridSpec::hypercube(3), 2)));
  CHECK(audit_file(rank).pass);
  const std::string wit = write_temp("pf_audit_wit.json", to_json(build_r3(5)));
  CHECK(audit_file(wit).pass);
  const std::string other = write_temp("pf_audit_other.json", Json::object());
  CHECK_FALSE(audit_file(other).pass);
  CHECK_FALSE(audit_file("/nonexistent/pf.json").pass);

  AuditReport report;
  report.rows.push_back(audit_file(good_cert));
  CHECK(report.pass());
  report.rows.push_back(row);
  CHECK_FALSE(report.pass());
  const Json j = to_json(report);
  CHECK(j["pass"] == false);
  CHECK(j["rows"].size() == 2);
  for (const auto& p : {good_cert, bad_cert, rank, wit, other}) std::filesystem::remove(p);
}
