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

#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "percforge/io.hpp"

using namespace percforge;

TEST_CASE("big integers") {
  CHECK(big_to_json(BigInt(42)) == Json(42));
  const BigInt huge = BigInt(1) << 100;
  CHECK(big_from_json(big_to_json(huge)) == huge);
  CHECK(big_from_json(Json("12345678901234567890123")) == BigInt("12345678901234567890123"));
  CHECK_THROWS_AS(big_from_json(Json("12x")), FormatError);
  CHECK_THROWS_AS(big_from_json(Json(1.5)), FormatError);
}

TEST_CASE("bound document") {
  const Json j = to_json(m_lower_hypercube(5, 4));
  CHECK(j["rational"] == "49/4");
  CHECK(j["ceil"] == 13);
}

TEST_CASE("saturation certificate round trip") {
  const SaturationCertificate c = build_wsat_grid({3, 3, 2}, 3);
  const Json j = to_json(c);
  const SaturationCertificate back = certificate_from_json(Json::parse(dump(j)));
  CHECK(back.spec == c.spec);
  CHECK(back.star_size == c.star_size);
  CHECK(back.base_edges == c.base_edges);
  CHECK(back.additions == c.additions);
  CHECK(dump(to_json(back)) == dump(j));
}

TEST_CASE("rank certificate round trip") {
  const RankCertificate c = assemble_lower_bound(GridSpec::hypercube(4), 3);
  const Json j = to_json(c);
  CHECK(j["rank"] == 17);
  const RankCertificate back = rank_certificate_from_json(Json::parse(dump(j)));
  CHECK(recheck_rank_certificate(back).ok);
  CHECK(back.family.vectors == c.family.vectors);
  CHECK(back.pivot_edges == c.pivot_edges);
  CHECK(dump(to_json(back)) == dump(j));
  // Rationals are written as strings.
  bool saw_string = false;
  for (const auto& v : j["vectors"])
    for (const auto& x : v) saw_string = saw_string || x.is_string();
  CHECK(saw_string);
}

TEST_CASE("witness round trip") {
  const PercolatingWitness w = build_r3(8);
  const Json j = to_json(w);
  CHECK(j["size"] == 16);
  const PercolatingWitness back = witness_from_json(Json::parse(dump(j)));
  CHECK(back.vertices == w.vertices);
  CHECK(back.provenance == w.provenance);
  CHECK(check_witness(back));
}

TEST_CASE("documents are byte-stable") {
  CHECK(dump(to_json(build_wsat_hypercube(5, 3))) == dump(to_json(build_wsat_hypercube(5, 3))));
  CHECK(dump(to_json(assemble_lower_bound(GridSpec({3, 3}), 2))) == dump(to_json(assemble_lower_bound(GridSpec({3, 3}), 2))));
  SearchConfig config;
  config.spec = GridSpec::hypercube(4);
  config.r = 3;
  CHECK(dump(to_json(exact_min(config), config.spec, 3)) == dump(to_json(exact_min(config), config.spec, 3)));
}

TEST_CASE("malformed documents") {
  Json j = to_json(build_wsat_grid({3, 3}, 2));
  Json missing = j;
  missing.erase("additions");
  CHECK_THROWS_AS(certificate_from_json(missing), FormatError);
  Json wrong = j;
  wrong["spec"] = "3y3";
  CHECK_THROWS_AS(certificate_from_json(wrong), FormatError);
  wrong = j;
  wrong["base_edges"] = "all";
  CHECK_THROWS_AS(certificate_from_json(wrong), FormatError);
  CHECK_THROWS_AS(witness_from_json(Json::array()), FormatError);
  CHECK_THROWS_AS(rank_certificate_from_json(Json::object()), FormatError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/perc-forge.json"), FormatError);
  const auto path = std::filesystem::temp_directory_path() / "perc_forge_io_test.json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("{\"spec\": ", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(read_json_file(path.string()), FormatError);
  write_json_file(path.string(), j);
  CHECK(read_json_file(path.string()) == j);
  std::filesystem::remove(path);
}
