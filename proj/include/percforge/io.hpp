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

// JSON interchange. Rationals are "p/q" strings; big integers are numbers
// when they fit in 64 bits and decimal strings otherwise. Object keys keep a
// fixed order so identical inputs give byte-identical output.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "percforge/bootstrap.hpp"
#include "percforge/edge_vectors.hpp"
#include "percforge/percolating_sets.hpp"
#include "percforge/saturation.hpp"
#include "percforge/search.hpp"
#include "percforge/wsat_numbers.hpp"

namespace percforge {

using Json = nlohmann::ordered_json;

/// Malformed input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json big_to_json(const BigInt& z);
BigInt big_from_json(const Json& j);

Json to_json(const ExactBound& b);
Json to_json(const InfectionTrace& t);

Json to_json(const SaturationCertificate& c);
SaturationCertificate certificate_from_json(const Json& j);

Json to_json(const PercolatingWitness& w);
PercolatingWitness witness_from_json(const Json& j);

Json to_json(const RankCertificate& c);
RankCertificate rank_certificate_from_json(const Json& j);

Json to_json(const SearchResult& s, const GridSpec& spec, int r);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
/// Two-space indented with a trailing newline.
std::string dump(const Json& j);

}  // namespace percforge
