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

#include "percforge/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace percforge {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

GridSpec spec_from(const Json& j) {
  try {
    return GridSpec::parse(get_as<std::string>(j, "spec"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json vertex_list(const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

Json rational_vector(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

RationalVector rational_vector_from(const Json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) throw FormatError("rational vector has the wrong length");
  RationalVector out;
  for (const auto& x : j) {
    if (!x.is_string()) throw FormatError("rationals must be strings");
    try {
      out.push_back(parse_rational(x.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return out;
}

const char* kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::kLower: return "lower";
    case BoundKind::kUpper: return "upper";
    case BoundKind::kExact: return "exact";
  }
  return "lower";
}

}  // namespace

Json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad integer string");
    return z;
  }
  throw FormatError("expected an integer");
}

Json to_json(const ExactBound& b) {
  Json j;
  j["rational"] = to_string(b.value);
  j["ceil"] = big_to_json(b.ceil_value);
  j["kind"] = kind_name(b.kind);
  return j;
}

Json to_json(const InfectionTrace& t) {
  Json j;
  j["spec"] = t.spec.to_string();
  j["r"] = t.r;
  j["a0"] = vertex_list(t.initial);
  Json rounds = Json::array();
  for (const auto& round : t.rounds) rounds.push_back(vertex_list(round));
  j["rounds"] = rounds;
  j["percolated"] = t.percolated;
  return j;
}

Json to_json(const SaturationCertificate& c) {
  Json j;
  j["spec"] = c.spec.to_string();
  j["star_size"] = c.star_size;
  j["base_edges"] = c.base_edges;
  Json adds = Json::array();
  for (const auto& a : c.additions) {
    Json x;
    x["edge"] = a.edge;
    x["center"] = a.center;
    x["labels"] = a.labels;
    adds.push_back(x);
  }
  j["additions"] = adds;
  return j;
}

SaturationCertificate certificate_from_json(const Json& j) {
  SaturationCertificate c;
  c.spec = spec_from(j);
  c.star_size = get_as<int>(j, "star_size");
  c.base_edges = get_as<std::vector<EdgeIndex>>(j, "base_edges");
  const Json& adds = field(j, "additions");
  if (!adds.is_array()) throw FormatError("additions must be an array");
  for (const auto& a : adds) {
    StarAddition s;
    s.edge = get_as<EdgeIndex>(a, "edge");
    s.center = get_as<VertexIndex>(a, "center");
    s.labels = get_as<std::vector<int>>(a, "labels");
    c.additions.push_back(std::move(s));
  }
  return c;
}

Json to_json(const PercolatingWitness& w) {
  Json j;
  j["spec"] = w.spec.to_string();
  j["r"] = w.r;
  j["size"] = w.claimed_size;
  j["vertices"] = w.vertices;
  j["provenance"] = w.provenance;
  return j;
}

PercolatingWitness witness_from_json(const Json& j) {
  PercolatingWitness w;
  w.spec = spec_from(j);
  w.r = get_as<int>(j, "r");
  w.claimed_size = get_as<std::size_t>(j, "size");
  w.vertices = get_as<std::vector<VertexIndex>>(j, "vertices");
  w.provenance = get_as<std::string>(j, "provenance");
  return w;
}

Json to_json(const RankCertificate& c) {
  const EdgeVectorFamily& f = c.family;
  Json j;
  j["spec"] = f.spec.to_string();
  j["r"] = f.r;
  j["coordinates"] = f.coords == CoordinateKind::kDirections ? "directions" : "labels";
  Json sub;
  sub["k"] = f.subspace.k;
  sub["ell"] = f.subspace.ell;
  Json basis = Json::array();
  for (std::size_t i = 0; i < f.subspace.basis.rows(); ++i) basis.push_back(rational_vector(f.subspace.basis.row(i)));
  sub["basis"] = basis;
  j["subspace"] = sub;
  j["w"] = f.w;
  Json vectors = Json::array();
  for (const auto& v : f.vectors) vectors.push_back(rational_vector(v));
  j["vectors"] = vectors;
  j["rank"] = c.rank;
  j["pivot_edges"] = c.pivot_edges;
  j["relations_checked"] = c.relations_checked;
  j["wsat_lower"] = big_to_json(c.wsat_lower);
  j["m_lower"] = big_to_json(c.m_lower);
  return j;
}

RankCertificate rank_certificate_from_json(const Json& j) {
  RankCertificate c;
  EdgeVectorFamily& f = c.family;
  f.spec = spec_from(j);
  f.r = get_as<int>(j, "r");
  const auto coords = get_as<std::string>(j, "coordinates");
  if (coords == "directions") {
    f.coords = CoordinateKind::kDirections;
  } else if (coords == "labels") {
    f.coords = CoordinateKind::kLabels;
  } else {
    throw FormatError("coordinates must be 'directions' or 'labels'");
  }
  const Json& sub = field(j, "subspace");
  f.subspace.k = get_as<std::size_t>(sub, "k");
  f.subspace.ell = get_as<std::size_t>(sub, "ell");
  const Json& basis = field(sub, "basis");
  if (!basis.is_array()) throw FormatError("basis must be an array");
  std::vector<RationalVector> rows;
  for (const auto& row : basis) rows.push_back(rational_vector_from(row, f.subspace.k));
  f.subspace.basis = RationalMatrix::from_rows(rows, f.subspace.k);
  f.w = get_as<std::size_t>(j, "w");
  const Json& vectors = field(j, "vectors");
  if (!vectors.is_array()) throw FormatError("vectors must be an array");
  for (const auto& v : vectors) f.vectors.push_back(rational_vector_from(v, f.w));
  c.rank = get_as<std::size_t>(j, "rank");
  c.pivot_edges = get_as<std::vector<EdgeIndex>>(j, "pivot_edges");
  c.relations_checked = get_as<std::size_t>(j, "relations_checked");
  c.wsat_lower = big_from_json(field(j, "wsat_lower"));
  c.m_lower = big_from_json(field(j, "m_lower"));
  return c;
}

Json to_json(const SearchResult& s, const GridSpec& spec, int r) {
  Json j;
  j["spec"] = spec.to_string();
  j["r"] = r;
  j["status"] = s.status;
  j["exact_m"] = s.exact_m ? Json(*s.exact_m) : Json(nullptr);
  j["lower"] = s.lower;
  j["proof_of_optimality"] = s.proof_of_optimality;
  j["group_order"] = s.group_order;
  j["nodes_explored"] = s.nodes_explored;
  Json layers = Json::array();
  for (const auto& l : s.layers) {
    Json x;
    x["k"] = l.k;
    x["found"] = l.found;
    x["exhausted"] = l.exhausted;
    x["canonical_visited"] = l.canonical_visited;
    x["nodes"] = l.nodes;
    layers.push_back(x);
  }
  j["layers"] = layers;
  j["witness"] = s.witness ? to_json(*s.witness) : Json(nullptr);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump(j);
}

}  // namespace percforge
