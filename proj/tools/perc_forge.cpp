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

// perc-forge: exact weak saturation numbers, rank certificates and minimum
// percolating sets for r-neighbour bootstrap percolation on grids.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input,
// 3 search stopped by a budget before proving optimality.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "percforge/audit.hpp"
#include "percforge/bootstrap.hpp"
#include "percforge/edge_vectors.hpp"
#include "percforge/io.hpp"
#include "percforge/percolating_sets.hpp"
#include "percforge/saturation.hpp"
#include "percforge/search.hpp"
#include "percforge/wsat_numbers.hpp"

namespace {

using namespace percforge;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kBudgetLimited = 3;

/// Thrown for requests outside a subcommand's domain.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << dump(j);
  } else {
    write_json_file(out, j);
  }
}

void require_r(const GridSpec& spec, int r, int lo) {
  if (r < lo || r > 2 * spec.d())
    throw UsageError("r=" + std::to_string(r) + " outside " + std::to_string(lo) + ".." + std::to_string(2 * spec.d()) +
                     " for " + spec.to_string());
}

std::uint64_t parse_count(const std::string& text) {
  // Accepts plain integers and scientific notation such as 2e9.
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad count '" + text + "'");
  }
  if (used != text.size() || !(value >= 0) || value > 1.8e19 || value != std::floor(value))
    throw UsageError("bad count '" + text + "'");
  return static_cast<std::uint64_t>(value);
}

std::vector<VertexIndex> parse_vertices(const std::string& text) {
  std::vector<VertexIndex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const std::uint64_t v = parse_count(item);
    if (v > 0xffffffffULL) throw UsageError("vertex index out of range: " + item);
    out.push_back(static_cast<VertexIndex>(v));
  }
  return out;
}

PercolatingWitness construct_witness(const GridSpec& spec, int r) {
  if (!spec.is_hypercube()) throw UsageError("construct supports hypercubes Q_d only");
  const int d = spec.d();
  if (r < 1) throw UsageError("construct needs r >= 1");
  if (r == 3 && d >= 3) return build_r3(d);
  if (r <= d) return build_recursive(d, r);
  return base_set(d, r);
}

Json bound_json(const GridSpec& spec, int r) {
  const ExactBound b = spec.is_hypercube() && r <= spec.d() ? m_lower_hypercube(spec.d(), r) : m_lower_grid(spec.dims(), r);
  Json j;
  j["rational"] = to_string(b.value);
  j["ceil"] = big_to_json(b.ceil_value);
  return j;
}

/// Rows for the m(Q_d, r) value table; the text table is rendered from these.
Json value_table(int d_min, int d_max, int r) {
  Json rows = Json::array();
  for (int d = d_min; d <= d_max; ++d) {
    const GridSpec spec = GridSpec::hypercube(d);
    const PercolatingWitness w = construct_witness(spec, r);
    Json row;
    row["d"] = d;
    row["lower"] = bound_json(spec, r)["ceil"];
    row["size"] = w.vertices.size();
    row["percolates"] = check_witness(w);
    row["provenance"] = w.provenance;
    rows.push_back(row);
  }
  Json j;
  j["r"] = r;
  j["rows"] = rows;
  return j;
}

std::string render_table(const Json& table) {
  std::ostringstream os;
  os << "r = " << table["r"].get<int>() << "\n";
  os << "   d  lower   size  percolates  provenance\n";
  for (const auto& row : table["rows"]) {
    char line[128];
    std::snprintf(line, sizeof line, "%4d %6s %6zu  %-10s  %s\n", row["d"].get<int>(), row["lower"].dump().c_str(),
                  row["size"].get<std::size_t>(), row["percolates"].get<bool>() ? "yes" : "no",
                  row["provenance"].get<std::string>().c_str());
    os << line;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weak saturation and bootstrap percolation tools"};
  app.require_subcommand(1);

  std::string grid;
  int r = 1;
  std::string out;
  std::string file;

  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", grid, "grid such as Q5 or 3x3x2")->required();
    sub->add_option("--r", r, "infection threshold")->required();
  };

  auto* wsat = app.add_subcommand("wsat", "wsat(G, S_{r+1}) by closed form and recurrence");
  add_grid(wsat);
  auto* bound = app.add_subcommand("bound", "lower bound on m(G, r)");
  add_grid(bound);
  auto* wsat_build = app.add_subcommand("wsat-build", "build a weakly saturated graph and its certificate");
  add_grid(wsat_build);
  wsat_build->add_option("--out", out, "certificate file");
  auto* wsat_verify = app.add_subcommand("wsat-verify", "replay a saturation certificate");
  wsat_verify->add_option("file", file)->required();
  auto* certify = app.add_subcommand("certify", "rank certificate for the wsat lower bound");
  add_grid(certify);
  certify->add_option("--out", out, "certificate file");
  auto* recheck = app.add_subcommand("recheck", "re-verify a rank certificate");
  recheck->add_option("file", file)->required();

  auto* construct = app.add_subcommand("construct", "small percolating set on Q_d");
  construct->add_option("--grid", grid, "hypercube such as Q8");
  construct->add_option("--r", r, "infection threshold")->required();
  construct->add_option("--out", out, "witness file");
  std::string format = "json";
  construct->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  int d_min = 3, d_max = 16;
  construct->add_option("--d-min", d_min, "first dimension of the table");
  construct->add_option("--d-max", d_max, "last dimension of the table");

  auto* check = app.add_subcommand("check", "re-simulate a witness file");
  check->add_option("file", file)->required();

  auto* search = app.add_subcommand("search", "exact m(G, r) by canonical search");
  add_grid(search);
  std::string node_budget;
  std::size_t size_budget = 0;
  unsigned threads = 1;
  bool no_symmetry = false;
  search->add_option("--node-budget", node_budget, "search node budget, e.g. 2e9");
  search->add_option("--size-budget", size_budget, "largest set size to try");
  search->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  search->add_flag("--no-symmetry", no_symmetry, "disable symmetry reduction");
  search->add_option("--out", out, "result file");

  auto* simulate = app.add_subcommand("simulate", "run the bootstrap process");
  add_grid(simulate);
  std::string vertices;
  simulate->add_option("--vertices", vertices, "comma-separated vertex indices")->required();

  auto* audit = app.add_subcommand("audit", "run the cross-check matrix");
  bool deep = false;
  std::vector<std::string> fixtures;
  audit->add_flag("--deep", deep, "include the Q5, r=4 search");
  audit->add_option("--certificate", fixtures, "certificate or witness files to replay");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (wsat->parsed()) {
      const GridSpec spec = GridSpec::parse(grid);
      require_r(spec, r, 0);
      const BigInt rec = w_recurrence(spec.dims(), r);
      Json j;
      if (r >= 1 && r <= spec.d()) {
        const BigInt closed = wsat_grid_closed(spec.dims(), r);
        j["closed"] = big_to_json(closed);
        j["recurrence"] = big_to_json(rec);
        j["agree"] = closed == rec;
      } else {
        j["closed"] = nullptr;
        j["recurrence"] = big_to_json(rec);
        j["agree"] = nullptr;
      }
      emit(j, "");
      return j["agree"] == false ? kVerifyFailed : kOk;
    }
    if (bound->parsed()) {
      const GridSpec spec = GridSpec::parse(grid);
      require_r(spec, r, 1);
      emit(bound_json(spec, r), "");
      return kOk;
    }
    if (wsat_build->parsed()) {
      const GridSpec spec = GridSpec::parse(grid);
      require_r(spec, r, 0);
      const SaturationCertificate cert = spec.is_hypercube() && r <= spec.d() ? build_wsat_hypercube(spec.d(), r)
                                                                              : build_wsat_grid(spec.dims(), r);
      emit(to_json(cert), out);
      return verify_certificate(cert).ok ? kOk : kVerifyFailed;
    }
    if (wsat_verify->parsed()) {
      const VerifyResult v = verify_certificate(certificate_from_json(read_json_file(file)));
      Json j;
      j["ok"] = v.ok;
      if (!v.ok) {
        j["index"] = v.index == static_cast<std::size_t>(-1) ? Json(nullptr) : Json(v.index);
        j["reason"] = v.reason;
      }
      emit(j, "");
      return v.ok ? kOk : kVerifyFailed;
    }
    if (certify->parsed()) {
      const GridSpec spec = GridSpec::parse(grid);
      require_r(spec, r, 0);
      emit(to_json(assemble_lower_bound(spec, r)), out);
      return kOk;
    }
    if (recheck->parsed()) {
      const RecheckResult v = recheck_rank_certificate(rank_certificate_from_json(read_json_file(file)));
      Json j;
      j["ok"] = v.ok;
      if (!v.ok) j["reason"] = v.reason;
      emit(j, "");
      return v.ok ? kOk : kVerifyFailed;
    }
    if (construct->parsed()) {
      if (format == "table") {
        if (!grid.empty()) {
          const GridSpec spec = GridSpec::parse(grid);
          if (!spec.is_hypercube()) throw UsageError("construct supports hypercubes Q_d only");
          d_min = d_max = spec.d();
        }
        if (d_min < 0 || d_max > 28 || d_min > d_max) throw UsageError("bad dimension range");
        const Json table = value_table(d_min, d_max, r);
        if (!out.empty()) write_json_file(out, table);
        std::cout << render_table(table);
        return kOk;
      }
      if (grid.empty()) throw UsageError("construct needs --grid unless --format table");
      const GridSpec spec = GridSpec::parse(grid);
      require_r(spec, r, 1);
      const PercolatingWitness w = construct_witness(spec, r);
      emit(to_json(w), out);
      return check_witness(w) ? kOk : kVerifyFailed;
    }
    if (check->parsed()) {
      std::string reason;
      const bool ok = check_witness(witness_from_json(read_json_file(file)), &reason);
      Json j;
      j["ok"] = ok;
      if (!ok) j["reason"] = reason;
      emit(j, "");
      return ok ? kOk : kVerifyFailed;
    }
    if (search->parsed()) {
      SearchConfig config;
      config.spec = GridSpec::parse(grid);
      require_r(config.spec, r, 0);
      config.r = r;
      if (!node_budget.empty()) config.node_budget = parse_count(node_budget);
      if (size_budget > 0) config.size_budget = size_budget;
      config.symmetry = !no_symmetry;
      config.threads = threads;
      const SearchResult res = exact_min(config);
      emit(to_json(res, config.spec, r), out);
      if (res.witness && !check_witness(*res.witness)) return kVerifyFailed;
      return res.status == "exact" ? kOk : kBudgetLimited;
    }
    if (simulate->parsed()) {
      const GridSpec spec = GridSpec::parse(grid);
      require_r(spec, r, 0);
      const auto list = parse_vertices(vertices);
      for (VertexIndex v : list)
        if (!spec.valid_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " outside " + spec.to_string());
      emit(to_json(closure(spec, make_vertex_set(spec, list), r)), "");
      return kOk;
    }
    if (audit->parsed()) {
      AuditOptions options;
      options.deep = deep;
      options.certificate_files = fixtures;
      const AuditReport report = run_audit(options);
      emit(to_json(report), "");
      return report.pass() ? kOk : kVerifyFailed;
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kBadInput;
}
