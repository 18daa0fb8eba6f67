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

#include "percforge/audit.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace percforge {

namespace {

std::string dims_string(const std::vector<int>& dims) { return GridSpec(dims).to_string(); }

std::string instance(const std::vector<int>& dims, int r) { return dims_string(dims) + " r=" + std::to_string(r); }

/// Aggregates one family of checks into a single row naming the first failure.
class Tally {
 public:
  Tally(std::string check, std::string scope) : check_(std::move(check)), scope_(std::move(scope)) {}

  void record(bool ok, const std::string& where, const std::string& expected, const std::string& got) {
    ++total_;
    if (ok || failed_) {
      if (!ok) ++failures_;
      return;
    }
    failed_ = true;
    ++failures_;
    where_ = where;
    expected_ = expected;
    got_ = got;
  }

  AuditRow row() const {
    if (!failed_) return {check_, scope_, std::to_string(total_) + " agree", std::to_string(total_) + " agree", true};
    return {check_, where_, expected_, got_ + " (" + std::to_string(failures_) + " of " + std::to_string(total_) + " failed)", false};
  }

 private:
  std::string check_;
  std::string scope_;
  std::size_t total_ = 0;
  std::size_t failures_ = 0;
  bool failed_ = false;
  std::string where_, expected_, got_;
};

template <typename F>
void guarded(Tally& t, const std::string& where, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    t.record(false, where, "no error", std::string("error: ") + e.what());
  }
}

std::size_t edge_count(const std::vector<int>& dims) { return static_cast<std::size_t>(GridSpec(dims).edge_count()); }

void formula_checks(AuditReport& report) {
  Tally t("formula-agreement", "Q_d, 0 <= r <= d <= 10");
  for (int d = 0; d <= 10; ++d)
    for (int r = 0; r <= d; ++r)
      guarded(t, "Q" + std::to_string(d) + " r=" + std::to_string(r), [&] {
        const std::vector<int> dims(static_cast<std::size_t>(d), 2);
        const BigInt h = wsat_hypercube(d, r);
        const BigInt rec = w_recurrence(dims, r);
        const BigInt closed = r == 0 ? BigInt(0) : wsat_grid_closed(dims, r);
        t.record(h == rec && h == closed, "Q" + std::to_string(d) + " r=" + std::to_string(r), to_string(h),
                 to_string(rec) + "/" + to_string(closed));
      });
  report.rows.push_back(t.row());

  Tally g("grid-closed-vs-recurrence", "prod a_i <= 4096, 1 <= r <= d");
  Tally o("recurrence-order-independence", "prod a_i <= 4096, 0 <= r <= 2d");
  for (const auto& dims : grid_shapes(4096)) {
    const int d = static_cast<int>(dims.size());
    for (int r = 0; r <= 2 * d; ++r) {
      guarded(o, instance(dims, r), [&] {
        const BigInt lo = w_recurrence(dims, r, ReductionAxis::kLowest);
        const BigInt hi = w_recurrence(dims, r, ReductionAxis::kHighest);
        o.record(lo == hi, instance(dims, r), to_string(lo), to_string(hi));
      });
      if (r >= 1 && r <= d)
        guarded(g, instance(dims, r), [&] {
          const BigInt c = wsat_grid_closed(dims, r);
          const BigInt rec = w_recurrence(dims, r);
          g.record(c == rec, instance(dims, r), to_string(c), to_string(rec));
        });
    }
  }
  report.rows.push_back(g.row());
  report.rows.push_back(o.row());

  AuditRow q54{"bound-q5-r4", "Q5 r=4", "49/4 ceil 13", "", false};
  const ExactBound b = m_lower_hypercube(5, 4);
  q54.got = to_string(b.value) + " ceil " + to_string(b.ceil_value);
  q54.pass = q54.got == q54.expected;
  report.rows.push_back(q54);
}

void oracle_checks(AuditReport& report) {
  Tally t("brute-force-oracle", "Q2, Q3, 3x3, 3x2");
  const std::vector<std::pair<std::vector<int>, int>> cases = {
      {{2, 2}, 1}, {{2, 2}, 2}, {{2, 2, 2}, 1}, {{2, 2, 2}, 2}, {{2, 2, 2}, 3}, {{3, 3}, 1},
      {{3, 3}, 2}, {{3, 2}, 1},  {{3, 2}, 2},  {{3, 2}, 3}};
  for (const auto& [dims, r] : cases)
    guarded(t, instance(dims, r), [&] {
      const auto res = brute_force_wsat(SmallGraph::from_grid(GridSpec(dims)), r + 1);
      const BigInt expect = w_recurrence(dims, r);
      t.record(BigInt(static_cast<unsigned long>(res.min_edges)) == expect, instance(dims, r), to_string(expect),
               std::to_string(res.min_edges));
    });
  report.rows.push_back(t.row());
}

void construction_checks(AuditReport& report) {
  Tally h("wsat-construction-hypercube", "0 <= r <= d <= 8");
  for (int d = 0; d <= 8; ++d)
    for (int r = 0; r <= d; ++r) {
      const std::string where = "Q" + std::to_string(d) + " r=" + std::to_string(r);
      guarded(h, where, [&] {
        const auto cert = build_wsat_hypercube(d, r);
        const auto v = verify_certificate(cert);
        const BigInt expect = wsat_hypercube(d, r);
        h.record(v.ok && BigInt(static_cast<unsigned long>(cert.base_edges.size())) == expect, where,
                 to_string(expect) + " edges, valid", std::to_string(cert.base_edges.size()) + " edges, " + (v.ok ? "valid" : v.reason));
      });
    }
  report.rows.push_back(h.row());

  Tally g("wsat-construction-grid", "prod a_i <= 512, 0 <= r <= 2d");
  for (const auto& dims : grid_shapes(512)) {
    for (int r = 0; r <= 2 * static_cast<int>(dims.size()); ++r)
      guarded(g, instance(dims, r), [&] {
        const auto cert = build_wsat_grid(dims, r);
        const auto v = verify_certificate(cert);
        const BigInt expect = w_recurrence(dims, r);
        g.record(v.ok && BigInt(static_cast<unsigned long>(cert.base_edges.size())) == expect, instance(dims, r),
                 to_string(expect) + " edges, valid", std::to_string(cert.base_edges.size()) + " edges, " + (v.ok ? "valid" : v.reason));
      });
  }
  report.rows.push_back(g.row());
}

void rank_checks(AuditReport& report) {
  Tally t("rank-certificates", "|E| <= 256, 0 <= r <= 2d");
  for (const auto& dims : grid_shapes(256)) {
    if (edge_count(dims) > 256) continue;
    const GridSpec spec(dims);
    for (int r = 0; r <= 2 * spec.d(); ++r)
      guarded(t, instance(dims, r), [&] {
        const auto cert = assemble_lower_bound(spec, r);
        const BigInt expect = w_recurrence(dims, r);
        t.record(BigInt(static_cast<unsigned long>(cert.rank)) == expect, instance(dims, r), to_string(expect),
                 std::to_string(cert.rank));
      });
  }
  report.rows.push_back(t.row());

  Tally s("support-subspace", "k <= 12, ell <= min(k, 6)");
  for (std::size_t k = 0; k <= 12; ++k)
    for (std::size_t ell = 0; ell <= std::min<std::size_t>(k, 6); ++ell) {
      const std::string where = "k=" + std::to_string(k) + " ell=" + std::to_string(ell);
      guarded(s, where, [&] { s.record(certify_support(build_support_subspace(k, ell)).ok, where, "certified", "failed"); });
    }
  report.rows.push_back(s.row());
}

void percolation_checks(AuditReport& report) {
  Tally t("r3-two-sided", "3 <= d <= 16");
  for (int d = 3; d <= 16; ++d) {
    const std::string where = "Q" + std::to_string(d) + " r=3";
    guarded(t, where, [&] {
      const auto w = build_r3(d);
      const std::size_t target = r3_target_size(d);
      const bool ok = check_witness(w) && w.vertices.size() == target &&
                      m_lower_hypercube(d, 3).ceil_value == static_cast<unsigned long>(target);
      t.record(ok, where, std::to_string(target), std::to_string(w.vertices.size()));
    });
  }
  report.rows.push_back(t.row());

  Tally s("construction-sandwich", "1 <= r <= d <= 10");
  for (int d = 1; d <= 10; ++d)
    for (int r = 1; r <= d; ++r) {
      const std::string where = "Q" + std::to_string(d) + " r=" + std::to_string(r);
      guarded(s, where, [&] {
        const auto w = build_recursive(d, r);
        const auto sizes = recursive_size(d, r);
        const BigInt lower = m_lower_hypercube(d, r).ceil_value;
        bool levels_odd = true;
        for (VertexIndex v : w.vertices)
          if (std::popcount(v >> (d - r)) % 2 == 0) levels_odd = false;
        const bool ok = lower <= static_cast<unsigned long>(w.vertices.size()) && sizes.total == w.vertices.size() && levels_odd;
        s.record(ok, where, ">= " + to_string(lower) + ", = " + std::to_string(sizes.total) + ", odd levels",
                 std::to_string(w.vertices.size()) + (levels_odd ? ", odd levels" : ", even level used"));
      });
    }
  report.rows.push_back(s.row());
}

void search_checks(AuditReport& report, bool deep) {
  Tally t("search-vs-naive", "Q3 and Q4, 1 <= r <= d");
  for (int d = 3; d <= 4; ++d)
    for (int r = 1; r <= d; ++r) {
      const std::string where = "Q" + std::to_string(d) + " r=" + std::to_string(r);
      guarded(t, where, [&] {
        const GridSpec spec = GridSpec::hypercube(d);
        SearchConfig config;
        config.spec = spec;
        config.r = r;
        const SearchResult res = exact_min(config);
        const std::size_t naive = naive_min_percolating(spec, r);
        t.record(res.exact_m && *res.exact_m == naive && res.proof_of_optimality, where, std::to_string(naive),
                 res.exact_m ? std::to_string(*res.exact_m) : "unresolved");
      });
    }
  report.rows.push_back(t.row());
  if (!deep) return;
  AuditRow row{"search-q5-r4", "Q5 r=4", "14, layer 13 exhausted", "", false};
  try {
    SearchConfig config;
    config.spec = GridSpec::hypercube(5);
    config.r = 4;
    const SearchResult res = exact_min(config);
    bool layer13 = false;
    for (const auto& l : res.layers)
      if (l.k == 13 && l.exhausted && !l.found) layer13 = true;
    row.got = (res.exact_m ? std::to_string(*res.exact_m) : "unresolved") + (layer13 ? ", layer 13 exhausted" : ", layer 13 open");
    row.pass = row.got == row.expected && res.witness && check_witness(*res.witness);
  } catch (const std::exception& e) {
    row.got = std::string("error: ") + e.what();
  }
  report.rows.push_back(row);
}

}  // namespace

bool AuditReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.pass; });
}

std::vector<std::vector<int>> grid_shapes(std::size_t max_vertices) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, std::size_t)> rec = [&](int min_side, std::size_t product) {
    out.push_back(cur);
    for (int a = min_side; product * static_cast<std::size_t>(a) <= max_vertices; ++a) {
      cur.push_back(a);
      rec(a, product * static_cast<std::size_t>(a));
      cur.pop_back();
    }
  };
  rec(2, 1);
  return out;
}

AuditRow audit_file(const std::string& path) {
  AuditRow row{"file-replay", path, "valid", "", false};
  try {
    const Json j = read_json_file(path);
    if (j.contains("additions")) {
      const auto v = verify_certificate(certificate_from_json(j));
      row.got = v.ok ? "valid" : "invalid at addition " + std::to_string(v.index) + ": " + v.reason;
    } else if (j.contains("pivot_edges")) {
      const auto v = recheck_rank_certificate(rank_certificate_from_json(j));
      row.got = v.ok ? "valid" : "invalid: " + v.reason;
    } else if (j.contains("vertices")) {
      std::string reason;
      row.got = check_witness(witness_from_json(j), &reason) ? "valid" : "invalid: " + reason;
    } else {
      row.got = "unrecognised document";
    }
  } catch (const std::exception& e) {
    row.got = std::string("error: ") + e.what();
  }
  row.pass = row.got == "valid";
  return row;
}

AuditReport run_audit(const AuditOptions& options) {
  AuditReport report;
  formula_checks(report);
  oracle_checks(report);
  construction_checks(report);
  rank_checks(report);
  percolation_checks(report);
  search_checks(report, options.deep);
  for (const auto& files : {options.certificate_files, options.rank_files, options.witness_files})
    for (const auto& path : files) report.rows.push_back(audit_file(path));
  return report;
}

Json to_json(const AuditReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json x;
    x["check"] = r.check;
    x["instance"] = r.instance;
    x["expected"] = r.expected;
    x["got"] = r.got;
    x["pass"] = r.pass;
    rows.push_back(x);
  }
  Json j;
  j["pass"] = report.pass();
  j["rows"] = rows;
  return j;
}

}  // namespace percforge
