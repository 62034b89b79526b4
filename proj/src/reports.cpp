#include "hypertutte/reports.hpp"

namespace hypertutte {

using nlohmann::ordered_json;

namespace {

ordered_json header(const char* kind) {
  ordered_json j;
  j["kind"] = kind;
  j["schema_version"] = kReportSchemaVersion;
  return j;
}

ordered_json activity_json(const ActivityRecord& r) {
  return ordered_json{{"internal", r.internal.items()}, {"external", r.external.items()}};
}

ordered_json table_json(const CoefficientTable& t) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i <= t.imax(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j <= t.jmax(); ++j) row.push_back(t.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ordered_json to_json(const PartitionReport& report, const BaseFamily& family) {
  ordered_json j = header("crapo-partition");
  j["verdict"] = report.passed() ? "PASS" : "FAIL";
  j["box"] = {{"lo", report.lo}, {"hi", report.hi}};
  j["points"] = report.points;
  j["covered_once"] = report.covered_once;
  j["violation_count"] = report.violation_count;
  ordered_json list = ordered_json::array();
  for (const PartitionViolation& v : report.violations) {
    ordered_json covering = ordered_json::array();
    for (int k : v.covering) covering.push_back(family[k]);
    list.push_back({{"kind", to_string(v.kind)}, {"point", v.point}, {"covering", std::move(covering)}});
  }
  j["violations"] = std::move(list);
  return j;
}

ordered_json to_json(const TrialReport& report) {
  ordered_json j = header("trial");
  j["seed"] = report.seed ? ordered_json(*report.seed) : ordered_json(nullptr);
  j["instance"] = {{"violet", report.violet},
                   {"emerald", report.emerald},
                   {"edges", report.edges},
                   {"edge_hash", report.edge_hash}};
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json cj{{"name", c.name},
                    {"verdict", to_string(c.verdict)},
                    {"expected", c.expected.to_string()},
                    {"actual", c.actual.to_string()}};
    if (c.trial) cj["trial"] = *c.trial;
    ordered_json diffs = ordered_json::array();
    for (const HypertreeDiff& d : c.diffs)
      diffs.push_back({{"hypertree", d.h}, {"expected", activity_json(d.expected)}, {"actual", activity_json(d.actual)}});
    cj["diffs"] = std::move(diffs);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["counterexample"] = report.counterexample ? ordered_json(*report.counterexample) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const BatchSummary& summary) {
  ordered_json j = header("trial-batch");
  j["seed"] = summary.seed;
  j["trials"] = summary.trials;
  j["counterexamples"] = summary.counterexamples;
  ordered_json reports = ordered_json::array();
  for (const TrialReport& r : summary.reports) reports.push_back(to_json(r));
  j["reports"] = std::move(reports);
  return j;
}

ordered_json to_json(const SeriesReport& report) {
  ordered_json j = header("series-identity");
  j["verdict"] = report.passed() ? "PASS" : "FAIL";
  j["bounds"] = {report.imax, report.jmax};
  j["series"] = table_json(report.expected);
  j["lattice"] = table_json(report.counted);
  if (report.mismatch)
    j["mismatch"] = {{"i", report.mismatch->i},
                     {"j", report.mismatch->j},
                     {"series", report.mismatch->from_polynomial},
                     {"lattice", report.mismatch->from_lattice}};
  else
    j["mismatch"] = nullptr;
  return j;
}

ordered_json to_json(const BridgeReport& report) {
  ordered_json j = header("graph-bridge");
  j["classical"] = report.classical.to_string();
  j["embedding"] = report.embedding.to_string();
  j["nullity"] = report.nullity;
  j["rank"] = report.rank;
  ordered_json forms = ordered_json::array();
  for (const BridgeForm& f : report.forms) forms.push_back({{"form", f.name}, {"holds", f.holds}});
  j["forms"] = std::move(forms);
  const auto w = report.winner();
  j["winner"] = w ? ordered_json(*w) : ordered_json(nullptr);
  return j;
}

}  // namespace hypertutte
