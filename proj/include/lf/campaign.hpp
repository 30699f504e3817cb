#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lf/inequalities.hpp"
#include "lf/json_io.hpp"
#include "lf/sampling.hpp"

namespace lf {

// One batch: a norm, the checks to run over its samples, and per-check
// tolerance overrides (absolute for slack checks, relative factors for the
// oracle and identity checks).
struct RunManifest {
  NormSpec spec;
  std::vector<std::string> checks;
  SampleConfig sample;
  Json tolerances = Json::object();
};

struct CampaignFile {
  std::vector<RunManifest> runs;
  std::optional<std::string> output;
};

// Strict parse: unknown fields, unknown check names, checks applied to a
// family they do not cover, and non-positive tolerances are all rejected.
CampaignFile parse_campaign_file(const Json& j);
CampaignFile load_campaign_file(const std::string& path);

const std::vector<std::string>& known_checks();
bool check_valid_for(const std::string& check, const NormSpec& spec);

struct WorstCase {
  std::size_t index = 0;
  double slack = 0.0;
  Vector v;
  std::optional<Vector> w;
};

// Aggregate over one report stream of one run. pass requires zero violations
// and, for strict checks, that every equality case was collinear.
struct CheckRow {
  std::string check;
  std::size_t count = 0;
  std::size_t violations = 0;
  std::size_t equality_cases = 0;
  std::size_t collinear_equality_cases = 0;
  bool strict_expected = false;
  double min_slack = 0.0;
  std::optional<WorstCase> worst;

  bool pass() const {
    return violations == 0 &&
           (!strict_expected || equality_cases == collinear_equality_cases);
  }
};

struct RunReport {
  Json spec_json;
  SampleConfig sample;
  Json tolerances;
  std::vector<CheckRow> rows;
};

struct CampaignReport {
  std::vector<RunReport> runs;
  bool pass = true;
  double wall_seconds = 0.0;  // reported on the human table only
};

// Serial and deterministic: rows appear in manifest order, worst cases
// tie-break toward the lowest sample index. Sampling exhaustion and broken
// internal identities surface as exceptions tagged with run, family, check
// and sample index.
CampaignReport run_campaign(const CampaignFile& file);

// Machine report; byte-identical across runs of the same manifest, so it
// carries no timing.
Json campaign_report_json(const CampaignReport& report);

// Aligned human summary, including wall time.
std::string campaign_report_table(const CampaignReport& report);

Json ineq_report_json(const IneqReport& rep);

}  // namespace lf
