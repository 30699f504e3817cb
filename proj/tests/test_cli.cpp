#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lf/json_io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

const char* cli_path() {
  const char* path = std::getenv("LFNORM_CLI");
  REQUIRE_MESSAGE(path != nullptr, "LFNORM_CLI must point at the binary");
  return path;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + cli_path() + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
    res.output.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval prints value, gradient, tensor and signature") {
  const RunResult res = run_cli("eval minkowski 2,1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "F = 1.73205080757"));
  CHECK(contains(res.output, "grad = [1.15470053838, -0.57735026919]"));
  CHECK(contains(res.output, "g_v = [[1, 0], [0, -1]]"));
  CHECK(contains(res.output, "signature = Lorentzian (1,1,0)"));

  // all accepted vector spellings agree
  CHECK(run_cli("eval minkowski \"v=(2,1)\"").output == res.output);
  CHECK(run_cli("eval minkowski \"(2,1)\"").output == res.output);
}

TEST_CASE("eval reports cone violations on exit code 2") {
  const RunResult res = run_cli("eval berwald_moor 1,0");
  CHECK(res.exit_code == 2);
  CHECK(contains(res.output, "domain: component v1 must be > 0"));
}

TEST_CASE("eval rejects unknown spec tokens and bad vectors") {
  const RunResult bad_spec = run_cli("eval nope 1,1");
  CHECK(bad_spec.exit_code == 1);
  CHECK(contains(bad_spec.output, "error: unknown norm spec 'nope'"));

  const RunResult bad_vec = run_cli("eval minkowski xx");
  CHECK(bad_vec.exit_code == 1);
  CHECK(contains(bad_vec.output, "cannot parse vector 'xx'"));

  CHECK(run_cli("eval").exit_code == 1);
}

TEST_CASE("eval loads a norm spec from a JSON file") {
  const fs::path spec = write_temp(
      "lfnorm_cli_spec.json",
      "{\"family\": \"kropina\", \"dim\": 2, \"params\": {}}");
  const RunResult res = run_cli("eval \"" + spec.string() + "\" 2,1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "F = 1.5"));
  fs::remove(spec);
}

TEST_CASE("check emits one JSON report and honors the tolerance override") {
  const RunResult res = run_cli("check kropina 2,1 4,1");
  CHECK(res.exit_code == 0);
  const lf::Json rep = lf::parse_json_text(res.output);
  CHECK(rep.at("name") == "kropina");
  CHECK(rep.at("slack").get<double>() == 0.5);
  CHECK(rep.at("verdict") == "Holds");

  // fp noise on a collinear pair turns Violated below a 1e-30 band
  const RunResult forced =
      run_cli("check reverse_triangle --tol 1e-30 minkowski 3,1 6,2");
  CHECK(forced.exit_code == 3);
  CHECK(contains(forced.output, "\"verdict\": \"Violated\""));

  const RunResult unknown = run_cli("check bogus 1,1");
  CHECK(unknown.exit_code == 1);
  CHECK(contains(unknown.output, "unknown check 'bogus'; valid names: "));
}

TEST_CASE("check runs the two-report refinements as a JSON array") {
  const RunResult res = run_cli("check scaled_refinement --a 1 --b 2 minkowski 2,1 3,1");
  CHECK(res.exit_code == 0);
  const lf::Json arr = lf::parse_json_text(res.output);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  CHECK(arr[0].at("name") == "scaled_refinement_lower");
  CHECK(arr[1].at("name") == "scaled_refinement_upper");
}

TEST_CASE("catalog lists every family and the campaign check names") {
  const RunResult res = run_cli("catalog");
  CHECK(res.exit_code == 0);
  for (const char* name :
       {"minkowski_bilinear", "degenerate_minkowski", "p_pseudo_norm",
        "euclidean_p", "berwald_moor", "weighted_geometric", "bimetric",
        "kropina", "stationary"})
    CHECK(contains(res.output, name));
  CHECK(contains(res.output, "checks: fundamental, reverse_triangle"));
}

TEST_CASE("verify: deterministic pass, report file, and failure exit codes") {
  const fs::path manifest = write_temp("lfnorm_cli_manifest.json", R"({
    "runs": [
      {
        "spec": {"family": "kropina", "dim": 2, "params": {}},
        "checks": ["fundamental", "reverse_triangle"],
        "sample": {"seed": 5, "count": 200}
      }
    ]
  })");
  const fs::path report = fs::temp_directory_path() / "lfnorm_cli_report.json";

  const std::string cmd =
      "verify \"" + manifest.string() + "\" --out \"" + report.string() + "\"";
  const RunResult first = run_cli(cmd);
  CHECK(first.exit_code == 0);
  CHECK(contains(first.output, "campaign: PASS"));
  CHECK(contains(first.output, "report: " + report.string()));

  const std::string first_bytes = slurp(report);
  const lf::Json parsed = lf::parse_json_text(first_bytes);
  CHECK(parsed.at("pass").get<bool>());
  CHECK(parsed.at("runs").size() == 1);

  const RunResult second = run_cli(cmd);
  CHECK(second.exit_code == 0);
  CHECK(slurp(report) == first_bytes);  // byte-identical reruns

  fs::remove(manifest);
  fs::remove(report);
}

TEST_CASE("verify: invalid manifests exit 1") {
  const fs::path manifest = write_temp("lfnorm_cli_bad_manifest.json", R"({
    "runs": [
      {
        "spec": {"family": "kropina", "dim": 2, "params": {}},
        "checks": ["fundamental"],
        "sample": {"count": 0}
      }
    ]
  })");
  const RunResult res = run_cli("verify \"" + manifest.string() + "\"");
  CHECK(res.exit_code == 1);
  CHECK(contains(res.output, "count must be >= 1"));
  fs::remove(manifest);

  CHECK(run_cli("verify /no/such/manifest.json").exit_code == 1);
}

TEST_CASE("verify: a failing run exits 3 and says FAIL") {
  // the huge band turns every strict pair into a non-collinear equality
  const fs::path manifest = write_temp("lfnorm_cli_fail_manifest.json", R"({
    "runs": [
      {
        "spec": {"family": "kropina", "dim": 2, "params": {}},
        "checks": ["fundamental"],
        "sample": {"seed": 5, "count": 50},
        "tolerances": {"fundamental": 1e30}
      }
    ]
  })");
  const fs::path report = fs::temp_directory_path() / "lfnorm_cli_fail_report.json";
  const RunResult res = run_cli("verify \"" + manifest.string() + "\" --out \"" +
                                report.string() + "\"");
  CHECK(res.exit_code == 3);
  CHECK(contains(res.output, "campaign: FAIL"));
  CHECK(!lf::parse_json_text(slurp(report)).at("pass").get<bool>());
  fs::remove(manifest);
  fs::remove(report);
}

TEST_CASE("verify: an unsatisfiable sampling request exits 4") {
  const fs::path manifest = write_temp("lfnorm_cli_exhaust_manifest.json", R"({
    "runs": [
      {
        "spec": {"family": "p_pseudo_norm", "dim": 8, "params": {"p": 3}},
        "checks": ["signature"],
        "sample": {"seed": 1, "count": 1, "margin": 0.45}
      }
    ]
  })");
  const RunResult res = run_cli("verify \"" + manifest.string() + "\"");
  CHECK(res.exit_code == 4);
  CHECK(contains(res.output, "sampling exhausted"));
  fs::remove(manifest);
}
