// Copyright 2026 The fraccap Authors.
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

// fraccap_cli: reproduction runs on top of the C interface.
//
// Exit codes: 0 all checks passed, 1 a check or solver failed, 2 bad usage
// or an output file that cannot be written.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fraccap/fraccap.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kOutputDirVariable = "FRACCAP_OUTPUT_DIR";

// --out if given, else the default file name under $FRACCAP_OUTPUT_DIR (or
// the working directory).
std::string output_path(const std::string& out, const char* default_name) {
  if (!out.empty()) return out;
  const char* dir = std::getenv(kOutputDirVariable);
  std::filesystem::path base = (dir != nullptr && dir[0] != '\0') ? dir : ".";
  return (base / default_name).string();
}

int status_exit_code(fc_status status) {
  std::fprintf(stderr, "error: %s\n", fc_last_error_message());
  switch (status) {
    case FC_ERR_INVALID_ARGUMENT:
    case FC_ERR_DIMENSION_MISMATCH:
    case FC_ERR_SPACE_MISMATCH:
    case FC_ERR_NOT_IN_SPACE:
    case FC_ERR_UNSUPPORTED:
    case FC_ERR_IO:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << text;
  file.flush();
  return static_cast<bool>(file);
}

// Prints one line per check and returns the exit code for the report.
int summarize(const char* json_text, int passed) {
  const auto report = nlohmann::ordered_json::parse(json_text);
  for (const auto& c : report["checks"]) {
    const bool ok = c["passed"].get<bool>();
    std::string label = c["name"].get<std::string>();
    if (c.contains("criterion")) {
      label = "[" + std::to_string(c["criterion"].get<int>()) + "] " + label;
    }
    const auto num = [](const nlohmann::ordered_json& v) {
      return v.is_number() ? v.get<double>() : std::nan("");
    };
    std::printf("%s  %-34s value=%.12g reference=%.12g %s tol=%.3g\n",
                ok ? "PASS" : "FAIL", label.c_str(), num(c["value"]),
                num(c["reference"]),
                c["comparison"] == "equal" ? "within" : "outside",
                num(c["tolerance"]));
  }
  if (passed) {
    std::printf("overall: PASS\n");
    return kExitOk;
  }
  std::printf("overall: FAIL\n");
  for (const auto& c : report["checks"]) {
    if (!c["passed"].get<bool>()) {
      std::fprintf(stderr, "failed check: %s\n",
                   c["name"].get<std::string>().c_str());
    }
  }
  return kExitCheckFailed;
}

// Writes the report (if a path is given), prints it and frees it.
int finish(char* json, int passed, const std::string& path) {
  const std::string text = json;
  const int code = summarize(json, passed);
  fc_string_free(json);
  if (!path.empty()) {
    if (!write_text(path, text)) {
      std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
      return kExitUsage;
    }
    std::printf("report: %s\n", path.c_str());
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fraction capacities and non-additive integrals: reproduction runs"};
  app.require_subcommand(1);

  double a = 1.0;
  double b = 3.0;
  std::size_t samples = 101;
  std::size_t oracle_points = 10000;
  std::size_t trials = 100;
  std::size_t n = 3;
  std::uint64_t seed = 0;
  double quadrature_tol = 1e-6;
  double classical_tol = 1e-9;
  std::string out;
  std::string corrupt;

  auto* profile = app.add_subcommand(
      "capacity-profile", "capacity of the level sets at the Bloch-ball centre, as CSV");
  profile->add_option("--a", a, "minimum of the variable")->capture_default_str();
  profile->add_option("--b", b, "maximum of the variable")->capture_default_str();
  profile->add_option("--samples", samples, "number of s values")
      ->capture_default_str();
  profile->add_option("--oracle-points", oracle_points,
                      "sphere points used by the LP oracle")
      ->capture_default_str();
  profile->add_option("--seed", seed, "oracle seed")->capture_default_str();
  profile->add_option("--out", out, "CSV path");

  auto* choquet = app.add_subcommand(
      "bloch-choquet", "Choquet integral against expectation at the Bloch-ball centre");
  choquet->add_option("--a", a, "minimum of the variable")->capture_default_str();
  choquet->add_option("--b", b, "maximum of the variable")->capture_default_str();
  choquet->add_option("--tol", quadrature_tol, "quadrature tolerance")->capture_default_str();
  choquet->add_option("--out", out, "JSON report path");

  auto* classical = app.add_subcommand(
      "classical-check", "Choquet and Sugeno integrals on random simplex instances");
  classical->add_option("--n", n, "number of outcomes")->capture_default_str();
  classical->add_option("--trials", trials, "random instances")
      ->capture_default_str();
  classical->add_option("--seed", seed, "instance seed")->capture_default_str();
  classical->add_option("--tol", classical_tol, "agreement tolerance")->capture_default_str();
  classical->add_option("--out", out, "JSON report path");

  auto* verify = app.add_subcommand("verify-all", "run every acceptance check");
  verify->add_option("--seed", seed, "seed for the randomized instances")
      ->capture_default_str();
  verify->add_option("--oracle-points", oracle_points,
                     "sphere points used by the LP oracle")
      ->capture_default_str();
  verify->add_option("--out", out, "JSON report path");
  verify->add_option("--corrupt-check", corrupt,
                     "test hook: force the named check to fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  char* json = nullptr;
  int passed = 0;
  fc_status status = FC_OK;

  if (*profile) {
    const std::string path = output_path(out, "capacity_profile.csv");
    status = fc_repro_capacity_profile(a, b, samples, oracle_points, seed,
                                       path.c_str(), &json, &passed);
    if (status != FC_OK) return status_exit_code(status);
    std::printf("profile: %s\n", path.c_str());
    return finish(json, passed, "");
  }
  if (*choquet) {
    status = fc_repro_bloch_choquet(a, b, quadrature_tol, &json, &passed);
    if (status != FC_OK) return status_exit_code(status);
    return finish(json, passed, output_path(out, "bloch_choquet.json"));
  }
  if (*classical) {
    status = fc_repro_classical_check(n, trials, seed, classical_tol, &json, &passed);
    if (status != FC_OK) return status_exit_code(status);
    return finish(json, passed, output_path(out, "classical_check.json"));
  }
  status = fc_repro_verify_all(seed, oracle_points, corrupt.c_str(), &json,
                               &passed);
  if (status != FC_OK) return status_exit_code(status);
  return finish(json, passed, output_path(out, "verify_all.json"));
}
