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

// Reproduction runs: the capacity profile at the centre of the Bloch ball,
// the Choquet value there, the classical equivalence, and the full
// verification suite, each summarized as a report of named checks.

#ifndef FRACCAP_REPRO_HPP_
#define FRACCAP_REPRO_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fraccap {

inline constexpr const char* kVersion = "0.1.0";

enum class Comparison {
  kEqual,   // passes when |value - reference| <= tolerance
  kDiffer,  // passes when |value - reference| > tolerance
};

struct Check {
  std::string name;
  int criterion = 0;  // acceptance criterion number, 0 if none
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::kEqual;
  bool passed = false;
  std::string anchor;  // what the reference value is
};

Check make_check(std::string name, int criterion, double value,
                 double reference, double tolerance, std::string anchor,
                 Comparison comparison = Comparison::kEqual);

struct ReproReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> tolerances;
  std::vector<Check> checks;

  bool passed() const;
  // Names of the failing checks, in order.
  std::vector<std::string> failures() const;
  // Stable key order; identical inputs give identical text.
  std::string to_json() const;
};

struct ProfileOptions {
  double a = 1.0;
  double b = 3.0;
  std::size_t samples = 101;
  std::size_t oracle_points = 10000;
  std::uint64_t seed = 0;
  double bisection_tol = 1e-10;
};

struct ProfileRow {
  double s = 0.0;
  double closed_form = 0.0;
  double numeric = 0.0;
  double oracle = 0.0;
};

// Rows over s in [0, b + (b - a) / 2]; requires 0 < a < b and samples >= 2.
std::vector<ProfileRow> capacity_profile(const ProfileOptions& options);

// CSV with header "s,phi_closed_form,phi_numeric,phi_oracle", values printed
// with 17 significant digits. Throws Error(kIo) if the file cannot be
// written.
void write_profile_csv(const std::vector<ProfileRow>& rows,
                       const std::string& path);
std::string profile_csv(const std::vector<ProfileRow>& rows);

// Agreement of the three profile columns.
ReproReport profile_report(const ProfileOptions& options,
                           const std::vector<ProfileRow>& rows);

ReproReport bloch_choquet(double a, double b, double tol);

ReproReport classical_check(std::size_t n, std::size_t trials,
                            std::uint64_t seed, double tol);

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t oracle_points = 10000;
  // Test hook: the named check gets an impossible tolerance.
  std::string corrupt_check;
};

ReproReport verify_all(const VerifyOptions& options);

}  // namespace fraccap

#endif  // FRACCAP_REPRO_HPP_
