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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fraccap/error.hpp"
#include "fraccap/repro.hpp"
#include "json.hpp"

namespace fraccap {
namespace {

const Check* find(const ReproReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST_CASE("checks compare in both directions") {
  CHECK(make_check("x", 0, 1.0, 1.0 + 1e-9, 1e-8, "").passed);
  CHECK_FALSE(make_check("x", 0, 1.0, 1.1, 1e-8, "").passed);
  CHECK(make_check("x", 0, 1.0, 1.1, 1e-8, "", Comparison::kDiffer).passed);
  CHECK_FALSE(make_check("x", 0, 1.0, 1.0, 1e-8, "", Comparison::kDiffer).passed);
  CHECK_FALSE(make_check("x", 0, std::nan(""), 0.0, 1.0, "").passed);
}

TEST_CASE("capacity profile") {
  ProfileOptions options;
  options.samples = 21;
  const auto rows = capacity_profile(options);
  REQUIRE(rows.size() == 21);
  CHECK(rows.front().s == 0.0);
  CHECK(rows.back().s == doctest::Approx(4.0));
  for (const auto& r : rows) {
    const double expected = r.s <= 2.0 ? 1.0 : (r.s <= 3.0 ? 1.0 / (r.s - 1.0) : 0.0);
    CHECK(r.closed_form == doctest::Approx(expected).epsilon(1e-14));
    CHECK(std::abs(r.numeric - expected) <= 1e-8);
    CHECK(std::abs(r.oracle - expected) <= 2e-2);
  }
  const auto report = profile_report(options, rows);
  CHECK(report.passed());

  // Identical inputs give identical bytes.
  CHECK(profile_csv(rows) == profile_csv(capacity_profile(options)));
  const std::string csv = profile_csv(rows);
  CHECK(csv.rfind("s,phi_closed_form,phi_numeric,phi_oracle\n", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "fraccap_repro_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "profile.csv").string();
  write_profile_csv(rows, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == csv);
  try {
    write_profile_csv(rows, (dir / "missing" / "x.csv").string());
    FAIL("expected an IO error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }

  ProfileOptions bad = options;
  bad.a = 3.0;
  bad.b = 1.0;
  CHECK_THROWS_AS(capacity_profile(bad), Error);
  bad = options;
  bad.samples = 1;
  CHECK_THROWS_AS(capacity_profile(bad), Error);
}

TEST_CASE("bloch_choquet report") {
  const auto r = bloch_choquet(1.0, 3.0, 1e-6);
  CHECK(r.passed());
  REQUIRE(find(r, "choquet_analytic") != nullptr);
  CHECK(find(r, "choquet_analytic")->value == doctest::Approx(2.0 + std::log(2.0)));
  CHECK(find(r, "expectation")->value == 2.0);
  CHECK(find(r, "gap")->value == doctest::Approx(std::log(2.0)));
  CHECK(find(r, "choquet_recovers_expectation")->comparison == Comparison::kDiffer);

  const auto narrow = bloch_choquet(2.0, 2.0001, 1e-9);
  CHECK(find(narrow, "gap")->value == doctest::Approx(0.0001 * std::log(2.0) / 2.0));

  const auto json = nlohmann::json::parse(r.to_json());
  CHECK(json["command"] == "bloch-choquet");
  CHECK(json["passed"] == true);
  CHECK(json["checks"].size() == r.checks.size());
  CHECK(r.to_json() == bloch_choquet(1.0, 3.0, 1e-6).to_json());
  CHECK_THROWS_AS(bloch_choquet(3.0, 1.0, 1e-6), Error);
  CHECK_THROWS_AS(bloch_choquet(1.0, 3.0, 0.0), Error);
}

TEST_CASE("classical_check report") {
  const auto r = classical_check(4, 50, 7, 1e-9);
  CHECK(r.passed());
  CHECK(find(r, "sugeno_value")->value == doctest::Approx(0.05));
  CHECK(r.to_json() == classical_check(4, 50, 7, 1e-9).to_json());
  CHECK_THROWS_AS(classical_check(1, 5, 0, 1e-9), Error);
}

TEST_CASE("verify_all passes and reports every criterion") {
  VerifyOptions options;
  options.seed = 3;
  const auto r = verify_all(options);
  CHECK(r.passed());
  for (const auto& name : r.failures()) MESSAGE("failed: " << name);
  std::set<int> criteria;
  for (const auto& c : r.checks) criteria.insert(c.criterion);
  CHECK(criteria == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("verify_all corruption hook") {
  VerifyOptions options;
  options.corrupt_check = "sugeno_ratio";
  const auto r = verify_all(options);
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == std::vector<std::string>{"sugeno_ratio"});
  options.corrupt_check = "no_such_check";
  try {
    verify_all(options);
    FAIL("expected an invalid argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}

}  // namespace
}  // namespace fraccap
