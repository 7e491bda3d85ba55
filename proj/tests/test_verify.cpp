/*
   Copyright 2026 The degenfact authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "test_util.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace degenfact;

namespace {
const LambdaMode kSymbolic = LambdaMode::symbolic();
}

TEST_CASE("individual checks pass on honest inputs") {
    CHECK(run_check(CheckId::thm6, {10, 10}, kSymbolic).passed);
    CHECK(run_check(CheckId::thm8, {10, 4}, kSymbolic).passed);
    CHECK(run_check(CheckId::eq2, {10, 10}, kSymbolic).passed);
    CHECK(run_check(CheckId::inverse_pair, {8, 8}, kSymbolic).passed);
    CHECK(run_check(CheckId::thm4, {8, 8}, LambdaMode::concrete(Rational(-2, 5))).passed);
}

TEST_CASE("every check fails under its seeded mutation") {
    for (CheckId id : all_checks()) {
        CAPTURE(check_name(id));
        const CheckResult result = run_check(id, {8, 8}, kSymbolic, /*mutated=*/true);
        CHECK(!result.passed);
        CHECK(result.counterexample.has_value());
    }
}

TEST_CASE("mutated recursion fails at the smallest affected index") {
    const CheckResult result = run_check(CheckId::thm4, {8, 8}, kSymbolic, /*mutated=*/true);
    REQUIRE(!result.passed);
    CHECK(result.counterexample->n == 2);
    CHECK(result.counterexample->k == 1);

    // mutations also bite in concrete mode
    const CheckResult concrete =
        run_check(CheckId::thm4, {8, 8}, LambdaMode::concrete(Rational(1, 3)), true);
    CHECK(!concrete.passed);
}

TEST_CASE("mutated convolution reports lhs and rhs") {
    const CheckResult result = run_check(CheckId::thm1, {6, 6}, kSymbolic, true);
    REQUIRE(!result.passed);
    CHECK(result.counterexample->n == 0);
    CHECK(result.counterexample->k == 0);
    CHECK(!result.counterexample->lhs.empty());
    CHECK(!result.counterexample->rhs.empty());
}

TEST_CASE("limit checks reject inapplicable lambda modes") {
    CHECK_THROWS_AS(run_check(CheckId::limit_s2, {4, 4}, LambdaMode::concrete(Rational(1, 3))),
                    std::invalid_argument);
    CHECK(run_check(CheckId::limit_s2, {6, 6}, LambdaMode::concrete(Rational(0))).passed);
    CHECK(check_applicable(CheckId::limit_t2, kSymbolic));
    CHECK(!check_applicable(CheckId::limit_t2, LambdaMode::concrete(Rational(1))));
    CHECK(check_applicable(CheckId::thm1, LambdaMode::concrete(Rational(1))));
}

TEST_CASE("run_all passes on the default mode set at a small range") {
    const VerifyReport report = run_all(6, 6, default_verify_modes());
    CHECK(report.all_passed());
    // symbolic and concrete(0) run all 15 checks; concrete(1/3) skips the 3 limit checks
    CHECK(report.checks.size() == 15 + 12 + 15);
}

TEST_CASE("run_all passes at the full default range") {
    const VerifyReport report = run_all(12, 12, default_verify_modes(), 4);
    CHECK(report.all_passed());
}

TEST_CASE("run_all at n_max = 0 is a vacuous pass") {
    const VerifyReport report = run_all(0, 0, {kSymbolic});
    CHECK(report.all_passed());
}

TEST_CASE("run_all over the concrete sample set") {
    const std::vector<LambdaMode> modes = {
        LambdaMode::concrete(Rational(0)),  LambdaMode::concrete(Rational(1)),
        LambdaMode::concrete(Rational(-1)), LambdaMode::concrete(Rational(1, 3)),
        LambdaMode::concrete(Rational(-2, 5)),
    };
    const VerifyReport report = run_all(6, 6, modes);
    CHECK(report.all_passed());
}

TEST_CASE("reports are deterministic and parallel runs agree") {
    const VerifyReport a = run_all(5, 5, default_verify_modes(), 1);
    const VerifyReport b = run_all(5, 5, default_verify_modes(), 4);
    CHECK(report_text(a) == report_text(b));
    CHECK(report_json(a) == report_json(b));
}

TEST_CASE("report text names checks and summarizes") {
    const VerifyReport report = run_all(4, 4, {kSymbolic});
    const std::string text = report_text(report);
    CHECK(text.find("PASS THM1 lambda=symbolic n_max=4 k_max=4") != std::string::npos);
    CHECK(text.find("15 checks: 15 passed, 0 failed") != std::string::npos);

    const ordered_json j = report_json(report);
    CHECK(j["all_passed"] == true);
    CHECK(j["checks"].size() == 15);
    CHECK(j["checks"][0]["check_id"] == "THM1");
    CHECK(j["checks"][0]["status"] == "pass");
}

TEST_CASE("check names round trip") {
    for (CheckId id : all_checks()) {
        CHECK(check_from_name(check_name(id)) == id);
    }
    CHECK(!check_from_name("THM99").has_value());
}
