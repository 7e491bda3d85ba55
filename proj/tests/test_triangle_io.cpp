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

#include <sstream>
#include <string>
#include <vector>

using namespace degenfact;
using degenfact::testing::lambda_poly;

namespace {

/// Minimal CSV reader for the triangle format (handles quoted fields).
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    fields.push_back(current);
    return fields;
}

}  // namespace

TEST_CASE("polynomial JSON round trip is bit-exact") {
    testing::Gen gen(61);
    for (int i = 0; i < 50; ++i) {
        const auto p = gen.poly(5);
        CHECK(JsonCodec<LambdaPoly>::from(JsonCodec<LambdaPoly>::to(p)) == p);
    }
    const XPoly nested = XPoly(std::vector<LambdaPoly>{lambda_poly({0, -1}), lambda_poly({2})});
    CHECK(JsonCodec<XPoly>::from(JsonCodec<XPoly>::to(nested)) == nested);
    CHECK(ring_to_string(nested) == R"([["0","-1"],["2"]])");
    CHECK(ring_to_json(LambdaPoly()).dump() == "[]");
}

TEST_CASE("series JSON round trip keeps the order") {
    testing::Gen gen(67);
    const auto s = gen.series(6);
    const auto back = series_from_json<Rational>(series_to_json(s));
    CHECK(back == s);
    CHECK(back.order() == 6);
}

TEST_CASE("csv_field quotes only when needed") {
    CHECK(csv_field("12/5") == "12/5");
    CHECK(csv_field(R"(["1","2"])") == R"("[""1"",""2""]")");
    CHECK(csv_field("plain") == "plain");
}

TEST_CASE("family names round trip and aliases resolve") {
    for (Family f : {Family::stirling_first, Family::central_first, Family::central_second,
                     Family::lambda_stirling_second, Family::degenerate_central_second,
                     Family::degenerate_central_first, Family::degenerate_euler}) {
        CHECK(family_from_string(family_name(f)) == f);
    }
    CHECK(family_from_string("T2") == Family::degenerate_central_second);
    CHECK(family_from_string("t") == Family::central_first);
    CHECK(family_from_string("T") == Family::central_second);
    CHECK(family_from_string("euler") == Family::degenerate_euler);
    CHECK(!family_from_string("nope").has_value());
}

TEST_CASE("T2 triangle matches the per-value route") {
    const NumberTriangle tri =
        build_triangle(Family::degenerate_central_second, 6, 6, LambdaMode::symbolic());
    for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(tri.at(n, k) == degenerate_central_second(n, k, LambdaMode::symbolic()));
        }
    }
    CHECK(tri.at(2, 5).is_zero());
    CHECK(tri.at(9, 0).is_zero());
}

TEST_CASE("classical triangles serialize as plain rationals") {
    const NumberTriangle tri = build_triangle(Family::stirling_first, 5, 5, LambdaMode::symbolic());
    CHECK(triangle_entry_json(tri, 4, 2) == "11");
    CHECK(tri.at(3, 2) == LambdaPoly(Rational(-3)));

    std::ostringstream os;
    write_triangle_csv(tri, os);
    const std::string csv = os.str();
    CHECK(csv.find("4,2,11\n") != std::string::npos);
}

TEST_CASE("CSV and JSON carry identical values") {
    const NumberTriangle tri =
        build_triangle(Family::degenerate_central_second, 5, 5, LambdaMode::symbolic());
    std::ostringstream os;
    write_triangle_csv(tri, os);
    std::istringstream is(os.str());
    std::string line;
    CHECK(std::getline(is, line));
    CHECK(line == "n,k,value");

    const ordered_json j = triangle_to_json(tri);
    std::size_t idx = 0;
    while (std::getline(is, line)) {
        const auto fields = split_csv_line(line);
        REQUIRE(fields.size() == 3);
        const auto& entry = j["entries"][idx];
        CHECK(std::to_string(entry["n"].get<std::size_t>()) == fields[0]);
        CHECK(std::to_string(entry["k"].get<std::size_t>()) == fields[1]);
        const LambdaPoly from_csv =
            JsonCodec<LambdaPoly>::from(ordered_json::parse(fields[2]));
        const LambdaPoly from_json = JsonCodec<LambdaPoly>::from(entry["value"]);
        CHECK(from_csv == from_json);
        ++idx;
    }
    CHECK(idx == j["entries"].size());
    CHECK(idx == 21);  // full lower triangle for n_max = 5
}

TEST_CASE("triangle JSON metadata") {
    const NumberTriangle tri = build_triangle(Family::degenerate_central_first, 4, 3,
                                              LambdaMode::concrete(Rational(1, 3)));
    const ordered_json j = triangle_to_json(tri);
    CHECK(j["family"] == "t1_lambda");
    CHECK(j["n_max"] == 4);
    CHECK(j["k_max"] == 3);
    CHECK(j["lambda"] == "1/3");
    CHECK(!j.contains("r"));
}

TEST_CASE("Euler triangles are a single column with r and x recorded") {
    const NumberTriangle tri = build_triangle(Family::degenerate_euler, 4, 0,
                                              LambdaMode::symbolic(), Rational(1), Rational(0));
    CHECK(tri.row_width(3) == 1);
    for (std::size_t n = 0; n <= 4; ++n) {
        const XPoly e = degenerate_euler(n, Rational(1), XMode::concrete(Rational(0)),
                                         LambdaMode::symbolic());
        CHECK(tri.at(n, 0) == e.coeff(0));
    }
    const ordered_json j = triangle_to_json(tri);
    CHECK(j["r"] == "1");
    CHECK(j["x"] == "0");
}

TEST_CASE("t1 triangle at lambda = 0 equals the classical first kind") {
    const NumberTriangle tri = build_triangle(Family::degenerate_central_first, 6, 6,
                                              LambdaMode::concrete(Rational(0)));
    for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(tri.at(n, k) == LambdaPoly(central_first_kind(n, k)));
        }
    }
}

TEST_CASE("parallel triangle builds agree with serial ones") {
    for (Family f : {Family::lambda_stirling_second, Family::degenerate_central_second,
                     Family::degenerate_central_first}) {
        const NumberTriangle serial = build_triangle(f, 7, 7, LambdaMode::symbolic(),
                                                     Rational(1), Rational(0), 1);
        const NumberTriangle parallel = build_triangle(f, 7, 7, LambdaMode::symbolic(),
                                                       Rational(1), Rational(0), 4);
        CHECK(serial.entries == parallel.entries);
    }
}
