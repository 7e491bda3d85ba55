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

#pragma once

#include "degenfact/polynomial.hpp"
#include "degenfact/rational.hpp"
#include "degenfact/series.hpp"

#include <json.hpp>

#include <string>

namespace degenfact {

using ordered_json = nlohmann::ordered_json;

/// Wire encoding of ring values: a Rational is the string "p/q" (or "p");
/// a Poly is an array of encoded coefficients, index = power. Round-trips
/// are bit-exact because values are stored canonically.
template <typename R>
struct JsonCodec;

template <>
struct JsonCodec<Rational> {
    static ordered_json to(const Rational& q) { return q.str(); }
    static Rational from(const ordered_json& j) {
        return Rational::parse(j.get<std::string>());
    }
};

template <typename R>
struct JsonCodec<Poly<R>> {
    static ordered_json to(const Poly<R>& p) {
        ordered_json arr = ordered_json::array();
        for (const R& c : p.coefficients()) {
            arr.push_back(JsonCodec<R>::to(c));
        }
        return arr;
    }
    static Poly<R> from(const ordered_json& j) {
        std::vector<R> coeffs;
        coeffs.reserve(j.size());
        for (const auto& c : j) {
            coeffs.push_back(JsonCodec<R>::from(c));
        }
        return Poly<R>(std::move(coeffs));
    }
};

template <typename R>
ordered_json ring_to_json(const R& value) {
    return JsonCodec<R>::to(value);
}

template <typename R>
std::string ring_to_string(const R& value) {
    return JsonCodec<R>::to(value).dump();
}

template <typename R>
ordered_json series_to_json(const Series<R>& s) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < s.order(); ++i) {
        arr.push_back(JsonCodec<R>::to(s[i]));
    }
    return arr;
}

template <typename R>
Series<R> series_from_json(const ordered_json& j) {
    std::vector<R> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        coeffs.push_back(JsonCodec<R>::from(c));
    }
    const std::size_t order = coeffs.size();
    return Series<R>(order, std::move(coeffs));
}

/// Quotes a CSV field when it contains a comma, quote or newline.
inline std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) {
        return raw;
    }
    std::string out = "\"";
    for (char ch : raw) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace degenfact
