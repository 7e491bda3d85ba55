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

#include "degenfact/classical.hpp"
#include "degenfact/degenerate.hpp"
#include "degenfact/parallel.hpp"
#include "degenfact/serialize.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace degenfact {

enum class Family {
    stirling_first,             // S1
    central_first,              // t_central
    central_second,             // T_central
    lambda_stirling_second,     // S2_lambda
    degenerate_central_second,  // T2_lambda
    degenerate_central_first,   // t1_lambda
    degenerate_euler,           // Euler_r
};

inline bool family_is_classical(Family f) {
    return f == Family::stirling_first || f == Family::central_first ||
           f == Family::central_second;
}

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::stirling_first: return "S1";
        case Family::central_first: return "t_central";
        case Family::central_second: return "T_central";
        case Family::lambda_stirling_second: return "S2_lambda";
        case Family::degenerate_central_second: return "T2_lambda";
        case Family::degenerate_central_first: return "t1_lambda";
        case Family::degenerate_euler: return "Euler_r";
    }
    return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
    if (s == "S1") return Family::stirling_first;
    if (s == "t" || s == "t_central" || s == "t-central") return Family::central_first;
    if (s == "T" || s == "T_central" || s == "T-central") return Family::central_second;
    if (s == "S2l" || s == "S2_lambda" || s == "S2-lambda") return Family::lambda_stirling_second;
    if (s == "T2" || s == "T2_lambda" || s == "T2-lambda") return Family::degenerate_central_second;
    if (s == "t1l" || s == "t1_lambda" || s == "t1-lambda") return Family::degenerate_central_first;
    if (s == "euler" || s == "Euler" || s == "Euler_r") return Family::degenerate_euler;
    return std::nullopt;
}

/// Materialized table of one family in one lambda mode. Entries are
/// polynomials in lambda (degree 0 for classical families and concrete
/// modes); everything above the diagonal is zero and not stored. The
/// Euler family is a single column indexed by n, with r and the
/// evaluation point x recorded alongside.
struct NumberTriangle {
    Family family = Family::stirling_first;
    std::size_t n_max = 0;
    std::size_t k_max = 0;
    LambdaMode lambda = LambdaMode::symbolic();
    Rational euler_r = 1;
    Rational euler_x = 0;
    Table<LambdaPoly> entries;

    std::size_t row_width(std::size_t n) const {
        if (family == Family::degenerate_euler) {
            return 1;
        }
        return std::min(n, k_max) + 1;
    }

    LambdaPoly at(std::size_t n, std::size_t k) const {
        if (n >= entries.size() || k >= entries[n].size()) {
            return {};
        }
        return entries[n][k];
    }
};

namespace detail {

template <typename R>
Table<R> egf_power_family_table_parallel(const Series<R>& base, std::size_t n_max,
                                         std::size_t k_max, unsigned jobs) {
    if (jobs <= 1) {
        return egf_power_family_table(base, n_max, k_max);
    }
    Table<R> out(n_max + 1, std::vector<R>(k_max + 1, RingTraits<R>::zero()));
    parallel_for(k_max + 1, jobs, [&](std::size_t k) {
        const Series<R> p = pow(base, k);
        const Rational inv_kfact = Rational(1) / Rational(factorial(k));
        Rational nfact = 1;
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (n > 0) {
                nfact *= Rational(static_cast<long long>(n));
            }
            out[n][k] = p[n] * RingTraits<R>::from_rational(nfact * inv_kfact);
        }
    });
    return out;
}

template <typename L>
Table<L> degenerate_family_table(Family family, const L& lambda, std::size_t n_max,
                                 std::size_t k_max, unsigned jobs) {
    const std::size_t order = n_max + 1;
    switch (family) {
        case Family::lambda_stirling_second: {
            const Series<L> u =
                deformed_exp(RingTraits<L>::one(), lambda, order) - Series<L>::one(order);
            return egf_power_family_table_parallel(u, n_max, k_max, jobs);
        }
        case Family::degenerate_central_second:
            return egf_power_family_table_parallel(central_map_series(lambda, order), n_max,
                                                   k_max, jobs);
        case Family::degenerate_central_first:
            return egf_power_family_table_parallel(revert(central_map_series(lambda, order)),
                                                   n_max, k_max, jobs);
        default:
            throw std::invalid_argument("degenerate_family_table: not an EGF power family");
    }
}

inline Table<LambdaPoly> lift_table(const Table<Rational>& in) {
    Table<LambdaPoly> out(in.size());
    for (std::size_t n = 0; n < in.size(); ++n) {
        out[n].reserve(in[n].size());
        for (const Rational& v : in[n]) {
            out[n].emplace_back(v);
        }
    }
    return out;
}

}  // namespace detail

inline NumberTriangle build_triangle(Family family, std::size_t n_max, std::size_t k_max,
                                     const LambdaMode& mode, const Rational& euler_r = 1,
                                     const Rational& euler_x = 0, unsigned jobs = 1) {
    NumberTriangle tri;
    tri.family = family;
    tri.n_max = n_max;
    tri.k_max = k_max;
    tri.lambda = mode;
    tri.euler_r = euler_r;
    tri.euler_x = euler_x;

    auto shrink_rows = [&](auto&& full) {
        tri.entries.assign(n_max + 1, {});
        for (std::size_t n = 0; n <= n_max; ++n) {
            const std::size_t w = tri.row_width(n);
            tri.entries[n].assign(full[n].begin(),
                                  full[n].begin() + static_cast<std::ptrdiff_t>(std::min(w, full[n].size())));
            tri.entries[n].resize(w);
        }
    };

    switch (family) {
        case Family::stirling_first:
            shrink_rows(detail::lift_table(stirling_first_triangle(n_max)));
            break;
        case Family::central_first: {
            Table<LambdaPoly> full(n_max + 1);
            for (std::size_t n = 0; n <= n_max; ++n) {
                const Poly<Rational> p = central_factorial_polynomial(n);
                full[n].reserve(n + 1);
                for (std::size_t k = 0; k <= n; ++k) {
                    full[n].emplace_back(p.coeff(k));
                }
            }
            shrink_rows(full);
            break;
        }
        case Family::central_second:
            shrink_rows(detail::lift_table(central_second_kind_triangle(n_max)));
            break;
        case Family::lambda_stirling_second:
        case Family::degenerate_central_second:
        case Family::degenerate_central_first: {
            if (mode.is_symbolic()) {
                shrink_rows(detail::degenerate_family_table(family, LambdaPoly::variable(),
                                                            n_max, std::min(n_max, k_max), jobs));
            } else {
                shrink_rows(detail::lift_table(detail::degenerate_family_table(
                    family, mode.value(), n_max, std::min(n_max, k_max), jobs)));
            }
            break;
        }
        case Family::degenerate_euler: {
            tri.entries.assign(n_max + 1, {});
            if (mode.is_symbolic()) {
                const LambdaPoly lambda = LambdaPoly::variable();
                const Series<LambdaPoly> s = degenerate_euler_series(
                    euler_r, from_rational<LambdaPoly>(euler_x), lambda, n_max + 1);
                for (std::size_t n = 0; n <= n_max; ++n) {
                    tri.entries[n] = {egf_coefficient(s, n)};
                }
            } else {
                const Series<Rational> s =
                    degenerate_euler_series(euler_r, euler_x, mode.value(), n_max + 1);
                for (std::size_t n = 0; n <= n_max; ++n) {
                    tri.entries[n] = {LambdaPoly(egf_coefficient(s, n))};
                }
            }
            break;
        }
    }
    return tri;
}

/// Serialized form of one entry: classical families use the plain "p/q"
/// string, degenerate families the coefficient array in lambda.
inline ordered_json triangle_entry_json(const NumberTriangle& tri, std::size_t n, std::size_t k) {
    const LambdaPoly v = tri.at(n, k);
    if (family_is_classical(tri.family)) {
        return v.coeff(0).str();
    }
    return ring_to_json(v);
}

inline void write_triangle_csv(const NumberTriangle& tri, std::ostream& os) {
    os << "n,k,value\n";
    for (std::size_t n = 0; n <= tri.n_max; ++n) {
        for (std::size_t k = 0; k < tri.row_width(n); ++k) {
            const ordered_json j = triangle_entry_json(tri, n, k);
            const std::string field = j.is_string() ? j.get<std::string>() : j.dump();
            os << n << ',' << k << ',' << csv_field(field) << '\n';
        }
    }
}

inline ordered_json triangle_to_json(const NumberTriangle& tri) {
    ordered_json out;
    out["family"] = std::string(family_name(tri.family));
    out["n_max"] = tri.n_max;
    out["k_max"] = tri.k_max;
    out["lambda"] = tri.lambda.str();
    if (tri.family == Family::degenerate_euler) {
        out["r"] = tri.euler_r.str();
        out["x"] = tri.euler_x.str();
    }
    ordered_json entries = ordered_json::array();
    for (std::size_t n = 0; n <= tri.n_max; ++n) {
        for (std::size_t k = 0; k < tri.row_width(n); ++k) {
            ordered_json e;
            e["n"] = n;
            e["k"] = k;
            e["value"] = triangle_entry_json(tri, n, k);
            entries.push_back(std::move(e));
        }
    }
    out["entries"] = std::move(entries);
    return out;
}

}  // namespace degenfact
