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

#include <chrono>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace degenfact {

/// One identity of the family algebra, checked over an index range by
/// computing both sides through independent routes and comparing exactly.
enum class CheckId {
    thm1,          // convolution: T2(n,k|x) = sum C(n,l) T2(l,k) (x)_{n-l}
    thm2,          // central-difference route equals T2(n,k|x), zero for n < k
    thm3,          // same at x = 0
    thm4,          // recursion route equals the EGF route, polynomial in x
    thm5,          // x = 0 recursion identity on EGF values
    thm6,          // explicit alternating sum equals T2(n,k), zero for n < k
    thm7,          // Euler via the second-kind family; order-1 route agreement
    thm8,          // double Stirling sum equals k! C(2k,k) T2(n,2k)
    eq2,           // Stirling-1 recurrence vs falling-factorial expansion
    eq12,          // x^n = sum T(n,k) x^[k]
    eq15,          // central-difference reduction identity
    limit_s2,      // lambda -> 0 of S2_lambda equals classical S2
    limit_t2,      // lambda -> 0 of T2_lambda equals classical T
    limit_thm5,    // lambda -> 0 of the x = 0 recursion (classical display)
    inverse_pair,  // revert(g) composes to t; [t1][T2] = I
};

inline const std::vector<CheckId>& all_checks() {
    static const std::vector<CheckId> ids = {
        CheckId::thm1,     CheckId::thm2,     CheckId::thm3,       CheckId::thm4,
        CheckId::thm5,     CheckId::thm6,     CheckId::thm7,       CheckId::thm8,
        CheckId::eq2,      CheckId::eq12,     CheckId::eq15,       CheckId::limit_s2,
        CheckId::limit_t2, CheckId::limit_thm5, CheckId::inverse_pair,
    };
    return ids;
}

inline std::string_view check_name(CheckId id) {
    switch (id) {
        case CheckId::thm1: return "THM1";
        case CheckId::thm2: return "THM2";
        case CheckId::thm3: return "THM3";
        case CheckId::thm4: return "THM4";
        case CheckId::thm5: return "THM5";
        case CheckId::thm6: return "THM6";
        case CheckId::thm7: return "THM7";
        case CheckId::thm8: return "THM8";
        case CheckId::eq2: return "EQ2";
        case CheckId::eq12: return "EQ12";
        case CheckId::eq15: return "EQ15";
        case CheckId::limit_s2: return "LIMIT_S2";
        case CheckId::limit_t2: return "LIMIT_T2";
        case CheckId::limit_thm5: return "LIMIT_THM5";
        case CheckId::inverse_pair: return "INVERSE_PAIR";
    }
    return "?";
}

inline std::optional<CheckId> check_from_name(std::string_view name) {
    for (CheckId id : all_checks()) {
        if (check_name(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

/// The lambda -> 0 limit checks compare against classical tables, which is
/// only meaningful when lambda is symbolic (evaluate at 0) or fixed to 0.
inline bool check_applicable(CheckId id, const LambdaMode& mode) {
    switch (id) {
        case CheckId::limit_s2:
        case CheckId::limit_t2:
        case CheckId::limit_thm5:
            return mode.is_symbolic() || mode.value().is_zero();
        default:
            return true;
    }
}

struct CheckRange {
    std::size_t n_max = 12;
    std::size_t k_max = 12;
};

struct Counterexample {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    CheckId id = CheckId::thm1;
    LambdaMode mode = LambdaMode::symbolic();
    CheckRange range;
    bool passed = false;
    std::optional<Counterexample> counterexample;
    double seconds = 0.0;  // informational; excluded from serialized reports
};

namespace detail {

inline Rational at_lambda_zero(const Rational& v) { return v; }
inline Rational at_lambda_zero(const LambdaPoly& p) { return p(Rational(0)); }

/// Tables shared by the checks of one lambda mode. Built on demand; once
/// built they are read-only, so concurrent checks may share them.
template <typename L>
struct ModeTables {
    ModeTables(L lambda_element, CheckRange check_range)
        : lambda(std::move(lambda_element)), range(check_range) {}

    L lambda;
    CheckRange range;

    std::optional<Table<L>> numbers;           // T2(n,k), square to n_max
    std::optional<Table<Poly<L>>> polys;       // T2(n,k|x), symbolic x
    std::optional<Table<L>> stirling;          // S2_lambda
    std::optional<Table<L>> first_kind;        // t1_lambda

    const Table<L>& ensure_numbers() {
        if (!numbers) {
            numbers = degenerate_central_second_table(lambda, range.n_max, range.n_max);
        }
        return *numbers;
    }
    const Table<Poly<L>>& ensure_polys() {
        if (!polys) {
            using XP = Poly<L>;
            polys = degenerate_central_second_poly_table(XP::variable(), XP(lambda),
                                                         range.n_max, range.n_max);
        }
        return *polys;
    }
    const Table<L>& ensure_stirling() {
        if (!stirling) {
            stirling = lambda_stirling_table(lambda, range.n_max, range.n_max);
        }
        return *stirling;
    }
    const Table<L>& ensure_first_kind() {
        if (!first_kind) {
            first_kind = degenerate_central_first_table(lambda, range.n_max, range.n_max);
        }
        return *first_kind;
    }

    void ensure_for(CheckId id) {
        switch (id) {
            case CheckId::thm1: ensure_numbers(); ensure_polys(); break;
            case CheckId::thm2: ensure_polys(); break;
            case CheckId::thm3: ensure_numbers(); break;
            case CheckId::thm4: ensure_polys(); break;
            case CheckId::thm5: ensure_numbers(); ensure_polys(); break;
            case CheckId::thm6: ensure_numbers(); break;
            case CheckId::thm8: ensure_numbers(); break;
            case CheckId::limit_s2: ensure_stirling(); break;
            case CheckId::limit_t2: ensure_numbers(); break;
            case CheckId::limit_thm5: ensure_polys(); break;
            case CheckId::inverse_pair: ensure_numbers(); ensure_first_kind(); break;
            default: break;
        }
    }
};

template <typename V>
Counterexample make_ce(std::size_t n, std::size_t k, const V& lhs, const V& rhs) {
    return Counterexample{n, k, ring_to_string(lhs), ring_to_string(rhs)};
}

// Each check returns the first counterexample in scan order, or nothing.
// The mutated variants corrupt exactly one coefficient of one route; they
// exist to prove the comparisons can fail (negative controls).

template <typename L>
std::optional<Counterexample> check_thm1(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const Table<L>& numbers = t.ensure_numbers();
    const Table<Poly<L>>& polys = t.ensure_polys();
    using XP = Poly<L>;
    const XP x = XP::variable();
    const XP lam = XP(t.lambda);
    std::vector<XP> falling(r.n_max + 1);
    falling[0] = RingTraits<XP>::one();
    for (std::size_t m = 1; m <= r.n_max; ++m) {
        falling[m] = falling[m - 1] *
                     (x - lam * RingTraits<XP>::from_rational(Rational(static_cast<long long>(m - 1))));
    }
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            XP rhs;
            for (std::size_t l = k; l <= n; ++l) {
                Rational c(binomial(n, l));
                if (mutated && l == k) {
                    c *= 2;
                }
                rhs += XP(numbers[l][k]) * falling[n - l] * RingTraits<XP>::from_rational(c);
            }
            if (!(polys[n][k] == rhs)) {
                return make_ce(n, k, polys[n][k], rhs);
            }
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> check_thm2(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const Table<Poly<L>>& polys = t.ensure_polys();
    const Poly<Rational> xvar = Poly<Rational>::variable();
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        for (std::size_t k = 0; k <= r.k_max; ++k) {
            Poly<L> lhs = degenerate_central_second_via_difference(n, k, t.lambda);
            if (mutated) {
                // double the m = n term of the sum
                const Poly<Rational> d = central_difference(pow(xvar, n), k);
                const Rational inv_kfact(BigInt(1), factorial(k));
                lhs += map_coefficients(d, [&](const Rational& c) {
                    return RingTraits<L>::from_rational(c * inv_kfact);
                });
            }
            const Poly<L> rhs = k <= n ? polys[n][k] : Poly<L>();
            if (!(lhs == rhs)) {
                return make_ce(n, k, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> check_thm3(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const Table<L>& numbers = t.ensure_numbers();
    const Poly<Rational> xvar = Poly<Rational>::variable();
    const L zero_point = RingTraits<L>::zero();
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        for (std::size_t k = 0; k <= r.k_max; ++k) {
            L lhs = degenerate_central_second_via_difference(n, k, t.lambda)(zero_point);
            if (mutated) {
                const Rational d0 = central_difference(pow(xvar, n), k)(Rational(0));
                lhs = lhs + RingTraits<L>::from_rational(d0 / Rational(factorial(k)));
            }
            const L rhs = k <= n ? numbers[n][k] : RingTraits<L>::zero();
            if (!(lhs == rhs)) {
                return make_ce(n, k, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

/// Recursion table with the head coefficient k/2 replaced by k; used only
/// as the THM4 negative control.
template <typename L>
Table<Poly<L>> perturbed_recursive_table(const L& lambda, std::size_t n_max, std::size_t k_max) {
    using XP = Poly<L>;
    const XP x = XP::variable();
    const XP lifted_lambda = XP(lambda);
    const XP x_minus_half = x - RingTraits<XP>::from_rational(Rational(1, 2));
    Table<XP> t(n_max + 1, std::vector<XP>(k_max + 1));
    t[0][0] = RingTraits<XP>::one();
    for (std::size_t n = 0; n < n_max; ++n) {
        t[n + 1][0] = falling_factorial(x, lifted_lambda, n + 1);
        const std::size_t k_hi = std::min(n + 1, k_max);
        for (std::size_t k = 1; k <= k_hi; ++k) {
            const XP head = x + RingTraits<XP>::from_rational(Rational(static_cast<long long>(k))) -
                            lifted_lambda * RingTraits<XP>::from_rational(Rational(static_cast<long long>(n)));
            t[n + 1][k] = head * t[n][k] + compose(t[n][k - 1], x_minus_half);
        }
    }
    return t;
}

template <typename L>
std::optional<Counterexample> check_thm4(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const Table<Poly<L>>& polys = t.ensure_polys();
    const Table<Poly<L>> rec =
        mutated ? perturbed_recursive_table(t.lambda, r.n_max, r.n_max)
                : degenerate_central_second_recursive_table(t.lambda, r.n_max, r.n_max);
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (!(rec[n][k] == polys[n][k])) {
                return make_ce(n, k, rec[n][k], polys[n][k]);
            }
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> check_thm5(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    if (r.n_max == 0) {
        return std::nullopt;
    }
    const Table<L>& numbers = t.ensure_numbers();
    const Table<Poly<L>>& polys = t.ensure_polys();
    const L minus_half = RingTraits<L>::from_rational(Rational(-1, 2));
    for (std::size_t n = 1; n + 1 <= r.n_max; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const L lhs = numbers[n + 1][k];
            const Rational half_k = mutated ? Rational(static_cast<long long>(k))
                                            : Rational(static_cast<long long>(k), 2);
            const L head = RingTraits<L>::from_rational(half_k) -
                           t.lambda * RingTraits<L>::from_rational(Rational(static_cast<long long>(n)));
            const L rhs = head * numbers[n][k] + polys[n][k - 1](minus_half);
            if (!(lhs == rhs)) {
                return make_ce(n + 1, k, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> check_thm6(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const Table<L>& numbers = t.ensure_numbers();
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        for (std::size_t k = 0; k <= r.k_max; ++k) {
            L lhs = degenerate_central_second_explicit(n, k, t.lambda);
            if (mutated) {
                // double the l = k term
                const Rational a(static_cast<long long>(k), 2);
                const L term = degenerate_binomial(RingTraits<L>::from_rational(a), t.lambda, n) *
                               RingTraits<L>::from_rational(Rational(factorial(n)) / Rational(factorial(k)));
                lhs = lhs + term;
            }
            const L rhs = k <= n ? numbers[n][k] : RingTraits<L>::zero();
            if (!(lhs == rhs)) {
                return make_ce(n, k, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> check_thm7(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const std::size_t n_hi = std::min<std::size_t>(r.n_max, 8);
    using XP = Poly<L>;
    const XP x = XP::variable();
    const XP lam = XP(t.lambda);
    const std::vector<Rational> orders = {Rational(1), Rational(2), Rational(1, 2)};
    for (std::size_t ri = 0; ri < orders.size(); ++ri) {
        const Rational& order_r = orders[ri];
        const Series<XP> egf = degenerate_euler_series(order_r, x, lam, n_hi + 1);
        for (std::size_t n = 0; n <= n_hi; ++n) {
            XP lhs = degenerate_euler_via_central(n, order_r, t.lambda);
            if (mutated && n >= 1) {
                // double the l = 1 term
                const Table<Poly<L>>& polys = t.ensure_polys();
                const XP shifted = compose(polys[n][1], x + RingTraits<XP>::from_rational(Rational(1, 2)));
                lhs += shifted * RingTraits<XP>::from_rational(order_r * Rational(-1, 2));
            }
            const XP rhs = egf_coefficient(egf, n);
            if (!(lhs == rhs)) {
                return make_ce(n, ri, lhs, rhs);
            }
        }
    }
    // Order-1 agreement between the binomial expansion and the reciprocal route.
    const Series<XP> binomial_route = degenerate_euler_series(Rational(1), x, lam, n_hi + 1);
    const Series<XP> reciprocal_route = degenerate_euler_series_order1(x, lam, n_hi + 1);
    for (std::size_t n = 0; n <= n_hi; ++n) {
        if (!(binomial_route[n] == reciprocal_route[n])) {
            return make_ce(n, orders.size(), binomial_route[n], reciprocal_route[n]);
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> check_thm8(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const std::size_t n_hi = std::min<std::size_t>(r.n_max, 10);
    const std::size_t k_hi = std::min<std::size_t>(r.k_max, 4);
    const Table<L>& numbers = t.ensure_numbers();
    const Table<L> conv = even_central_convolution_table(t.lambda, n_hi, k_hi);
    std::optional<Table<L>> pos;
    if (mutated) {
        pos = lambda_stirling_table(t.lambda, n_hi, k_hi);
    }
    for (std::size_t n = 0; n <= n_hi; ++n) {
        for (std::size_t k = 0; k <= k_hi; ++k) {
            L lhs = conv[n][k];
            if (mutated) {
                lhs = lhs + (*pos)[n][k];  // double the (l,i) = (k,n) term
            }
            L rhs = RingTraits<L>::zero();
            if (n >= 2 * k) {
                const Rational c = Rational(factorial(k)) * Rational(binomial(2 * k, k));
                rhs = numbers[n][2 * k] * RingTraits<L>::from_rational(c);
            }
            if (!(lhs == rhs)) {
                return make_ce(n, k, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

inline Table<Rational> perturbed_stirling_first(std::size_t n_max) {
    Table<Rational> t(n_max + 1);
    t[0] = {Rational(1)};
    for (std::size_t n = 0; n < n_max; ++n) {
        t[n + 1].assign(n + 2, Rational());
        for (std::size_t k = 1; k <= n + 1; ++k) {
            const Rational above = k <= n ? t[n][k] : Rational();
            t[n + 1][k] = t[n][k - 1] - Rational(static_cast<long long>(n + 1)) * above;
        }
    }
    return t;
}

inline std::optional<Counterexample> check_eq2(const CheckRange& r, bool mutated) {
    const Table<Rational> s1 =
        mutated ? perturbed_stirling_first(r.n_max) : stirling_first_triangle(r.n_max);
    const Poly<Rational> x = Poly<Rational>::variable();
    Poly<Rational> product = RingTraits<Poly<Rational>>::one();
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        if (n > 0) {
            product = product * (x - Poly<Rational>(Rational(static_cast<long long>(n - 1))));
        }
        for (std::size_t l = 0; l <= n; ++l) {
            if (!(s1[n][l] == product.coeff(l))) {
                return make_ce(n, l, s1[n][l], product.coeff(l));
            }
        }
    }
    return std::nullopt;
}

inline std::optional<Counterexample> check_eq12(const CheckRange& r, bool mutated) {
    const Table<Rational> second = central_second_kind_triangle(r.n_max);
    std::vector<Poly<Rational>> basis(r.n_max + 1);
    for (std::size_t k = 0; k <= r.n_max; ++k) {
        basis[k] = central_factorial_polynomial(k);
    }
    const Poly<Rational> x = Poly<Rational>::variable();
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        Poly<Rational> sum;
        for (std::size_t k = 0; k <= n; ++k) {
            sum += basis[k] * second[n][k];
        }
        if (mutated && n >= 1) {
            sum += basis[1] * second[n][1];  // double the k = 1 term
        }
        const Poly<Rational> expected = pow(x, n);
        if (!(sum == expected)) {
            return make_ce(n, 0, sum, expected);
        }
    }
    return std::nullopt;
}

inline std::optional<Counterexample> check_eq15(const CheckRange& r, bool mutated) {
    const std::size_t k_hi = std::min<std::size_t>(r.n_max, 6);
    const std::size_t m_hi = std::min<std::size_t>(r.n_max, 8);
    const Poly<Rational> x = Poly<Rational>::variable();
    for (std::size_t k = 1; k <= k_hi; ++k) {
        for (std::size_t m = 0; m <= m_hi; ++m) {
            const Poly<Rational> xm = pow(x, m);
            const Poly<Rational> lhs = central_difference(xm * x, k);
            const Rational head_shift = mutated ? Rational(static_cast<long long>(k))
                                                : Rational(static_cast<long long>(k), 2);
            const Poly<Rational> shifted = pow(x - Poly<Rational>(Rational(1, 2)), m);
            const Poly<Rational> rhs =
                (x + Poly<Rational>(head_shift)) * central_difference(xm, k) +
                central_difference(shifted, k - 1) * Rational(static_cast<long long>(k));
            if (!(lhs == rhs)) {
                return make_ce(k, m, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

inline Table<Rational> perturbed_stirling_second(std::size_t n_max) {
    Table<Rational> t(n_max + 1);
    t[0] = {Rational(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        t[n].assign(n + 1, Rational());
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational above = k <= n - 1 ? t[n - 1][k] : Rational();
            t[n][k] = Rational(static_cast<long long>(k + 1)) * above + t[n - 1][k - 1];
        }
    }
    return t;
}

template <typename L>
std::optional<Counterexample> check_limit_s2(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const Table<L>& degenerate = t.ensure_stirling();
    const Table<Rational> classical =
        mutated ? perturbed_stirling_second(r.n_max) : stirling_second_triangle(r.n_max);
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        for (std::size_t k = 0; k <= r.n_max; ++k) {
            const Rational lhs = at_lambda_zero(degenerate[n][k]);
            const Rational rhs = k <= n ? classical[n][k] : Rational();
            if (!(lhs == rhs)) {
                return make_ce(n, k, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

/// Classical recurrence table with k^2/4 replaced by k^2/2; the LIMIT_T2
/// negative control.
inline Table<Rational> perturbed_central_recurrence(std::size_t n_max) {
    Table<Rational> egf = central_second_kind_triangle(n_max);
    Table<Rational> t(n_max + 1, std::vector<Rational>(n_max + 1, Rational()));
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= std::min<std::size_t>(n, 1); ++k) {
            t[n][k] = egf[n][k];
        }
    }
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (std::size_t k = 2; k <= n; ++k) {
            const Rational halved(static_cast<long long>(k * k), 2);
            const Rational upper = k <= n - 2 ? t[n - 2][k] : Rational();
            t[n][k] = t[n - 2][k - 2] + halved * upper;
        }
    }
    return t;
}

template <typename L>
std::optional<Counterexample> check_limit_t2(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    const Table<L>& degenerate = t.ensure_numbers();
    const Table<Rational> classical = mutated ? perturbed_central_recurrence(r.n_max)
                                              : central_second_kind_by_recurrence(r.n_max);
    for (std::size_t n = 0; n <= r.n_max; ++n) {
        for (std::size_t k = 0; k <= r.n_max; ++k) {
            const Rational lhs = at_lambda_zero(degenerate[n][k]);
            const Rational rhs = k <= n ? classical[n][k] : Rational();
            if (!(lhs == rhs)) {
                return make_ce(n, k, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> check_limit_thm5(ModeTables<L>& t, const CheckRange& r, bool mutated) {
    if (r.n_max == 0) {
        return std::nullopt;
    }
    const Table<Rational> classical = central_second_kind_triangle(r.n_max);
    const Table<Poly<L>>& polys = t.ensure_polys();
    const L minus_half = RingTraits<L>::from_rational(Rational(-1, 2));
    for (std::size_t n = 1; n + 1 <= r.n_max; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational lhs = classical[n + 1][k];
            const Rational half_k = mutated ? Rational(static_cast<long long>(k))
                                            : Rational(static_cast<long long>(k), 2);
            const Rational tail = at_lambda_zero(polys[n][k - 1](minus_half));
            const Rational rhs = half_k * classical[n][k] + tail;
            if (!(lhs == rhs)) {
                return make_ce(n + 1, k, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> check_inverse_pair(ModeTables<L>& t, const CheckRange& r,
                                                 bool mutated) {
    const std::size_t order = std::max<std::size_t>(r.n_max + 1, 17);
    const Series<L> g = central_map_series(t.lambda, order);
    Series<L> h = revert(g);
    if (mutated && order > 2) {
        h[2] = h[2] + RingTraits<L>::one();
    }
    const Series<L> identity = Series<L>::identity(order);
    const Series<L> g_after_h = compose(g, h);
    const Series<L> h_after_g = compose(h, g);
    for (std::size_t i = 0; i < order; ++i) {
        if (!(g_after_h[i] == identity[i])) {
            return make_ce(i, 0, g_after_h[i], identity[i]);
        }
        if (!(h_after_g[i] == identity[i])) {
            return make_ce(i, 0, h_after_g[i], identity[i]);
        }
    }
    const std::size_t m = std::min<std::size_t>(r.n_max, 10);
    const Table<L>& first = t.ensure_first_kind();
    const Table<L>& second = t.ensure_numbers();
    for (std::size_t n = 0; n <= m; ++n) {
        for (std::size_t k = 0; k <= m; ++k) {
            L sum = RingTraits<L>::zero();
            for (std::size_t j = k; j <= n; ++j) {
                sum = sum + first[n][j] * second[j][k];
            }
            const L expected = n == k ? RingTraits<L>::one() : RingTraits<L>::zero();
            if (!(sum == expected)) {
                return make_ce(n, k, sum, expected);
            }
        }
    }
    return std::nullopt;
}

template <typename L>
std::optional<Counterexample> dispatch_check(CheckId id, ModeTables<L>& t, const CheckRange& r,
                                             bool mutated) {
    switch (id) {
        case CheckId::thm1: return check_thm1(t, r, mutated);
        case CheckId::thm2: return check_thm2(t, r, mutated);
        case CheckId::thm3: return check_thm3(t, r, mutated);
        case CheckId::thm4: return check_thm4(t, r, mutated);
        case CheckId::thm5: return check_thm5(t, r, mutated);
        case CheckId::thm6: return check_thm6(t, r, mutated);
        case CheckId::thm7: return check_thm7(t, r, mutated);
        case CheckId::thm8: return check_thm8(t, r, mutated);
        case CheckId::eq2: return check_eq2(r, mutated);
        case CheckId::eq12: return check_eq12(r, mutated);
        case CheckId::eq15: return check_eq15(r, mutated);
        case CheckId::limit_s2: return check_limit_s2(t, r, mutated);
        case CheckId::limit_t2: return check_limit_t2(t, r, mutated);
        case CheckId::limit_thm5: return check_limit_thm5(t, r, mutated);
        case CheckId::inverse_pair: return check_inverse_pair(t, r, mutated);
    }
    throw std::invalid_argument("run_check: unknown check id");
}

template <typename L>
CheckResult run_one(CheckId id, ModeTables<L>& tables, const CheckRange& range,
                    const LambdaMode& mode, bool mutated) {
    CheckResult result;
    result.id = id;
    result.mode = mode;
    result.range = range;
    const auto start = std::chrono::steady_clock::now();
    result.counterexample = dispatch_check(id, tables, range, mutated);
    result.passed = !result.counterexample.has_value();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace detail

/// Runs one check over the given range and lambda mode, self-contained.
/// `mutated` runs the check's negative control, which must fail.
inline CheckResult run_check(CheckId id, CheckRange range, const LambdaMode& mode,
                             bool mutated = false) {
    if (!check_applicable(id, mode)) {
        throw std::invalid_argument("run_check: check " + std::string(check_name(id)) +
                                    " is not applicable to lambda mode " + mode.str());
    }
    if (mode.is_symbolic()) {
        detail::ModeTables<LambdaPoly> tables{LambdaPoly::variable(), range};
        return detail::run_one(id, tables, range, mode, mutated);
    }
    detail::ModeTables<Rational> tables{mode.value(), range};
    return detail::run_one(id, tables, range, mode, mutated);
}

struct VerifyReport {
    std::vector<CheckResult> checks;
    double total_seconds = 0.0;

    bool all_passed() const {
        for (const CheckResult& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

template <typename L>
void run_mode(const L& lambda, const LambdaMode& mode, const CheckRange& range, unsigned jobs,
              std::vector<CheckResult>& out) {
    std::vector<CheckId> ids;
    for (CheckId id : all_checks()) {
        if (check_applicable(id, mode)) {
            ids.push_back(id);
        }
    }
    ModeTables<L> tables{lambda, range};
    for (CheckId id : ids) {
        tables.ensure_for(id);  // build shared tables once, before any parallelism
    }
    std::vector<CheckResult> results(ids.size());
    parallel_for(ids.size(), jobs, [&](std::size_t i) {
        results[i] = run_one(ids[i], tables, range, mode, false);
    });
    for (auto& result : results) {
        out.push_back(std::move(result));
    }
}

}  // namespace detail

/// Runs every applicable check for every lambda mode, in registry order.
inline VerifyReport run_all(std::size_t n_max, std::size_t k_max,
                            const std::vector<LambdaMode>& modes, unsigned jobs = 1) {
    VerifyReport report;
    const CheckRange range{n_max, k_max};
    const auto start = std::chrono::steady_clock::now();
    for (const LambdaMode& mode : modes) {
        if (mode.is_symbolic()) {
            detail::run_mode(LambdaPoly::variable(), mode, range, jobs, report.checks);
        } else {
            detail::run_mode(mode.value(), mode, range, jobs, report.checks);
        }
    }
    report.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline std::vector<LambdaMode> default_verify_modes() {
    return {LambdaMode::symbolic(), LambdaMode::concrete(Rational(1, 3)),
            LambdaMode::concrete(Rational(0))};
}

/// Human-readable report; deterministic for identical inputs (timings are
/// deliberately not included).
inline std::string report_text(const VerifyReport& report) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const CheckResult& c : report.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << check_name(c.id) << " lambda=" << c.mode.str()
           << " n_max=" << c.range.n_max << " k_max=" << c.range.k_max;
        if (!c.passed) {
            ++failed;
            const Counterexample& ce = *c.counterexample;
            os << " at (" << ce.n << "," << ce.k << "): lhs=" << ce.lhs << " rhs=" << ce.rhs;
        }
        os << '\n';
    }
    os << report.checks.size() << " checks: " << (report.checks.size() - failed) << " passed, "
       << failed << " failed\n";
    return os.str();
}

inline ordered_json report_json(const VerifyReport& report) {
    ordered_json out;
    out["all_passed"] = report.all_passed();
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : report.checks) {
        ordered_json j;
        j["check_id"] = std::string(check_name(c.id));
        j["lambda_mode"] = c.mode.str();
        j["range"] = {{"n_max", c.range.n_max}, {"k_max", c.range.k_max}};
        j["status"] = c.passed ? "pass" : "fail";
        if (!c.passed) {
            const Counterexample& ce = *c.counterexample;
            j["counterexample"] = {{"n", ce.n}, {"k", ce.k}, {"lhs", ce.lhs}, {"rhs", ce.rhs}};
        }
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace degenfact
