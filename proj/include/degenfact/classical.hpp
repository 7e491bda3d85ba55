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

#include <cstddef>
#include <vector>

namespace degenfact {

/// Signed Stirling numbers of the first kind, rows 0..n_max, row n has
/// n+1 entries. Built from S1(n+1,k) = S1(n,k-1) - n S1(n,k), S1(0,0) = 1.
inline Table<Rational> stirling_first_triangle(std::size_t n_max) {
    Table<Rational> t(n_max + 1);
    t[0] = {Rational(1)};
    for (std::size_t n = 0; n < n_max; ++n) {
        t[n + 1].assign(n + 2, Rational());
        for (std::size_t k = 1; k <= n + 1; ++k) {
            const Rational above = k <= n ? t[n][k] : Rational();
            t[n + 1][k] = t[n][k - 1] - Rational(static_cast<long long>(n)) * above;
        }
    }
    return t;
}

inline Rational stirling_first(std::size_t n, std::size_t k) {
    if (k > n) {
        return {};
    }
    return stirling_first_triangle(n)[n][k];
}

/// Classical Stirling numbers of the second kind via
/// S2(n,k) = k S2(n-1,k) + S2(n-1,k-1).
inline Table<Rational> stirling_second_triangle(std::size_t n_max) {
    Table<Rational> t(n_max + 1);
    t[0] = {Rational(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        t[n].assign(n + 1, Rational());
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational above = k <= n - 1 ? t[n - 1][k] : Rational();
            t[n][k] = Rational(static_cast<long long>(k)) * above + t[n - 1][k - 1];
        }
    }
    return t;
}

inline Rational stirling_second(std::size_t n, std::size_t k) {
    if (k > n) {
        return {};
    }
    return stirling_second_triangle(n)[n][k];
}

/// The central factorial x^[n] = x (x + n/2 - 1)(x + n/2 - 2) ... (x - n/2 + 1),
/// with x^[0] = 1, as a polynomial in x.
inline Poly<Rational> central_factorial_polynomial(std::size_t n) {
    Poly<Rational> p = RingTraits<Poly<Rational>>::one();
    if (n == 0) {
        return p;
    }
    const Poly<Rational> x = Poly<Rational>::variable();
    p = x;
    for (std::size_t j = 1; j < n; ++j) {
        const Rational shift = Rational(static_cast<long long>(n), 2) - Rational(static_cast<long long>(j));
        p = p * (x + Poly<Rational>(shift));
    }
    return p;
}

/// Central factorial numbers of the first kind t(n,k): coefficient of x^k
/// in x^[n].
inline Rational central_first_kind(std::size_t n, std::size_t k) {
    return central_factorial_polynomial(n).coeff(k);
}

/// Central factorial numbers of the second kind T(n,k), extracted from the
/// EGF 1/k! (e^{t/2} - e^{-t/2})^k.
inline Table<Rational> central_second_kind_triangle(std::size_t n_max) {
    const std::size_t order = n_max + 1;
    const Rational half(1, 2);
    const Series<Rational> g =
        deformed_exp(half, Rational(0), order) - deformed_exp(-half, Rational(0), order);
    return egf_power_family_table(g, n_max, n_max);
}

inline Rational central_second_kind(std::size_t n, std::size_t k) {
    if (k > n) {
        return {};
    }
    return central_second_kind_triangle(n)[n][k];
}

/// T(n,k) rebuilt from the recurrence T(n,k) = T(n-2,k-2) + k^2/4 T(n-2,k)
/// for n,k >= 2. The recurrence alone is not closed, so rows n <= 1 and
/// columns k <= 1 are seeded from the EGF route.
inline Table<Rational> central_second_kind_by_recurrence(std::size_t n_max) {
    Table<Rational> egf = central_second_kind_triangle(n_max);
    Table<Rational> t(n_max + 1, std::vector<Rational>(n_max + 1, Rational()));
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= std::min<std::size_t>(n, 1); ++k) {
            t[n][k] = egf[n][k];
        }
    }
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (std::size_t k = 2; k <= n; ++k) {
            const Rational quarter_ksq(static_cast<long long>(k * k), 4);
            const Rational upper = k <= n - 2 ? t[n - 2][k] : Rational();
            t[n][k] = t[n - 2][k - 2] + quarter_ksq * upper;
        }
    }
    return t;
}

/// k-fold central difference of a polynomial:
/// delta^k p = sum_l C(k,l) (-1)^(k-l) p(x + l - k/2); delta^0 is the identity.
inline Poly<Rational> central_difference(const Poly<Rational>& p, std::size_t k) {
    if (k == 0) {
        return p;
    }
    const Poly<Rational> x = Poly<Rational>::variable();
    Poly<Rational> acc;
    for (std::size_t l = 0; l <= k; ++l) {
        Rational c(binomial(k, l));
        if ((k - l) % 2) {
            c = -c;
        }
        const Rational offset = Rational(static_cast<long long>(l)) - Rational(static_cast<long long>(k), 2);
        acc += compose(p, x + Poly<Rational>(offset)) * c;
    }
    return acc;
}

/// Checks the reduction identity
/// delta^k x^(m+1) = (x + k/2) delta^k x^m + k delta^(k-1) (x - 1/2)^m
/// as exact polynomial equality.
inline bool central_difference_reduction_holds(std::size_t k, std::size_t m) {
    const Poly<Rational> x = Poly<Rational>::variable();
    const Poly<Rational> xm = pow(x, m);
    const Poly<Rational> lhs = central_difference(xm * x, k);
    const Poly<Rational> shifted = pow(x - Poly<Rational>(Rational(1, 2)), m);
    const Poly<Rational> rhs =
        (x + Poly<Rational>(Rational(static_cast<long long>(k), 2))) * central_difference(xm, k) +
        central_difference(shifted, k - 1) * Rational(static_cast<long long>(k));
    return lhs == rhs;
}

}  // namespace degenfact
