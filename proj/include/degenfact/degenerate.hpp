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
#include "degenfact/polynomial.hpp"
#include "degenfact/rational.hpp"
#include "degenfact/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace degenfact {

/// Whether lambda (or x) is kept as an indeterminate or fixed to a rational.
/// Concrete(0) reproduces the classical families exactly.
class LambdaMode {
  public:
    static LambdaMode symbolic() { return LambdaMode(true, Rational()); }
    static LambdaMode concrete(Rational v) { return LambdaMode(false, std::move(v)); }

    bool is_symbolic() const { return symbolic_; }
    const Rational& value() const {
        if (symbolic_) {
            throw std::logic_error("LambdaMode: symbolic mode has no value");
        }
        return value_;
    }

    std::string str() const { return symbolic_ ? "symbolic" : value_.str(); }

    static LambdaMode parse(std::string_view text) {
        if (text == "symbolic") {
            return symbolic();
        }
        return concrete(Rational::parse(text));
    }

    bool operator==(const LambdaMode& o) const {
        return symbolic_ == o.symbolic_ && value_ == o.value_;
    }

  private:
    LambdaMode(bool symbolic, Rational v) : symbolic_(symbolic), value_(std::move(v)) {}
    bool symbolic_;
    Rational value_;
};

using XMode = LambdaMode;

// ---------------------------------------------------------------------------
// Generic kernel: every family is computed over an arbitrary coefficient
// ring R, with lambda (and x, where present) passed as ring elements.
// Symbolic modes instantiate R = Poly<...>; concrete modes R = Rational.
// ---------------------------------------------------------------------------

/// (a)_{n,step} = a (a - step)(a - 2 step) ... (a - (n-1) step); empty product for n = 0.
template <typename R>
R falling_factorial(const R& a, const R& step, std::size_t n) {
    R acc = RingTraits<R>::one();
    for (std::size_t j = 0; j < n; ++j) {
        acc = acc * (a - RingTraits<R>::from_rational(Rational(static_cast<long long>(j))) * step);
    }
    return acc;
}

/// Degenerate binomial coefficient C(a, l)_lambda = (a)_{l,lambda} / l!.
template <typename R>
R degenerate_binomial(const R& a, const R& lambda, std::size_t l) {
    return falling_factorial(a, lambda, l) *
           RingTraits<R>::from_rational(Rational(BigInt(1), factorial(l)));
}

/// g(t) = (1 + lambda t)^{1/(2 lambda)} - (1 + lambda t)^{-1/(2 lambda)},
/// the deformed central map whose k-th powers generate the second-kind family.
template <typename R>
Series<R> central_map_series(const R& lambda, std::size_t order) {
    const R half = RingTraits<R>::from_rational(Rational(1, 2));
    return deformed_exp(half, lambda, order) - deformed_exp(-half, lambda, order);
}

/// Degenerate Stirling numbers of the second kind:
/// entries[n][k] = n!/k! [t^n] ((1 + lambda t)^{1/lambda} - 1)^k.
template <typename R>
Table<R> lambda_stirling_table(const R& lambda, std::size_t n_max, std::size_t k_max) {
    const std::size_t order = n_max + 1;
    const Series<R> u =
        deformed_exp(RingTraits<R>::one(), lambda, order) - Series<R>::one(order);
    return egf_power_family_table(u, n_max, k_max);
}

/// Degenerate central factorial numbers of the second kind T_2(n,k).
template <typename R>
Table<R> degenerate_central_second_table(const R& lambda, std::size_t n_max, std::size_t k_max) {
    return egf_power_family_table(central_map_series(lambda, n_max + 1), n_max, k_max);
}

/// Degenerate central factorial polynomials of the second kind T_2(n,k|x),
/// with x passed as a ring element (an indeterminate or a constant).
template <typename R>
Table<R> degenerate_central_second_poly_table(const R& x, const R& lambda,
                                              std::size_t n_max, std::size_t k_max) {
    const std::size_t order = n_max + 1;
    return egf_power_family_table(central_map_series(lambda, order),
                                  deformed_exp(x, lambda, order), n_max, k_max);
}

/// Degenerate central factorial numbers of the first kind t_1(n,k), read
/// off the powers of the compositional inverse of the central map.
template <typename R>
Table<R> degenerate_central_first_table(const R& lambda, std::size_t n_max, std::size_t k_max) {
    return egf_power_family_table(revert(central_map_series(lambda, n_max + 1)), n_max, k_max);
}

/// T_2(n,k|x) through the recursion
///   T_2(n+1,k|x) = (x + k/2 - n lambda) T_2(n,k|x) + T_2(n,k-1|x - 1/2),
/// with T_2(n,0|x) = (x)_{n,lambda}. The x - 1/2 shift is a substitution on
/// the symbolic polynomial, so values are polynomials in x over L.
template <typename L>
Table<Poly<L>> degenerate_central_second_recursive_table(const L& lambda,
                                                         std::size_t n_max, std::size_t k_max) {
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
            const XP head = x + RingTraits<XP>::from_rational(Rational(static_cast<long long>(k), 2)) -
                            lifted_lambda * RingTraits<XP>::from_rational(Rational(static_cast<long long>(n)));
            t[n + 1][k] = head * t[n][k] + compose(t[n][k - 1], x_minus_half);
        }
    }
    return t;
}

/// T_2(n,k|x) through the central-difference route:
/// sum_{m=0}^{n} (1/k! delta^k x^m) lambda^{n-m} S_1(n,m), a polynomial in x
/// over L. Yields the zero polynomial for n < k.
template <typename L>
Poly<L> degenerate_central_second_via_difference(std::size_t n, std::size_t k, const L& lambda) {
    const Table<Rational> s1 = stirling_first_triangle(n);
    const Rational inv_kfact(BigInt(1), factorial(k));
    const Poly<Rational> xvar = Poly<Rational>::variable();
    Poly<Rational> xm = RingTraits<Poly<Rational>>::one();
    Poly<L> acc;
    for (std::size_t m = 0; m <= n; ++m) {
        if (m > 0) {
            xm = xm * xvar;
        }
        const Rational& s = s1[n][m];
        if (s.is_zero()) {
            continue;
        }
        const Poly<Rational> d = central_difference(xm, k);
        if (d.is_zero()) {
            continue;
        }
        const L weight = ring_pow(lambda, n - m) * RingTraits<L>::from_rational(s * inv_kfact);
        acc += map_coefficients(d, [&](const Rational& c) {
            return RingTraits<L>::from_rational(c) * weight;
        });
    }
    return acc;
}

/// The explicit alternating sum for T_2(n,k):
/// n!/k! sum_{l=0}^{k} C(k,l) C(l - k/2, n)_lambda (-1)^{k-l};
/// equals T_2(n,k) for n >= k and vanishes for n < k.
template <typename L>
L degenerate_central_second_explicit(std::size_t n, std::size_t k, const L& lambda) {
    L acc = RingTraits<L>::zero();
    for (std::size_t l = 0; l <= k; ++l) {
        const Rational a = Rational(static_cast<long long>(l)) - Rational(static_cast<long long>(k), 2);
        Rational c(binomial(k, l));
        if ((k - l) % 2) {
            c = -c;
        }
        acc = acc + degenerate_binomial(RingTraits<L>::from_rational(a), lambda, n) *
                        RingTraits<L>::from_rational(c);
    }
    return acc * RingTraits<L>::from_rational(Rational(factorial(n)) / Rational(factorial(k)));
}

/// The double sum
/// sum_{l=0}^{k} sum_{i=l}^{n} C(n,i) S_{2,lambda}(i,l) S_{2,-lambda}(n-i,k-l) (-1)^{n-i},
/// which collapses to k! C(2k,k) T_2(n,2k) for n >= 2k and to 0 below.
/// Negating lambda realizes the sign flip in one implementation.
template <typename L>
Table<L> even_central_convolution_table(const L& lambda, std::size_t n_max, std::size_t k_max) {
    const Table<L> pos = lambda_stirling_table(lambda, n_max, std::min(n_max, k_max));
    const Table<L> neg = lambda_stirling_table(-lambda, n_max, std::min(n_max, k_max));
    Table<L> out(n_max + 1, std::vector<L>(k_max + 1, RingTraits<L>::zero()));
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= k_max; ++k) {
            L acc = RingTraits<L>::zero();
            for (std::size_t l = 0; l <= std::min(k, n); ++l) {
                if (k - l > n) {
                    continue;
                }
                for (std::size_t i = l; i + (k - l) <= n; ++i) {
                    Rational c(binomial(n, i));
                    if ((n - i) % 2) {
                        c = -c;
                    }
                    acc = acc + pos[i][l] * neg[n - i][k - l] * RingTraits<L>::from_rational(c);
                }
            }
            out[n][k] = acc;
        }
    }
    return out;
}

template <typename L>
L even_central_convolution(std::size_t n, std::size_t k, const L& lambda) {
    return even_central_convolution_table(lambda, n, k)[n][k];
}

/// EGF of the higher-order degenerate Euler polynomials
/// (2/((1+lambda t)^{1/lambda} + 1))^r (1+lambda t)^{x/lambda}, computed via
/// the rearrangement ((E - 1)/2 + 1)^{-r} with E = (1+lambda t)^{1/lambda}.
/// r ranges over the rationals.
template <typename R>
Series<R> degenerate_euler_series(const Rational& r, const R& x, const R& lambda,
                                  std::size_t order) {
    const Series<R> one_series = Series<R>::one(order);
    const Series<R> u = deformed_exp(RingTraits<R>::one(), lambda, order) - one_series;
    const Series<R> base = one_series + scale(u, Rational(1, 2));
    return pow(base, -r) * deformed_exp(x, lambda, order);
}

/// Order-1 Euler EGF computed through the series reciprocal of
/// ((1+lambda t)^{1/lambda} + 1)/2 instead of the binomial expansion;
/// an independent route for cross-checking.
template <typename R>
Series<R> degenerate_euler_series_order1(const R& x, const R& lambda, std::size_t order) {
    const Series<R> one_series = Series<R>::one(order);
    const Series<R> half_sum =
        scale(deformed_exp(RingTraits<R>::one(), lambda, order) + one_series, Rational(1, 2));
    return reciprocal(half_sum) * deformed_exp(x, lambda, order);
}

/// Euler polynomials through the second-kind family:
/// E^(r)_n(x) = sum_{l=0}^{n} C(r+l-1, l) (-1/2)^l l! T_2(n,l|x + l/2),
/// a polynomial in x over L.
template <typename L>
Poly<L> degenerate_euler_via_central(std::size_t n, const Rational& r, const L& lambda) {
    using XP = Poly<L>;
    const XP x = XP::variable();
    const Table<XP> t2 = degenerate_central_second_poly_table(x, XP(lambda), n, n);
    XP acc;
    Rational minus_half_pow = 1;
    for (std::size_t l = 0; l <= n; ++l) {
        const Rational c =
            binomial(r + Rational(static_cast<long long>(l)) - Rational(1), l) * minus_half_pow *
            Rational(factorial(l));
        const XP shift = x + RingTraits<XP>::from_rational(Rational(static_cast<long long>(l), 2));
        acc += compose(t2[n][l], shift) * RingTraits<XP>::from_rational(c);
        minus_half_pow *= Rational(-1, 2);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Mode-dispatching front end. Number families return polynomials in lambda
// (degree 0 in concrete mode); polynomial families return polynomials in x
// with lambda-polynomial coefficients.
// ---------------------------------------------------------------------------

namespace detail {

inline LambdaPoly lift_lambda(const Rational& v) { return LambdaPoly(v); }

inline XPoly lift_x_constant(const LambdaPoly& p) { return p.is_zero() ? XPoly() : XPoly(p); }

inline XPoly lift_x_poly(const Poly<Rational>& in_x) {
    return map_coefficients(in_x, [](const Rational& c) { return LambdaPoly(c); });
}

template <typename NumberFn>
LambdaPoly dispatch_number(const LambdaMode& mode, NumberFn&& fn) {
    if (mode.is_symbolic()) {
        return fn(LambdaPoly::variable());
    }
    return lift_lambda(fn(mode.value()));
}

/// Runs fn over the ring matching (x, lambda) modes; fn(x_elem, lambda_elem)
/// returns a ring element, which is lifted into (Q[lambda])[x].
template <typename Fn>
XPoly dispatch_poly(const XMode& x, const LambdaMode& mode, Fn&& fn) {
    if (mode.is_symbolic()) {
        using L = LambdaPoly;
        const L lambda = L::variable();
        if (x.is_symbolic()) {
            using R = Poly<L>;
            return fn(R::variable(), R(lambda));
        }
        return lift_x_constant(fn(RingTraits<L>::from_rational(x.value()), lambda));
    }
    const Rational lambda = mode.value();
    if (x.is_symbolic()) {
        using R = Poly<Rational>;
        return lift_x_poly(fn(R::variable(), R(lambda)));
    }
    return lift_x_constant(lift_lambda(fn(x.value(), lambda)));
}

/// For routes that always produce a polynomial in x over L, evaluated
/// afterwards when x is concrete.
template <typename Fn>
XPoly dispatch_xroute(const XMode& x, const LambdaMode& mode, Fn&& fn) {
    if (mode.is_symbolic()) {
        using L = LambdaPoly;
        const Poly<L> p = fn(L::variable());
        if (x.is_symbolic()) {
            return p;
        }
        return lift_x_constant(p(RingTraits<L>::from_rational(x.value())));
    }
    const Poly<Rational> p = fn(mode.value());
    if (x.is_symbolic()) {
        return lift_x_poly(p);
    }
    return lift_x_constant(lift_lambda(p(x.value())));
}

}  // namespace detail

inline LambdaPoly lambda_stirling_second(std::size_t n, std::size_t k, const LambdaMode& mode) {
    return detail::dispatch_number(mode, [&](const auto& lambda) {
        return lambda_stirling_table(lambda, n, k)[n][k];
    });
}

inline LambdaPoly degenerate_central_second(std::size_t n, std::size_t k, const LambdaMode& mode) {
    return detail::dispatch_number(mode, [&](const auto& lambda) {
        return degenerate_central_second_table(lambda, n, k)[n][k];
    });
}

inline LambdaPoly degenerate_central_second_explicit(std::size_t n, std::size_t k,
                                                     const LambdaMode& mode) {
    return detail::dispatch_number(mode, [&](const auto& lambda) {
        return degenerate_central_second_explicit(n, k, lambda);
    });
}

inline LambdaPoly degenerate_central_first(std::size_t n, std::size_t k, const LambdaMode& mode) {
    return detail::dispatch_number(mode, [&](const auto& lambda) {
        return degenerate_central_first_table(lambda, n, k)[n][k];
    });
}

inline LambdaPoly even_central_convolution(std::size_t n, std::size_t k, const LambdaMode& mode) {
    return detail::dispatch_number(mode, [&](const auto& lambda) {
        return even_central_convolution(n, k, lambda);
    });
}

inline XPoly degenerate_central_second_poly(std::size_t n, std::size_t k, const XMode& x,
                                            const LambdaMode& mode) {
    return detail::dispatch_poly(x, mode, [&](const auto& xe, const auto& lambda) {
        return degenerate_central_second_poly_table(xe, lambda, n, k)[n][k];
    });
}

inline XPoly degenerate_central_second_poly_recursive(std::size_t n, std::size_t k, const XMode& x,
                                                      const LambdaMode& mode) {
    return detail::dispatch_xroute(x, mode, [&](const auto& lambda) {
        return degenerate_central_second_recursive_table(lambda, n, k)[n][k];
    });
}

inline XPoly degenerate_central_second_via_difference(std::size_t n, std::size_t k, const XMode& x,
                                                      const LambdaMode& mode) {
    return detail::dispatch_xroute(x, mode, [&](const auto& lambda) {
        return degenerate_central_second_via_difference(n, k, lambda);
    });
}

inline XPoly degenerate_euler(std::size_t n, const Rational& r, const XMode& x,
                              const LambdaMode& mode) {
    return detail::dispatch_poly(x, mode, [&](const auto& xe, const auto& lambda) {
        return egf_coefficient(degenerate_euler_series(r, xe, lambda, n + 1), n);
    });
}

inline XPoly degenerate_euler_via_central(std::size_t n, const Rational& r, const XMode& x,
                                          const LambdaMode& mode) {
    return detail::dispatch_xroute(x, mode, [&](const auto& lambda) {
        return degenerate_euler_via_central(n, r, lambda);
    });
}

}  // namespace degenfact
