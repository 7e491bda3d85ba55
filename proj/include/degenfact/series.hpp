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

#include "degenfact/rational.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace degenfact {

/// Truncated formal power series over a coefficient ring R. The order is
/// the number of retained coefficients (powers 0..order-1); coefficients
/// are plain t^i coefficients, never divided by i!. Binary operations
/// require equal orders so truncation is always explicit.
template <typename R>
class Series {
  public:
    explicit Series(std::size_t order) : coeffs_(order, RingTraits<R>::zero()) {}

    Series(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order, RingTraits<R>::zero());
    }

    static Series one(std::size_t order) {
        Series s(order);
        if (order > 0) {
            s.coeffs_[0] = RingTraits<R>::one();
        }
        return s;
    }

    /// The series t (truncated to the given order).
    static Series identity(std::size_t order) {
        Series s(order);
        if (order > 1) {
            s.coeffs_[1] = RingTraits<R>::one();
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }

    const R& operator[](std::size_t i) const { return coeffs_.at(i); }
    R& operator[](std::size_t i) { return coeffs_.at(i); }

    Series truncated(std::size_t new_order) const {
        std::vector<R> out(coeffs_.begin(),
                           coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(new_order, coeffs_.size())));
        return Series(new_order, std::move(out));
    }

    Series operator-() const {
        Series out(order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out.coeffs_[i] = -coeffs_[i];
        }
        return out;
    }

    Series operator+(const Series& o) const {
        check_order(o);
        Series out(order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        }
        return out;
    }

    Series operator-(const Series& o) const { return *this + (-o); }

    /// Cauchy product truncated to the common order.
    Series operator*(const Series& o) const {
        check_order(o);
        Series out(order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == RingTraits<R>::zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
                out.coeffs_[i + j] = out.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        return out;
    }

    Series operator*(const R& s) const {
        Series out(order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out.coeffs_[i] = coeffs_[i] * s;
        }
        return out;
    }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const Series& s) {
        os << '[';
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            if (i) {
                os << ", ";
            }
            os << s.coeffs_[i];
        }
        return os << ']';
    }

  private:
    std::vector<R> coeffs_;

    void check_order(const Series& o) const {
        if (coeffs_.size() != o.coeffs_.size()) {
            throw std::invalid_argument("Series: order mismatch");
        }
    }
};

template <typename R>
Series<R> scale(const Series<R>& s, const Rational& q) {
    return s * RingTraits<R>::from_rational(q);
}

/// a^k by repeated squaring, truncated to the order of a; a^0 = 1.
template <typename R>
Series<R> pow(const Series<R>& a, std::size_t k) {
    Series<R> result = Series<R>::one(a.order());
    Series<R> base = a;
    while (k > 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1u;
        if (k) {
            base = base * base;
        }
    }
    return result;
}

/// Generalized binomial power a^e = sum_j C(e,j) (a-1)^j for rational e;
/// requires the constant term of a to be one.
template <typename R>
Series<R> pow(const Series<R>& a, const Rational& e) {
    const std::size_t n = a.order();
    if (n == 0) {
        return a;
    }
    if (!(a[0] == RingTraits<R>::one())) {
        throw std::domain_error("Series pow: constant term must be one");
    }
    Series<R> u = a;
    u[0] = RingTraits<R>::zero();
    Series<R> acc = Series<R>::one(n);
    Series<R> p = Series<R>::one(n);
    Rational c = 1;
    for (std::size_t j = 1; j < n; ++j) {
        p = p * u;
        c = c * (e - Rational(static_cast<long long>(j - 1))) / Rational(static_cast<long long>(j));
        acc = acc + p * RingTraits<R>::from_rational(c);
    }
    return acc;
}

/// Multiplicative inverse of a series with constant term one, by
/// triangular solving of a*b = 1.
template <typename R>
Series<R> reciprocal(const Series<R>& a) {
    const std::size_t n = a.order();
    if (n == 0) {
        return a;
    }
    if (!(a[0] == RingTraits<R>::one())) {
        throw std::domain_error("Series reciprocal: constant term must be one");
    }
    Series<R> b(n);
    b[0] = RingTraits<R>::one();
    for (std::size_t m = 1; m < n; ++m) {
        R s = RingTraits<R>::zero();
        for (std::size_t j = 1; j <= m; ++j) {
            s = s + a[j] * b[m - j];
        }
        b[m] = -s;
    }
    return b;
}

/// f(g(t)), by Horner on g; g must have zero constant term.
template <typename R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    if (f.order() != g.order()) {
        throw std::invalid_argument("Series compose: order mismatch");
    }
    const std::size_t n = f.order();
    if (n == 0) {
        return f;
    }
    if (!(g[0] == RingTraits<R>::zero())) {
        throw std::domain_error("Series compose: inner constant term must be zero");
    }
    Series<R> acc(n);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * g;
        acc[0] = acc[0] + f[i];
    }
    return acc;
}

/// Compositional inverse h with g(h(t)) = h(g(t)) = t, for g with zero
/// constant term and linear coefficient one. Solved coefficient by
/// coefficient: with h known below index m, [t^m] g(h) is off by exactly
/// h_m, so each step reads the defect from one truncated composition.
template <typename R>
Series<R> revert(const Series<R>& g) {
    const std::size_t n = g.order();
    if (n == 0) {
        return g;
    }
    if (!(g[0] == RingTraits<R>::zero())) {
        throw std::domain_error("Series revert: constant term must be zero");
    }
    if (n >= 2 && !(g[1] == RingTraits<R>::one())) {
        throw std::domain_error("Series revert: linear coefficient must be one");
    }
    Series<R> h = Series<R>::identity(n);
    for (std::size_t m = 2; m < n; ++m) {
        Series<R> defect = compose(g.truncated(m + 1), h.truncated(m + 1));
        h[m] = -defect[m];
    }
    return h;
}

/// The deformed exponential (1 + lambda t)^(a/lambda): its t^l coefficient
/// is the lambda-falling factorial (a)_{l,lambda} divided by l!. Defined
/// through those coefficients, so lambda = 0 degenerates cleanly to e^(a t).
template <typename R>
Series<R> deformed_exp(const R& a, const R& lambda, std::size_t order) {
    Series<R> s(order);
    if (order == 0) {
        return s;
    }
    R term = RingTraits<R>::one();
    s[0] = term;
    Rational inv_factorial = 1;
    for (std::size_t l = 1; l < order; ++l) {
        term = term * (a - RingTraits<R>::from_rational(Rational(static_cast<long long>(l - 1))) * lambda);
        inv_factorial /= Rational(static_cast<long long>(l));
        s[l] = term * RingTraits<R>::from_rational(inv_factorial);
    }
    return s;
}

/// Reads coefficient n of an exponential generating function: a_n = n! [t^n] s.
template <typename R>
R egf_coefficient(const Series<R>& s, std::size_t n) {
    return s[n] * RingTraits<R>::from_rational(Rational(factorial(n)));
}

/// View of a series under the EGF interpretation ([n] applies the n! factor).
template <typename R>
class EgfView {
  public:
    explicit EgfView(const Series<R>& s) : s_(&s) {}
    R operator[](std::size_t n) const { return egf_coefficient(*s_, n); }
    std::size_t order() const { return s_->order(); }

  private:
    const Series<R>* s_;
};

/// entries[n][k] = n!/k! [t^n] base^k, the table of the EGF family
/// 1/k! base(t)^k for 0 <= n <= n_max, 0 <= k <= k_max.
template <typename R>
Table<R> egf_power_family_table(const Series<R>& base, std::size_t n_max, std::size_t k_max) {
    Table<R> out(n_max + 1, std::vector<R>(k_max + 1, RingTraits<R>::zero()));
    Series<R> p = Series<R>::one(base.order());
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (k > 0) {
            p = p * base;
        }
        const Rational inv_kfact = Rational(1) / Rational(factorial(k));
        Rational nfact = 1;
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (n > 0) {
                nfact *= Rational(static_cast<long long>(n));
            }
            out[n][k] = p[n] * RingTraits<R>::from_rational(nfact * inv_kfact);
        }
    }
    return out;
}

/// Same, for the family 1/k! prefactor(t) base(t)^k.
template <typename R>
Table<R> egf_power_family_table(const Series<R>& base, const Series<R>& prefactor,
                                std::size_t n_max, std::size_t k_max) {
    Table<R> out(n_max + 1, std::vector<R>(k_max + 1, RingTraits<R>::zero()));
    Series<R> p = prefactor;
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (k > 0) {
            p = p * base;
        }
        const Rational inv_kfact = Rational(1) / Rational(factorial(k));
        Rational nfact = 1;
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (n > 0) {
                nfact *= Rational(static_cast<long long>(n));
            }
            out[n][k] = p[n] * RingTraits<R>::from_rational(nfact * inv_kfact);
        }
    }
    return out;
}

}  // namespace degenfact
