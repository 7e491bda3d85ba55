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
#include <type_traits>
#include <utility>
#include <vector>

namespace degenfact {

/// Dense univariate polynomial over a commutative coefficient ring R.
/// The zero polynomial is the empty coefficient list; any other value
/// keeps its trailing (highest-index) coefficient nonzero.
template <typename R>
class Poly {
  public:
    Poly() = default;
    explicit Poly(R constant) {
        coeffs_.push_back(std::move(constant));
        trim();
    }
    explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() {
        return Poly(std::vector<R>{RingTraits<R>::zero(), RingTraits<R>::one()});
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Number of stored coefficients (degree + 1; 0 for the zero polynomial).
    std::size_t size() const { return coeffs_.size(); }

    R coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : RingTraits<R>::zero();
    }

    const std::vector<R>& coefficients() const { return coeffs_; }

    Poly operator-() const {
        std::vector<R> out;
        out.reserve(coeffs_.size());
        for (const R& c : coeffs_) {
            out.push_back(-c);
        }
        return Poly(std::move(out));
    }

    Poly operator+(const Poly& o) const {
        const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        std::vector<R> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(coeff(i) + o.coeff(i));
        }
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) {
            return Poly();
        }
        std::vector<R> out(coeffs_.size() + o.coeffs_.size() - 1, RingTraits<R>::zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }

    /// Multiplication by a ring scalar.
    Poly operator*(const R& s) const {
        std::vector<R> out;
        out.reserve(coeffs_.size());
        for (const R& c : coeffs_) {
            out.push_back(c * s);
        }
        return Poly(std::move(out));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Horner evaluation at a ring element.
    R operator()(const R& point) const {
        R acc = RingTraits<R>::zero();
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * point + coeffs_[i];
        }
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        os << '[';
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (i) {
                os << ", ";
            }
            os << p.coeffs_[i];
        }
        return os << ']';
    }

  private:
    std::vector<R> coeffs_;

    void trim() {
        const R zero = RingTraits<R>::zero();
        while (!coeffs_.empty() && coeffs_.back() == zero) {
            coeffs_.pop_back();
        }
    }
};

template <typename R>
struct RingTraits<Poly<R>> {
    static Poly<R> zero() { return {}; }
    static Poly<R> one() { return Poly<R>(RingTraits<R>::one()); }
    static Poly<R> from_rational(const Rational& q) {
        return Poly<R>(RingTraits<R>::from_rational(q));
    }
};

template <typename R>
Poly<R> pow(const Poly<R>& base, std::size_t e) {
    Poly<R> acc = RingTraits<Poly<R>>::one();
    for (std::size_t i = 0; i < e; ++i) {
        acc = acc * base;
    }
    return acc;
}

/// outer(inner(x)), by Horner over polynomials.
template <typename R>
Poly<R> compose(const Poly<R>& outer, const Poly<R>& inner) {
    Poly<R> acc;
    for (std::size_t i = outer.size(); i-- > 0;) {
        acc = acc * inner + Poly<R>(outer.coeff(i));
    }
    return acc;
}

/// Applies f to every coefficient; the result is trimmed, so f mapping
/// a nonzero coefficient to zero is fine.
template <typename R, typename F>
auto map_coefficients(const Poly<R>& p, F&& f) {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(p.size());
    for (const R& c : p.coefficients()) {
        out.push_back(f(c));
    }
    return Poly<S>(std::move(out));
}

template <typename R>
Poly<R> scale(const Poly<R>& p, const Rational& q) {
    return p * RingTraits<R>::from_rational(q);
}

/// Values in Q[lambda]; what the number families return.
using LambdaPoly = Poly<Rational>;
/// Values in (Q[lambda])[x]: outer variable x, inner variable lambda.
using XPoly = Poly<Poly<Rational>>;

}  // namespace degenfact
