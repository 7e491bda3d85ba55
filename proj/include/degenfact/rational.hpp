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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degenfact {

using BigInt = boost::multiprecision::cpp_int;

template <typename T>
using Table = std::vector<std::vector<T>>;

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator. Zero is canonically 0/1, so equality is
/// field-wise comparison.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: integers embed implicitly
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        normalize();
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) {
            throw std::domain_error("Rational: division by zero");
        }
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Wire format: "p/q", or just "p" when the denominator is one.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses the wire format back; inverse of str() on canonical input.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_integer(text));
        }
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        return Rational(std::move(num), std::move(den));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.str();
    }

  private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static BigInt parse_integer(std::string_view part) {
        std::size_t i = 0;
        if (!part.empty() && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i == part.size()) {
            throw std::invalid_argument("Rational: malformed integer '" + std::string(part) + "'");
        }
        for (std::size_t j = i; j < part.size(); ++j) {
            if (part[j] < '0' || part[j] > '9') {
                throw std::invalid_argument("Rational: malformed integer '" + std::string(part) + "'");
            }
        }
        return BigInt(std::string(part));
    }
};

inline BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= static_cast<unsigned long>(i);
    }
    return f;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return BigInt(0);
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<unsigned long>(n - i);
        r /= static_cast<unsigned long>(i + 1);  // exact: product of i+1 consecutive integers
    }
    return r;
}

/// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1)/k! for rational a.
inline Rational binomial(const Rational& a, std::size_t k) {
    Rational r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= a - Rational(static_cast<long long>(i));
    }
    return r / Rational(factorial(k));
}

/// Coefficient-ring glue used by the generic polynomial/series code.
/// Specialized for Rational here and for Poly<R> in polynomial.hpp.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return {}; }
    static Rational one() { return 1; }
    static Rational from_rational(const Rational& q) { return q; }
};

template <typename R>
R from_rational(const Rational& q) {
    return RingTraits<R>::from_rational(q);
}

template <typename R>
R ring_pow(const R& base, std::size_t e) {
    R acc = RingTraits<R>::one();
    for (std::size_t i = 0; i < e; ++i) {
        acc = acc * base;
    }
    return acc;
}

}  // namespace degenfact
