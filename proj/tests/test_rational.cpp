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

TEST_CASE("rational construction reduces and normalizes signs") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic basics") {
    const Rational half(1, 2);
    const Rational third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);
    CHECK(half < Rational(2, 3));
    CHECK(Rational(-3, 2) < Rational(-1, 2));
}

TEST_CASE("rational string round trip is bit-exact") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("-2/5") == Rational(-2, 5));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

    testing::Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        const Rational q = gen.rational();
        CHECK(Rational::parse(q.str()) == q);
    }
}

namespace {

/// Unreduced-fraction oracle: arithmetic on raw pairs, equality by
/// cross-multiplication. Deliberately never reduces.
struct RawFraction {
    BigInt num;
    BigInt den;

    static RawFraction of(const Rational& q) { return {q.numerator(), q.denominator()}; }
    RawFraction plus(const RawFraction& o) const { return {num * o.den + o.num * den, den * o.den}; }
    RawFraction minus(const RawFraction& o) const { return {num * o.den - o.num * den, den * o.den}; }
    RawFraction times(const RawFraction& o) const { return {num * o.num, den * o.den}; }
    bool same(const Rational& q) const { return num * q.denominator() == q.numerator() * den; }
};

}  // namespace

TEST_CASE("rational arithmetic agrees with the unreduced oracle") {
    testing::Gen gen(11);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = gen.rational();
        const Rational b = gen.rational();
        const RawFraction ra = RawFraction::of(a);
        const RawFraction rb = RawFraction::of(b);
        CHECK(ra.plus(rb).same(a + b));
        CHECK(ra.minus(rb).same(a - b));
        CHECK(ra.times(rb).same(a * b));
    }
}

TEST_CASE("factorial and binomial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(static_cast<std::size_t>(10), static_cast<std::size_t>(4)) == 210);
    CHECK(binomial(static_cast<std::size_t>(4), static_cast<std::size_t>(10)) == 0);
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binomial(Rational(-1, 2), 3) == Rational(-5, 16));
    CHECK(binomial(Rational(5), 2) == Rational(10));
}
