// Copyright 2026 The qotp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qotp/rational.h"

#include <gtest/gtest.h>

#include <random>

using namespace qotp;

TEST(rational, normalises) {
    Rational r(6, -8);
    ASSERT_EQ(r.num(), -3);
    ASSERT_EQ(r.den(), 4);
    ASSERT_EQ(r.str(), "-3/4");
    ASSERT_EQ(Rational(4, 2).str(), "2");
    ASSERT_THROW(Rational(1, 0), std::domain_error);
}

TEST(rational, parse_decimal_is_exact) {
    ASSERT_EQ(Rational::parse_decimal("0.5"), Rational(1, 2));
    ASSERT_EQ(Rational::parse_decimal("2"), Rational(2));
    ASSERT_EQ(Rational::parse_decimal("-0.125"), Rational(-1, 8));
    ASSERT_EQ(Rational::parse_decimal("1e-3"), Rational(1, 1000));
    ASSERT_EQ(Rational::parse_decimal("2.5E1"), Rational(25));
    ASSERT_EQ(Rational::parse_decimal(".25"), Rational(1, 4));
    ASSERT_THROW(Rational::parse_decimal(""), std::invalid_argument);
    ASSERT_THROW(Rational::parse_decimal("0.5x"), std::invalid_argument);
    ASSERT_THROW(Rational::parse_decimal("abc"), std::invalid_argument);
}

TEST(rational, overflow_is_reported) {
    Rational big(int64_t{1} << 62);
    ASSERT_THROW(big * big, std::overflow_error);
    ASSERT_EQ(Rational::from_ratio(__int128(1) << 70, __int128(1) << 69), Rational(2));
}

TEST(rational, field_laws_on_random_values) {
    std::mt19937_64 rng(1);
    auto draw = [&] {
        int64_t num = int64_t(rng() % 2001) - 1000;
        int64_t den = int64_t(rng() % 1000) + 1;
        return Rational(num, den);
    };
    for (int k = 0; k < 2000; k++) {
        Rational a = draw(), b = draw(), c = draw();
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, Rational(0));
        if (b != Rational(0)) {
            ASSERT_EQ((a / b) * b, a);
        }
        ASSERT_EQ(a < b, a.num() * b.den() < b.num() * a.den());
        ASSERT_GE(abs(a), Rational(0));
    }
}

TEST(rational, ordering_is_exact) {
    Rational third(1, 3);
    Rational close(333333333333, 1000000000000);
    ASSERT_TRUE(close < third);
    ASSERT_TRUE(Rational(-1, 2) < Rational(-1, 3));
}
