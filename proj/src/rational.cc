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

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace qotp {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v) {
    return v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max();
}

i128 checked_mul(i128 a, i128 b) {
    i128 out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return out;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) { *this = from_ratio(num, den); }

Rational Rational::from_ratio(i128 num, i128 den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den)) {
        throw std::overflow_error("rational does not fit in 64 bits");
    }
    Rational out;
    out.num_ = int64_t(num);
    out.den_ = int64_t(den);
    return out;
}

Rational Rational::parse_decimal(std::string_view text) {
    std::string_view s = text;
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
    };
    if (s.empty()) return fail();
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    i128 num = 0;
    int exponent = 0;
    bool any_digit = false;
    bool seen_point = false;
    size_t i = 0;
    for (; i < s.size(); i++) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            num = checked_mul(num, 10) + (c - '0');
            if (seen_point) exponent--;
            any_digit = true;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) return fail();
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') return fail();
        std::string tail(s.substr(i + 1));
        if (tail.empty()) return fail();
        char *end = nullptr;
        long e = std::strtol(tail.c_str(), &end, 10);
        if (*end != '\0' || e < -30 || e > 30) return fail();
        exponent += int(e);
    }
    i128 den = 1;
    for (; exponent > 0; exponent--) num = checked_mul(num, 10);
    for (; exponent < 0; exponent++) den = checked_mul(den, 10);
    return from_ratio(negative ? -num : num, den);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_ratio(-i128(num_), den_); }

Rational operator+(const Rational &a, const Rational &b) {
    return Rational::from_ratio(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) {
    return Rational::from_ratio(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) {
    return Rational::from_ratio(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    return Rational::from_ratio(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational &r) { return r.num() < 0 ? -r : r; }

}  // namespace qotp
