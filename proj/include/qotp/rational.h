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

#ifndef QOTP_RATIONAL_H
#define QOTP_RATIONAL_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qotp {

/// Exact rational number with 64-bit numerator and denominator, always kept in lowest terms with
/// a positive denominator. Intermediate products are formed in 128 bits; a result that does not
/// fit back into 64 bits throws std::overflow_error rather than rounding.
class Rational {
   public:
    constexpr Rational() = default;
    constexpr Rational(int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int64_t num, int64_t den);

    /// Reduces a 128-bit ratio; throws std::overflow_error if the reduced form exceeds 64 bits.
    static Rational from_ratio(__int128 num, __int128 den);
    /// Exact value of a finite decimal literal such as "0.5", "2", "1e-3", "-0.125".
    static Rational parse_decimal(std::string_view text);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    double to_double() const { return double(num_) / double(den_); }
    /// "p/q", or "p" when the denominator is one.
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    Rational &operator+=(const Rational &b) { return *this = *this + b; }
    Rational &operator-=(const Rational &b) { return *this = *this - b; }
    Rational &operator*=(const Rational &b) { return *this = *this * b; }

    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

   private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

Rational abs(const Rational &r);

}  // namespace qotp

#endif
