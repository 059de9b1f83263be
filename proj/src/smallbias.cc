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

#include "qotp/smallbias.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qotp/random.h"

namespace qotp {

namespace {

// Field elements e_i * x^j for every string position p = j * r + i < length.
std::vector<uint64_t> aghp_columns(const GF2Field &field, uint64_t x, int r, int length) {
    std::vector<uint64_t> cols(static_cast<size_t>(length));
    uint64_t x_pow = 1;
    for (int p = 0; p < length; p++) {
        int i = p % r;
        if (i == 0 && p > 0) x_pow = field.mul(x_pow, x);
        cols[size_t(p)] = field.mul(uint64_t{1} << i, x_pow);
    }
    return cols;
}

uint64_t aghp_packed(const std::vector<uint64_t> &cols, uint64_t y) {
    uint64_t out = 0;
    for (uint64_t c : cols) out = (out << 1) | uint64_t(parity64(c & y));
    return out;
}

uint64_t length_mask(int length) { return length == 64 ? ~uint64_t{0} : (uint64_t{1} << length) - 1; }

uint64_t random_nonzero(Rng &rng, int length) {
    uint64_t mask = length_mask(length);
    for (;;) {
        uint64_t u = rng.next_u64() & mask;
        if (u) return u;
    }
}

BitString random_nonzero_bits(Rng &rng, size_t length) {
    for (;;) {
        BitString u(length);
        for (size_t i = 0; i < length; i += 64) {
            uint64_t word = rng.next_u64();
            for (size_t k = 0; k < 64 && i + k < length; k++) u.set(i + k, (word >> k) & 1);
        }
        if (!u.is_zero()) return u;
    }
}

// Integer numerators over a common denominator.
struct CommonDenominator {
    std::vector<int64_t> numerators;
    int64_t denominator = 1;
};

CommonDenominator to_common_denominator(std::span<const WeightedString> weights) {
    if (weights.empty()) {
        throw std::invalid_argument("distribution must be nonempty");
    }
    __int128 lcm = 1;
    for (const auto &w : weights) {
        if (w.weight < Rational(0)) {
            throw std::invalid_argument("distribution weights must be non-negative");
        }
        __int128 d = w.weight.den();
        lcm = lcm / std::gcd(int64_t(lcm), int64_t(d)) * d;
        if (lcm > (__int128(1) << 62)) {
            throw std::overflow_error("distribution denominators too large");
        }
    }
    CommonDenominator out;
    out.denominator = int64_t(lcm);
    __int128 total = 0;
    size_t length = weights[0].bits.size();
    for (const auto &w : weights) {
        if (w.bits.size() != length) {
            throw std::invalid_argument("distribution strings have different lengths");
        }
        __int128 v = __int128(w.weight.num()) * (lcm / w.weight.den());
        out.numerators.push_back(int64_t(v));
        total += v;
    }
    if (total != lcm) {
        throw std::invalid_argument("distribution weights do not sum to 1");
    }
    return out;
}

// Shared exhaustive scan: histogram values over {0,1}^length, total mass `total`.
BiasReport exhaustive_from_histogram(std::vector<int64_t> histogram, int64_t total, int length) {
    walsh_hadamard(histogram);
    int64_t best = -1;
    uint64_t best_u = 1;
    for (uint64_t u = 1; u < histogram.size(); u++) {
        int64_t v = histogram[u] < 0 ? -histogram[u] : histogram[u];
        if (v > best) {
            best = v;
            best_u = u;
        }
    }
    BiasReport report;
    report.max_bias = Rational(best, total);
    report.argmax = BitString::from_u64(best_u, size_t(length));
    report.exhaustive = true;
    report.strings_tested = histogram.size() - 1;
    return report;
}

void check_exhaustive_length(int length) {
    if (length < 1 || length > kMaxExhaustiveBiasBits) {
        throw std::invalid_argument(
            "exhaustive bias scan needs 1 <= string length <= " + std::to_string(kMaxExhaustiveBiasBits) + ", got " +
            std::to_string(length));
    }
}

}  // namespace

SchemeParams SchemeParams::make(int r, int s, int length) {
    if (r < 1 || r > 64) {
        throw std::invalid_argument("field degree r must be in [1, 64]");
    }
    if (s < 1) {
        throw std::invalid_argument("power count s must be positive");
    }
    if (length < 1 || int64_t(length) > int64_t(r) * s) {
        throw std::invalid_argument("string length must be in [1, r*s]");
    }
    SchemeParams p;
    p.r = r;
    p.s = s;
    p.length = length;
    p.modulus = find_irreducible(r);
    p.field = std::make_shared<const GF2Field>(p.modulus);
    return p;
}

int SchemeParams::n() const {
    if (length % 2) {
        throw std::logic_error("odd-length small-bias strings do not describe Pauli operators");
    }
    return length / 2;
}

SchemeParams choose_params(int n, double epsilon) {
    if (n < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
    if (!(epsilon > 0.0) || epsilon > 2.0) {
        throw std::invalid_argument("epsilon must lie in (0, 2]");
    }
    if (epsilon < std::exp2(-n / 2.0)) {
        throw std::invalid_argument("epsilon below 2^(-n/2); the full Pauli set is already shorter");
    }
    int key_bits = int(std::ceil(n + 2.0 * std::log2(1.0 / epsilon) + 4.0));
    if (key_bits % 2) key_bits++;
    int r = key_bits / 2;
    if (r > 64) {
        throw std::invalid_argument("required field degree exceeds 64");
    }
    int s = (2 * n + r - 1) / r;
    // s / 2^r <= epsilon * 2^(-n/2), evaluated as s <= epsilon * 2^(r - n/2).
    if (double(s) > epsilon * std::exp2(r - n / 2.0)) {
        throw std::logic_error("parameter verification failed: s / 2^r exceeds epsilon * 2^(-n/2)");
    }
    return SchemeParams::make(r, s, 2 * n);
}

BitString aghp_string(const FieldElement &x, const FieldElement &y, const SchemeParams &params) {
    if (!x.same_field(y) || x.field()->modulus() != params.modulus) {
        throw std::invalid_argument("aghp_string: elements are not over the scheme modulus");
    }
    const GF2Field &field = *params.field;
    BitString out(size_t(params.length));
    uint64_t x_pow = 1;
    for (int p = 0; p < params.length; p++) {
        int i = p % params.r;
        if (i == 0 && p > 0) x_pow = field.mul(x_pow, x.bits());
        uint64_t coeff = field.mul(uint64_t{1} << i, x_pow);
        out.set(size_t(p), parity64(coeff & y.bits()));
    }
    return out;
}

BiasedSet build_set(const SchemeParams &params) {
    if (params.key_bits() > kMaxEnumeratedKeyBits) {
        throw std::invalid_argument(
            "build_set: 2r = " + std::to_string(params.key_bits()) + " exceeds the enumeration cap of " +
            std::to_string(kMaxEnumeratedKeyBits));
    }
    if (params.length > 64) {
        throw std::invalid_argument("build_set: strings longer than 64 bits are not enumerated");
    }
    BiasedSet set{params, {}};
    uint64_t q = uint64_t{1} << params.r;
    set.members.resize(q * q);
    for (uint64_t x = 0; x < q; x++) {
        auto cols = aghp_columns(*params.field, x, params.r, params.length);
        for (uint64_t y = 0; y < q; y++) set.members[x * q + y] = aghp_packed(cols, y);
    }
    return set;
}

BitString expand_key(const BitString &key, const SchemeParams &params) {
    if (key.size() != size_t(params.key_bits())) {
        throw std::invalid_argument(
            "key has " + std::to_string(key.size()) + " bits, expected " + std::to_string(params.key_bits()));
    }
    size_t r = size_t(params.r);
    FieldElement x(params.field, key.slice(0, r).to_u64());
    FieldElement y(params.field, key.slice(r, r).to_u64());
    return aghp_string(x, y, params);
}

Rational bias_of(std::span<const WeightedString> weights, const BitString &u) {
    CommonDenominator common = to_common_denominator(weights);
    if (weights[0].bits.size() != u.size()) {
        throw std::invalid_argument("bias_of: test string length mismatch");
    }
    __int128 acc = 0;
    for (size_t k = 0; k < weights.size(); k++) {
        acc += weights[k].bits.dot(u) ? -__int128(common.numerators[k]) : __int128(common.numerators[k]);
    }
    if (acc < 0) acc = -acc;
    return Rational::from_ratio(acc, common.denominator);
}

BiasReport max_bias(const BiasedSet &set, BiasMode mode) {
    int length = set.params.length;
    if (mode.kind == BiasMode::Kind::exhaustive) {
        check_exhaustive_length(length);
        std::vector<int64_t> histogram(size_t{1} << length, 0);
        for (uint64_t m : set.members) histogram[m]++;
        return exhaustive_from_histogram(std::move(histogram), int64_t(set.size()), length);
    }
    Rng rng(mode.seed);
    BiasReport report;
    report.exhaustive = false;
    report.max_bias = Rational(-1);
    int64_t total = int64_t(set.size());
    for (uint64_t k = 0; k < mode.samples; k++) {
        uint64_t u = random_nonzero(rng, length);
        int64_t acc = 0;
        for (uint64_t m : set.members) acc += parity64(m & u) ? -1 : 1;
        Rational b(acc < 0 ? -acc : acc, total);
        if (b > report.max_bias) {
            report.max_bias = b;
            report.argmax = BitString::from_u64(u, size_t(length));
        }
        report.strings_tested++;
    }
    if (report.strings_tested == 0) report.max_bias = Rational(0);
    return report;
}

BiasReport max_bias(std::span<const WeightedString> weights, BiasMode mode) {
    CommonDenominator common = to_common_denominator(weights);
    size_t length = weights[0].bits.size();
    if (mode.kind == BiasMode::Kind::exhaustive) {
        check_exhaustive_length(int(length));
        std::vector<int64_t> histogram(size_t{1} << length, 0);
        for (size_t k = 0; k < weights.size(); k++) histogram[weights[k].bits.to_u64()] += common.numerators[k];
        return exhaustive_from_histogram(std::move(histogram), common.denominator, int(length));
    }
    Rng rng(mode.seed);
    BiasReport report;
    report.exhaustive = false;
    report.max_bias = Rational(0);
    for (uint64_t k = 0; k < mode.samples; k++) {
        BitString u = random_nonzero_bits(rng, length);
        Rational b = bias_of(weights, u);
        if (report.strings_tested == 0 || b > report.max_bias) {
            report.max_bias = b;
            report.argmax = u;
        }
        report.strings_tested++;
    }
    return report;
}

double certified_epsilon(const BiasedSet &set) {
    return std::exp2(set.params.n() / 2.0) * max_bias(set).max_bias.to_double();
}

Rational certified_epsilon_squared(const BiasedSet &set) {
    Rational b = max_bias(set).max_bias;
    return Rational(int64_t{1} << set.params.n()) * b * b;
}

}  // namespace qotp
