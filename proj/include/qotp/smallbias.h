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

#ifndef QOTP_SMALLBIAS_H
#define QOTP_SMALLBIAS_H

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qotp/bits.h"
#include "qotp/gf2.h"
#include "qotp/rational.h"

namespace qotp {

/// Parameters of an AGHP small-bias set: strings of `length` bits cut from an r x s array over
/// GF(2^r). For an encryption scheme on n qubits, length = 2n and r * s >= 2n.
struct SchemeParams {
    int r = 0;
    int s = 0;
    int length = 0;
    GF2Poly modulus;
    std::shared_ptr<const GF2Field> field;

    /// Deterministic modulus from find_irreducible(r). Requires 1 <= length <= r * s.
    static SchemeParams make(int r, int s, int length);

    /// Qubit count; throws std::logic_error when length is odd.
    int n() const;
    int key_bits() const { return 2 * r; }

    bool operator==(const SchemeParams &other) const {
        return r == other.r && s == other.s && length == other.length && modulus == other.modulus;
    }
};

/// Picks the key length for an epsilon-randomizing scheme on n qubits:
/// 2r = ceil(n + 2 log2(1/epsilon) + 4) rounded up to even, s = ceil(2n / r), and verifies
/// s / 2^r <= epsilon * 2^(-n/2). Requires 2^(-n/2) <= epsilon <= 2.
SchemeParams choose_params(int n, double epsilon);

/// The string s_xy: bit (i, j) is <e_i x^j, y>, flattened with j outer and i inner, cut to
/// params.length bits.
BitString aghp_string(const FieldElement &x, const FieldElement &y, const SchemeParams &params);

/// All 2^(2r) members of the AGHP set, indexed by (x, y) in lexicographic order, so the member
/// at index k is the expansion of the key whose integer value is k. Members are packed as
/// integers (position 0 is the most significant of `length` bits).
struct BiasedSet {
    SchemeParams params;
    std::vector<uint64_t> members;

    size_t size() const { return members.size(); }
    BitString member(size_t index) const { return BitString::from_u64(members[index], size_t(params.length)); }
};

constexpr int kMaxEnumeratedKeyBits = 28;

/// Requires 2r <= 28 and length <= 64.
BiasedSet build_set(const SchemeParams &params);

/// Key layout: the first r bits are x, the last r bits are y (each read most significant first).
BitString expand_key(const BitString &key, const SchemeParams &params);

struct WeightedString {
    BitString bits;
    Rational weight;
};

/// |sum_w weight(w) * (-1)^<u, w>|, exactly. Weights must be non-negative and sum to exactly 1.
Rational bias_of(std::span<const WeightedString> weights, const BitString &u);

struct BiasMode {
    enum class Kind { exhaustive, sampled };
    Kind kind = Kind::exhaustive;
    uint64_t samples = 0;
    uint64_t seed = 0;

    static BiasMode exhaustive() { return {}; }
    static BiasMode sampled(uint64_t samples, uint64_t seed) { return {Kind::sampled, samples, seed}; }
};

struct BiasReport {
    Rational max_bias;
    /// A nonzero test string attaining max_bias.
    BitString argmax;
    bool exhaustive = true;
    /// Number of nonzero test strings examined.
    uint64_t strings_tested = 0;
};

constexpr int kMaxExhaustiveBiasBits = 24;

/// Exhaustive mode scans all nonzero u (requires length <= 24) through one Walsh-Hadamard
/// transform of the member histogram. Sampled mode draws the requested number of uniformly
/// random nonzero u, so its maximum can only under-report the true one.
BiasReport max_bias(const BiasedSet &set, BiasMode mode = BiasMode::exhaustive());
BiasReport max_bias(std::span<const WeightedString> weights, BiasMode mode = BiasMode::exhaustive());

/// 2^(n/2) * max_bias: a trace-norm randomization bound for the induced Pauli channel.
double certified_epsilon(const BiasedSet &set);
/// 2^n * max_bias^2, exact, so the bound can be compared against epsilon^2 without rounding.
Rational certified_epsilon_squared(const BiasedSet &set);

}  // namespace qotp

#endif
