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

#ifndef QOTP_BITS_H
#define QOTP_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qotp {

/// Parity of the set bits of a word.
inline int parity64(uint64_t v) { return std::popcount(v) & 1; }

/// A fixed-length string of bits.
///
/// Position 0 is the leftmost character of the textual form. When a bit string is read as an
/// integer (to_u64 / from_u64 / hex), position 0 is the most significant bit. All Pauli
/// descriptors, keys and set members use this convention, so "qubit 1" is both the first
/// character of a descriptor half and the most significant bit of a basis index.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t length);

    static BitString from_string(std::string_view text);
    /// Low `length` bits of `value`; bit (length-1-i) of value lands at position i.
    static BitString from_u64(uint64_t value, size_t length);
    /// Parses big-endian hex holding exactly `length` bits (leading pad bits must be zero).
    static BitString from_hex(std::string_view hex, size_t length);

    size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool value);

    bool is_zero() const;
    size_t popcount() const;

    /// Standard GF(2) scalar product; lengths must match.
    int dot(const BitString &other) const;

    BitString slice(size_t start, size_t count) const;
    BitString concat(const BitString &tail) const;

    BitString &operator^=(const BitString &other);
    friend BitString operator^(BitString a, const BitString &b) {
        a ^= b;
        return a;
    }
    BitString operator&(const BitString &other) const;

    /// Requires size() <= 64.
    uint64_t to_u64() const;
    std::string str() const;
    /// Big-endian hex, ceil(size/4) digits, zero padded on the left.
    std::string hex() const;

    bool operator==(const BitString &other) const = default;
    /// Orders by length, then lexicographically by characters.
    bool operator<(const BitString &other) const;

   private:
    void check_same_length(const BitString &other) const;

    size_t length_ = 0;
    std::vector<uint64_t> words_;
};

/// In-place Walsh-Hadamard transform over {0,1}^k, values.size() == 2^k. Integer inputs stay
/// exact: out[u] = sum_w in[w] * (-1)^popcount(u & w).
void walsh_hadamard(std::span<int64_t> values);
void walsh_hadamard(std::span<double> values);

}  // namespace qotp

#endif
