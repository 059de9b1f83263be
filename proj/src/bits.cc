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

#include "qotp/bits.h"

#include <stdexcept>

namespace qotp {

namespace {

size_t words_for(size_t length) { return (length + 63) / 64; }

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

template <typename T>
void walsh_hadamard_impl(std::span<T> values) {
    size_t n = values.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("walsh_hadamard: length must be a power of two");
    }
    for (size_t half = 1; half < n; half <<= 1) {
        for (size_t block = 0; block < n; block += half << 1) {
            for (size_t k = block; k < block + half; k++) {
                T a = values[k];
                T b = values[k + half];
                values[k] = a + b;
                values[k + half] = a - b;
            }
        }
    }
}

}  // namespace

BitString::BitString(size_t length) : length_(length), words_(words_for(length), 0) {}

BitString BitString::from_string(std::string_view text) {
    BitString out(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            out.set(i, true);
        } else if (text[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1': " + std::string(text));
        }
    }
    return out;
}

BitString BitString::from_u64(uint64_t value, size_t length) {
    if (length > 64) {
        throw std::invalid_argument("from_u64: length exceeds 64");
    }
    BitString out(length);
    for (size_t i = 0; i < length; i++) {
        out.set(i, (value >> (length - 1 - i)) & 1);
    }
    return out;
}

BitString BitString::from_hex(std::string_view hex, size_t length) {
    size_t digits = (length + 3) / 4;
    if (hex.size() != digits) {
        throw std::invalid_argument(
            "hex string '" + std::string(hex) + "' must have " + std::to_string(digits) + " digits");
    }
    size_t pad = digits * 4 - length;
    BitString out(length);
    for (size_t d = 0; d < digits; d++) {
        int v = hex_value(hex[d]);
        if (v < 0) {
            throw std::invalid_argument("invalid hex digit in '" + std::string(hex) + "'");
        }
        for (int k = 0; k < 4; k++) {
            bool bit = (v >> (3 - k)) & 1;
            size_t padded_pos = d * 4 + k;
            if (padded_pos < pad) {
                if (bit) throw std::invalid_argument("hex value exceeds " + std::to_string(length) + " bits");
                continue;
            }
            out.set(padded_pos - pad, bit);
        }
    }
    return out;
}

void BitString::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

bool BitString::is_zero() const {
    for (uint64_t w : words_) {
        if (w) return false;
    }
    return true;
}

size_t BitString::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) total += std::popcount(w);
    return total;
}

void BitString::check_same_length(const BitString &other) const {
    if (length_ != other.length_) {
        throw std::invalid_argument(
            "bit string length mismatch: " + std::to_string(length_) + " vs " + std::to_string(other.length_));
    }
}

int BitString::dot(const BitString &other) const {
    check_same_length(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) acc ^= words_[k] & other.words_[k];
    return parity64(acc);
}

BitString BitString::slice(size_t start, size_t count) const {
    if (start + count > length_) {
        throw std::out_of_range("bit string slice out of range");
    }
    BitString out(count);
    for (size_t i = 0; i < count; i++) out.set(i, get(start + i));
    return out;
}

BitString BitString::concat(const BitString &tail) const {
    BitString out(length_ + tail.length_);
    for (size_t i = 0; i < length_; i++) out.set(i, get(i));
    for (size_t i = 0; i < tail.length_; i++) out.set(length_ + i, tail.get(i));
    return out;
}

BitString &BitString::operator^=(const BitString &other) {
    check_same_length(other);
    for (size_t k = 0; k < words_.size(); k++) words_[k] ^= other.words_[k];
    return *this;
}

BitString BitString::operator&(const BitString &other) const {
    check_same_length(other);
    BitString out = *this;
    for (size_t k = 0; k < words_.size(); k++) out.words_[k] &= other.words_[k];
    return out;
}

uint64_t BitString::to_u64() const {
    if (length_ > 64) {
        throw std::invalid_argument("to_u64: bit string longer than 64 bits");
    }
    uint64_t v = 0;
    for (size_t i = 0; i < length_; i++) v = (v << 1) | uint64_t(get(i));
    return v;
}

std::string BitString::str() const {
    std::string out(length_, '0');
    for (size_t i = 0; i < length_; i++) {
        if (get(i)) out[i] = '1';
    }
    return out;
}

std::string BitString::hex() const {
    static const char *digits = "0123456789abcdef";
    size_t ndigits = (length_ + 3) / 4;
    size_t pad = ndigits * 4 - length_;
    std::string out(ndigits, '0');
    for (size_t d = 0; d < ndigits; d++) {
        int v = 0;
        for (int k = 0; k < 4; k++) {
            size_t padded_pos = d * 4 + k;
            bool bit = padded_pos >= pad && get(padded_pos - pad);
            v = (v << 1) | int(bit);
        }
        out[d] = digits[v];
    }
    return out;
}

bool BitString::operator<(const BitString &other) const {
    if (length_ != other.length_) return length_ < other.length_;
    for (size_t i = 0; i < length_; i++) {
        if (get(i) != other.get(i)) return other.get(i);
    }
    return false;
}

void walsh_hadamard(std::span<int64_t> values) { walsh_hadamard_impl(values); }
void walsh_hadamard(std::span<double> values) { walsh_hadamard_impl(values); }

}  // namespace qotp
