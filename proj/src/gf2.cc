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

#include "qotp/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qotp/bits.h"

namespace qotp {

namespace {

// Carry-less 64x64 -> 128 product, returned as (low, high).
std::pair<uint64_t, uint64_t> clmul64(uint64_t a, uint64_t b) {
    uint64_t lo = 0;
    uint64_t hi = 0;
    while (b) {
        int k = std::countr_zero(b);
        b &= b - 1;
        lo ^= a << k;
        if (k) hi ^= a >> (64 - k);
    }
    return {lo, hi};
}

std::vector<int> prime_factors(int r) {
    std::vector<int> out;
    for (int q = 2; q * q <= r; q++) {
        if (r % q == 0) {
            out.push_back(q);
            while (r % q == 0) r /= q;
        }
    }
    if (r > 1) out.push_back(r);
    return out;
}

// x^(2^k) mod f by k successive squarings.
GF2Poly x_pow_two_pow(int k, const GF2Poly &f) {
    GF2Poly acc = poly_mod(GF2Poly::monomial(1), f);
    for (int i = 0; i < k; i++) acc = poly_mulmod(acc, acc, f);
    return acc;
}

}  // namespace

GF2Poly GF2Poly::from_u64(uint64_t bits) {
    GF2Poly p;
    p.words_.push_back(bits);
    p.trim();
    return p;
}

GF2Poly GF2Poly::monomial(int degree) {
    if (degree < 0) {
        throw std::invalid_argument("monomial degree must be non-negative");
    }
    GF2Poly p;
    p.set_coeff(degree, true);
    return p;
}

GF2Poly GF2Poly::from_hex(const std::string &hex) {
    GF2Poly p;
    int bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        char c = *it;
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw std::invalid_argument("invalid hex digit in polynomial '" + hex + "'");
        }
        for (int k = 0; k < 4; k++) {
            if ((v >> k) & 1) p.set_coeff(bit + k, true);
        }
    }
    if (hex.empty()) {
        throw std::invalid_argument("empty polynomial hex");
    }
    return p;
}

int GF2Poly::degree() const {
    if (words_.empty()) return -1;
    return int(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

bool GF2Poly::coeff(int k) const {
    size_t w = size_t(k) >> 6;
    if (k < 0 || w >= words_.size()) return false;
    return (words_[w] >> (k & 63)) & 1;
}

void GF2Poly::set_coeff(int k, bool value) {
    size_t w = size_t(k) >> 6;
    if (w >= words_.size()) {
        if (!value) return;
        words_.resize(w + 1, 0);
    }
    uint64_t m = uint64_t{1} << (k & 63);
    if (value) {
        words_[w] |= m;
    } else {
        words_[w] &= ~m;
    }
    trim();
}

void GF2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::string GF2Poly::hex() const {
    if (is_zero()) return "0";
    static const char *digits = "0123456789abcdef";
    std::string out;
    for (int k = degree() / 4; k >= 0; k--) {
        int v = 0;
        for (int b = 3; b >= 0; b--) v = (v << 1) | int(coeff(4 * k + b));
        out.push_back(digits[v]);
    }
    return out;
}

std::string GF2Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; k--) {
        if (!coeff(k)) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += "1";
        } else if (k == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(k);
        }
    }
    return out;
}

GF2Poly &GF2Poly::operator^=(const GF2Poly &other) {
    if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
    for (size_t k = 0; k < other.words_.size(); k++) words_[k] ^= other.words_[k];
    trim();
    return *this;
}

GF2Poly GF2Poly::shifted_left(int k) const {
    if (is_zero() || k == 0) return *this;
    GF2Poly out;
    size_t word_shift = size_t(k) / 64;
    int bit_shift = k % 64;
    out.words_.assign(words_.size() + word_shift + 1, 0);
    for (size_t i = 0; i < words_.size(); i++) {
        out.words_[i + word_shift] ^= words_[i] << bit_shift;
        if (bit_shift) out.words_[i + word_shift + 1] ^= words_[i] >> (64 - bit_shift);
    }
    out.trim();
    return out;
}

GF2Poly poly_mul(const GF2Poly &a, const GF2Poly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto &aw = a.words();
    const auto &bw = b.words();
    std::vector<uint64_t> out(aw.size() + bw.size(), 0);
    for (size_t i = 0; i < aw.size(); i++) {
        for (size_t j = 0; j < bw.size(); j++) {
            auto [lo, hi] = clmul64(aw[i], bw[j]);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
    GF2Poly p;
    for (size_t k = 0; k < out.size(); k++) {
        for (uint64_t w = out[k]; w; w &= w - 1) p.set_coeff(int(k * 64) + std::countr_zero(w), true);
    }
    return p;
}

GF2Poly poly_mod(const GF2Poly &a, const GF2Poly &f) {
    if (f.is_zero()) {
        throw std::invalid_argument("poly_mod: zero modulus");
    }
    GF2Poly rem = a;
    int df = f.degree();
    while (rem.degree() >= df) {
        rem ^= f.shifted_left(rem.degree() - df);
    }
    return rem;
}

GF2Poly poly_gcd(GF2Poly a, GF2Poly b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
    }
    while (!b.is_zero()) {
        GF2Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

GF2Poly poly_mulmod(const GF2Poly &a, const GF2Poly &b, const GF2Poly &f) {
    return poly_mod(poly_mul(a, b), f);
}

bool is_irreducible(const GF2Poly &f) {
    int r = f.degree();
    if (r < 1) {
        throw std::invalid_argument("is_irreducible: degree must be at least 1");
    }
    GF2Poly x = poly_mod(GF2Poly::monomial(1), f);
    if (!(x_pow_two_pow(r, f) == x)) return false;
    for (int q : prime_factors(r)) {
        GF2Poly h = x_pow_two_pow(r / q, f) ^ x;
        if (h.is_zero()) return false;
        if (poly_gcd(f, h).degree() != 0) return false;
    }
    return true;
}

GF2Poly find_irreducible(int r) {
    if (r < 1 || r > 64) {
        throw std::invalid_argument("find_irreducible: degree must be in [1, 64]");
    }
    GF2Poly lead = GF2Poly::monomial(r);
    uint64_t limit = r == 64 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
    for (uint64_t tail = 0;; tail++) {
        GF2Poly f = lead ^ GF2Poly::from_u64(tail);
        if (is_irreducible(f)) return f;
        if (tail == limit) break;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable: one exists for every r
}

GF2Field::GF2Field(GF2Poly modulus) : modulus_(std::move(modulus)), r_(modulus_.degree()) {
    if (r_ < 1 || r_ > 64) {
        throw std::invalid_argument("field modulus degree must be in [1, 64]");
    }
    if (!is_irreducible(modulus_)) {
        throw std::invalid_argument("field modulus " + modulus_.str() + " is reducible");
    }
    mask_ = r_ == 64 ? ~uint64_t{0} : (uint64_t{1} << r_) - 1;
    reduction_ = modulus_.low_word() & mask_;
}

uint64_t GF2Field::mul(uint64_t a, uint64_t b) const {
    uint64_t acc = 0;
    int top = r_ - 1;
    for (int k = top; k >= 0; k--) {
        bool carry = (acc >> top) & 1;
        acc = (acc << 1) & mask_;
        if (carry) acc ^= reduction_;
        if ((b >> k) & 1) acc ^= a;
    }
    return acc;
}

uint64_t GF2Field::pow(uint64_t a, uint64_t exponent) const {
    uint64_t result = 1;
    uint64_t base = a;
    while (exponent) {
        if (exponent & 1) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

FieldElement::FieldElement(std::shared_ptr<const GF2Field> field, uint64_t bits)
    : field_(std::move(field)), bits_(bits) {
    if (!field_) {
        throw std::invalid_argument("field element needs a field");
    }
    if (bits_ & ~field_->mask()) {
        throw std::invalid_argument("field element has degree >= r");
    }
}

FieldElement FieldElement::basis(std::shared_ptr<const GF2Field> field, int i) {
    if (i < 0 || i >= field->degree()) {
        throw std::out_of_range("basis index out of range");
    }
    return FieldElement(std::move(field), uint64_t{1} << i);
}

bool FieldElement::same_field(const FieldElement &other) const {
    return field_ == other.field_ || field_->modulus() == other.field_->modulus();
}

bool FieldElement::operator==(const FieldElement &other) const {
    if (!same_field(other)) {
        throw std::invalid_argument("comparing elements of different fields");
    }
    return bits_ == other.bits_;
}

FieldElement fe_mul(const FieldElement &a, const FieldElement &b) {
    if (!a.same_field(b)) {
        throw std::invalid_argument("fe_mul: modulus mismatch");
    }
    return FieldElement(a.field(), a.field()->mul(a.bits(), b.bits()));
}

FieldElement fe_add(const FieldElement &a, const FieldElement &b) {
    if (!a.same_field(b)) {
        throw std::invalid_argument("fe_add: modulus mismatch");
    }
    return FieldElement(a.field(), a.bits() ^ b.bits());
}

FieldElement fe_pow(const FieldElement &a, uint64_t exponent) {
    return FieldElement(a.field(), a.field()->pow(a.bits(), exponent));
}

int fe_dot(const FieldElement &a, const FieldElement &b) {
    if (a.field()->degree() != b.field()->degree()) {
        throw std::invalid_argument("fe_dot: length mismatch");
    }
    return parity64(a.bits() & b.bits());
}

}  // namespace qotp
