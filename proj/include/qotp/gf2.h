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

#ifndef QOTP_GF2_H
#define QOTP_GF2_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qotp {

/// Polynomial over GF(2), bit-packed: bit k of the packed words is the coefficient of x^k.
/// Canonical form carries no zero high words, so equal polynomials compare equal.
class GF2Poly {
   public:
    GF2Poly() = default;
    /// Polynomial whose coefficient bits are the bits of `bits`.
    static GF2Poly from_u64(uint64_t bits);
    static GF2Poly monomial(int degree);
    /// Parses big-endian hex, e.g. "b" is x^3 + x + 1.
    static GF2Poly from_hex(const std::string &hex);

    /// -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return words_.empty(); }
    bool coeff(int k) const;
    void set_coeff(int k, bool value);

    /// Low 64 coefficients.
    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
    const std::vector<uint64_t> &words() const { return words_; }
    std::string hex() const;
    /// Human-readable, e.g. "x^3 + x + 1".
    std::string str() const;

    GF2Poly &operator^=(const GF2Poly &other);
    friend GF2Poly operator^(GF2Poly a, const GF2Poly &b) {
        a ^= b;
        return a;
    }
    GF2Poly shifted_left(int k) const;

    bool operator==(const GF2Poly &other) const = default;

   private:
    void trim();
    std::vector<uint64_t> words_;
};

GF2Poly poly_mul(const GF2Poly &a, const GF2Poly &b);
/// Remainder of a modulo f; throws std::invalid_argument when f is zero.
GF2Poly poly_mod(const GF2Poly &a, const GF2Poly &f);
/// Throws std::invalid_argument when both inputs are zero.
GF2Poly poly_gcd(GF2Poly a, GF2Poly b);
GF2Poly poly_mulmod(const GF2Poly &a, const GF2Poly &b, const GF2Poly &f);

/// Rabin's test: x^(2^r) = x mod f and gcd(x^(2^(r/q)) - x, f) = 1 for every prime q | r.
/// Requires degree(f) >= 1.
bool is_irreducible(const GF2Poly &f);

/// Smallest monic irreducible polynomial of degree r when coefficient bit strings are read as
/// integers. Deterministic, so two parties derive the same modulus independently. 1 <= r <= 64.
GF2Poly find_irreducible(int r);

/// GF(2^r) = GF(2)[x] / (f). Elements are packed into the low r bits of a word, bit i being the
/// coefficient of the basis element e_i = x^i.
class GF2Field {
   public:
    /// Throws std::invalid_argument unless f is irreducible with 1 <= degree <= 64.
    explicit GF2Field(GF2Poly modulus);

    int degree() const { return r_; }
    const GF2Poly &modulus() const { return modulus_; }
    uint64_t mask() const { return mask_; }

    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, uint64_t exponent) const;

   private:
    GF2Poly modulus_;
    int r_;
    uint64_t mask_;
    uint64_t reduction_;  // f - x^r
};

/// Element of a specific GF(2^r). Elements from different fields never mix.
class FieldElement {
   public:
    FieldElement(std::shared_ptr<const GF2Field> field, uint64_t bits);

    static FieldElement zero(std::shared_ptr<const GF2Field> field) { return FieldElement(std::move(field), 0); }
    static FieldElement one(std::shared_ptr<const GF2Field> field) { return FieldElement(std::move(field), 1); }
    /// Basis element e_i = x^i.
    static FieldElement basis(std::shared_ptr<const GF2Field> field, int i);

    uint64_t bits() const { return bits_; }
    const std::shared_ptr<const GF2Field> &field() const { return field_; }
    bool same_field(const FieldElement &other) const;

    /// Throws std::invalid_argument when the moduli differ.
    bool operator==(const FieldElement &other) const;

   private:
    std::shared_ptr<const GF2Field> field_;
    uint64_t bits_;
};

/// Throws std::invalid_argument on modulus mismatch.
FieldElement fe_mul(const FieldElement &a, const FieldElement &b);
FieldElement fe_add(const FieldElement &a, const FieldElement &b);
/// Square-and-multiply; a^0 = 1 for every a, including a = 0.
FieldElement fe_pow(const FieldElement &a, uint64_t exponent);
/// Parity of the AND of the two coefficient vectors.
int fe_dot(const FieldElement &a, const FieldElement &b);

}  // namespace qotp

#endif
