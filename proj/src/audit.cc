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

#include "qotp/audit.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qotp/pauli.h"
#include "qotp/random.h"

namespace qotp {

namespace {

int symplectic_u64(uint64_t w, uint64_t w2, int n) {
    uint64_t low = (uint64_t{1} << n) - 1;
    return parity64((w >> n) & w2 & low) ^ parity64(w & low & (w2 >> n));
}

// Incremental GF(2) basis keyed by leading bit.
class Gf2Basis {
   public:
    /// Adds v; returns false if it was already in the span.
    bool insert(uint64_t v) {
        for (uint64_t b : basis_) {
            if ((v ^ b) < v) v ^= b;
        }
        if (v == 0) return false;
        basis_.push_back(v);
        // Keep sorted descending so each reduction step clears the current leading bit.
        for (size_t k = basis_.size() - 1; k > 0 && basis_[k] > basis_[k - 1]; k--) std::swap(basis_[k], basis_[k - 1]);
        return true;
    }
    size_t rank() const { return basis_.size(); }

   private:
    std::vector<uint64_t> basis_;
};

BitString unit_half(int n, int i, bool z_half) {
    BitString w(size_t(2 * n));
    w.set(size_t(z_half ? n + i : i), true);
    return w;
}

}  // namespace

int gf2_rank(const std::vector<BitString> &vectors) {
    Gf2Basis basis;
    for (const auto &v : vectors) basis.insert(v.to_u64());
    return int(basis.rank());
}

StabilizerMatrix::StabilizerMatrix(int n, std::vector<BitString> rows) : n_(n), rows_(std::move(rows)) {
    if (n < 1 || n > 32) {
        throw std::invalid_argument("stabilizer matrices are limited to 1 <= n <= 32");
    }
    if (rows_.size() != size_t(n)) {
        throw std::invalid_argument("stabilizer matrix needs exactly n rows");
    }
    for (const auto &r : rows_) {
        if (r.size() != size_t(2 * n)) throw std::invalid_argument("stabilizer rows must have 2n bits");
    }
    for (size_t i = 0; i < rows_.size(); i++) {
        for (size_t j = i + 1; j < rows_.size(); j++) {
            if (symplectic_ip(rows_[i], rows_[j])) {
                throw std::invalid_argument("stabilizer rows " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
    }
    if (gf2_rank(rows_) != n) {
        throw std::invalid_argument("stabilizer rows are linearly dependent");
    }
}

StabilizerMatrix StabilizerMatrix::all_z(int n) {
    std::vector<BitString> rows;
    for (int i = 0; i < n; i++) rows.push_back(unit_half(n, i, true));
    return StabilizerMatrix(n, std::move(rows));
}

StabilizerMatrix StabilizerMatrix::all_x(int n) {
    std::vector<BitString> rows;
    for (int i = 0; i < n; i++) rows.push_back(unit_half(n, i, false));
    return StabilizerMatrix(n, std::move(rows));
}

std::string StabilizerMatrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        if (!out.empty()) out += ",";
        out += r.str();
    }
    return out;
}

BitString m_dot(const StabilizerMatrix &m, const BitString &w) {
    if (w.size() != size_t(2 * m.n())) {
        throw std::invalid_argument("m_dot: string must have 2n bits");
    }
    BitString out(size_t(m.n()));
    for (size_t i = 0; i < out.size(); i++) out.set(i, symplectic_ip(m.rows()[i], w));
    return out;
}

Rational pushforward_l1_from_uniform(const StabilizerMatrix &m, const PauliDistribution &p) {
    int n = m.n();
    if (n > kMaxPushforwardQubits) {
        throw std::invalid_argument("pushforward audit limited to n <= 12");
    }
    if (p.length() != size_t(2 * n)) {
        throw std::invalid_argument("distribution and stabilizer disagree on qubit count");
    }
    std::vector<uint64_t> rows;
    for (const auto &r : m.rows()) rows.push_back(r.to_u64());

    // Common denominator of the weights.
    __int128 den = 1;
    for (const auto &e : p.entries()) {
        __int128 d = e.weight.den();
        __int128 a = den, b = d;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        den = den / a * d;
        if (den > (__int128(1) << 62)) throw std::overflow_error("distribution denominators too large");
    }
    std::vector<__int128> bucket(size_t{1} << n, 0);
    for (const auto &e : p.entries()) {
        uint64_t w = e.bits.to_u64();
        uint64_t x = 0;
        for (int i = 0; i < n; i++) x = (x << 1) | uint64_t(symplectic_u64(rows[size_t(i)], w, n));
        bucket[x] += __int128(e.weight.num()) * (den / e.weight.den());
    }
    // sum_x |c_x / den - 2^-n| = sum_x |c_x 2^n - den| / (den 2^n).
    __int128 total = 0;
    for (__int128 c : bucket) {
        __int128 diff = (c << n) - den;
        total += diff < 0 ? -diff : diff;
    }
    return Rational::from_ratio(total, den << n);
}

StabilizerMatrix stabilizer_from_w(const BitString &w) {
    if (w.size() == 0 || w.size() % 2) {
        throw std::invalid_argument("stabilizer_from_w: w must have 2n bits");
    }
    int n = int(w.size() / 2);
    std::vector<BitString> rows;
    for (int i = 0; i < n; i++) {
        bool u = w.get(size_t(i));
        bool v = w.get(size_t(n + i));
        bool u_lift = u || !v;
        BitString row(size_t(2 * n));
        row.set(size_t(i), v);
        row.set(size_t(n + i), u_lift);
        rows.push_back(std::move(row));
    }
    return StabilizerMatrix(n, std::move(rows));
}

StabilizerMatrix random_stabilizer_matrix(int n, uint64_t seed) {
    if (n < 1 || n > kMaxPushforwardQubits) {
        throw std::invalid_argument("random stabilizers limited to 1 <= n <= 12");
    }
    Rng rng(seed);
    uint64_t mask = (uint64_t{1} << (2 * n)) - 1;
    std::vector<uint64_t> chosen;
    Gf2Basis basis;
    while (chosen.size() < size_t(n)) {
        uint64_t v = rng.next_u64() & mask;
        if (v == 0) continue;
        bool orthogonal = true;
        for (uint64_t row : chosen) {
            if (symplectic_u64(row, v, n)) {
                orthogonal = false;
                break;
            }
        }
        if (!orthogonal) continue;
        if (!basis.insert(v)) continue;
        chosen.push_back(v);
    }
    std::vector<BitString> rows;
    for (uint64_t v : chosen) rows.push_back(BitString::from_u64(v, size_t(2 * n)));
    return StabilizerMatrix(n, std::move(rows));
}

BiasReport bias_audit(const PauliDistribution &p, BiasMode mode) { return max_bias(p.entries(), mode); }

double rank_bound_floor(uint64_t m, int n) {
    if (m < 1) {
        throw std::invalid_argument("operator count must be positive");
    }
    return std::max(0.0, 2.0 * (1.0 - double(m) / std::exp2(n)));
}

StabilizerAuditReport audit_stabilizers(const PauliDistribution &p, double epsilon_target,
                                        const StabilizerAuditOptions &options) {
    int n = p.n();
    StabilizerAuditReport report;
    report.epsilon_target = epsilon_target;
    report.max_l1 = Rational(0);
    auto check = [&](std::string family, std::string label, StabilizerMatrix m) {
        Rational l1 = pushforward_l1_from_uniform(m, p);
        bool ok = l1.to_double() <= epsilon_target + 1e-9;
        if (l1 > report.max_l1) report.max_l1 = l1;
        report.checks.push_back({std::move(family), std::move(label), std::move(m), l1, ok});
    };
    check("canonical-z", "", StabilizerMatrix::all_z(n));
    check("canonical-x", "", StabilizerMatrix::all_x(n));

    uint64_t space = uint64_t{1} << (2 * n);
    report.exhaustive_w = options.exhaustive_w && 2 * n <= kMaxExhaustiveStabilizerBits;
    if (report.exhaustive_w) {
        for (uint64_t w = 1; w < space; w++) {
            BitString bits = BitString::from_u64(w, size_t(2 * n));
            check("from-w", bits.str(), stabilizer_from_w(bits));
        }
    } else {
        Rng rng(Rng(options.seed).split(0).seed());
        for (uint64_t k = 0; k < options.sampled_w; k++) {
            uint64_t w;
            do {
                w = rng.next_u64() & (space - 1);
            } while (w == 0);
            BitString bits = BitString::from_u64(w, size_t(2 * n));
            check("from-w", bits.str(), stabilizer_from_w(bits));
        }
    }
    for (uint64_t k = 0; k < options.random_matrices; k++) {
        uint64_t s = Rng(options.seed).split(k + 1).seed();
        check("random", std::to_string(s), random_stabilizer_matrix(n, s));
    }
    report.pass = true;
    for (const auto &c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

}  // namespace qotp
