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

#ifndef QOTP_TESTS_ORACLES_H
#define QOTP_TESTS_ORACLES_H

// Slow reference implementations used only by tests. None of these share code with the library
// routines they check: polynomials are multiplied and divided bit by bit, biases are counted
// directly, and Pauli operators are built as dense Kronecker products.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qotp/qstate.h"
#include "qotp/rational.h"

namespace qotp::oracle {

inline int degree(uint64_t p) {
    int d = -1;
    for (int k = 0; k < 64; k++) {
        if ((p >> k) & 1) d = k;
    }
    return d;
}

/// Schoolbook convolution; the product must fit in 64 bits.
inline uint64_t poly_mul(uint64_t a, uint64_t b) {
    uint64_t out = 0;
    for (int i = 0; i < 64; i++) {
        for (int j = 0; i + j < 64; j++) {
            if (((a >> i) & 1) && ((b >> j) & 1)) out ^= uint64_t{1} << (i + j);
        }
    }
    return out;
}

/// Long division remainder.
inline uint64_t poly_mod(uint64_t a, uint64_t f) {
    int df = degree(f);
    for (int k = degree(a); k >= df; k--) {
        if ((a >> k) & 1) a ^= f << (k - df);
    }
    return a;
}

inline uint64_t poly_gcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

/// Irreducible iff no polynomial of degree 1..deg/2 divides it.
inline bool irreducible_by_trial_division(uint64_t f) {
    int d = degree(f);
    if (d < 1) return false;
    for (uint64_t g = 2; degree(g) <= d / 2; g++) {
        if (poly_mod(f, g) == 0) return false;
    }
    return true;
}

/// Multiplication in GF(2)[x]/(f) by full product then long division. deg f <= 31.
inline uint64_t field_mul(uint64_t a, uint64_t b, uint64_t f) { return poly_mod(poly_mul(a, b), f); }

inline int parity(uint64_t v) {
    int p = 0;
    while (v) {
        p ^= int(v & 1);
        v >>= 1;
    }
    return p;
}

/// Packed AGHP member (position 0 most significant), each bit <e_i x^j, y> computed independently.
inline uint64_t aghp_member(uint64_t x, uint64_t y, int r, int length, uint64_t f) {
    uint64_t out = 0;
    for (int p = 0; p < length; p++) {
        int i = p % r;
        int j = p / r;
        uint64_t xj = 1;
        for (int k = 0; k < j; k++) xj = field_mul(xj, x, f);
        uint64_t col = field_mul(uint64_t{1} << i, xj, f);
        out = (out << 1) | uint64_t(parity(col & y));
    }
    return out;
}

/// |Pr[<u,w> = 0] - Pr[<u,w> = 1]| over a uniform multiset, by counting.
inline Rational bias_by_counting(const std::vector<uint64_t> &members, uint64_t u) {
    int64_t odd = 0;
    for (uint64_t w : members) odd += parity(w & u);
    int64_t total = int64_t(members.size());
    int64_t diff = total - 2 * odd;
    return Rational(diff < 0 ? -diff : diff, total);
}

/// Bias of the full rs-bit AGHP set against u via root counting: <s_xy, u> = <p_u(x), y> with
/// p_u(t) = sum_j c_j t^j, c_j = sum_i u_ij e_i, so the y-average vanishes unless p_u(x) = 0 and
/// the bias is the fraction of x in GF(2^r) that are roots of p_u. `u` packs position 0 first.
inline Rational bias_by_root_count(uint64_t u, int r, int s, uint64_t f) {
    int length = r * s;
    std::vector<uint64_t> coeffs(size_t(s), 0);
    for (int p = 0; p < length; p++) {
        if ((u >> (length - 1 - p)) & 1) coeffs[size_t(p / r)] ^= uint64_t{1} << (p % r);
    }
    int64_t roots = 0;
    uint64_t q = uint64_t{1} << r;
    for (uint64_t x = 0; x < q; x++) {
        uint64_t acc = 0;  // Horner from the top coefficient.
        for (int j = s - 1; j >= 0; j--) acc = field_mul(acc, x, f) ^ coeffs[size_t(j)];
        roots += acc == 0;
    }
    return Rational(roots, int64_t(q));
}

/// Dense X^a Z^b (no phase) on n qubits, qubit 1 the most significant index bit.
inline ComplexMatrix dense_pauli(uint64_t a, uint64_t b, int n) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int q = 0; q < n; q++) {
        bool x = (a >> (n - 1 - q)) & 1;
        bool z = (b >> (n - 1 - q)) & 1;
        // Single-qubit X^x Z^z.
        ComplexMatrix single(2);
        if (!x) {
            single(0, 0) = 1;
            single(1, 1) = z ? -1 : 1;
        } else {
            single(1, 0) = 1;
            single(0, 1) = z ? -1 : 1;
        }
        size_t d = out.dim();
        ComplexMatrix next(d * 2);
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) {
                for (size_t k = 0; k < 2; k++) {
                    for (size_t l = 0; l < 2; l++) next(i * 2 + k, j * 2 + l) = out(i, j) * single(k, l);
                }
            }
        }
        out = next;
    }
    return out;
}

inline std::vector<Complex> mat_vec(const ComplexMatrix &m, std::span<const Complex> v) {
    std::vector<Complex> out(m.dim());
    for (size_t i = 0; i < m.dim(); i++) {
        for (size_t j = 0; j < m.dim(); j++) out[i] += m(i, j) * v[j];
    }
    return out;
}

/// (1/m) sum_k U_k rho U_k^dagger by dense products.
inline ComplexMatrix dense_channel(const std::vector<ComplexMatrix> &unitaries, const ComplexMatrix &rho) {
    ComplexMatrix out(rho.dim());
    for (const auto &u : unitaries) out += u * rho * u.adjoint();
    out *= 1.0 / double(unitaries.size());
    return out;
}

/// Eigenvalues of a 2x2 Hermitian matrix, ascending, from the characteristic polynomial.
inline std::array<double, 2> eigenvalues_2x2(const ComplexMatrix &m) {
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    double mid = (a + d) / 2;
    double rad = std::sqrt((a - d) * (a - d) / 4 + std::norm(m(0, 1)));
    return {mid - rad, mid + rad};
}

/// Eigenvalues of a 3x3 Hermitian matrix, ascending, by the trigonometric solution of the
/// characteristic cubic.
inline std::array<double, 3> eigenvalues_3x3(const ComplexMatrix &m) {
    double a = m(0, 0).real(), b = m(1, 1).real(), c = m(2, 2).real();
    Complex d = m(0, 1), e = m(1, 2), f = m(0, 2);
    double p1 = std::norm(d) + std::norm(e) + std::norm(f);
    double q = (a + b + c) / 3;
    double p2 = (a - q) * (a - q) + (b - q) * (b - q) + (c - q) * (c - q) + 2 * p1;
    double p = std::sqrt(p2 / 6);
    if (p == 0) return {a, a, a};
    // B = (A - qI) / p, r = det(B) / 2.
    double ba = (a - q) / p, bb = (b - q) / p, bc = (c - q) / p;
    Complex bd = d / p, be = e / p, bf = f / p;
    double det = ba * bb * bc + 2 * (bd * be * std::conj(bf)).real() - ba * std::norm(be) - bb * std::norm(bf) -
                 bc * std::norm(bd);
    double r = std::clamp(det / 2, -1.0, 1.0);
    double phi = std::acos(r) / 3;
    double e1 = q + 2 * p * std::cos(phi);
    double e3 = q + 2 * p * std::cos(phi + 2 * std::numbers::pi / 3);
    double e2 = 3 * q - e1 - e3;
    std::array<double, 3> out{e1, e2, e3};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qotp::oracle

#endif
