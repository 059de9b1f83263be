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

#ifndef QOTP_PAULI_H
#define QOTP_PAULI_H

#include "qotp/bits.h"
#include "qotp/qstate.h"

namespace qotp {

/// The n-qubit Pauli operator X^a Z^b, identified with the 2n-bit string (a, b). The phase
/// i^|a & b| that would make it Hermitian is dropped: every use either conjugates by the
/// operator or compares states up to global phase.
struct PauliKey {
    BitString a;  // X part
    BitString b;  // Z part

    PauliKey() = default;
    PauliKey(BitString x_part, BitString z_part);

    /// Splits a 2n-bit descriptor into (a, b).
    static PauliKey from_bits(const BitString &w);
    static PauliKey identity(int n) { return {BitString(size_t(n)), BitString(size_t(n))}; }

    int n() const { return int(a.size()); }
    BitString bits() const { return a.concat(b); }

    bool operator==(const PauliKey &other) const = default;
};

/// <a, d> + <b, c> mod 2 for w = (a, b), w2 = (c, d). Zero iff the operators commute.
int symplectic_ip(const BitString &w, const BitString &w2);

/// X^a Z^b |psi>: amplitude at z ^ a becomes (-1)^<b, z> times the amplitude at z.
StateVector apply_pauli(const PauliKey &key, const StateVector &psi);
/// Same, writing into `out` (resized as needed); `out` must not alias the input amplitudes.
void apply_pauli(const PauliKey &key, std::span<const Complex> in, std::vector<Complex> &out);

/// Z^b X^a |psi>, the inverse of apply_pauli.
StateVector apply_pauli_inverse(const PauliKey &key, const StateVector &psi);

/// Sign picked up when X^a Z^b conjugates the Pauli described by `target`.
int pauli_conjugate_sign(const PauliKey &key, const BitString &target);

}  // namespace qotp

#endif
