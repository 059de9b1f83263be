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

#include "qotp/pauli.h"

#include <stdexcept>
#include <string>

namespace qotp {

namespace {

void check_state(const PauliKey &key, size_t dim) {
    if (key.n() > 30 || dim != (size_t{1} << key.n())) {
        throw std::invalid_argument(
            "Pauli on " + std::to_string(key.n()) + " qubits applied to a state of dimension " + std::to_string(dim));
    }
}

}  // namespace

PauliKey::PauliKey(BitString x_part, BitString z_part) : a(std::move(x_part)), b(std::move(z_part)) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("Pauli X and Z parts differ in length");
    }
}

PauliKey PauliKey::from_bits(const BitString &w) {
    if (w.size() % 2) {
        throw std::invalid_argument("Pauli descriptor must have an even number of bits");
    }
    size_t n = w.size() / 2;
    return {w.slice(0, n), w.slice(n, n)};
}

int symplectic_ip(const BitString &w, const BitString &w2) {
    if (w.size() != w2.size() || w.size() % 2) {
        throw std::invalid_argument("symplectic_ip: descriptors must have equal even length");
    }
    size_t n = w.size() / 2;
    int ad = w.slice(0, n).dot(w2.slice(n, n));
    int bc = w.slice(n, n).dot(w2.slice(0, n));
    return ad ^ bc;
}

void apply_pauli(const PauliKey &key, std::span<const Complex> in, std::vector<Complex> &out) {
    check_state(key, in.size());
    uint64_t a = key.a.to_u64();
    uint64_t b = key.b.to_u64();
    out.resize(in.size());
    for (uint64_t z = 0; z < in.size(); z++) {
        Complex v = in[z];
        out[z ^ a] = parity64(b & z) ? -v : v;
    }
}

StateVector apply_pauli(const PauliKey &key, const StateVector &psi) {
    std::vector<Complex> out;
    apply_pauli(key, psi.amps(), out);
    return StateVector(psi.n(), std::move(out));
}

StateVector apply_pauli_inverse(const PauliKey &key, const StateVector &psi) {
    check_state(key, psi.dim());
    uint64_t a = key.a.to_u64();
    uint64_t b = key.b.to_u64();
    std::vector<Complex> out(psi.dim());
    for (uint64_t z = 0; z < psi.dim(); z++) {
        uint64_t target = z ^ a;
        Complex v = psi[z];
        out[target] = parity64(b & target) ? -v : v;
    }
    return StateVector(psi.n(), std::move(out));
}

int pauli_conjugate_sign(const PauliKey &key, const BitString &target) {
    if (target.size() != 2 * size_t(key.n())) {
        throw std::invalid_argument("pauli_conjugate_sign: target length mismatch");
    }
    return symplectic_ip(key.bits(), target) ? -1 : 1;
}

}  // namespace qotp
