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

#include "qotp/scheme.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "qotp/random.h"

namespace qotp {

Scheme Scheme::aghp(SchemeParams params) {
    int n = params.n();
    return Scheme(n, Aghp{std::move(params)});
}

Scheme Scheme::explicit_pauli(int n, std::vector<PauliKey> keys) {
    if (keys.empty()) {
        throw std::invalid_argument("a scheme needs at least one operator");
    }
    for (const auto &k : keys) {
        if (k.n() != n) {
            throw std::invalid_argument("Pauli key acts on " + std::to_string(k.n()) + " qubits, scheme on " + std::to_string(n));
        }
    }
    return Scheme(n, ExplicitPauli{std::move(keys)});
}

Scheme Scheme::haar(int n, std::vector<ComplexMatrix> unitaries) {
    if (n < 1 || n > kMaxHaarQubits) {
        throw std::invalid_argument("Haar schemes are limited to 1 <= n <= 6");
    }
    if (unitaries.empty()) {
        throw std::invalid_argument("a scheme needs at least one operator");
    }
    size_t d = size_t{1} << n;
    ComplexMatrix eye = ComplexMatrix::identity(d);
    for (const auto &u : unitaries) {
        if (u.dim() != d) {
            throw std::invalid_argument("unitary has the wrong dimension");
        }
        if ((u.adjoint() * u).max_abs_diff(eye) > 1e-10) {
            throw std::invalid_argument("matrix is not unitary within 1e-10");
        }
    }
    return Scheme(n, Haar{std::move(unitaries)});
}

uint64_t Scheme::m() const {
    if (const auto *a = std::get_if<Aghp>(&kind_)) return uint64_t{1} << a->params.key_bits();
    if (const auto *p = std::get_if<ExplicitPauli>(&kind_)) return p->keys.size();
    return std::get<Haar>(kind_).unitaries.size();
}

PauliDistribution Scheme::pauli_distribution() const {
    if (const auto *a = std::get_if<Aghp>(&kind_)) {
        BiasedSet set = build_set(a->params);
        return PauliDistribution::uniform_over_packed(set.members, a->params.length);
    }
    if (const auto *p = std::get_if<ExplicitPauli>(&kind_)) {
        std::vector<BitString> members;
        members.reserve(p->keys.size());
        for (const auto &k : p->keys) members.push_back(k.bits());
        return PauliDistribution::uniform_over(members);
    }
    throw std::logic_error("Haar schemes have no Pauli distribution");
}

RandomizingChannel::RandomizingChannel(const Scheme &scheme) : n_(scheme.n()) {
    if (!scheme.is_pauli()) {
        unitaries_ = std::get<Scheme::Haar>(scheme.kind()).unitaries;
        return;
    }
    if (n_ > kMaxPauliQubits) {
        throw std::invalid_argument("exact channel evaluation is limited to n <= 8 for Pauli schemes");
    }
    PauliDistribution p = scheme.pauli_distribution();
    size_t d = size_t{1} << n_;
    std::map<uint64_t, std::vector<double>> by_x;
    for (const auto &e : p.entries()) {
        uint64_t w = e.bits.to_u64();
        uint64_t a = w >> n_;
        uint64_t b = w & (d - 1);
        auto &profile = by_x[a];
        if (profile.empty()) profile.assign(d, 0.0);
        profile[b] += e.weight.to_double();
    }
    for (auto &[a, profile] : by_x) {
        walsh_hadamard(profile);
        groups_.push_back({a, std::move(profile)});
    }
}

DensityMatrix RandomizingChannel::apply(const DensityMatrix &rho) const {
    if (rho.n() != n_) {
        throw std::invalid_argument("channel acts on " + std::to_string(n_) + " qubits, state has " + std::to_string(rho.n()));
    }
    size_t d = rho.dim();
    ComplexMatrix out(d);
    if (unitaries_.empty()) {
        for (const auto &g : groups_) {
            for (size_t i = 0; i < d; i++) {
                for (size_t j = 0; j < d; j++) out(i, j) += g.profile[i ^ j] * rho(i ^ g.a, j ^ g.a);
            }
        }
        return DensityMatrix(n_, std::move(out));
    }
    for (const auto &u : unitaries_) out += u * rho.matrix() * u.adjoint();
    out *= 1.0 / double(unitaries_.size());
    ComplexMatrix adj = out.adjoint();
    out += adj;
    out *= 0.5;
    return DensityMatrix(n_, std::move(out));
}

DensityMatrix channel_apply(const Scheme &scheme, const DensityMatrix &rho) { return RandomizingChannel(scheme).apply(rho); }

BitString keygen(const SchemeParams &params, uint64_t seed) {
    Rng rng(seed);
    BitString key(size_t(params.key_bits()));
    uint64_t word = 0;
    for (size_t i = 0; i < key.size(); i++) {
        if (i % 64 == 0) word = rng.next_u64();
        key.set(i, (word >> (i % 64)) & 1);
    }
    return key;
}

StateVector encrypt(const StateVector &psi, const BitString &key, const SchemeParams &params) {
    if (psi.n() != params.n()) {
        throw std::invalid_argument("state has " + std::to_string(psi.n()) + " qubits, key is for " + std::to_string(params.n()));
    }
    return apply_pauli(PauliKey::from_bits(expand_key(key, params)), psi);
}

StateVector decrypt(const StateVector &psi, const BitString &key, const SchemeParams &params) {
    if (psi.n() != params.n()) {
        throw std::invalid_argument("state has " + std::to_string(psi.n()) + " qubits, key is for " + std::to_string(params.n()));
    }
    return apply_pauli_inverse(PauliKey::from_bits(expand_key(key, params)), psi);
}

uint64_t random_scheme_size(int n, double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 2.0) {
        throw std::invalid_argument("epsilon must lie in (0, 2]");
    }
    if (n < 1 || n > 30) {
        throw std::invalid_argument("qubit count out of range");
    }
    double m = 37.0 * std::exp2(n) / (epsilon * epsilon) * std::log(15.0 / epsilon);
    return uint64_t(std::ceil(m));
}

ComplexMatrix random_haar_unitary(size_t dim, uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix u(dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) u(i, j) = rng.complex_normal();
    }
    // Modified Gram-Schmidt over columns, two passes for orthogonality at working precision.
    for (size_t k = 0; k < dim; k++) {
        for (int pass = 0; pass < 2; pass++) {
            for (size_t j = 0; j < k; j++) {
                Complex proj = 0;
                for (size_t i = 0; i < dim; i++) proj += std::conj(u(i, j)) * u(i, k);
                for (size_t i = 0; i < dim; i++) u(i, k) -= proj * u(i, j);
            }
        }
        double norm = 0;
        for (size_t i = 0; i < dim; i++) norm += std::norm(u(i, k));
        double scale = 1.0 / std::sqrt(norm);
        for (size_t i = 0; i < dim; i++) u(i, k) *= scale;
    }
    return u;
}

Scheme sample_random_scheme(int n, double epsilon, RandomSource source, uint64_t seed) {
    uint64_t m = random_scheme_size(n, epsilon);
    Rng root(seed);
    if (source == RandomSource::haar) {
        if (n > Scheme::kMaxHaarQubits) {
            throw std::invalid_argument("Haar schemes are limited to n <= 6");
        }
        std::vector<ComplexMatrix> unitaries;
        unitaries.reserve(m);
        for (uint64_t i = 0; i < m; i++) unitaries.push_back(random_haar_unitary(size_t{1} << n, root.split(i).seed()));
        return Scheme::haar(n, std::move(unitaries));
    }
    if (n > 32) {
        throw std::invalid_argument("random Pauli schemes are limited to n <= 32");
    }
    std::vector<PauliKey> keys;
    keys.reserve(m);
    uint64_t mask = n == 32 ? ~uint64_t{0} : (uint64_t{1} << (2 * n)) - 1;
    for (uint64_t i = 0; i < m; i++) {
        uint64_t w = root.next_u64() & mask;
        keys.push_back(PauliKey::from_bits(BitString::from_u64(w, size_t(2 * n))));
    }
    return Scheme::explicit_pauli(n, std::move(keys));
}

uint64_t trial_seed(uint64_t seed, uint64_t index) { return Rng(seed).split(index).seed(); }

AuditReport audit_epsilon_empirical(const Scheme &scheme, uint64_t trials, uint64_t seed, double epsilon_target) {
    RandomizingChannel channel(scheme);
    AuditReport report;
    report.epsilon_target = epsilon_target;
    report.trials = trials;
    report.distances.reserve(trials);
    double total = 0;
    for (uint64_t t = 0; t < trials; t++) {
        StateVector psi = random_pure_state(scheme.n(), trial_seed(seed, t));
        double y = trace_distance_from_mixed(channel.apply(DensityMatrix::pure(psi)));
        report.distances.push_back(y);
        report.max_distance = std::max(report.max_distance, y);
        total += y;
    }
    report.mean_distance = trials ? total / double(trials) : 0.0;
    report.pass = report.max_distance <= epsilon_target;
    return report;
}

double expected_distance_bound(int n, uint64_t m) {
    if (m < 1) {
        throw std::invalid_argument("operator count must be positive");
    }
    return std::sqrt(std::exp2(n) / double(m));
}

}  // namespace qotp
