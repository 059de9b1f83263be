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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.h"
#include "qotp/audit.h"

using namespace qotp;

namespace {

std::vector<ComplexMatrix> dense_operators(const Scheme &scheme) {
    std::vector<ComplexMatrix> out;
    int n = scheme.n();
    if (!scheme.is_pauli()) return std::get<Scheme::Haar>(scheme.kind()).unitaries;
    PauliDistribution p = scheme.pauli_distribution();
    for (const auto &e : p.entries()) {
        // Repeat each operator in proportion to its weight numerator over a common denominator.
        uint64_t w = e.bits.to_u64();
        auto op = oracle::dense_pauli(w >> n, w & ((uint64_t{1} << n) - 1), n);
        int64_t copies = e.weight.num() * (int64_t(scheme.m()) / e.weight.den());
        for (int64_t k = 0; k < copies; k++) out.push_back(op);
    }
    return out;
}

Scheme random_pauli_scheme(int n, size_t m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PauliKey> keys;
    for (size_t k = 0; k < m; k++) {
        keys.push_back(PauliKey::from_bits(BitString::from_u64(rng() & ((uint64_t{1} << (2 * n)) - 1), size_t(2 * n))));
    }
    return Scheme::explicit_pauli(n, keys);
}

Scheme full_pauli_scheme(int n) {
    std::vector<PauliKey> keys;
    for (uint64_t w = 0; w < (uint64_t{1} << (2 * n)); w++) keys.push_back(PauliKey::from_bits(BitString::from_u64(w, size_t(2 * n))));
    return Scheme::explicit_pauli(n, keys);
}

}  // namespace

TEST(scheme, construction) {
    Scheme a = Scheme::aghp(choose_params(4, 0.5));
    ASSERT_EQ(a.n(), 4);
    ASSERT_EQ(a.m(), 1024u);
    ASSERT_TRUE(a.is_pauli());
    ASSERT_EQ(a.pauli_distribution().length(), 8u);
    ASSERT_THROW(Scheme::explicit_pauli(2, {}), std::invalid_argument);
    ASSERT_THROW(Scheme::explicit_pauli(2, {PauliKey::identity(3)}), std::invalid_argument);
    ComplexMatrix not_unitary = ComplexMatrix::identity(2);
    not_unitary(0, 1) = 0.1;
    ASSERT_THROW(Scheme::haar(1, {not_unitary}), std::invalid_argument);
    ASSERT_THROW(Scheme::haar(7, {ComplexMatrix::identity(128)}), std::invalid_argument);
    Scheme h = Scheme::haar(1, {ComplexMatrix::identity(2)});
    ASSERT_FALSE(h.is_pauli());
    ASSERT_THROW(h.pauli_distribution(), std::logic_error);
}

TEST(keygen, length_determinism_and_spread) {
    SchemeParams p = choose_params(4, 0.5);
    std::set<uint64_t> seen;
    for (uint64_t seed = 0; seed < 200; seed++) {
        BitString k = keygen(p, seed);
        ASSERT_EQ(k.size(), 10u);
        ASSERT_EQ(k, keygen(p, seed));
        seen.insert(k.to_u64());
    }
    // 200 draws from 1024 keys: about 20 birthday collisions expected, so far more than 150 distinct.
    ASSERT_GT(seen.size(), 150u);
    SchemeParams wide = choose_params(40, 0.5);
    ASSERT_EQ(keygen(wide, 1).size(), size_t(wide.key_bits()));
}

TEST(encrypt, examples) {
    SchemeParams p = choose_params(4, 0.5);
    auto psi = random_pure_state(4, 1);
    ASSERT_EQ(encrypt(psi, BitString(10), p), psi);
    // With x = 0 only positions 0..r-1 can be set, and position i carries coefficient i of y.
    // Taking y = e_4 leaves the X half zero and sets one Z bit.
    BitString key = BitString::from_string("0000010000");
    ASSERT_EQ(expand_key(key, p).str(), "00001000");
    ASSERT_TRUE(expand_key(key, p).slice(0, 4).is_zero());
    ASSERT_EQ(encrypt(StateVector::basis(4, 0), key, p), StateVector::basis(4, 0));
    ASSERT_THROW(encrypt(random_pure_state(3, 1), key, p), std::invalid_argument);
}

TEST(encrypt, single_qubit_matches_dense_matrix) {
    SchemeParams p = SchemeParams::make(1, 2, 2);
    for (uint64_t k = 0; k < 4; k++) {
        BitString key = BitString::from_u64(k, 2);
        uint64_t w = expand_key(key, p).to_u64();
        auto dense = oracle::dense_pauli(w >> 1, w & 1, 1);
        auto psi = random_pure_state(1, k);
        auto expected = oracle::mat_vec(dense, psi.amps());
        auto got = encrypt(psi, key, p);
        for (size_t i = 0; i < 2; i++) ASSERT_LT(std::abs(got[i] - expected[i]), 1e-15);
    }
}

TEST(decrypt, roundtrip_and_wrong_key) {
    SchemeParams p = choose_params(6, 0.5);
    int below = 0;
    for (uint64_t t = 0; t < 50; t++) {
        auto psi = random_pure_state(6, t);
        auto key = keygen(p, 100 + t);
        ASSERT_GE(fidelity_phase_insensitive(decrypt(encrypt(psi, key, p), key, p), psi), 1 - 1e-12);
        auto wrong = keygen(p, 900 + t);
        if (expand_key(wrong, p) != expand_key(key, p)) {
            below += fidelity_phase_insensitive(decrypt(encrypt(psi, key, p), wrong, p), psi) < 0.99;
        }
    }
    ASSERT_GT(below, 40);
    SchemeParams q = choose_params(4, 0.5);
    auto psi = random_pure_state(4, 8);
    ASSERT_EQ(decrypt(encrypt(psi, BitString(10), q), BitString(10), q), psi);
}

TEST(channel_apply, examples) {
    auto rho = DensityMatrix::pure(random_pure_state(2, 3));
    auto out = channel_apply(full_pauli_scheme(2), rho);
    ASSERT_LT(out.matrix().max_abs_diff(DensityMatrix::maximally_mixed(2).matrix()), 1e-10);

    auto same = channel_apply(Scheme::explicit_pauli(2, {PauliKey::identity(2)}), rho);
    ASSERT_LT(same.matrix().max_abs_diff(rho.matrix()), 1e-15);

    Scheme ix = Scheme::explicit_pauli(1, {PauliKey::identity(1), PauliKey::from_bits(BitString::from_string("10"))});
    auto half = channel_apply(ix, DensityMatrix::pure(StateVector::basis(1, 0)));
    ASSERT_LT(half.matrix().max_abs_diff(DensityMatrix::maximally_mixed(1).matrix()), 1e-15);
}

TEST(channel_apply, matches_dense_conjugation_sum) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 20; t++) {
        int n = 1 + int(rng() % 3);
        Scheme scheme = random_pauli_scheme(n, 1 + rng() % 12, rng());
        auto rho = DensityMatrix::pure(random_pure_state(n, rng()));
        auto expected = oracle::dense_channel(dense_operators(scheme), rho.matrix());
        ASSERT_LT(channel_apply(scheme, rho).matrix().max_abs_diff(expected), 1e-14);
    }
    Scheme aghp = Scheme::aghp(SchemeParams::make(2, 2, 4));
    auto rho = DensityMatrix::pure(random_pure_state(2, 5));
    ASSERT_LT(channel_apply(aghp, rho).matrix().max_abs_diff(oracle::dense_channel(dense_operators(aghp), rho.matrix())), 1e-14);
    Scheme haar = sample_random_scheme(1, 2.0, RandomSource::haar, 3);
    auto rho1 = DensityMatrix::pure(random_pure_state(1, 5));
    ASSERT_LT(channel_apply(haar, rho1).matrix().max_abs_diff(oracle::dense_channel(dense_operators(haar), rho1.matrix())), 1e-14);
}

TEST(channel_apply, output_is_a_state_and_map_is_linear) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; t++) {
        int n = 1 + int(rng() % 4);
        Scheme scheme = random_pauli_scheme(n, 1 + rng() % 20, rng());
        auto r1 = DensityMatrix::pure(random_pure_state(n, rng()));
        auto r2 = DensityMatrix::pure(random_pure_state(n, rng()));
        double alpha = double(rng() % 1000) / 1000.0;
        DensityMatrix mix(n, alpha * r1.matrix() + (1 - alpha) * r2.matrix());
        auto lhs = channel_apply(scheme, mix);
        auto rhs = alpha * channel_apply(scheme, r1).matrix() + (1 - alpha) * channel_apply(scheme, r2).matrix();
        ASSERT_LT(lhs.matrix().max_abs_diff(rhs), 1e-10);
        ASSERT_LT(lhs.matrix().hermitian_defect(), 1e-12);
        ASSERT_NEAR(lhs.matrix().trace().real(), 1, 1e-10);
        ASSERT_NO_THROW(lhs.check_positive());
    }
    ASSERT_THROW(channel_apply(random_pauli_scheme(9, 2, 1), DensityMatrix::maximally_mixed(9)), std::invalid_argument);
    ASSERT_THROW(channel_apply(random_pauli_scheme(2, 2, 1), DensityMatrix::maximally_mixed(3)), std::invalid_argument);
}

TEST(channel_apply, mixed_inputs_are_no_worse_than_their_pure_parts) {
    Scheme scheme = random_pauli_scheme(3, 10, 4);
    RandomizingChannel channel(scheme);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; t++) {
        std::vector<StateVector> states;
        std::vector<double> weights;
        double worst_pure = 0;
        for (int k = 0; k < 3; k++) {
            states.push_back(random_pure_state(3, rng()));
            weights.push_back(1.0 / 3);
            worst_pure = std::max(worst_pure, trace_distance_from_mixed(channel.apply(DensityMatrix::pure(states.back()))));
        }
        double mixed = trace_distance_from_mixed(channel.apply(DensityMatrix::mixture(weights, states)));
        ASSERT_LE(mixed, worst_pure + 1e-8);
    }
}

TEST(random_scheme_size, examples) {
    ASSERT_EQ(random_scheme_size(4, 0.5), 8055u);
    ASSERT_EQ(random_scheme_size(1, 2.0), uint64_t(std::ceil(37.0 * 2 / 4 * std::log(7.5))));
    ASSERT_EQ(random_scheme_size(1, 2.0), 38u);
    ASSERT_THROW(random_scheme_size(1, 0.0), std::invalid_argument);
    ASSERT_THROW(random_scheme_size(1, 2.1), std::invalid_argument);
}

TEST(sample_random_scheme, determinism_and_shape) {
    Scheme a = sample_random_scheme(2, 1.0, RandomSource::pauli_uniform, 5);
    Scheme b = sample_random_scheme(2, 1.0, RandomSource::pauli_uniform, 5);
    ASSERT_EQ(a.m(), random_scheme_size(2, 1.0));
    ASSERT_EQ(std::get<Scheme::ExplicitPauli>(a.kind()).keys, std::get<Scheme::ExplicitPauli>(b.kind()).keys);
    Scheme c = sample_random_scheme(2, 1.0, RandomSource::pauli_uniform, 6);
    ASSERT_NE(std::get<Scheme::ExplicitPauli>(a.kind()).keys, std::get<Scheme::ExplicitPauli>(c.kind()).keys);
    Scheme h1 = sample_random_scheme(1, 2.0, RandomSource::haar, 5);
    Scheme h2 = sample_random_scheme(1, 2.0, RandomSource::haar, 5);
    ASSERT_EQ(h1.m(), 38u);
    for (size_t k = 0; k < 38; k++) {
        ASSERT_EQ(std::get<Scheme::Haar>(h1.kind()).unitaries[k].max_abs_diff(std::get<Scheme::Haar>(h2.kind()).unitaries[k]), 0);
    }
    ASSERT_THROW(sample_random_scheme(7, 2.0, RandomSource::haar, 1), std::invalid_argument);
}

TEST(random_haar_unitary, unitary_with_uniform_moments) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        auto u = random_haar_unitary(8, seed);
        ASSERT_LT((u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(8)), 1e-12);
    }
    // E |U_00|^2 = 1/d for Haar U.
    size_t samples = 4000;
    double sum = 0, sum_sq = 0;
    for (size_t k = 0; k < samples; k++) {
        double v = std::norm(random_haar_unitary(4, 50 + k)(0, 0));
        sum += v;
        sum_sq += v * v;
    }
    double mean = sum / double(samples);
    double se = std::sqrt((sum_sq / double(samples) - mean * mean) / double(samples));
    ASSERT_NEAR(mean, 0.25, 5 * se);
}

TEST(audit_epsilon_empirical, examples) {
    AuditReport full = audit_epsilon_empirical(full_pauli_scheme(2), 20, 1, 1e-8);
    ASSERT_LE(full.max_distance, 1e-8);
    ASSERT_TRUE(full.pass);
    AuditReport ident = audit_epsilon_empirical(Scheme::explicit_pauli(3, {PauliKey::identity(3)}), 10, 1, 0.5);
    for (double y : ident.distances) ASSERT_NEAR(y, 2 * (1 - 1.0 / 8), 1e-10);
    ASSERT_FALSE(ident.pass);
    ASSERT_EQ(ident.trials, 10u);
    AuditReport again = audit_epsilon_empirical(Scheme::explicit_pauli(3, {PauliKey::identity(3)}), 10, 1, 0.5);
    ASSERT_EQ(again.distances, ident.distances);
}

TEST(audit_epsilon_empirical, rank_floor_holds_for_small_schemes) {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 20; t++) {
        int n = 2 + int(rng() % 3);
        uint64_t m = 1 + rng() % 6;
        Scheme scheme = random_pauli_scheme(n, m, rng());
        AuditReport rep = audit_epsilon_empirical(scheme, 5, rng(), 2.0);
        for (double y : rep.distances) ASSERT_GE(y, rank_bound_floor(m, n) - 1e-8);
    }
}

TEST(expected_distance_bound, examples) {
    ASSERT_DOUBLE_EQ(expected_distance_bound(4, 16), 1.0);
    ASSERT_NEAR(expected_distance_bound(4, 8055), 0.044568, 1e-6);
    ASSERT_GT(expected_distance_bound(4, 100), expected_distance_bound(4, 101));
    ASSERT_THROW(expected_distance_bound(4, 0), std::invalid_argument);
}

TEST(sample_random_scheme, distance_concentrates_across_schemes) {
    int n = 4;
    double eps = 0.5;
    auto rho = DensityMatrix::pure(random_pure_state(n, 77));
    uint64_t m = random_scheme_size(n, eps);
    double threshold = expected_distance_bound(n, m) + 0.1;
    int above = 0;
    for (uint64_t s = 0; s < 50; s++) {
        Scheme scheme = sample_random_scheme(n, eps, RandomSource::pauli_uniform, 1000 + s);
        above += trace_distance_from_mixed(channel_apply(scheme, rho)) >= threshold;
    }
    ASSERT_LE(double(above) / 50, 0.02);
}
