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

#ifndef QOTP_SCHEME_H
#define QOTP_SCHEME_H

#include <cstdint>
#include <variant>
#include <vector>

#include "qotp/bits.h"
#include "qotp/distribution.h"
#include "qotp/pauli.h"
#include "qotp/qstate.h"
#include "qotp/smallbias.h"

namespace qotp {

/// A randomizing map R(rho) = (1/m) sum_i U_i rho U_i^dagger given by its operator list.
class Scheme {
   public:
    struct Aghp {
        SchemeParams params;
    };
    struct ExplicitPauli {
        std::vector<PauliKey> keys;
    };
    struct Haar {
        std::vector<ComplexMatrix> unitaries;
    };
    using Kind = std::variant<Aghp, ExplicitPauli, Haar>;

    static constexpr int kMaxHaarQubits = 6;

    /// The 2^(2r) Pauli operators expanded from every key.
    static Scheme aghp(SchemeParams params);
    static Scheme explicit_pauli(int n, std::vector<PauliKey> keys);
    /// Throws std::invalid_argument unless each matrix is 2^n x 2^n with U^dagger U = I
    /// within 1e-10 and n <= 6.
    static Scheme haar(int n, std::vector<ComplexMatrix> unitaries);

    int n() const { return n_; }
    /// Number of operators, counted with repetition.
    uint64_t m() const;
    const Kind &kind() const { return kind_; }
    bool is_pauli() const { return !std::holds_alternative<Haar>(kind_); }

    /// Key distribution of a Pauli scheme; throws std::logic_error for Haar schemes.
    PauliDistribution pauli_distribution() const;

   private:
    Scheme(int n, Kind kind) : n_(n), kind_(std::move(kind)) {}
    int n_;
    Kind kind_;
};

/// Precomputed form of a scheme's channel, for applying it to many inputs.
class RandomizingChannel {
   public:
    static constexpr int kMaxPauliQubits = 8;

    explicit RandomizingChannel(const Scheme &scheme);

    int n() const { return n_; }
    DensityMatrix apply(const DensityMatrix &rho) const;

   private:
    // Pauli schemes: for each distinct X part a, the sign profile
    // q_a(c) = sum_b p(a, b) (-1)^<b, c>, so (R rho)_ij = sum_a q_a(i ^ j) rho_{i^a, j^a}.
    struct XGroup {
        uint64_t a;
        std::vector<double> profile;
    };
    int n_;
    std::vector<XGroup> groups_;
    std::vector<ComplexMatrix> unitaries_;
};

DensityMatrix channel_apply(const Scheme &scheme, const DensityMatrix &rho);

/// 2r uniformly random bits.
BitString keygen(const SchemeParams &params, uint64_t seed);

StateVector encrypt(const StateVector &psi, const BitString &key, const SchemeParams &params);
StateVector decrypt(const StateVector &psi, const BitString &key, const SchemeParams &params);

enum class RandomSource { pauli_uniform, haar };

/// ceil(37 * 2^n / epsilon^2 * ln(15 / epsilon)).
uint64_t random_scheme_size(int n, double epsilon);

/// Draws random_scheme_size(n, epsilon) operators i.i.d. from a completely randomizing source.
Scheme sample_random_scheme(int n, double epsilon, RandomSource source, uint64_t seed);

/// Haar-random unitary: Gram-Schmidt on a complex Gaussian matrix, which leaves the implied
/// triangular factor with a positive diagonal.
ComplexMatrix random_haar_unitary(size_t dim, uint64_t seed);

struct AuditReport {
    double epsilon_target = 0;
    double max_distance = 0;
    double mean_distance = 0;
    uint64_t trials = 0;
    std::vector<double> distances;
    /// max_distance <= epsilon_target.
    bool pass = false;
};

/// Seed of the random pure state used in trial `index` of an audit seeded with `seed`.
uint64_t trial_seed(uint64_t seed, uint64_t index);

/// Trace distance from I/d of the channel output on `trials` random pure states.
AuditReport audit_epsilon_empirical(const Scheme &scheme, uint64_t trials, uint64_t seed, double epsilon_target);

/// sqrt(2^n / m).
double expected_distance_bound(int n, uint64_t m);

}  // namespace qotp

#endif
