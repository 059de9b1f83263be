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

#ifndef QOTP_AUDIT_H
#define QOTP_AUDIT_H

#include <cstdint>
#include <string>
#include <vector>

#include "qotp/bits.h"
#include "qotp/distribution.h"
#include "qotp/rational.h"
#include "qotp/smallbias.h"

namespace qotp {

/// n x 2n GF(2) matrix of stabilizer generators, one 2n-bit Pauli descriptor per row. Rows are
/// pairwise symplectically orthogonal and linearly independent. Generator signs are not
/// represented: every quantity audited here depends only on the GF(2) matrix.
class StabilizerMatrix {
   public:
    /// Throws std::invalid_argument when the invariants fail. 1 <= n <= 32.
    StabilizerMatrix(int n, std::vector<BitString> rows);

    /// Z on every qubit: rows (0, e_i).
    static StabilizerMatrix all_z(int n);
    /// X on every qubit: rows (e_i, 0).
    static StabilizerMatrix all_x(int n);

    int n() const { return n_; }
    const std::vector<BitString> &rows() const { return rows_; }
    std::string str() const;

   private:
    int n_;
    std::vector<BitString> rows_;
};

/// Rank over GF(2) of bit strings of equal length <= 64.
int gf2_rank(const std::vector<BitString> &vectors);

/// Bit i is the symplectic product of row i with w.
BitString m_dot(const StabilizerMatrix &m, const BitString &w);

constexpr int kMaxPushforwardQubits = 12;

/// sum_x |Pr[M.V = x] - 2^-n| over x in {0,1}^n, for V distributed as p. Exact; n <= 12.
Rational pushforward_l1_from_uniform(const StabilizerMatrix &m, const PauliDistribution &p);

/// Single-qubit-supported stabilizer whose pushforward bits XOR to <w, V>. With w = (u, v) and
/// u' = u except u'_i = 1 wherever u_i = v_i = 0, row i is (v_i e_i, u'_i e_i): Z where only
/// u'_i is set, X where only v_i is, Y (as XZ) where both are.
StabilizerMatrix stabilizer_from_w(const BitString &w);

/// Greedy: uniformly random nonzero vectors in the symplectic complement of the rows chosen so
/// far, rejecting ones already in their span. n <= 12.
StabilizerMatrix random_stabilizer_matrix(int n, uint64_t seed);

/// Largest bias of p against a nonzero 2n-bit test string. Exhaustive mode requires 2n <= 24.
BiasReport bias_audit(const PauliDistribution &p, BiasMode mode = BiasMode::exhaustive());

/// max(0, 2 (1 - m / 2^n)): trace distance floor for any output of rank <= m.
double rank_bound_floor(uint64_t m, int n);

struct StabilizerCheck {
    std::string family;  // "canonical-z", "canonical-x", "from-w", "random"
    std::string label;   // w for from-w, seed for random
    StabilizerMatrix matrix;
    Rational l1;
    bool pass = false;
};

constexpr int kMaxExhaustiveStabilizerBits = 16;

struct StabilizerAuditOptions {
    /// Random nonzero w drawn when exhaustive_w is off or 2n exceeds kMaxExhaustiveStabilizerBits.
    uint64_t sampled_w = 0;
    uint64_t random_matrices = 100;
    uint64_t seed = 0;
    bool exhaustive_w = true;
};

struct StabilizerAuditReport {
    double epsilon_target = 0;
    Rational max_l1;
    std::vector<StabilizerCheck> checks;
    bool exhaustive_w = false;
    bool pass = false;
};

/// Checks the necessary condition pushforward_l1 <= epsilon over canonical, w-derived and random
/// stabilizers.
StabilizerAuditReport audit_stabilizers(const PauliDistribution &p, double epsilon_target,
                                        const StabilizerAuditOptions &options = {});

}  // namespace qotp

#endif
