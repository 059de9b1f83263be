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

#ifndef QOTP_QSTATE_H
#define QOTP_QSTATE_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qotp {

using Complex = std::complex<double>;

/// Dense square matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t dim) : dim_(dim), data_(dim * dim) {}
    ComplexMatrix(size_t dim, std::vector<Complex> data);

    static ComplexMatrix identity(size_t dim);

    size_t dim() const { return dim_; }
    Complex &operator()(size_t row, size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(size_t row, size_t col) const { return data_[row * dim_ + col]; }
    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(double scale);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(double scale, ComplexMatrix a) { return a *= scale; }

    Complex trace() const;
    double frobenius_norm_squared() const;
    /// max |M_ij - conj(M_ji)|.
    double hermitian_defect() const;
    /// max |M_ij - other_ij|.
    double max_abs_diff(const ComplexMatrix &other) const;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Pure state on n qubits. The basis-index bit order puts qubit 1 in the most significant bit.
class StateVector {
   public:
    static constexpr double kNormTolerance = 1e-10;

    /// Throws std::invalid_argument unless amps has 2^n entries of total squared norm 1.
    StateVector(int n, std::vector<Complex> amps);

    /// Computational basis state |index>.
    static StateVector basis(int n, uint64_t index);

    int n() const { return n_; }
    size_t dim() const { return amps_.size(); }
    std::span<const Complex> amps() const { return amps_; }
    const Complex &operator[](size_t i) const { return amps_[i]; }

    bool operator==(const StateVector &other) const = default;

   private:
    int n_;
    std::vector<Complex> amps_;
};

/// Density operator on n qubits: Hermitian within 1e-12 entrywise and of unit trace within
/// 1e-10. Positivity is checked on demand by `check_positive` (it costs an eigensolve).
class DensityMatrix {
   public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-10;
    static constexpr double kEigenvalueFloor = -1e-9;

    DensityMatrix(int n, ComplexMatrix matrix);

    static DensityMatrix pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(int n);
    /// Convex combination sum_k weights[k] |psi_k><psi_k|; weights must sum to 1.
    static DensityMatrix mixture(std::span<const double> weights, std::span<const StateVector> states);

    int n() const { return n_; }
    size_t dim() const { return matrix_.dim(); }
    const ComplexMatrix &matrix() const { return matrix_; }
    Complex operator()(size_t row, size_t col) const { return matrix_(row, col); }

    /// Throws std::domain_error if some eigenvalue is below kEigenvalueFloor.
    void check_positive() const;

   private:
    int n_;
    ComplexMatrix matrix_;
};

/// Independent standard complex Gaussians, normalised: a Haar-random pure state. n <= 14.
StateVector random_pure_state(int n, uint64_t seed);

struct EigenSystem {
    /// Ascending.
    std::vector<double> values;
    /// Column k is a unit eigenvector for values[k].
    ComplexMatrix vectors;
    int sweeps = 0;
};

constexpr int kMaxJacobiSweeps = 100;
constexpr size_t kMaxEigenDim = 256;

/// Cyclic two-sided complex Jacobi rotations. Each returned pair satisfies
/// ||M v - lambda v|| <= tol * ||M||_F. Throws std::invalid_argument for non-Hermitian input
/// (defect above 1e-10) or dim > 256, std::runtime_error after kMaxJacobiSweeps sweeps.
EigenSystem hermitian_eigensystem(const ComplexMatrix &m, double tol = 1e-10);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, double tol = 1e-10);

/// || rho - I/d ||_1 = sum_i |lambda_i - 1/d|.
double trace_distance_from_mixed(const DensityMatrix &rho, double tol = 1e-10);

/// sqrt(max(0, d ||rho||_F^2 - 1)), an upper bound on trace_distance_from_mixed.
double frobenius_trace_bound(const DensityMatrix &rho);

/// |<psi|phi>|^2.
double fidelity_phase_insensitive(const StateVector &psi, const StateVector &phi);

}  // namespace qotp

#endif
