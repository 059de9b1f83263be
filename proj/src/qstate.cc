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

#include "qotp/qstate.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qotp/random.h"

namespace qotp {

namespace {

void check_qubits(int n, int max_n) {
    if (n < 1 || n > max_n) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(max_n) + "], got " + std::to_string(n));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<Complex> data) : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim_ * dim_) {
        throw std::invalid_argument("matrix data size does not match dimension");
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix out(dim);
    for (size_t i = 0; i < dim; i++) out(i, i) = 1.0;
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    ComplexMatrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex{}) continue;
            const Complex *row = &other.data_[k * dim_];
            Complex *dst = &out.data_[i * dim_];
            for (size_t j = 0; j < dim_; j++) dst[j] += a * row[j];
        }
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (dim_ != other.dim_) throw std::invalid_argument("matrix sum dimension mismatch");
    for (size_t k = 0; k < data_.size(); k++) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (dim_ != other.dim_) throw std::invalid_argument("matrix difference dimension mismatch");
    for (size_t k = 0; k < data_.size(); k++) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(double scale) {
    for (auto &v : data_) v *= scale;
    return *this;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (size_t i = 0; i < dim_; i++) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm_squared() const {
    double total = 0;
    for (const auto &v : data_) total += std::norm(v);
    return total;
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0;
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = i; j < dim_; j++) worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
    return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("matrix comparison dimension mismatch");
    double worst = 0;
    for (size_t k = 0; k < data_.size(); k++) worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
}

StateVector::StateVector(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
    if (n < 0 || n > 30 || amps_.size() != (size_t{1} << n)) {
        throw std::invalid_argument("state vector on " + std::to_string(n) + " qubits needs 2^n amplitudes");
    }
    double norm = 0;
    for (const auto &a : amps_) norm += std::norm(a);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state vector is not normalised (squared norm " + std::to_string(norm) + ")");
    }
}

StateVector StateVector::basis(int n, uint64_t index) {
    if (n < 0 || n > 30 || index >= (uint64_t{1} << n)) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Complex> amps(size_t{1} << n);
    amps[index] = 1.0;
    return StateVector(n, std::move(amps));
}

DensityMatrix::DensityMatrix(int n, ComplexMatrix matrix) : n_(n), matrix_(std::move(matrix)) {
    if (n < 0 || n > 14 || matrix_.dim() != (size_t{1} << n)) {
        throw std::invalid_argument("density matrix on " + std::to_string(n) + " qubits must be 2^n x 2^n");
    }
    if (matrix_.hermitian_defect() > kHermitianTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1.0)) > kTraceTolerance) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    size_t d = psi.dim();
    ComplexMatrix m(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) m(i, j) = psi[i] * std::conj(psi[j]);
    }
    return DensityMatrix(psi.n(), std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    size_t d = size_t{1} << n;
    ComplexMatrix m = ComplexMatrix::identity(d);
    m *= 1.0 / double(d);
    return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights, std::span<const StateVector> states) {
    if (weights.size() != states.size() || states.empty()) {
        throw std::invalid_argument("mixture needs one weight per state");
    }
    int n = states[0].n();
    size_t d = states[0].dim();
    ComplexMatrix m(d);
    for (size_t k = 0; k < states.size(); k++) {
        if (states[k].n() != n) throw std::invalid_argument("mixture states differ in qubit count");
        if (weights[k] < 0) throw std::invalid_argument("mixture weights must be non-negative");
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) m(i, j) += weights[k] * states[k][i] * std::conj(states[k][j]);
        }
    }
    return DensityMatrix(n, std::move(m));
}

void DensityMatrix::check_positive() const {
    auto values = hermitian_eigenvalues(matrix_);
    if (values.front() < kEigenvalueFloor) {
        throw std::domain_error("density matrix has negative eigenvalue " + std::to_string(values.front()));
    }
}

StateVector random_pure_state(int n, uint64_t seed) {
    check_qubits(n, 14);
    Rng rng(seed);
    std::vector<Complex> amps(size_t{1} << n);
    double norm = 0;
    for (auto &a : amps) {
        a = rng.complex_normal();
        norm += std::norm(a);
    }
    double scale = 1.0 / std::sqrt(norm);
    for (auto &a : amps) a *= scale;
    return StateVector(n, std::move(amps));
}

EigenSystem hermitian_eigensystem(const ComplexMatrix &m, double tol) {
    size_t d = m.dim();
    if (d == 0 || d > kMaxEigenDim) {
        throw std::invalid_argument("eigensolver dimension must be in [1, 256]");
    }
    double fnorm = std::sqrt(m.frobenius_norm_squared());
    if (m.hermitian_defect() > 1e-10 * std::max(1.0, fnorm)) {
        throw std::invalid_argument("eigensolver input is not Hermitian");
    }

    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(d);
    for (size_t i = 0; i < d; i++) a(i, i) = a(i, i).real();

    // Stop once the off-diagonal mass is a hundredth of the residual budget.
    double threshold = 1e-2 * tol * fnorm;
    int sweep = 0;
    for (;; sweep++) {
        double off = 0;
        for (size_t p = 0; p < d; p++) {
            for (size_t q = p + 1; q < d; q++) off += 2 * std::norm(a(p, q));
        }
        if (std::sqrt(off) <= threshold) break;
        if (sweep == kMaxJacobiSweeps) {
            throw std::runtime_error("Jacobi eigensolver did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps");
        }
        for (size_t p = 0; p + 1 < d; p++) {
            for (size_t q = p + 1; q < d; q++) {
                Complex apq = a(p, q);
                double g = std::abs(apq);
                if (g == 0.0) continue;
                Complex phase_conj = std::conj(apq / g);
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2.0 * g);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                Complex g_qp = -s * phase_conj;
                Complex g_qq = c * phase_conj;
                // a <- a G, v <- v G.
                for (size_t k = 0; k < d; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * c + akq * g_qp;
                    a(k, q) = akp * s + akq * g_qq;
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * g_qp;
                    v(k, q) = vkp * s + vkq * g_qq;
                }
                // a <- G^dagger a.
                Complex gd_pq = std::conj(g_qp);
                Complex gd_qq = std::conj(g_qq);
                for (size_t k = 0; k < d; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = c * apk + gd_pq * aqk;
                    a(q, k) = s * apk + gd_qq * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenSystem out;
    out.sweeps = sweep;
    out.values.resize(d);
    out.vectors = ComplexMatrix(d);
    for (size_t k = 0; k < d; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (size_t i = 0; i < d; i++) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, double tol) {
    return hermitian_eigensystem(m, tol).values;
}

double trace_distance_from_mixed(const DensityMatrix &rho, double tol) {
    double inv_d = 1.0 / double(rho.dim());
    double total = 0;
    for (double lambda : hermitian_eigenvalues(rho.matrix(), tol)) total += std::abs(lambda - inv_d);
    return total;
}

double frobenius_trace_bound(const DensityMatrix &rho) {
    double v = double(rho.dim()) * rho.matrix().frobenius_norm_squared() - 1.0;
    return std::sqrt(std::max(0.0, v));
}

double fidelity_phase_insensitive(const StateVector &psi, const StateVector &phi) {
    if (psi.n() != phi.n()) {
        throw std::invalid_argument("fidelity: qubit count mismatch");
    }
    Complex overlap = 0;
    for (size_t i = 0; i < psi.dim(); i++) overlap += std::conj(psi[i]) * phi[i];
    return std::norm(overlap);
}

}  // namespace qotp
