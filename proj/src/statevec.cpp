// Copyright 2026 The iclq Authors
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

#include "iclq/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "iclq/error.hpp"

namespace iclq {

namespace {

double norm_squared(std::span<const Amplitude> v) {
    double total = 0.0;
    for (const auto& a : v) {
        total += std::norm(a);
    }
    return total;
}

void check_qubit_count(std::size_t qubit_count) {
    if (qubit_count < 1 || qubit_count > kMaxQubits) {
        throw DimensionError("qubit count " + std::to_string(qubit_count) +
                             " outside 1.." + std::to_string(kMaxQubits));
    }
}

void check_length(std::size_t qubit_count, std::size_t length) {
    check_qubit_count(qubit_count);
    if (length != (std::size_t{1} << qubit_count)) {
        throw DimensionError("expected " + std::to_string(std::size_t{1} << qubit_count) +
                             " amplitudes for " + std::to_string(qubit_count) +
                             " qubits, got " + std::to_string(length));
    }
}

void check_finite(std::span<const Amplitude> v) {
    for (const auto& a : v) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("amplitude is not finite");
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::size_t qubit_count, std::span<const Amplitude> amps) {
    check_length(qubit_count, amps.size());
    check_finite(amps);
    const double n2 = norm_squared(amps);
    if (std::abs(n2 - 1.0) > kTolerance) {
        throw ValidationError("state is not normalized (norm^2 = " + std::to_string(n2) + ")");
    }
    qubit_count_ = qubit_count;
    std::copy(amps.begin(), amps.end(), amps_.begin());
}

StateVector StateVector::basis(std::size_t qubit_count, std::size_t index) {
    check_qubit_count(qubit_count);
    if (index >= (std::size_t{1} << qubit_count)) {
        throw IndexError("basis index " + std::to_string(index) + " out of range");
    }
    StateVector s;
    s.qubit_count_ = qubit_count;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::normalized(std::size_t qubit_count, std::span<const Amplitude> amps) {
    check_length(qubit_count, amps.size());
    check_finite(amps);
    const double n = std::sqrt(norm_squared(amps));
    if (n <= kTolerance) {
        throw ValidationError("cannot normalize a zero vector");
    }
    StateVector s;
    s.qubit_count_ = qubit_count;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        s.amps_[i] = amps[i] / n;
    }
    return s;
}

StateVector StateVector::with_phase(Amplitude phase) const {
    if (std::abs(std::abs(phase) - 1.0) > kTolerance) {
        throw ValidationError("global phase must have unit modulus");
    }
    StateVector s = *this;
    for (std::size_t i = 0; i < dim(); ++i) {
        s.amps_[i] *= phase;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw DimensionError("matrix dimension " + std::to_string(dim) + " outside 1.." +
                             std::to_string(kMaxDim));
    }
}

Matrix Matrix::from_rows(std::initializer_list<Amplitude> entries) {
    std::size_t dim = 0;
    while (dim * dim < entries.size()) {
        ++dim;
    }
    if (dim * dim != entries.size()) {
        throw DimensionError("matrix entry count " + std::to_string(entries.size()) +
                             " is not a perfect square");
    }
    Matrix m(dim);
    std::copy(entries.begin(), entries.end(), m.m_.begin());
    return m;
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::outer(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("outer product of mismatched states");
    }
    Matrix m(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < b.dim(); ++c) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.dim() * b.dim());
    for (std::size_t ar = 0; ar < a.dim(); ++ar) {
        for (std::size_t ac = 0; ac < a.dim(); ++ac) {
            for (std::size_t br = 0; br < b.dim(); ++br) {
                for (std::size_t bc = 0; bc < b.dim(); ++bc) {
                    m(ar * b.dim() + br, ac * b.dim() + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) {
        m.m_[i] = std::conj(m_[i]);
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw DimensionError("matrix product of mismatched dimensions");
    }
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Amplitude lhs = (*this)(r, k);
            for (std::size_t c = 0; c < dim_; ++c) {
                m(r, c) += lhs * rhs(k, c);
            }
        }
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw DimensionError("matrix sum of mismatched dimensions");
    }
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) {
        m.m_[i] = m_[i] + rhs.m_[i];
    }
    return m;
}

Matrix Matrix::operator*(Amplitude s) const {
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) {
        m.m_[i] = m_[i] * s;
    }
    return m;
}

std::vector<Amplitude> Matrix::apply(std::span<const Amplitude> v) const {
    if (v.size() != dim_) {
        throw DimensionError("matrix of dimension " + std::to_string(dim_) +
                             " applied to vector of length " + std::to_string(v.size()));
    }
    std::vector<Amplitude> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

bool Matrix::is_unitary(double tol) const {
    return max_abs_diff(*this * adjoint(), identity(dim_)) <= tol;
}

bool Matrix::is_hermitian(double tol) const {
    return max_abs_diff(*this, adjoint()) <= tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("comparing matrices of different dimension");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw DimensionError("comparing vectors of different length");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Unitaries

Unitary2::Unitary2(Matrix m) : m_(std::move(m)) {
    if (m_.dim() != 2) {
        throw DimensionError("Unitary2 needs a 2x2 matrix");
    }
    if (!m_.is_unitary()) {
        throw ValidationError("matrix is not unitary");
    }
}

Unitary4::Unitary4(Matrix m) : m_(std::move(m)) {
    if (m_.dim() != 4) {
        throw DimensionError("Unitary4 needs a 4x4 matrix");
    }
    if (!m_.is_unitary()) {
        throw ValidationError("matrix is not unitary");
    }
}

namespace gates {

Unitary2 identity() { return Unitary2(Matrix::identity(2)); }

Unitary2 pauli_x() { return Unitary2(Matrix::from_rows({0, 1, 1, 0})); }

Unitary2 pauli_z() { return Unitary2(Matrix::from_rows({1, 0, 0, -1})); }

Unitary2 hadamard() {
    const double h = std::numbers::sqrt2 / 2.0;
    return Unitary2(Matrix::from_rows({h, h, h, -h}));
}

}  // namespace gates

// ---------------------------------------------------------------------------
// Operations

StateVector tensor(const StateVector& a, const StateVector& b) {
    const std::size_t n = a.qubit_count() + b.qubit_count();
    if (n > kMaxQubits) {
        throw DimensionError("tensor product of " + std::to_string(a.qubit_count()) + " and " +
                             std::to_string(b.qubit_count()) + " qubits exceeds " +
                             std::to_string(kMaxQubits));
    }
    std::array<Amplitude, kMaxDim> out{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return StateVector(n, std::span<const Amplitude>(out.data(), std::size_t{1} << n));
}

StateVector apply_1q(const StateVector& state, const Unitary2& u, std::size_t target) {
    if (target < 1 || target > state.qubit_count()) {
        throw IndexError("target qubit " + std::to_string(target) + " outside 1.." +
                         std::to_string(state.qubit_count()));
    }
    // Qubit 1 is the most significant bit.
    const std::size_t bit = std::size_t{1} << (state.qubit_count() - target);
    std::array<Amplitude, kMaxDim> out{};
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i & bit) {
            continue;
        }
        const Amplitude a0 = state[i];
        const Amplitude a1 = state[i | bit];
        out[i] = u(0, 0) * a0 + u(0, 1) * a1;
        out[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return StateVector(state.qubit_count(), std::span<const Amplitude>(out.data(), state.dim()));
}

StateVector apply(const StateVector& state, const Unitary4& u) {
    if (state.qubit_count() != 2) {
        throw DimensionError("Unitary4 needs a two-qubit state");
    }
    const auto out = u.matrix().apply(state.amps());
    return StateVector(2, out);
}

Amplitude overlap(const StateVector& a, const StateVector& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw DimensionError("overlap of " + std::to_string(a.qubit_count()) + "- and " +
                             std::to_string(b.qubit_count()) + "-qubit states");
    }
    Amplitude total = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b) {
    return std::abs(std::abs(overlap(a, b)) - 1.0) <= kTolerance;
}

void validate_projectors(std::span<const Matrix> projectors, std::size_t dim) {
    if (projectors.empty()) {
        throw ValidationError("no projectors given");
    }
    Matrix sum(dim);
    for (std::size_t k = 0; k < projectors.size(); ++k) {
        const Matrix& p = projectors[k];
        if (p.dim() != dim) {
            throw DimensionError("projector " + std::to_string(k) + " has dimension " +
                                 std::to_string(p.dim()) + ", register has " +
                                 std::to_string(dim));
        }
        if (!p.is_hermitian() || max_abs_diff(p * p, p) > kTolerance) {
            throw ValidationError("operator " + std::to_string(k) + " is not a projector");
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (max_abs_diff(projectors[j] * p, Matrix(dim)) > kTolerance) {
                throw ValidationError("projectors " + std::to_string(j) + " and " +
                                      std::to_string(k) + " are not orthogonal");
            }
        }
        sum = sum + p;
    }
    if (max_abs_diff(sum, Matrix::identity(dim)) > kTolerance) {
        throw ValidationError("projectors do not sum to the identity");
    }
}

ProjectorSet::ProjectorSet(std::vector<Matrix> projectors) : projectors_(std::move(projectors)) {
    if (projectors_.empty()) {
        throw ValidationError("no projectors given");
    }
    validate_projectors(projectors_, projectors_.front().dim());
}

namespace {

void check_register(const StateVector& state, const ProjectorSet& set) {
    if (state.dim() != set.dim()) {
        throw DimensionError("projectors act on dimension " + std::to_string(set.dim()) +
                             ", register has " + std::to_string(state.dim()));
    }
}

ProjectorSet checked_set(std::span<const Matrix> projectors, const StateVector& state) {
    if (!projectors.empty() && projectors.front().dim() != state.dim()) {
        validate_projectors(projectors, state.dim());  // reports the mismatch
    }
    return ProjectorSet(std::vector<Matrix>(projectors.begin(), projectors.end()));
}

}  // namespace

std::vector<double> outcome_probabilities(const StateVector& state, const ProjectorSet& set) {
    check_register(state, set);
    std::vector<double> probs;
    probs.reserve(set.size());
    for (const auto& p : set.projectors()) {
        probs.push_back(norm_squared(p.apply(state.amps())));
    }
    return probs;
}

std::vector<double> outcome_probabilities(const StateVector& state,
                                          std::span<const Matrix> projectors) {
    return outcome_probabilities(state, checked_set(projectors, state));
}

Measurement project(const StateVector& state, const ProjectorSet& set, std::size_t outcome) {
    check_register(state, set);
    if (outcome >= set.size()) {
        throw IndexError("outcome " + std::to_string(outcome) + " out of range");
    }
    const auto branch = set.projectors()[outcome].apply(state.amps());
    const double p = norm_squared(branch);
    if (p <= kTolerance) {
        throw ValidationError("outcome " + std::to_string(outcome) + " has zero probability");
    }
    return {outcome, StateVector::normalized(state.qubit_count(), branch), p};
}

Measurement project(const StateVector& state, std::span<const Matrix> projectors,
                    std::size_t outcome) {
    return project(state, checked_set(projectors, state), outcome);
}

Measurement measure_projective(const StateVector& state, const ProjectorSet& set,
                               RandomSource& rand) {
    const auto probs = outcome_probabilities(state, set);
    std::size_t chosen = probs.size();
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (probs[k] >= 1.0 - kTolerance) {
            chosen = k;
            break;
        }
    }
    if (chosen == probs.size()) {
        const double u = rand.uniform();
        double cumulative = 0.0;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            cumulative += probs[k];
            if (u < cumulative) {
                chosen = k;
                break;
            }
        }
        // Rounding can leave u above the final cumulative sum.
        for (std::size_t k = probs.size(); chosen == probs.size() && k-- > 0;) {
            if (probs[k] > kTolerance) {
                chosen = k;
            }
        }
    }
    const auto branch = set.projectors()[chosen].apply(state.amps());
    return {chosen, StateVector::normalized(state.qubit_count(), branch), probs[chosen]};
}

Measurement measure_projective(const StateVector& state, std::span<const Matrix> projectors,
                               RandomSource& rand) {
    return measure_projective(state, checked_set(projectors, state), rand);
}

std::array<double, 2> qubit_probabilities(const StateVector& state, std::size_t target) {
    if (target < 1 || target > state.qubit_count()) {
        throw IndexError("target qubit " + std::to_string(target) + " outside 1.." +
                         std::to_string(state.qubit_count()));
    }
    const std::size_t bit = std::size_t{1} << (state.qubit_count() - target);
    std::array<double, 2> probs{};
    for (std::size_t i = 0; i < state.dim(); ++i) {
        probs[(i & bit) ? 1 : 0] += std::norm(state[i]);
    }
    return probs;
}

StateVector random_state(RandomSource& rand, std::size_t qubit_count) {
    check_qubit_count(qubit_count);
    std::array<Amplitude, kMaxDim> amps{};
    const std::size_t dim = std::size_t{1} << qubit_count;
    for (std::size_t i = 0; i < dim; ++i) {
        const double re = rand.normal();
        const double im = rand.normal();
        amps[i] = {re, im};
    }
    return StateVector::normalized(qubit_count, std::span<const Amplitude>(amps.data(), dim));
}

double RandomSource::normal() {
    // 1 - uniform() lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace iclq
