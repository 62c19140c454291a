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

/**
 * @file
 * Small-register state vectors (1 to 3 qubits) and the dense complex
 * matrices that act on them.
 *
 * Basis ordering: qubit 1 is the most significant bit. For two qubits,
 * index 0 is |0>|0>, 1 is |0>|1>, 2 is |1>|0>, 3 is |1>|1>.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "iclq/random.hpp"

namespace iclq {

using Amplitude = std::complex<double>;

/// Absolute per-component tolerance for every equality check.
inline constexpr double kTolerance = 1e-9;

inline constexpr std::size_t kMaxQubits = 3;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;

class StateVector {
   public:
    /// Validates finiteness and unit norm (within kTolerance).
    StateVector(std::size_t qubit_count, std::span<const Amplitude> amps);
    StateVector(std::size_t qubit_count, std::initializer_list<Amplitude> amps)
        : StateVector(qubit_count, std::span<const Amplitude>(amps.begin(), amps.size())) {}

    /// Computational basis state |index> on qubit_count qubits.
    static StateVector basis(std::size_t qubit_count, std::size_t index);

    /// Rescales amps to unit norm. Throws ValidationError on a zero vector.
    static StateVector normalized(std::size_t qubit_count, std::span<const Amplitude> amps);

    std::size_t qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return std::size_t{1} << qubit_count_; }
    std::span<const Amplitude> amps() const { return {amps_.data(), dim()}; }
    Amplitude operator[](std::size_t i) const { return amps_[i]; }

    /// Same state multiplied by a unit-modulus phase.
    StateVector with_phase(Amplitude phase) const;

   private:
    StateVector() = default;

    std::size_t qubit_count_ = 0;
    std::array<Amplitude, kMaxDim> amps_{};
};

/// Dense square matrix of dimension 1..8, row-major.
class Matrix {
   public:
    /// Zero matrix.
    explicit Matrix(std::size_t dim);

    /// Row-major entries; entries.size() must be a perfect square <= 64.
    static Matrix from_rows(std::initializer_list<Amplitude> entries);

    static Matrix identity(std::size_t dim);
    /// |a><b|
    static Matrix outer(const StateVector& a, const StateVector& b);
    static Matrix kron(const Matrix& a, const Matrix& b);

    std::size_t dim() const { return dim_; }
    Amplitude& operator()(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
    Amplitude operator()(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }

    Matrix adjoint() const;
    Matrix conjugate() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator*(Amplitude s) const;

    /// M·v for a raw amplitude vector of length dim().
    std::vector<Amplitude> apply(std::span<const Amplitude> v) const;

    bool is_unitary(double tol = kTolerance) const;
    bool is_hermitian(double tol = kTolerance) const;

   private:
    std::size_t dim_;
    std::array<Amplitude, kMaxDim * kMaxDim> m_{};
};

/// Largest entrywise |a - b|. Throws DimensionError on a shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b);

/// A 2x2 unitary, checked on construction.
class Unitary2 {
   public:
    explicit Unitary2(Matrix m);
    const Matrix& matrix() const { return m_; }
    Amplitude operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    Unitary2 operator*(const Unitary2& rhs) const { return Unitary2(m_ * rhs.m_); }
    Unitary2 adjoint() const { return Unitary2(m_.adjoint()); }

   private:
    Matrix m_;
};

/// A 4x4 unitary, checked on construction.
class Unitary4 {
   public:
    explicit Unitary4(Matrix m);
    const Matrix& matrix() const { return m_; }
    Amplitude operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    Unitary4 adjoint() const { return Unitary4(m_.adjoint()); }

   private:
    Matrix m_;
};

namespace gates {
Unitary2 identity();
Unitary2 pauli_x();
Unitary2 pauli_z();
Unitary2 hadamard();
}  // namespace gates

/// a ⊗ b with a's qubits in the high-order positions.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Applies u to the 1-based qubit `target`.
StateVector apply_1q(const StateVector& state, const Unitary2& u, std::size_t target);

/// Applies a full-register 4x4 unitary to a two-qubit state.
StateVector apply(const StateVector& state, const Unitary4& u);

/// <a|b>
Amplitude overlap(const StateVector& a, const StateVector& b);

/// |<a|b>| == 1 within kTolerance.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b);

struct Measurement {
    std::size_t outcome;
    StateVector collapsed;
    double probability;
};

/// Throws ValidationError unless the projectors are Hermitian, idempotent,
/// mutually orthogonal and sum to the identity on state's register.
void validate_projectors(std::span<const Matrix> projectors, std::size_t dim);

/// A projector family validated once, for measurements repeated many times.
class ProjectorSet {
   public:
    explicit ProjectorSet(std::vector<Matrix> projectors);

    std::span<const Matrix> projectors() const { return projectors_; }
    std::size_t size() const { return projectors_.size(); }
    std::size_t dim() const { return projectors_.front().dim(); }

   private:
    std::vector<Matrix> projectors_;
};

/// Exact Born probabilities ‖P_k ψ‖² for a validated resolution.
std::vector<double> outcome_probabilities(const StateVector& state,
                                          std::span<const Matrix> projectors);
std::vector<double> outcome_probabilities(const StateVector& state, const ProjectorSet& set);

/// Collapses onto a single projector. Throws ValidationError when the
/// branch has zero probability.
Measurement project(const StateVector& state, std::span<const Matrix> projectors,
                    std::size_t outcome);
Measurement project(const StateVector& state, const ProjectorSet& set, std::size_t outcome);

/**
 * Samples an outcome with probability ‖P_k ψ‖² and returns the
 * renormalized post-measurement state.
 *
 * One uniform() draw u selects the first k with u < p_0 + ... + p_k. When
 * one outcome already has probability 1 (within kTolerance) no randomness
 * is consumed.
 */
Measurement measure_projective(const StateVector& state, std::span<const Matrix> projectors,
                               RandomSource& rand);
Measurement measure_projective(const StateVector& state, const ProjectorSet& set,
                               RandomSource& rand);

/// Computational-basis probabilities {p0, p1} of one 1-based qubit.
std::array<double, 2> qubit_probabilities(const StateVector& state, std::size_t target);

/// Haar-distributed state (Gaussian amplitudes, normalized).
StateVector random_state(RandomSource& rand, std::size_t qubit_count);

}  // namespace iclq
