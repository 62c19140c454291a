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

#include "iclq/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "iclq/error.hpp"

namespace iclq {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// i^p for p mod 4, exact.
Amplitude i_power(int p) {
    switch (((p % 4) + 4) % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

StateVector ket(std::size_t index) { return StateVector::basis(2, index); }

SuperpositionIdentity make_identity(std::string lhs, std::string rhs, const StateVector& a,
                                    const StateVector& b, double sign, const StateVector& expected) {
    std::array<Amplitude, 4> combo{};
    for (std::size_t i = 0; i < 4; ++i) {
        combo[i] = (a[i] + sign * b[i]) * kInvSqrt2;
    }
    const double dev = max_abs_diff(combo, expected.amps());
    return {std::move(lhs), std::move(rhs), combo, expected, dev, dev <= kTolerance};
}

}  // namespace

Momentum::Momentum(int n) : n_(n) {
    if (n < 0 || n > 3) {
        throw ValidationError("momentum index " + std::to_string(n) + " outside 0..3");
    }
}

double Momentum::value() const { return 2.0 * std::numbers::pi / 4.0 * n_; }

std::string to_string(HTag tag) { return "H" + std::to_string(static_cast<int>(tag)); }

Unitary4 dft4() {
    // e^{i k_n R} = e^{iπ nR/2} = i^{nR}
    Matrix m(4);
    for (int n = 0; n < 4; ++n) {
        for (int r = 0; r < 4; ++r) {
            m(n, r) = i_power(n * r) * 0.5;
        }
    }
    return Unitary4(m);
}

Unitary4 dft4_inverse() { return Unitary4(dft4().matrix().conjugate()); }

Quartet wannier_basis() { return {ket(0), ket(1), ket(2), ket(3)}; }

Quartet transform_quartet(const Quartet& in, const Unitary4& m) {
    auto row = [&](std::size_t i) {
        std::array<Amplitude, 4> out{};
        for (std::size_t j = 0; j < 4; ++j) {
            if (in[j].qubit_count() != 2) {
                throw DimensionError("quartet entries must be two-qubit states");
            }
            for (std::size_t a = 0; a < 4; ++a) {
                out[a] += m(i, j) * in[j][a];
            }
        }
        return StateVector(2, out);
    };
    return {row(0), row(1), row(2), row(3)};
}

void validate_orthonormal(const Quartet& q) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Amplitude expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(overlap(q[i], q[j]) - expected) > kTolerance) {
                throw ValidationError("quartet is not orthonormal at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
        }
    }
}

BlochQuartet wannier_to_bloch(const Quartet& basis) {
    const Quartet canonical = wannier_basis();
    for (std::size_t i = 0; i < 4; ++i) {
        if (basis[i].qubit_count() != 2 ||
            max_abs_diff(basis[i].amps(), canonical[i].amps()) > kTolerance) {
            throw ValidationError("input is not the canonical |00>,|01>,|10>,|11> basis");
        }
    }
    return {transform_quartet(basis, dft4())};
}

Quartet bloch_to_wannier(const BlochQuartet& q) {
    validate_orthonormal(q.states);
    return transform_quartet(q.states, dft4_inverse());
}

std::pair<StateVector, StateVector> hadamard_pair(const StateVector& a, const StateVector& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw DimensionError("hadamard_pair of mismatched states");
    }
    const Unitary2 h = gates::hadamard();
    std::array<Amplitude, kMaxDim> plus{};
    std::array<Amplitude, kMaxDim> minus{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        plus[i] = h(0, 0) * a[i] + h(0, 1) * b[i];
        minus[i] = h(1, 0) * a[i] + h(1, 1) * b[i];
    }
    const std::size_t n = a.qubit_count();
    return {StateVector(n, std::span<const Amplitude>(plus.data(), a.dim())),
            StateVector(n, std::span<const Amplitude>(minus.data(), a.dim()))};
}

std::pair<BellState, BellState> contract_bell(Sector sector) {
    if (sector == Sector::Even) {
        auto [plus, minus] = hadamard_pair(ket(0b00), ket(0b11));
        return {{BellTag::PhiPlus, plus}, {BellTag::PhiMinus, minus}};
    }
    // Ordered (|01>, |10>) so the minus row is (|01> - |10>)/√2.
    auto [plus, minus] = hadamard_pair(ket(0b01), ket(0b10));
    return {{BellTag::PsiPlus, plus}, {BellTag::PsiMinus, minus}};
}

StateVector bell_state(BellTag tag) {
    auto [plus, minus] = contract_bell(sector_of(tag));
    return phase_of(tag) == 1 ? plus.state : minus.state;
}

std::array<HState, 6> h_states() {
    auto [h0, h1] = hadamard_pair(ket(0b00), ket(0b10));
    auto [h2, h3] = hadamard_pair(ket(0b00), ket(0b01));
    auto [h4, h5] = hadamard_pair(ket(0b10), ket(0b11));
    return {HState{HTag::H0, h0}, HState{HTag::H1, h1}, HState{HTag::H2, h2},
            HState{HTag::H3, h3}, HState{HTag::H4, h4}, HState{HTag::H5, h5}};
}

std::vector<SuperpositionIdentity> bell_superpositions() {
    const StateVector phip = bell_state(BellTag::PhiPlus);
    const StateVector phim = bell_state(BellTag::PhiMinus);
    const StateVector psip = bell_state(BellTag::PsiPlus);
    const StateVector psim = bell_state(BellTag::PsiMinus);
    return {
        make_identity("(phi+ + phi-)/sqrt2", "|00>", phip, phim, +1.0, ket(0b00)),
        make_identity("(phi+ - phi-)/sqrt2", "|11>", phip, phim, -1.0, ket(0b11)),
        make_identity("(psi+ + psi-)/sqrt2", "|01>", psip, psim, +1.0, ket(0b01)),
        make_identity("(psi+ - psi-)/sqrt2", "|10>", psip, psim, -1.0, ket(0b10)),
    };
}

std::vector<SuperpositionIdentity> h_superpositions() {
    const auto h = h_states();
    return {
        make_identity("(H0 + H1)/sqrt2", "|00>", h[0].state, h[1].state, +1.0, ket(0b00)),
        make_identity("(H0 - H1)/sqrt2", "|10>", h[0].state, h[1].state, -1.0, ket(0b10)),
        make_identity("(H2 + H3)/sqrt2", "|00>", h[2].state, h[3].state, +1.0, ket(0b00)),
        make_identity("(H2 - H3)/sqrt2", "|01>", h[2].state, h[3].state, -1.0, ket(0b01)),
        make_identity("(H4 + H5)/sqrt2", "|10>", h[4].state, h[5].state, +1.0, ket(0b10)),
        make_identity("(H4 - H5)/sqrt2", "|11>", h[4].state, h[5].state, -1.0, ket(0b11)),
    };
}

Amplitude reshaped_determinant(const StateVector& two_qubit) {
    if (two_qubit.qubit_count() != 2) {
        throw DimensionError("reshaped determinant needs a two-qubit state");
    }
    return two_qubit[0] * two_qubit[3] - two_qubit[1] * two_qubit[2];
}

}  // namespace iclq
