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
 * Discrete phase space on the four two-qubit "site" states.
 *
 * The computational basis |R_0>..|R_3> = |00>, |01>, |10>, |11> is treated
 * as a periodic four-site lattice (|R_4> = |R_0>). Its Fourier partners
 * |B_k>, k = 0, π/2, π, 3π/2, come from the 4-point DFT. Restricting the
 * transform to the two-site sectors {|00>, |11>} and {|01>, |10>} leaves a
 * 2x2 Hadamard whose outputs are the Bell states. Pairing sites across
 * sectors instead yields six product ("H") states.
 *
 * Normalization is 1/2 = 1/sqrt(4) in both directions, so the forward
 * matrix times its conjugate is exactly I₄.
 */

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "iclq/bell.hpp"
#include "iclq/statevec.hpp"

namespace iclq {

/// Lattice momentum k_n = (2π/4)·n.
class Momentum {
   public:
    explicit Momentum(int n);
    int index() const { return n_; }
    double value() const;

   private:
    int n_;
};

/// Four two-qubit states, indexed 0..3.
using Quartet = std::array<StateVector, 4>;

/// |B_0>, |B_{π/2}>, |B_π>, |B_{3π/2}>.
struct BlochQuartet {
    Quartet states;

    const StateVector& at(Momentum k) const { return states[k.index()]; }
};

struct BellState {
    BellTag tag;
    StateVector state;
};

enum class HTag : std::uint8_t { H0, H1, H2, H3, H4, H5 };

std::string to_string(HTag tag);

struct HState {
    HTag tag;
    StateVector state;
};

/// Normalized 4-point DFT, entry (n, R) = e^{i k_n R} / 2.
Unitary4 dft4();

/// Entry-wise conjugate of dft4(); also its inverse.
Unitary4 dft4_inverse();

/// |00>, |01>, |10>, |11>.
Quartet wannier_basis();

/// out_i = Σ_j m(i, j)·in_j. No checks beyond the result being normalized.
Quartet transform_quartet(const Quartet& in, const Unitary4& m);

/// Throws ValidationError unless pairwise orthonormal within kTolerance.
void validate_orthonormal(const Quartet& q);

/// Applies dft4 rows to the canonical basis. Rejects any other input.
BlochQuartet wannier_to_bloch(const Quartet& basis);

/// Applies the conjugate transform. Rejects non-orthonormal input.
Quartet bloch_to_wannier(const BlochQuartet& q);

/// 2x2 Hadamard on an ordered pair of states: ((a+b)/√2, (a-b)/√2).
std::pair<StateVector, StateVector> hadamard_pair(const StateVector& a, const StateVector& b);

/// even → (Φ⁺, Φ⁻) from {|00>, |11>}; odd → (Ψ⁺, Ψ⁻) from {|01>, |10>}.
std::pair<BellState, BellState> contract_bell(Sector sector);

/// Canonical vector for a Bell tag, built through contract_bell.
StateVector bell_state(BellTag tag);

/**
 * The six unentangled Hadamard-pair states.
 *
 *   (H0, H1) from (|00>, |10>)
 *   (H2, H3) from (|00>, |01>)
 *   (H4, H5) from (|10>, |11>)
 *
 * Three derivations in the source construction land on the same (H0, H1);
 * only one copy is kept. The (H4, H5) pair carries the 1/√2 factor needed
 * for unit norm.
 */
std::array<HState, 6> h_states();

struct SuperpositionIdentity {
    std::string lhs;  // e.g. "(phi+ + phi-)/sqrt2"
    std::string rhs;  // e.g. "|00>"
    std::array<Amplitude, 4> combination;
    StateVector expected;
    double max_deviation;
    bool holds;
};

/// Inverse-Hadamard identities on the Bell basis (four entries).
std::vector<SuperpositionIdentity> bell_superpositions();

/// The matching identities on the H-states (six entries).
std::vector<SuperpositionIdentity> h_superpositions();

/// Entry (0,0)(1,1) - (0,1)(1,0) of the 2x2 reshaped amplitude matrix
/// M[i][j] = amp[2i + j]. Zero iff the state is a product state.
Amplitude reshaped_determinant(const StateVector& two_qubit);

}  // namespace iclq
