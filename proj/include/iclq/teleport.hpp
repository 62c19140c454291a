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
 * Quantum teleportation over a shared Φ⁺ pair.
 *
 * Register layout: qubit 1 = U (the input, Alice), qubit 2 = A (Alice's
 * half of the pair), qubit 3 = B (Bob's half). Expanding U ⊗ Φ⁺_AB in
 * the Bell basis of (U, A) gives four equal-weight branches
 *
 *     U ⊗ Φ⁺ = ½ Φ⁺ (α,β) + ½ Φ⁻ σz(α,β) + ½ Ψ⁺ σx(α,β) + ½ Ψ⁻ (σx·σz)(α,β)
 *
 * and Bob undoes the branch with I, σz, σx or σz·σx once he has the two
 * outcome bits.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "iclq/bell.hpp"
#include "iclq/statevec.hpp"
#include "iclq/trace.hpp"

namespace iclq {

/// Normalized single-qubit input α|0> + β|1>.
class InputQubit {
   public:
    /// Throws ValidationError unless |α|² + |β|² = 1 within kTolerance.
    InputQubit(Amplitude alpha, Amplitude beta);

    /// Rescales (α, β) when the norm is within `slack` of 1; otherwise
    /// throws ValidationError.
    static InputQubit renormalized(Amplitude alpha, Amplitude beta, double slack);

    Amplitude alpha() const { return alpha_; }
    Amplitude beta() const { return beta_; }
    StateVector state() const { return StateVector(1, {alpha_, beta_}); }

   private:
    Amplitude alpha_;
    Amplitude beta_;
};

InputQubit random_input(RandomSource& rand);

struct TeleportBranch {
    BellTag tag;
    StateVector conditional_bob;
    Unitary2 correction;
    double coefficient;
};

/// Branches in Φ⁺, Φ⁻, Ψ⁺, Ψ⁻ order.
struct TeleportDecomposition {
    std::array<TeleportBranch, 4> branches;
};

TeleportDecomposition decompose(const InputQubit& u);

/// Σ coefficient · |bell> ⊗ conditional_bob, as raw amplitudes.
std::array<Amplitude, 8> reconstruct(const TeleportDecomposition& d);

/// I, σz, σx, σz·σx for Φ⁺, Φ⁻, Ψ⁺, Ψ⁻.
Unitary2 correction_for(BellTag outcome);

/// "I", "sz", "sx", "sz*sx"
std::string correction_name(BellTag outcome);

/// |bell_k><bell_k| ⊗ I₂ on the 3-qubit register, Φ⁺..Ψ⁻ order.
std::array<Matrix, 4> bell_projectors_ua();

/// |bell_k><bell_k| on a 2-qubit register, Φ⁺..Ψ⁻ order.
std::array<Matrix, 4> bell_projectors_pair();

/// Validated, shared copies of the two families above.
const ProjectorSet& bell_projector_set_ua();
const ProjectorSet& bell_projector_set_pair();

struct BellOutcome {
    BellTag tag;
    Message2 bits;
};

struct BellMeasurement {
    BellOutcome outcome;
    StateVector collapsed;
    double probability;
};

/**
 * Bell measurement of qubits (U, A). `forced` pins the branch for
 * deterministic tests and consumes no randomness; otherwise one uniform()
 * draw from `rand` picks it.
 */
BellMeasurement bell_measure(const StateVector& state, RandomSource& rand,
                             std::optional<BellTag> forced = {});

/// Bob's qubit after a (U, A) measurement collapsed onto `tag`.
StateVector bob_qubit(const StateVector& collapsed, BellTag tag);

struct TeleportResult {
    BellTag outcome;
    double probability;
    StateVector bob_received;
    StateVector bob_corrected;
    double fidelity;
};

/// One run without trace bookkeeping.
TeleportResult teleport_once(const InputQubit& u, std::uint64_t seed,
                             std::optional<BellTag> forced = {});

/// One traced run: six events ending in a fidelity verdict.
ProtocolTrace run_teleportation(const InputQubit& u, std::uint64_t seed,
                                std::optional<BellTag> forced = {});

}  // namespace iclq
