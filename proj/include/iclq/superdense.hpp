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
 * Superdense coding: two classical bits through one qubit of a shared Φ⁺.
 *
 * Alice applies a Pauli word to her qubit (qubit 1) and sends it; Bob
 * holds both qubits and reads the Bell tag with a projective Bell-basis
 * measurement. Encoding table (see bell.hpp):
 *
 *     00 → I      → Φ⁺
 *     01 → σz     → Φ⁻
 *     10 → σx     → Ψ⁺
 *     11 → σz·σx  → Ψ⁻
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "iclq/bell.hpp"
#include "iclq/statevec.hpp"
#include "iclq/trace.hpp"

namespace iclq {

struct Encoding {
    Message2 message;
    std::string unitary_name;
    Unitary2 unitary;
    BellTag result;
};

/// Indexed by Message2::value().
std::array<Encoding, 4> encoding_table();

/// Throws ResourceError unless `shared` is Φ⁺ within kTolerance.
StateVector encode(Message2 m, const StateVector& shared);
StateVector encode(Message2 m);

/// Throws DecodeError unless the state is a Bell state up to global phase.
Message2 decode(const StateVector& state);

/// Five events ending in the decoded message. The Bell measurement is
/// certain and consumes no randomness; `seed` only labels the trace.
ProtocolTrace run_superdense(Message2 m, std::uint64_t seed = 0);

}  // namespace iclq
