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

#include "iclq/superdense.hpp"

#include "iclq/error.hpp"
#include "iclq/harness.hpp"
#include "iclq/phase_space.hpp"
#include "iclq/teleport.hpp"

namespace iclq {

namespace {

constexpr std::size_t kQubitA = 1;
constexpr std::size_t kQubitB = 2;

}  // namespace

std::array<Encoding, 4> encoding_table() {
    auto row = [](const char* bits, const char* name, Unitary2 u) {
        const Message2 m = Message2::parse(bits);
        return Encoding{m, name, std::move(u), tag_for(m)};
    };
    return {row("00", "I", gates::identity()), row("01", "sz", gates::pauli_z()),
            row("10", "sx", gates::pauli_x()),
            row("11", "sz*sx", gates::pauli_z() * gates::pauli_x())};
}

StateVector encode(Message2 m, const StateVector& shared) {
    if (shared.qubit_count() != 2 ||
        max_abs_diff(shared.amps(), bell_state(BellTag::PhiPlus).amps()) > kTolerance) {
        throw ResourceError("superdense encoding needs the shared pair in phi+");
    }
    return apply_1q(shared, encoding_table()[m.value()].unitary, kQubitA);
}

StateVector encode(Message2 m) { return encode(m, bell_state(BellTag::PhiPlus)); }

Message2 decode(const StateVector& state) {
    if (state.qubit_count() != 2) {
        throw DecodeError("decode needs a two-qubit state");
    }
    const ProjectorSet& projectors = bell_projector_set_pair();
    const auto probs = outcome_probabilities(state, projectors);
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (probs[k] >= 1.0 - kTolerance) {
            return bits_for(kBellTags[k]);
        }
    }
    throw DecodeError("state is not a Bell state; measurement outcome is not certain");
}

ProtocolTrace run_superdense(Message2 m, std::uint64_t seed) {
    ProtocolTrace trace("superdense", seed);
    RandomSource rand(seed);
    Party alice(PartyName::Alice, {kQubitA});
    Party bob(PartyName::Bob, {kQubitB});

    const StateVector pair = bell_state(BellTag::PhiPlus);
    alice.advance(PartyPhase::HoldingResource);
    bob.advance(PartyPhase::HoldingResource);
    trace.record("system", "create_resource",
                 Json{{"pair", "AB"}, {"bell", to_string(BellTag::PhiPlus)},
                      {"state", state_to_json(pair)}});

    const Encoding enc = encoding_table()[m.value()];
    const StateVector encoded = encode(m, pair);
    alice.advance(PartyPhase::Acting);
    trace.record("alice", "encode",
                 Json{{"message", m.str()},
                      {"unitary", enc.unitary_name},
                      {"state", state_to_json(encoded)}});

    alice.hand_over(kQubitA, bob);
    alice.advance(PartyPhase::Sent);
    trace.record("alice", "qubit_send", Json{{"qubit", "A"}});

    bob.advance(PartyPhase::Received);
    const ProjectorSet& projectors = bell_projector_set_pair();
    const Measurement meas = measure_projective(encoded, projectors, rand);
    const BellTag tag = kBellTags[meas.outcome];
    trace.record("bob", "bell_measure",
                 Json{{"outcome", to_string(tag)},
                      {"probability", meas.probability},
                      {"random_draws", rand.draws()}});

    const Message2 decoded = bits_for(tag);
    bob.advance(PartyPhase::Done);
    trace.record("bob", kVerdictAction, Json{{"decoded", decoded.str()}});
    return trace;
}

}  // namespace iclq
