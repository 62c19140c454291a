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

#include "iclq/teleport.hpp"

#include <cmath>

#include "iclq/error.hpp"
#include "iclq/harness.hpp"
#include "iclq/phase_space.hpp"

namespace iclq {

namespace {

constexpr std::size_t kQubitU = 1;
constexpr std::size_t kQubitA = 2;
constexpr std::size_t kQubitB = 3;

std::size_t index_of(BellTag tag) { return static_cast<std::size_t>(tag); }

// Branch operators read off the Bell expansion; the Ψ⁻ one is σx·σz.
Unitary2 branch_operator(BellTag tag) {
    switch (tag) {
        case BellTag::PhiPlus:
            return gates::identity();
        case BellTag::PhiMinus:
            return gates::pauli_z();
        case BellTag::PsiPlus:
            return gates::pauli_x();
        case BellTag::PsiMinus:
            return gates::pauli_x() * gates::pauli_z();
    }
    throw ValidationError("unknown Bell tag");
}

TeleportResult execute(const InputQubit& u, std::uint64_t seed, std::optional<BellTag> forced,
                       ProtocolTrace* trace) {
    RandomSource rand(seed);
    Party alice(PartyName::Alice, {kQubitU, kQubitA});
    Party bob(PartyName::Bob, {kQubitB});
    ClassicalChannel channel;

    const StateVector pair = bell_state(BellTag::PhiPlus);
    alice.advance(PartyPhase::HoldingResource);
    bob.advance(PartyPhase::HoldingResource);
    if (trace) {
        trace->record("system", "create_resource",
                      Json{{"pair", "AB"}, {"bell", to_string(BellTag::PhiPlus)},
                           {"state", state_to_json(pair)}});
    }

    const StateVector input = u.state();
    const StateVector global = tensor(input, pair);
    alice.advance(PartyPhase::Acting);
    if (trace) {
        trace->record("alice", "prepare_input",
                      Json{{"input", state_to_json(input)}, {"state", state_to_json(global)}});
    }

    const BellMeasurement m = bell_measure(global, rand, forced);
    if (trace) {
        trace->record("alice", "bell_measure",
                      Json{{"qubits", "UA"},
                           {"outcome", to_string(m.outcome.tag)},
                           {"bits", m.outcome.bits.str()},
                           {"probability", m.probability},
                           {"state", state_to_json(m.collapsed)}});
    }

    channel.send(m.outcome.bits);
    alice.advance(PartyPhase::Sent);
    if (trace) {
        trace->record("alice", "cc_send", Json{{"bits", m.outcome.bits.str()}});
    }

    const Message2 received = channel.recv();
    bob.advance(PartyPhase::Received);
    const BellTag decoded = tag_for(received);
    const StateVector held = bob_qubit(m.collapsed, decoded);
    const StateVector corrected = apply_1q(held, correction_for(decoded), 1);
    bob.advance(PartyPhase::Done);
    if (trace) {
        trace->record("bob", "apply_correction",
                      Json{{"received", received.str()},
                           {"unitary", correction_name(decoded)},
                           {"state", state_to_json(corrected)}});
    }

    const double fidelity = std::norm(overlap(input, corrected));
    alice.advance(PartyPhase::Done);
    if (trace) {
        trace->record("system", kVerdictAction,
                      Json{{"outcome", to_string(m.outcome.tag)},
                           {"bits", m.outcome.bits.str()},
                           {"fidelity", fidelity}});
    }
    return {m.outcome.tag, m.probability, held, corrected, fidelity};
}

}  // namespace

InputQubit::InputQubit(Amplitude alpha, Amplitude beta) : alpha_(alpha), beta_(beta) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) ||
        !std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
        throw ValidationError("input amplitudes must be finite");
    }
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(n2 - 1.0) > kTolerance) {
        throw ValidationError("input qubit is not normalized (|alpha|^2 + |beta|^2 = " +
                              std::to_string(n2) + ")");
    }
}

InputQubit InputQubit::renormalized(Amplitude alpha, Amplitude beta, double slack) {
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > slack) {
        throw ValidationError("input qubit norm " + std::to_string(norm) +
                              " is too far from 1 to renormalize");
    }
    return InputQubit(alpha / norm, beta / norm);
}

InputQubit random_input(RandomSource& rand) {
    const StateVector s = random_state(rand, 1);
    return InputQubit(s[0], s[1]);
}

TeleportDecomposition decompose(const InputQubit& u) {
    const StateVector input = u.state();
    auto branch = [&](BellTag tag) {
        return TeleportBranch{tag, apply_1q(input, branch_operator(tag), 1), correction_for(tag),
                              0.5};
    };
    return {{branch(BellTag::PhiPlus), branch(BellTag::PhiMinus), branch(BellTag::PsiPlus),
             branch(BellTag::PsiMinus)}};
}

std::array<Amplitude, 8> reconstruct(const TeleportDecomposition& d) {
    std::array<Amplitude, 8> sum{};
    for (const auto& b : d.branches) {
        const StateVector term = tensor(bell_state(b.tag), b.conditional_bob);
        for (std::size_t i = 0; i < 8; ++i) {
            sum[i] += b.coefficient * term[i];
        }
    }
    return sum;
}

Unitary2 correction_for(BellTag outcome) {
    switch (outcome) {
        case BellTag::PhiPlus:
            return gates::identity();
        case BellTag::PhiMinus:
            return gates::pauli_z();
        case BellTag::PsiPlus:
            return gates::pauli_x();
        case BellTag::PsiMinus:
            return gates::pauli_z() * gates::pauli_x();
    }
    throw ValidationError("unknown Bell tag");
}

std::string correction_name(BellTag outcome) {
    switch (outcome) {
        case BellTag::PhiPlus:
            return "I";
        case BellTag::PhiMinus:
            return "sz";
        case BellTag::PsiPlus:
            return "sx";
        case BellTag::PsiMinus:
            return "sz*sx";
    }
    return "?";
}

std::array<Matrix, 4> bell_projectors_pair() {
    auto p = [](BellTag tag) {
        const StateVector b = bell_state(tag);
        return Matrix::outer(b, b);
    };
    return {p(BellTag::PhiPlus), p(BellTag::PhiMinus), p(BellTag::PsiPlus),
            p(BellTag::PsiMinus)};
}

std::array<Matrix, 4> bell_projectors_ua() {
    const auto pair = bell_projectors_pair();
    const Matrix id = Matrix::identity(2);
    return {Matrix::kron(pair[0], id), Matrix::kron(pair[1], id), Matrix::kron(pair[2], id),
            Matrix::kron(pair[3], id)};
}

const ProjectorSet& bell_projector_set_ua() {
    static const ProjectorSet set = [] {
        const auto p = bell_projectors_ua();
        return ProjectorSet({p.begin(), p.end()});
    }();
    return set;
}

const ProjectorSet& bell_projector_set_pair() {
    static const ProjectorSet set = [] {
        const auto p = bell_projectors_pair();
        return ProjectorSet({p.begin(), p.end()});
    }();
    return set;
}

BellMeasurement bell_measure(const StateVector& state, RandomSource& rand,
                             std::optional<BellTag> forced) {
    if (state.qubit_count() != 3) {
        throw DimensionError("Bell measurement of (U, A) needs a 3-qubit register, got " +
                             std::to_string(state.qubit_count()));
    }
    const ProjectorSet& projectors = bell_projector_set_ua();
    const Measurement m = forced ? project(state, projectors, index_of(*forced))
                                 : measure_projective(state, projectors, rand);
    const BellTag tag = kBellTags[m.outcome];
    return {{tag, bits_for(tag)}, m.collapsed, m.probability};
}

StateVector bob_qubit(const StateVector& collapsed, BellTag tag) {
    if (collapsed.qubit_count() != 3) {
        throw DimensionError("expected a 3-qubit register");
    }
    const StateVector bell = bell_state(tag);
    std::array<Amplitude, 2> bob{};
    for (std::size_t ua = 0; ua < 4; ++ua) {
        for (std::size_t b = 0; b < 2; ++b) {
            bob[b] += std::conj(bell[ua]) * collapsed[ua * 2 + b];
        }
    }
    return StateVector(1, bob);
}

TeleportResult teleport_once(const InputQubit& u, std::uint64_t seed,
                             std::optional<BellTag> forced) {
    return execute(u, seed, forced, nullptr);
}

ProtocolTrace run_teleportation(const InputQubit& u, std::uint64_t seed,
                                std::optional<BellTag> forced) {
    ProtocolTrace trace("teleport", seed);
    execute(u, seed, forced, &trace);
    return trace;
}

}  // namespace iclq
