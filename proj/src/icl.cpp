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

#include "iclq/icl.hpp"

#include <cmath>

#include "iclq/error.hpp"
#include "iclq/phase_space.hpp"

namespace iclq {

namespace {

Sector parity_sector(std::uint64_t chain_length) {
    return chain_length % 2 == 0 ? Sector::Even : Sector::Odd;
}

bool negligible(Amplitude a) { return std::abs(a) <= kTolerance; }

}  // namespace

IclDiagram::IclDiagram(std::uint64_t chain_length, Sector sector, int phase)
    : chain_length_(chain_length), sector_(sector), phase_(phase) {
    if (parity_sector(chain_length) != sector) {
        throw ValidationError("chain length " + std::to_string(chain_length) +
                              " does not match sector " + std::string(to_string(sector)));
    }
    if (phase != 1 && phase != -1) {
        throw ValidationError("diagram phase must be +1 or -1");
    }
}

std::string to_string(const IclClass& c) {
    struct Visitor {
        std::string operator()(const icl_class::Bell& b) const {
            return "bell(" + std::string(to_string(b.tag)) + ")";
        }
        std::string operator()(const icl_class::SectorConfined& s) const {
            return "sector-confined(" + std::string(to_string(s.sector)) + ")";
        }
        std::string operator()(const icl_class::Product&) const { return "product"; }
        std::string operator()(const icl_class::Generic&) const { return "generic"; }
    };
    return std::visit(Visitor{}, c);
}

IclClass classify(const StateVector& state) {
    if (state.qubit_count() != 2) {
        throw DimensionError("ICL classification needs a two-qubit state, got " +
                             std::to_string(state.qubit_count()));
    }
    for (BellTag tag : kBellTags) {
        if (equal_up_to_global_phase(state, bell_state(tag))) {
            return icl_class::Bell{tag};
        }
    }
    const bool entangled = std::abs(reshaped_determinant(state)) > kEntanglementThreshold;
    if (entangled) {
        if (negligible(state[1]) && negligible(state[2])) {
            return icl_class::SectorConfined{Sector::Even};
        }
        if (negligible(state[0]) && negligible(state[3])) {
            return icl_class::SectorConfined{Sector::Odd};
        }
        return icl_class::Generic{};
    }
    return icl_class::Product{};
}

StateVector diagram_to_state(const IclDiagram& d) {
    return bell_state(bell_tag(d.sector(), d.phase()));
}

IclDiagram extend_sigma_x(const IclDiagram& d) {
    const std::uint64_t length = d.chain_length() + 1;
    return IclDiagram(length, parity_sector(length), d.phase());
}

IclDiagram apply_sigma_z(const IclDiagram& d) {
    return IclDiagram(d.chain_length(), d.sector(), -d.phase());
}

IclDiagram state_to_diagram(BellTag tag, std::optional<std::uint64_t> chain_length_hint) {
    const Sector sector = sector_of(tag);
    std::uint64_t length = sector == Sector::Even ? 2 : 1;
    if (chain_length_hint) {
        if (parity_sector(*chain_length_hint) != sector) {
            throw ValidationError("chain length hint " + std::to_string(*chain_length_hint) +
                                  " has the wrong parity for " + std::string(to_string(tag)));
        }
        length = *chain_length_hint;
    }
    return IclDiagram(length, sector, phase_of(tag));
}

}  // namespace iclq
