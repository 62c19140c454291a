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
 * Inverter-chain-link (ICL) diagrams.
 *
 * An entangled pair is drawn as two qubits joined by a chain of inverters
 * ("see-saws"), each one a σx. A singlet-type (odd sector, Ψ) pair is
 * joined by one inverter, a triplet-type (even sector, Φ) pair by two.
 * Applying σx to one qubit adds a link and flips the sector; σz flips the
 * relative phase and leaves the chain alone. Only the parity of the chain
 * affects the state; the length is kept as data.
 *
 * Code-facing output names sectors "even"/"odd"; "triplet" is only a label
 * for the even sector and says nothing about spin multiplicity.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "iclq/bell.hpp"
#include "iclq/statevec.hpp"

namespace iclq {

class IclDiagram {
   public:
    /// Throws ValidationError when chain parity and sector disagree or the
    /// phase is not ±1.
    IclDiagram(std::uint64_t chain_length, Sector sector, int phase);

    std::uint64_t chain_length() const { return chain_length_; }
    Sector sector() const { return sector_; }
    int phase() const { return phase_; }

    friend bool operator==(const IclDiagram&, const IclDiagram&) = default;

   private:
    std::uint64_t chain_length_;
    Sector sector_;
    int phase_;
};

/// Determinant threshold separating entangled from product states.
inline constexpr double kEntanglementThreshold = 1e-9;

namespace icl_class {
struct Bell {
    BellTag tag;
    friend bool operator==(const Bell&, const Bell&) = default;
};
/// Entangled, supported on one sector, but not one of the four Bell states.
struct SectorConfined {
    Sector sector;
    friend bool operator==(const SectorConfined&, const SectorConfined&) = default;
};
struct Product {
    friend bool operator==(const Product&, const Product&) = default;
};
struct Generic {
    friend bool operator==(const Generic&, const Generic&) = default;
};
}  // namespace icl_class

using IclClass = std::variant<icl_class::Bell, icl_class::SectorConfined, icl_class::Product,
                              icl_class::Generic>;

/// "bell(phi+)", "sector-confined(even)", "product", "generic"
std::string to_string(const IclClass& c);

IclClass classify(const StateVector& state);

/// Φ± for even sectors, Ψ± for odd; chain length beyond parity is ignored.
StateVector diagram_to_state(const IclDiagram& d);

/// One more inverter: length + 1, sector flips, phase kept.
IclDiagram extend_sigma_x(const IclDiagram& d);

/// Phase flips; chain untouched.
IclDiagram apply_sigma_z(const IclDiagram& d);

/// Minimal chain (2 for Φ, 1 for Ψ) unless a parity-consistent hint is given.
IclDiagram state_to_diagram(BellTag tag, std::optional<std::uint64_t> chain_length_hint = {});

}  // namespace iclq
