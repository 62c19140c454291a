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
 * Bell-basis tags, sector labels and the two-bit classical messages that
 * name them.
 *
 * One table is shared by teleportation outcomes and superdense messages:
 *
 *     bits  tag   Pauli on qubit 1
 *     00    Φ⁺    I
 *     01    Φ⁻    σz
 *     10    Ψ⁺    σx
 *     11    Ψ⁻    σz·σx
 *
 * The high bit selects the sector (0 even, 1 odd); the low bit the
 * relative phase (0 plus, 1 minus).
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace iclq {

enum class BellTag : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellTag, 4> kBellTags = {BellTag::PhiPlus, BellTag::PhiMinus,
                                                     BellTag::PsiPlus, BellTag::PsiMinus};

/// even: span{|00>, |11>} (Φ states); odd: span{|01>, |10>} (Ψ states).
enum class Sector : std::uint8_t { Even, Odd };

/// "phi+", "phi-", "psi+", "psi-"
std::string_view to_string(BellTag tag);
/// Inverse of to_string. Throws ValidationError on anything else.
BellTag parse_bell_tag(std::string_view text);

std::string_view to_string(Sector sector);

Sector sector_of(BellTag tag);
/// +1 for Φ⁺/Ψ⁺, -1 for Φ⁻/Ψ⁻.
int phase_of(BellTag tag);
BellTag bell_tag(Sector sector, int phase);

/// Two classical bits (b1, b0).
struct Message2 {
    bool high = false;
    bool low = false;

    /// Parses exactly two characters from {0,1}, e.g. "10".
    static Message2 parse(std::string_view text);

    std::string str() const;
    unsigned value() const { return (high ? 2u : 0u) | (low ? 1u : 0u); }

    friend bool operator==(const Message2&, const Message2&) = default;
};

Message2 bits_for(BellTag tag);
BellTag tag_for(Message2 bits);

}  // namespace iclq
