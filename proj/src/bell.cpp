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

#include "iclq/bell.hpp"

#include "iclq/error.hpp"

namespace iclq {

std::string_view to_string(BellTag tag) {
    switch (tag) {
        case BellTag::PhiPlus:
            return "phi+";
        case BellTag::PhiMinus:
            return "phi-";
        case BellTag::PsiPlus:
            return "psi+";
        case BellTag::PsiMinus:
            return "psi-";
    }
    return "?";
}

BellTag parse_bell_tag(std::string_view text) {
    for (BellTag tag : kBellTags) {
        if (text == to_string(tag)) {
            return tag;
        }
    }
    throw ValidationError("unknown Bell state '" + std::string(text) +
                          "' (expected phi+, phi-, psi+ or psi-)");
}

std::string_view to_string(Sector sector) { return sector == Sector::Even ? "even" : "odd"; }

Sector sector_of(BellTag tag) {
    return (tag == BellTag::PhiPlus || tag == BellTag::PhiMinus) ? Sector::Even : Sector::Odd;
}

int phase_of(BellTag tag) { return (tag == BellTag::PhiPlus || tag == BellTag::PsiPlus) ? 1 : -1; }

BellTag bell_tag(Sector sector, int phase) {
    if (phase != 1 && phase != -1) {
        throw ValidationError("phase must be +1 or -1");
    }
    if (sector == Sector::Even) {
        return phase == 1 ? BellTag::PhiPlus : BellTag::PhiMinus;
    }
    return phase == 1 ? BellTag::PsiPlus : BellTag::PsiMinus;
}

Message2 Message2::parse(std::string_view text) {
    auto bit = [](char c) { return c == '0' || c == '1'; };
    if (text.size() != 2 || !bit(text[0]) || !bit(text[1])) {
        throw ValidationError("message must be two bits like \"10\", got '" + std::string(text) +
                              "'");
    }
    return {text[0] == '1', text[1] == '1'};
}

std::string Message2::str() const { return {high ? '1' : '0', low ? '1' : '0'}; }

Message2 bits_for(BellTag tag) {
    return {sector_of(tag) == Sector::Odd, phase_of(tag) == -1};
}

BellTag tag_for(Message2 bits) {
    return bell_tag(bits.high ? Sector::Odd : Sector::Even, bits.low ? -1 : 1);
}

}  // namespace iclq
