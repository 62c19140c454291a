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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iclq {

enum class Suite : std::uint8_t { All, PhaseSpace, Icl, Teleport, Superdense };

/// "all", "phase-space", "icl", "teleport", "superdense"
std::string_view to_string(Suite s);
Suite parse_suite(std::string_view text);

struct Check {
    std::string suite;
    std::string name;
    double max_deviation;
    double bound;
    bool passed;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool all_passed() const;
};

/// Runs the identity checks of one suite (or every suite).
VerifyReport run_verify(Suite suite);

/// "phase-space: dft4 unitarity: PASS (max dev 0.0e+00 < 1e-12)"
std::string format_check(const Check& c);

}  // namespace iclq
