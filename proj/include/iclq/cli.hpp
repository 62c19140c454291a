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
 * Command-line front end.
 *
 *   iclq teleport   --alpha RE,IM --beta RE,IM [--seed N]
 *                   [--force-outcome phi+|phi-|psi+|psi-] [--trace PATH] [--json]
 *   iclq superdense --message BB [--seed N] [--trace PATH] [--json]
 *   iclq bell --list [--json]
 *   iclq icl --state JSON [--json]
 *   iclq verify [all|phase-space|icl|teleport|superdense] [--json]
 *   iclq wire --role alice|bob --endpoint HOST:PORT [--protocol teleport|superdense]
 *             [teleport/superdense flags] [--json]
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error,
 * 3 I/O or transport error. When --seed is absent the ICL_QPROTO_SEED
 * environment variable is used.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "iclq/error.hpp"
#include "iclq/statevec.hpp"
#include "iclq/teleport.hpp"
#include "iclq/verify.hpp"
#include "iclq/wire.hpp"

namespace iclq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// (α, β) whose norm is off by more than this is rejected rather than
/// renormalized.
inline constexpr double kNormSlack = 1e-6;

class UsageError : public Error {
   public:
    using Error::Error;
};

struct TeleportCommand {
    InputQubit input;
    std::uint64_t seed;
    std::optional<BellTag> forced;
    std::optional<std::filesystem::path> trace;
    bool json = false;
};

struct SuperdenseCommand {
    Message2 message;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> trace;
    bool json = false;
};

struct BellCommand {
    bool json = false;
};

struct IclCommand {
    StateVector state;
    bool json = false;
};

struct VerifyCommand {
    Suite suite = Suite::All;
    bool json = false;
};

struct WireCommand {
    wire::Role role;
    wire::Endpoint endpoint;
    std::optional<wire::Request> request;
    bool json = false;
};

struct HelpCommand {
    std::string text;
};

using Command = std::variant<TeleportCommand, SuperdenseCommand, BellCommand, IclCommand,
                             VerifyCommand, WireCommand, HelpCommand>;

/// Seed fallback (the ICL_QPROTO_SEED variable); injectable for tests.
struct Environment {
    std::optional<std::string> seed;

    static Environment from_process();
};

/// "re,im" → complex. Throws UsageError naming `flag`.
Amplitude parse_complex(std::string_view text, std::string_view flag);

/// argv without the program name. Returns a validated command or throws
/// UsageError whose message names the offending flag.
Command parse(std::span<const std::string> args, const Environment& env);

/// Executes a command; returns the process exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse + run with error-to-exit-code mapping.
int main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace iclq::cli
