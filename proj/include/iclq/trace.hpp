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
 * Protocol traces and their JSON-lines encoding.
 *
 * File layout, one JSON object per line:
 *
 *     {"protocol":"teleport","seed":7}
 *     {"step":1,"actor":"system","action":"create_resource","payload":{...}}
 *     ...
 *     {"step":6,"actor":"system","action":"verdict","payload":{...}}
 *
 * Keys keep insertion order and doubles are written in shortest
 * round-trip form, so the same trace always encodes to the same bytes.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "iclq/statevec.hpp"

namespace iclq {

using Json = nlohmann::ordered_json;

/// {"n": qubit_count, "amps": [[re, im], ...]}
Json state_to_json(const StateVector& state);

/// Accepts the object form above or a bare "amps" array. Throws
/// ValidationError on malformed input.
StateVector state_from_json(const Json& j);

struct TraceEvent {
    std::uint64_t step;
    std::string actor;
    std::string action;
    Json payload;
};

class ProtocolTrace {
   public:
    ProtocolTrace(std::string protocol, std::uint64_t seed)
        : protocol_(std::move(protocol)), seed_(seed) {}

    /// Appends an event numbered one past the previous step.
    void record(std::string_view actor, std::string_view action, Json payload);

    const std::string& protocol() const { return protocol_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<TraceEvent>& events() const { return events_; }

    /// True once the last event is a verdict.
    bool finalized() const;

    /// Payload of the final verdict event. Throws ValidationError if absent.
    const Json& verdict() const;

    friend bool operator==(const ProtocolTrace&, const ProtocolTrace&) = default;

   private:
    std::string protocol_;
    std::uint64_t seed_;
    std::vector<TraceEvent> events_;
};

inline constexpr std::string_view kVerdictAction = "verdict";

/// Encodes header plus events, newline-terminated lines.
std::string format_trace(const ProtocolTrace& t);

/// Throws ValidationError when the trace has no verdict yet.
void emit_trace(const ProtocolTrace& t, std::ostream& out);

/// As above; "-" means standard output. Throws IoError naming the path.
void emit_trace(const ProtocolTrace& t, const std::filesystem::path& sink);

/// Parses the JSON-lines form back. Throws ValidationError on bad input.
ProtocolTrace read_trace(std::istream& in);

/// Compact human-comparable verdict, e.g. "outcome=phi- fidelity=1.000000000000"
/// or "decoded=10".
std::string verdict_string(const ProtocolTrace& t);
std::string verdict_string(const Json& verdict_payload);

/// Resources a run consumed or produced, tallied from its events.
struct ResourceLedger {
    unsigned entangled_pairs_consumed = 0;
    unsigned classical_bits_sent = 0;
    unsigned qubits_sent = 0;
    unsigned qubits_reconstructed = 0;
    unsigned messages_decoded = 0;

    friend bool operator==(const ResourceLedger&, const ResourceLedger&) = default;
};

ResourceLedger tally_resources(const ProtocolTrace& t);

/**
 * Checks the per-protocol resource budget:
 *   teleport:   1 pair, 2 classical bits, 1 qubit reconstructed (fidelity 1)
 *   superdense: 1 pair, 1 qubit sent, 1 two-bit message decoded
 * Returns an empty string when the ledger balances, else a reason.
 */
std::string check_resource_ledger(const ProtocolTrace& t);

}  // namespace iclq
