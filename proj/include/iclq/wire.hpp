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
 * Two-process demo over a TCP line protocol.
 *
 * Bob listens, Alice connects. Both sides simulate the full register from
 * the shared parameters; only classical information crosses the socket.
 * Every message is one ASCII line:
 *
 *     A → B   HELLO v1 <seed>
 *     B → A   HELLO v1 <seed>            (or "ERR <reason>" and close)
 *     A → B   PROTO teleport <a_re> <a_im> <b_re> <b_im> [phi+|phi-|psi+|psi-]
 *             PROTO superdense
 *     A → B   CC <b1><b0>                (teleport: Bell outcome bits)
 *             QUBIT-SENT <unitary>       (superdense: marks the qubit in
 *                                         transit and names the encoding
 *                                         gate so Bob can mirror it)
 *     B → A   DONE <verdict>
 *     A → B   DONE <verdict>
 *
 * Verdicts use verdict_string() formatting, e.g. "outcome=psi+
 * fidelity=1.000000000000" or "decoded=10". Amplitudes are written with
 * 17 significant digits so both sides see identical doubles.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "iclq/bell.hpp"
#include "iclq/teleport.hpp"

namespace iclq::wire {

inline constexpr std::string_view kVersion = "v1";

struct Endpoint {
    std::string host;
    std::uint16_t port = 0;

    /// "host:port". Throws ValidationError on malformed input.
    static Endpoint parse(std::string_view text);
};

/// Connected stream socket with newline framing. Move-only.
class LineSocket {
   public:
    explicit LineSocket(int fd);
    LineSocket(LineSocket&& other) noexcept;
    LineSocket& operator=(LineSocket&& other) noexcept;
    LineSocket(const LineSocket&) = delete;
    LineSocket& operator=(const LineSocket&) = delete;
    ~LineSocket();

    /// Writes `line` plus '\n'. Throws TransportError.
    void send_line(std::string_view line);

    /// Reads up to the next '\n' (stripped). Throws TransportError on EOF,
    /// timeout or a line over 4 KiB.
    std::string recv_line();

    /// Applies to every later recv_line().
    void set_timeout(std::chrono::milliseconds timeout);

    static LineSocket connect(const Endpoint& to, std::chrono::milliseconds retry_for);

   private:
    int fd_ = -1;
    std::string buffer_;
};

/// Bound, listening socket. Port 0 picks a free port.
class Listener {
   public:
    explicit Listener(const Endpoint& at);
    Listener(const Listener&) = delete;
    Listener& operator=(const Listener&) = delete;
    ~Listener();

    std::uint16_t port() const { return port_; }
    LineSocket accept();

   private:
    int fd_ = -1;
    std::uint16_t port_ = 0;
};

enum class Role : std::uint8_t { Alice, Bob };

/// What Alice proposes; Bob learns it from the PROTO line.
struct Request {
    std::string protocol;  // "teleport" or "superdense"
    std::uint64_t seed = 0;
    std::optional<InputQubit> input;
    std::optional<BellTag> forced;
    std::optional<Message2> message;
};

struct Result {
    std::string protocol;
    std::uint64_t seed = 0;
    std::string local_verdict;
    std::string peer_verdict;

    bool agreed() const { return local_verdict == peer_verdict; }
};

/// Alice's side on a connected socket. `version` is exposed for
/// negative tests. Throws ProtocolVersionError or TransportError.
Result run_alice(LineSocket& sock, const Request& request, std::string_view version = kVersion);

/// Bob's side on an accepted socket.
Result run_bob(LineSocket& sock);

/// Bob binds `endpoint` and serves one peer; Alice connects (retrying for
/// a few seconds while Bob starts) and drives `request`.
Result run_wire_demo(Role role, const Endpoint& endpoint, const std::optional<Request>& request);

}  // namespace iclq::wire
