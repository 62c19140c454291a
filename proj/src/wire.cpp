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

#include "iclq/wire.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

#include "iclq/error.hpp"
#include "iclq/phase_space.hpp"
#include "iclq/superdense.hpp"
#include "iclq/trace.hpp"

namespace iclq::wire {

namespace {

constexpr std::size_t kMaxLine = 4096;
constexpr auto kDefaultTimeout = std::chrono::seconds(10);
constexpr auto kConnectRetry = std::chrono::seconds(5);

std::string errno_text() { return std::strerror(errno); }

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    for (std::string w; in >> w;) {
        words.push_back(w);
    }
    return words;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& text) {
    double v = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
        throw ProtocolVersionError("bad number on the wire: '" + text + "'");
    }
    return v;
}

std::uint64_t parse_seed(const std::string& text) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw ProtocolVersionError("bad seed on the wire: '" + text + "'");
    }
    return v;
}

addrinfo* resolve(const Endpoint& e, bool passive) {
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    hints.ai_flags = passive ? AI_PASSIVE : 0;
    addrinfo* res = nullptr;
    const std::string port = std::to_string(e.port);
    const int rc = getaddrinfo(e.host.empty() ? nullptr : e.host.c_str(), port.c_str(), &hints, &res);
    if (rc != 0) {
        throw TransportError("cannot resolve " + e.host + ":" + port + ": " + gai_strerror(rc));
    }
    return res;
}

void expect_words(const std::vector<std::string>& words, std::string_view head, std::size_t min,
                  std::size_t max) {
    if (words.empty() || words[0] != head || words.size() < min || words.size() > max) {
        std::string got;
        for (const auto& w : words) {
            got += (got.empty() ? "" : " ") + w;
        }
        throw ProtocolVersionError("expected " + std::string(head) + " line, got '" + got + "'");
    }
}

// DONE exchange: Bob speaks first, Alice answers.
std::string exchange_done(LineSocket& sock, const std::string& local, bool speak_first) {
    if (speak_first) {
        sock.send_line("DONE " + local);
    }
    const std::string line = sock.recv_line();
    if (line.rfind("DONE ", 0) != 0) {
        throw ProtocolVersionError("expected DONE line, got '" + line + "'");
    }
    if (!speak_first) {
        sock.send_line("DONE " + local);
    }
    return line.substr(5);
}

}  // namespace

Endpoint Endpoint::parse(std::string_view text) {
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
        throw ValidationError("endpoint must look like host:port, got '" + std::string(text) + "'");
    }
    unsigned port = 0;
    const auto digits = text.substr(colon + 1);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
    if (ec != std::errc() || end != digits.data() + digits.size() || port > 65535) {
        throw ValidationError("bad port in endpoint '" + std::string(text) + "'");
    }
    return {std::string(text.substr(0, colon)), static_cast<std::uint16_t>(port)};
}

// ---------------------------------------------------------------------------
// Sockets

LineSocket::LineSocket(int fd) : fd_(fd) { set_timeout(kDefaultTimeout); }

LineSocket::LineSocket(LineSocket&& other) noexcept
    : fd_(std::exchange(other.fd_, -1)), buffer_(std::move(other.buffer_)) {}

LineSocket& LineSocket::operator=(LineSocket&& other) noexcept {
    if (this != &other) {
        if (fd_ >= 0) {
            ::close(fd_);
        }
        fd_ = std::exchange(other.fd_, -1);
        buffer_ = std::move(other.buffer_);
    }
    return *this;
}

LineSocket::~LineSocket() {
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

void LineSocket::set_timeout(std::chrono::milliseconds timeout) {
    timeval tv{};
    tv.tv_sec = static_cast<time_t>(timeout.count() / 1000);
    tv.tv_usec = static_cast<suseconds_t>((timeout.count() % 1000) * 1000);
    ::setsockopt(fd_, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
    ::setsockopt(fd_, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
}

void LineSocket::send_line(std::string_view line) {
    std::string out(line);
    out += '\n';
    std::size_t sent = 0;
    while (sent < out.size()) {
        const ssize_t n = ::send(fd_, out.data() + sent, out.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw TransportError("send failed: " + errno_text());
        }
        sent += static_cast<std::size_t>(n);
    }
}

std::string LineSocket::recv_line() {
    for (;;) {
        const auto nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            return line;
        }
        if (buffer_.size() > kMaxLine) {
            throw TransportError("peer sent an over-long line");
        }
        char chunk[512];
        const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
        if (n == 0) {
            throw TransportError("connection closed by peer");
        }
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw TransportError("receive failed: " + errno_text());
        }
        buffer_.append(chunk, static_cast<std::size_t>(n));
    }
}

LineSocket LineSocket::connect(const Endpoint& to, std::chrono::milliseconds retry_for) {
    const auto deadline = std::chrono::steady_clock::now() + retry_for;
    for (;;) {
        addrinfo* res = resolve(to, false);
        const int fd = ::socket(res->ai_family, res->ai_socktype, res->ai_protocol);
        if (fd < 0) {
            freeaddrinfo(res);
            throw TransportError("socket() failed: " + errno_text());
        }
        const int rc = ::connect(fd, res->ai_addr, res->ai_addrlen);
        freeaddrinfo(res);
        if (rc == 0) {
            return LineSocket(fd);
        }
        const std::string why = errno_text();
        ::close(fd);
        if (std::chrono::steady_clock::now() >= deadline) {
            throw TransportError("cannot connect to " + to.host + ":" + std::to_string(to.port) +
                                 ": " + why);
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
}

Listener::Listener(const Endpoint& at) {
    addrinfo* res = resolve(at, true);
    fd_ = ::socket(res->ai_family, res->ai_socktype, res->ai_protocol);
    if (fd_ < 0) {
        freeaddrinfo(res);
        throw TransportError("socket() failed: " + errno_text());
    }
    const int one = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    const int rc = ::bind(fd_, res->ai_addr, res->ai_addrlen);
    freeaddrinfo(res);
    if (rc != 0 || ::listen(fd_, 1) != 0) {
        const std::string why = errno_text();
        ::close(fd_);
        throw TransportError("cannot listen on " + at.host + ":" + std::to_string(at.port) + ": " +
                             why);
    }
    sockaddr_in bound{};
    socklen_t len = sizeof bound;
    ::getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len);
    port_ = ntohs(bound.sin_port);
}

Listener::~Listener() {
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

LineSocket Listener::accept() {
    for (;;) {
        const int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) {
            return LineSocket(fd);
        }
        if (errno != EINTR) {
            throw TransportError("accept failed: " + errno_text());
        }
    }
}

// ---------------------------------------------------------------------------
// Protocol

Result run_alice(LineSocket& sock, const Request& request, std::string_view version) {
    Result result{request.protocol, request.seed, {}, {}};
    sock.send_line("HELLO " + std::string(version) + " " + std::to_string(request.seed));
    const auto ack = split(sock.recv_line());
    if (!ack.empty() && ack[0] == "ERR") {
        throw ProtocolVersionError("peer rejected handshake");
    }
    expect_words(ack, "HELLO", 3, 3);
    if (ack[1] != version || parse_seed(ack[2]) != request.seed) {
        throw ProtocolVersionError("handshake mismatch: peer answered " + ack[1] + " " + ack[2]);
    }

    if (request.protocol == "teleport") {
        if (!request.input) {
            throw ValidationError("teleport request needs an input qubit");
        }
        const InputQubit& u = *request.input;
        std::string proto = "PROTO teleport " + format_double(u.alpha().real()) + " " +
                            format_double(u.alpha().imag()) + " " +
                            format_double(u.beta().real()) + " " + format_double(u.beta().imag());
        if (request.forced) {
            proto += " " + std::string(to_string(*request.forced));
        }
        sock.send_line(proto);
        const ProtocolTrace trace = run_teleportation(u, request.seed, request.forced);
        sock.send_line("CC " + trace.verdict().at("bits").get<std::string>());
        result.local_verdict = verdict_string(trace);
    } else if (request.protocol == "superdense") {
        if (!request.message) {
            throw ValidationError("superdense request needs a message");
        }
        sock.send_line("PROTO superdense");
        const ProtocolTrace trace = run_superdense(*request.message, request.seed);
        sock.send_line("QUBIT-SENT " + encoding_table()[request.message->value()].unitary_name);
        result.local_verdict = "decoded=" + request.message->str();
        if (verdict_string(trace) != result.local_verdict) {
            throw ValidationError("in-process superdense run failed to round-trip");
        }
    } else {
        throw ValidationError("unknown protocol '" + request.protocol + "'");
    }
    result.peer_verdict = exchange_done(sock, result.local_verdict, false);
    return result;
}

Result run_bob(LineSocket& sock) {
    const auto hello = split(sock.recv_line());
    if (hello.size() != 3 || hello[0] != "HELLO" || hello[1] != kVersion) {
        sock.send_line("ERR version");
        throw ProtocolVersionError("handshake rejected: expected 'HELLO " + std::string(kVersion) +
                                   " <seed>'");
    }
    const std::uint64_t seed = parse_seed(hello[2]);
    sock.send_line("HELLO " + std::string(kVersion) + " " + std::to_string(seed));

    const auto proto = split(sock.recv_line());
    Result result{{}, seed, {}, {}};
    if (!proto.empty() && proto.size() >= 2 && proto[0] == "PROTO" && proto[1] == "teleport") {
        expect_words(proto, "PROTO", 6, 7);
        result.protocol = "teleport";
        const InputQubit u({parse_double(proto[2]), parse_double(proto[3])},
                           {parse_double(proto[4]), parse_double(proto[5])});
        std::optional<BellTag> forced;
        if (proto.size() == 7) {
            forced = parse_bell_tag(proto[6]);
        }
        // Mirror the register up to Alice's measurement from the shared seed.
        RandomSource rand(seed);
        const StateVector global = tensor(u.state(), bell_state(BellTag::PhiPlus));
        const BellMeasurement mirrored = bell_measure(global, rand, forced);

        const auto cc = split(sock.recv_line());
        expect_words(cc, "CC", 2, 2);
        const BellTag tag = tag_for(Message2::parse(cc[1]));
        const StateVector held = bob_qubit(mirrored.collapsed, tag);
        const StateVector corrected = apply_1q(held, correction_for(tag), 1);
        const double fidelity = std::norm(overlap(u.state(), corrected));
        result.local_verdict = verdict_string(
            Json{{"outcome", to_string(tag)}, {"bits", cc[1]}, {"fidelity", fidelity}});
    } else if (proto.size() == 2 && proto[0] == "PROTO" && proto[1] == "superdense") {
        result.protocol = "superdense";
        const auto sent = split(sock.recv_line());
        expect_words(sent, "QUBIT-SENT", 2, 2);
        std::optional<Encoding> applied;
        for (const auto& e : encoding_table()) {
            if (e.unitary_name == sent[1]) {
                applied = e;
            }
        }
        if (!applied) {
            throw ProtocolVersionError("unknown encoding gate '" + sent[1] + "'");
        }
        const StateVector arrived = apply_1q(bell_state(BellTag::PhiPlus), applied->unitary, 1);
        result.local_verdict = "decoded=" + decode(arrived).str();
    } else {
        sock.send_line("ERR protocol");
        throw ProtocolVersionError("unsupported PROTO line");
    }
    result.peer_verdict = exchange_done(sock, result.local_verdict, true);
    return result;
}

Result run_wire_demo(Role role, const Endpoint& endpoint, const std::optional<Request>& request) {
    if (role == Role::Bob) {
        Listener listener(endpoint);
        LineSocket sock = listener.accept();
        return run_bob(sock);
    }
    if (!request) {
        throw ValidationError("alice needs protocol parameters");
    }
    LineSocket sock = LineSocket::connect(endpoint, kConnectRetry);
    return run_alice(sock, *request);
}

}  // namespace iclq::wire
