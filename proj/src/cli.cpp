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

#include "iclq/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "CLI11.hpp"

#include "iclq/icl.hpp"
#include "iclq/phase_space.hpp"
#include "iclq/superdense.hpp"
#include "iclq/trace.hpp"

namespace iclq::cli {

namespace {

std::uint64_t parse_seed(std::string_view text, std::string_view flag) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw UsageError(std::string(flag) + ": expected an unsigned 64-bit integer, got '" +
                         std::string(text) + "'");
    }
    return v;
}

double parse_real(std::string_view text, std::string_view flag) {
    // from_chars rejects a leading '+', which people do type.
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
        throw UsageError(std::string(flag) + ": malformed number '" + std::string(text) + "'");
    }
    return v;
}

std::uint64_t resolve_seed(const std::string& given, std::string_view flag, const Environment& env,
                           std::optional<std::uint64_t> fallback) {
    if (!given.empty()) {
        return parse_seed(given, flag);
    }
    if (env.seed) {
        return parse_seed(*env.seed, "ICL_QPROTO_SEED");
    }
    if (fallback) {
        return *fallback;
    }
    throw UsageError(std::string(flag) + ": required (or set ICL_QPROTO_SEED)");
}

InputQubit parse_input(const std::string& alpha, const std::string& beta) {
    if (alpha.empty()) {
        throw UsageError("--alpha: required");
    }
    if (beta.empty()) {
        throw UsageError("--beta: required");
    }
    const Amplitude a = parse_complex(alpha, "--alpha");
    const Amplitude b = parse_complex(beta, "--beta");
    try {
        return InputQubit::renormalized(a, b, kNormSlack);
    } catch (const ValidationError& e) {
        throw UsageError(std::string("--alpha/--beta: ") + e.what());
    }
}

std::optional<BellTag> parse_forced(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    try {
        return parse_bell_tag(text);
    } catch (const ValidationError& e) {
        throw UsageError(std::string("--force-outcome: ") + e.what());
    }
}

Message2 parse_message(const std::string& text) {
    try {
        return Message2::parse(text);
    } catch (const ValidationError& e) {
        throw UsageError(std::string("--message: ") + e.what());
    }
}

std::optional<std::filesystem::path> optional_path(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    return std::filesystem::path(text);
}

void write_trace(const ProtocolTrace& trace, const std::filesystem::path& sink, std::ostream& out) {
    if (sink == "-") {
        emit_trace(trace, out);
    } else {
        emit_trace(trace, sink);
    }
}

void print_json(std::ostream& out, const Json& j, bool compact) {
    out << (compact ? j.dump() : j.dump(2)) << '\n';
}

int run_teleport(const TeleportCommand& c, std::ostream& out) {
    const ProtocolTrace trace = run_teleportation(c.input, c.seed, c.forced);
    if (c.trace) {
        write_trace(trace, *c.trace, out);
    }
    const Json& v = trace.verdict();
    const double fidelity = v.at("fidelity").get<double>();
    if (!(c.trace && *c.trace == "-")) {
        if (c.json) {
            Json j{{"protocol", trace.protocol()}, {"seed", trace.seed()}};
            j.update(v);
            print_json(out, j, true);
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "teleport seed=%llu outcome=%s bits=%s correction=%s fidelity=%.12f\n",
                          static_cast<unsigned long long>(trace.seed()),
                          v.at("outcome").get<std::string>().c_str(),
                          v.at("bits").get<std::string>().c_str(),
                          correction_name(parse_bell_tag(v.at("outcome").get<std::string>())).c_str(),
                          fidelity);
            out << buf;
        }
    }
    return fidelity >= 1.0 - kTolerance ? kExitOk : kExitVerifyFailed;
}

int run_superdense_cmd(const SuperdenseCommand& c, std::ostream& out) {
    const ProtocolTrace trace = run_superdense(c.message, c.seed);
    if (c.trace) {
        write_trace(trace, *c.trace, out);
    }
    const std::string decoded = trace.verdict().at("decoded").get<std::string>();
    if (!(c.trace && *c.trace == "-")) {
        if (c.json) {
            print_json(out,
                       Json{{"protocol", trace.protocol()},
                            {"message", c.message.str()},
                            {"unitary", encoding_table()[c.message.value()].unitary_name},
                            {"decoded", decoded}},
                       true);
        } else {
            out << "superdense message=" << c.message.str()
                << " unitary=" << encoding_table()[c.message.value()].unitary_name
                << " decoded=" << decoded << '\n';
        }
    }
    return decoded == c.message.str() ? kExitOk : kExitVerifyFailed;
}

int run_bell(const BellCommand& c, std::ostream& out) {
    Json bell = Json::array();
    for (BellTag tag : kBellTags) {
        const IclDiagram d = state_to_diagram(tag);
        bell.push_back(Json{{"tag", to_string(tag)},
                            {"sector", to_string(sector_of(tag))},
                            {"bits", bits_for(tag).str()},
                            {"diagram",
                             {{"chain", d.chain_length()},
                              {"sector", to_string(d.sector())},
                              {"phase", d.phase()}}},
                            {"state", state_to_json(bell_state(tag))}});
    }
    Json h = Json::array();
    for (const auto& hs : h_states()) {
        h.push_back(Json{{"tag", to_string(hs.tag)}, {"state", state_to_json(hs.state)}});
    }
    print_json(out, Json{{"bell", std::move(bell)}, {"h_states", std::move(h)}}, c.json);
    return kExitOk;
}

int run_icl(const IclCommand& c, std::ostream& out) {
    const IclClass cls = classify(c.state);
    Json j;
    if (const auto* b = std::get_if<icl_class::Bell>(&cls)) {
        const IclDiagram d = state_to_diagram(b->tag);
        j = Json{{"class", "bell"},
                 {"bell", to_string(b->tag)},
                 {"diagram",
                  {{"chain", d.chain_length()}, {"sector", to_string(d.sector())}, {"phase", d.phase()}}}};
    } else if (const auto* s = std::get_if<icl_class::SectorConfined>(&cls)) {
        j = Json{{"class", "sector-confined"}, {"sector", to_string(s->sector)}};
    } else if (std::holds_alternative<icl_class::Product>(cls)) {
        j = Json{{"class", "product"}};
    } else {
        j = Json{{"class", "generic"}};
    }
    print_json(out, j, c.json);
    return kExitOk;
}

int run_verify_cmd(const VerifyCommand& c, std::ostream& out) {
    const VerifyReport report = run_verify(c.suite);
    if (c.json) {
        Json checks = Json::array();
        for (const auto& ch : report.checks) {
            checks.push_back(Json{{"suite", ch.suite},
                                  {"name", ch.name},
                                  {"max_deviation", ch.max_deviation},
                                  {"bound", ch.bound},
                                  {"passed", ch.passed}});
        }
        print_json(out, Json{{"passed", report.all_passed()}, {"checks", std::move(checks)}}, true);
    } else {
        for (const auto& ch : report.checks) {
            out << format_check(ch) << '\n';
        }
        out << (report.all_passed() ? "all checks passed" : "VERIFICATION FAILED") << '\n';
    }
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_wire_cmd(const WireCommand& c, std::ostream& out) {
    const wire::Result r = wire::run_wire_demo(c.role, c.endpoint, c.request);
    const char* role = c.role == wire::Role::Alice ? "alice" : "bob";
    if (c.json) {
        print_json(out,
                   Json{{"role", role},
                        {"protocol", r.protocol},
                        {"seed", r.seed},
                        {"local_verdict", r.local_verdict},
                        {"peer_verdict", r.peer_verdict},
                        {"agreed", r.agreed()}},
                   true);
    } else {
        out << role << " " << r.protocol << " seed=" << r.seed << " verdict: " << r.local_verdict
            << " | peer: " << r.peer_verdict << (r.agreed() ? " | MATCH" : " | MISMATCH") << '\n';
    }
    return r.agreed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

Environment Environment::from_process() {
    Environment env;
    if (const char* s = std::getenv("ICL_QPROTO_SEED")) {
        env.seed = s;
    }
    return env;
}

Amplitude parse_complex(std::string_view text, std::string_view flag) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw UsageError(std::string(flag) + ": expected a complex number as \"re,im\", got '" +
                         std::string(text) + "'");
    }
    return {parse_real(text.substr(0, comma), flag), parse_real(text.substr(comma + 1), flag)};
}

Command parse(std::span<const std::string> args, const Environment& env) {
    CLI::App app{"Two-party Bell-state protocol simulator", "iclq"};
    app.require_subcommand(1, 1);

    std::string alpha, beta, seed, forced, trace, message, state, suite = "all", role, endpoint,
                                                                   protocol = "teleport";
    bool json = false;
    bool list = false;

    auto* tp = app.add_subcommand("teleport", "Teleport one qubit over a shared phi+ pair");
    tp->add_option("--alpha", alpha, "Amplitude of |0> as re,im")->allow_extra_args(false);
    tp->add_option("--beta", beta, "Amplitude of |1> as re,im")->allow_extra_args(false);
    tp->add_option("--seed", seed, "Measurement seed (u64)");
    tp->add_option("--force-outcome", forced, "Pin the Bell outcome: phi+|phi-|psi+|psi-");
    tp->add_option("--trace", trace, "Write the JSON-lines trace here ('-' for stdout)");
    tp->add_flag("--json", json, "Machine-readable output");

    auto* sd = app.add_subcommand("superdense", "Send two classical bits through one qubit");
    sd->add_option("--message", message, "Two bits, e.g. 10");
    sd->add_option("--seed", seed, "Trace seed label (u64)");
    sd->add_option("--trace", trace, "Write the JSON-lines trace here ('-' for stdout)");
    sd->add_flag("--json", json, "Machine-readable output");

    auto* bl = app.add_subcommand("bell", "Print the canonical Bell and H states");
    bl->add_flag("--list", list, "List all states as JSON");
    bl->add_flag("--json", json, "Compact JSON");

    auto* ic = app.add_subcommand("icl", "Classify a two-qubit state against the ICL model");
    ic->add_option("--state", state, "State JSON: {\"n\":2,\"amps\":[[re,im],...]}");
    ic->add_flag("--json", json, "Compact JSON");

    auto* vf = app.add_subcommand("verify", "Check the construction's identities");
    vf->add_option("suite", suite, "all | phase-space | icl | teleport | superdense");
    vf->add_flag("--json", json, "Machine-readable output");

    auto* wr = app.add_subcommand("wire", "Two-process demo over TCP");
    wr->add_option("--role", role, "alice | bob");
    wr->add_option("--endpoint", endpoint, "host:port (bob listens, alice connects)");
    wr->add_option("--protocol", protocol, "teleport | superdense (alice only)");
    wr->add_option("--alpha", alpha, "Amplitude of |0> as re,im");
    wr->add_option("--beta", beta, "Amplitude of |1> as re,im");
    wr->add_option("--seed", seed, "Shared seed (u64)");
    wr->add_option("--force-outcome", forced, "Pin the Bell outcome");
    wr->add_option("--message", message, "Two bits for superdense");
    wr->add_flag("--json", json, "Machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return HelpCommand{app.get_subcommands().empty() ? app.help()
                                                         : app.get_subcommands().front()->help()};
    } catch (const CLI::CallForAllHelp&) {
        return HelpCommand{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (tp->parsed()) {
        return TeleportCommand{parse_input(alpha, beta), resolve_seed(seed, "--seed", env, {}),
                               parse_forced(forced), optional_path(trace), json};
    }
    if (sd->parsed()) {
        if (message.empty()) {
            throw UsageError("--message: required");
        }
        return SuperdenseCommand{parse_message(message), resolve_seed(seed, "--seed", env, 0),
                                 optional_path(trace), json};
    }
    if (bl->parsed()) {
        if (!list) {
            throw UsageError("bell: pass --list");
        }
        return BellCommand{json};
    }
    if (ic->parsed()) {
        if (state.empty()) {
            throw UsageError("--state: required");
        }
        try {
            return IclCommand{state_from_json(Json::parse(state)), json};
        } catch (const Json::exception& e) {
            throw UsageError(std::string("--state: not valid JSON: ") + e.what());
        } catch (const ValidationError& e) {
            throw UsageError(std::string("--state: ") + e.what());
        }
    }
    if (vf->parsed()) {
        try {
            return VerifyCommand{parse_suite(suite), json};
        } catch (const ValidationError& e) {
            throw UsageError(std::string("verify: ") + e.what());
        }
    }
    // wire
    WireCommand w{wire::Role::Alice, {}, std::nullopt, json};
    if (role == "alice") {
        w.role = wire::Role::Alice;
    } else if (role == "bob") {
        w.role = wire::Role::Bob;
    } else {
        throw UsageError("--role: expected alice or bob, got '" + role + "'");
    }
    try {
        w.endpoint = wire::Endpoint::parse(endpoint);
    } catch (const ValidationError& e) {
        throw UsageError(std::string("--endpoint: ") + e.what());
    }
    if (w.role == wire::Role::Alice) {
        wire::Request req;
        req.protocol = protocol;
        if (protocol == "teleport") {
            req.seed = resolve_seed(seed, "--seed", env, {});
            req.input = parse_input(alpha, beta);
            req.forced = parse_forced(forced);
        } else if (protocol == "superdense") {
            req.seed = resolve_seed(seed, "--seed", env, 0);
            if (message.empty()) {
                throw UsageError("--message: required");
            }
            req.message = parse_message(message);
        } else {
            throw UsageError("--protocol: expected teleport or superdense, got '" + protocol + "'");
        }
        w.request = std::move(req);
    }
    return w;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    (void)err;
    struct Visitor {
        std::ostream& out;
        int operator()(const TeleportCommand& c) const { return run_teleport(c, out); }
        int operator()(const SuperdenseCommand& c) const { return run_superdense_cmd(c, out); }
        int operator()(const BellCommand& c) const { return run_bell(c, out); }
        int operator()(const IclCommand& c) const { return run_icl(c, out); }
        int operator()(const VerifyCommand& c) const { return run_verify_cmd(c, out); }
        int operator()(const WireCommand& c) const { return run_wire_cmd(c, out); }
        int operator()(const HelpCommand& c) const {
            out << c.text;
            return kExitOk;
        }
    };
    return std::visit(Visitor{out}, cmd);
}

int main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    try {
        const Command cmd = parse(args, Environment::from_process());
        return run(cmd, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n(run 'iclq --help' for usage)\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const TransportError& e) {
        err << "transport error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ProtocolVersionError& e) {
        err << "protocol error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}

}  // namespace iclq::cli
