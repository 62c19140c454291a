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

#include "iclq/trace.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "iclq/error.hpp"

namespace iclq {

Json state_to_json(const StateVector& state) {
    Json amps = Json::array();
    for (const auto& a : state.amps()) {
        amps.push_back(Json::array({a.real(), a.imag()}));
    }
    return Json{{"n", state.qubit_count()}, {"amps", std::move(amps)}};
}

StateVector state_from_json(const Json& j) {
    try {
        const Json& amps = j.is_object() ? j.at("amps") : j;
        if (!amps.is_array()) {
            throw ValidationError("state JSON needs an \"amps\" array");
        }
        std::vector<Amplitude> values;
        for (const auto& entry : amps) {
            if (entry.is_number()) {
                values.emplace_back(entry.get<double>(), 0.0);
            } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                       entry[1].is_number()) {
                values.emplace_back(entry[0].get<double>(), entry[1].get<double>());
            } else {
                throw ValidationError("amplitude must be a number or [re, im]");
            }
        }
        std::size_t n = 0;
        while ((std::size_t{1} << n) < values.size()) {
            ++n;
        }
        if (j.is_object() && j.contains("n")) {
            if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != n) {
                throw DimensionError("\"n\" does not match the amplitude count");
            }
        }
        return StateVector(n, values);
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed state JSON: ") + e.what());
    } catch (const DimensionError& e) {
        throw ValidationError(std::string("malformed state JSON: ") + e.what());
    }
}

void ProtocolTrace::record(std::string_view actor, std::string_view action, Json payload) {
    events_.push_back({events_.size() + 1, std::string(actor), std::string(action),
                       std::move(payload)});
}

bool ProtocolTrace::finalized() const {
    return !events_.empty() && events_.back().action == kVerdictAction;
}

const Json& ProtocolTrace::verdict() const {
    if (!finalized()) {
        throw ValidationError("trace has no verdict");
    }
    return events_.back().payload;
}

std::string format_trace(const ProtocolTrace& t) {
    std::string out = Json{{"protocol", t.protocol()}, {"seed", t.seed()}}.dump();
    out += '\n';
    for (const auto& e : t.events()) {
        out += Json{{"step", e.step}, {"actor", e.actor}, {"action", e.action},
                    {"payload", e.payload}}
                   .dump();
        out += '\n';
    }
    return out;
}

void emit_trace(const ProtocolTrace& t, std::ostream& out) {
    if (!t.finalized()) {
        throw ValidationError("refusing to emit a trace without a verdict");
    }
    out << format_trace(t);
}

void emit_trace(const ProtocolTrace& t, const std::filesystem::path& sink) {
    if (sink == "-") {
        emit_trace(t, std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream f(sink, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open trace file '" + sink.string() + "' for writing");
    }
    emit_trace(t, f);
    f.flush();
    if (!f) {
        throw IoError("failed writing trace file '" + sink.string() + "'");
    }
}

ProtocolTrace read_trace(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("empty trace");
    }
    try {
        const Json header = Json::parse(line);
        ProtocolTrace t(header.at("protocol").get<std::string>(),
                        header.at("seed").get<std::uint64_t>());
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            Json e = Json::parse(line);
            const auto step = e.at("step").get<std::uint64_t>();
            if (step != t.events().size() + 1) {
                throw ValidationError("trace steps are not consecutive at step " +
                                      std::to_string(step));
            }
            t.record(e.at("actor").get<std::string>(), e.at("action").get<std::string>(),
                     std::move(e.at("payload")));
        }
        return t;
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed trace line: ") + e.what());
    }
}

std::string verdict_string(const ProtocolTrace& t) { return verdict_string(t.verdict()); }

std::string verdict_string(const Json& v) {
    if (v.contains("fidelity")) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12f", v.at("fidelity").get<double>());
        return "outcome=" + v.at("outcome").get<std::string>() + " fidelity=" + buf;
    }
    return "decoded=" + v.at("decoded").get<std::string>();
}

ResourceLedger tally_resources(const ProtocolTrace& t) {
    ResourceLedger ledger;
    for (const auto& e : t.events()) {
        if (e.action == "create_resource") {
            ++ledger.entangled_pairs_consumed;
        } else if (e.action == "cc_send") {
            ledger.classical_bits_sent +=
                static_cast<unsigned>(e.payload.at("bits").get<std::string>().size());
        } else if (e.action == "qubit_send") {
            ++ledger.qubits_sent;
        } else if (e.action == kVerdictAction) {
            if (e.payload.contains("fidelity") &&
                e.payload.at("fidelity").get<double>() >= 1.0 - kTolerance) {
                ++ledger.qubits_reconstructed;
            }
            if (e.payload.contains("decoded")) {
                ++ledger.messages_decoded;
            }
        }
    }
    return ledger;
}

std::string check_resource_ledger(const ProtocolTrace& t) {
    const ResourceLedger got = tally_resources(t);
    ResourceLedger want;
    want.entangled_pairs_consumed = 1;
    if (t.protocol() == "teleport") {
        want.classical_bits_sent = 2;
        want.qubits_reconstructed = 1;
    } else if (t.protocol() == "superdense") {
        want.qubits_sent = 1;
        want.messages_decoded = 1;
    } else {
        return "unknown protocol '" + t.protocol() + "'";
    }
    if (got == want) {
        return {};
    }
    std::ostringstream why;
    why << "ledger mismatch: pairs=" << got.entangled_pairs_consumed
        << " bits=" << got.classical_bits_sent << " qubits_sent=" << got.qubits_sent
        << " reconstructed=" << got.qubits_reconstructed << " decoded=" << got.messages_decoded;
    return why.str();
}

}  // namespace iclq
