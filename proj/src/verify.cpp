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

#include "iclq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "iclq/batch.hpp"
#include "iclq/error.hpp"
#include "iclq/icl.hpp"
#include "iclq/phase_space.hpp"
#include "iclq/superdense.hpp"
#include "iclq/teleport.hpp"

namespace iclq {

namespace {

constexpr double kIdentityBound = 1e-12;
constexpr double kReconstructionBound = 1e-10;
constexpr std::uint64_t kInputSeed = 20240601;
constexpr std::size_t kRandomInputs = 100;

class Recorder {
   public:
    Recorder(std::string suite, VerifyReport& report) : suite_(std::move(suite)), report_(report) {}

    void add(std::string name, double deviation, double bound) {
        report_.checks.push_back(
            {suite_, std::move(name), deviation, bound, std::isfinite(deviation) && deviation < bound});
    }

   private:
    std::string suite_;
    VerifyReport& report_;
};

double phase_distance(const StateVector& a, const StateVector& b) {
    return std::abs(1.0 - std::abs(overlap(a, b)));
}

void phase_space_suite(VerifyReport& report) {
    Recorder r("phase-space", report);
    const Matrix f = dft4().matrix();
    r.add("dft4 unitarity", max_abs_diff(f * f.adjoint(), Matrix::identity(4)), kIdentityBound);
    r.add("dft4 times conjugate", max_abs_diff(f * f.conjugate(), Matrix::identity(4)),
          kIdentityBound);

    const double h = 1.0 / std::sqrt(2.0);
    const std::array<std::array<Amplitude, 4>, 4> literal = {{{h, 0, 0, h},
                                                              {h, 0, 0, -h},
                                                              {0, h, h, 0},
                                                              {0, h, -h, 0}}};
    double amp_dev = 0.0;
    double ortho_dev = 0.0;
    double sector_dev = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const StateVector bi = bell_state(kBellTags[i]);
        amp_dev = std::max(amp_dev, max_abs_diff(bi.amps(), literal[i]));
        for (std::size_t j = 0; j < 4; ++j) {
            const Amplitude want = i == j ? 1.0 : 0.0;
            ortho_dev = std::max(ortho_dev, std::abs(overlap(bi, bell_state(kBellTags[j])) - want));
        }
        const bool phi = sector_of(kBellTags[i]) == Sector::Even;
        sector_dev = std::max({sector_dev, std::abs(bi[phi ? 1 : 0]), std::abs(bi[phi ? 2 : 3])});
    }
    r.add("bell contraction amplitudes", amp_dev, kIdentityBound);
    r.add("bell orthonormality", ortho_dev, kIdentityBound);
    r.add("sector disjointness", sector_dev, kIdentityBound);

    double det_dev = 0.0;
    for (const auto& hs : h_states()) {
        det_dev = std::max(det_dev, std::abs(reshaped_determinant(hs.state)));
    }
    r.add("h-state separability", det_dev, kIdentityBound);

    for (const auto& id : bell_superpositions()) {
        r.add(id.lhs + " = " + id.rhs, id.max_deviation, kIdentityBound);
    }
    for (const auto& id : h_superpositions()) {
        r.add(id.lhs + " = " + id.rhs, id.max_deviation, kIdentityBound);
    }

    const Quartet back = bloch_to_wannier(wannier_to_bloch(wannier_basis()));
    const Quartet basis = wannier_basis();
    double round = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        round = std::max(round, max_abs_diff(back[i].amps(), basis[i].amps()));
    }
    r.add("wannier/bloch round trip", round, kIdentityBound);
}

void icl_suite(VerifyReport& report) {
    Recorder r("icl", report);
    const StateVector phip = bell_state(BellTag::PhiPlus);
    const StateVector psip = bell_state(BellTag::PsiPlus);
    r.add("sigma_x: phi+ -> psi+",
          phase_distance(apply_1q(phip, gates::pauli_x(), 1), psip), kIdentityBound);
    r.add("sigma_z: phi+ -> phi-",
          phase_distance(apply_1q(phip, gates::pauli_z(), 1), bell_state(BellTag::PhiMinus)),
          kIdentityBound);
    r.add("sigma_z: psi+ -> psi-",
          phase_distance(apply_1q(psip, gates::pauli_z(), 1), bell_state(BellTag::PsiMinus)),
          kIdentityBound);

    // Parity law: n extensions from the two-link triplet diagram.
    double parity_dev = 0.0;
    IclDiagram d(2, Sector::Even, 1);
    for (int n = 0; n <= 16; ++n) {
        const StateVector want = n % 2 == 0 ? phip : psip;
        parity_dev = std::max(parity_dev, phase_distance(diagram_to_state(d), want));
        if (d.chain_length() != 2u + static_cast<unsigned>(n)) {
            parity_dev = std::max(parity_dev, 1.0);
        }
        d = extend_sigma_x(d);
    }
    r.add("parity law over 16 extensions", parity_dev, kIdentityBound);

    double round = 0.0;
    double commute = 0.0;
    for (BellTag tag : kBellTags) {
        const IclDiagram dt = state_to_diagram(tag);
        round = std::max(round, phase_distance(diagram_to_state(dt), bell_state(tag)));
        commute = std::max(commute,
                           phase_distance(diagram_to_state(extend_sigma_x(dt)),
                                          apply_1q(diagram_to_state(dt), gates::pauli_x(), 1)));
        commute = std::max(commute,
                           phase_distance(diagram_to_state(apply_sigma_z(dt)),
                                          apply_1q(diagram_to_state(dt), gates::pauli_z(), 1)));
    }
    r.add("diagram round trip", round, kIdentityBound);
    r.add("diagram/gate commutation", commute, kIdentityBound);

    double misclassified = 0.0;
    for (const auto& hs : h_states()) {
        if (!std::holds_alternative<icl_class::Product>(classify(hs.state))) {
            misclassified += 1.0;
        }
    }
    r.add("h-states classify as product", misclassified, 0.5);
}

void teleport_suite(VerifyReport& report) {
    Recorder r("teleport", report);
    const auto inputs = batch::random_inputs(kInputSeed, kRandomInputs);
    double recon = 0.0;
    double prob_dev = 0.0;
    double no_signal = 0.0;
    const auto projectors = bell_projectors_ua();
    for (const auto& u : inputs) {
        const StateVector global = tensor(u.state(), bell_state(BellTag::PhiPlus));
        recon = std::max(recon, max_abs_diff(reconstruct(decompose(u)), global.amps()));
        for (double p : outcome_probabilities(global, projectors)) {
            prob_dev = std::max(prob_dev, std::abs(p - 0.25));
        }
        for (double p : qubit_probabilities(global, 3)) {
            no_signal = std::max(no_signal, std::abs(p - 0.5));
        }
    }
    r.add("bell expansion reconstruction", recon, kReconstructionBound);
    r.add("branch probabilities = 1/4", prob_dev, kIdentityBound);
    r.add("bob marginal before cc = 1/2", no_signal, kIdentityBound);

    const auto sweep = batch::fidelity_sweep(inputs);
    r.add("four-outcome fidelity (" + std::to_string(sweep.runs) + " runs)",
          1.0 - sweep.min_fidelity, kReconstructionBound);
}

void superdense_suite(VerifyReport& report) {
    Recorder r("superdense", report);
    double failures = 0.0;
    double ortho = 0.0;
    double marginal = 0.0;
    std::array<std::optional<StateVector>, 4> encoded;
    for (unsigned v = 0; v < 4; ++v) {
        const Message2 m{(v & 2u) != 0, (v & 1u) != 0};
        encoded[v] = encode(m);
        if (decode(*encoded[v]) != m || verdict_string(run_superdense(m)) != "decoded=" + m.str()) {
            failures += 1.0;
        }
        for (double p : qubit_probabilities(*encoded[v], 2)) {
            marginal = std::max(marginal, std::abs(p - 0.5));
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            ortho = std::max(ortho, std::abs(overlap(*encoded[i], *encoded[j])));
        }
    }
    r.add("4/4 messages round trip", failures, 0.5);
    r.add("encoded states orthogonal", ortho, kIdentityBound);
    r.add("qubit-2 marginal = 1/2", marginal, kIdentityBound);
}

}  // namespace

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::All:
            return "all";
        case Suite::PhaseSpace:
            return "phase-space";
        case Suite::Icl:
            return "icl";
        case Suite::Teleport:
            return "teleport";
        case Suite::Superdense:
            return "superdense";
    }
    return "?";
}

Suite parse_suite(std::string_view text) {
    for (Suite s : {Suite::All, Suite::PhaseSpace, Suite::Icl, Suite::Teleport, Suite::Superdense}) {
        if (text == to_string(s)) {
            return s;
        }
    }
    throw ValidationError("unknown suite '" + std::string(text) +
                          "' (expected all, phase-space, icl, teleport or superdense)");
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyReport run_verify(Suite suite) {
    VerifyReport report;
    if (suite == Suite::All || suite == Suite::PhaseSpace) {
        phase_space_suite(report);
    }
    if (suite == Suite::All || suite == Suite::Icl) {
        icl_suite(report);
    }
    if (suite == Suite::All || suite == Suite::Teleport) {
        teleport_suite(report);
    }
    if (suite == Suite::All || suite == Suite::Superdense) {
        superdense_suite(report);
    }
    return report;
}

std::string format_check(const Check& c) {
    char buf[96];
    std::snprintf(buf, sizeof buf, " (max dev %.1e %s %.0e)", c.max_deviation,
                  c.passed ? "<" : ">=", c.bound);
    return c.suite + ": " + c.name + ": " + (c.passed ? "PASS" : "FAIL") + buf;
}

}  // namespace iclq
