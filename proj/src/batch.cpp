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

#include "iclq/batch.hpp"

#include <algorithm>
#include <cmath>

namespace iclq::batch {

namespace {

void fold(FidelitySummary& acc, const TeleportResult& r) {
    ++acc.runs;
    acc.min_fidelity = std::min(acc.min_fidelity, r.fidelity);
    acc.max_probability_deviation =
        std::max(acc.max_probability_deviation, std::abs(r.probability - 0.25));
}

void merge(FidelitySummary& acc, const FidelitySummary& part) {
    acc.runs += part.runs;
    acc.min_fidelity = std::min(acc.min_fidelity, part.min_fidelity);
    acc.max_probability_deviation =
        std::max(acc.max_probability_deviation, part.max_probability_deviation);
}

}  // namespace

OutcomeCounts outcome_histogram(const InputQubit& u, std::uint64_t first_seed, std::uint64_t runs) {
    OutcomeCounts total{};
#pragma omp parallel
    {
        OutcomeCounts local{};
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(runs); ++i) {
            const auto r = teleport_once(u, first_seed + static_cast<std::uint64_t>(i));
            ++local[static_cast<std::size_t>(r.outcome)];
        }
#pragma omp critical
        for (std::size_t k = 0; k < 4; ++k) {
            total[k] += local[k];
        }
    }
    return total;
}

FidelitySummary fidelity_sweep(std::span<const InputQubit> inputs) {
    FidelitySummary total;
    const auto n = static_cast<std::int64_t>(inputs.size() * kBellTags.size());
#pragma omp parallel
    {
        FidelitySummary local;
#pragma omp for schedule(static)
        for (std::int64_t job = 0; job < n; ++job) {
            const auto& u = inputs[static_cast<std::size_t>(job / 4)];
            fold(local, teleport_once(u, 0, kBellTags[static_cast<std::size_t>(job % 4)]));
        }
#pragma omp critical
        merge(total, local);
    }
    return total;
}

std::vector<InputQubit> random_inputs(std::uint64_t seed, std::size_t count) {
    RandomSource rand(seed);
    std::vector<InputQubit> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_input(rand));
    }
    return out;
}

namespace serial {

OutcomeCounts outcome_histogram(const InputQubit& u, std::uint64_t first_seed, std::uint64_t runs) {
    OutcomeCounts counts{};
    for (std::uint64_t i = 0; i < runs; ++i) {
        ++counts[static_cast<std::size_t>(teleport_once(u, first_seed + i).outcome)];
    }
    return counts;
}

FidelitySummary fidelity_sweep(std::span<const InputQubit> inputs) {
    FidelitySummary acc;
    for (const auto& u : inputs) {
        for (BellTag tag : kBellTags) {
            fold(acc, teleport_once(u, 0, tag));
        }
    }
    return acc;
}

}  // namespace serial

}  // namespace iclq::batch
