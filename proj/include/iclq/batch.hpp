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
 * Many-run teleportation sweeps.
 *
 * Each run is seeded independently (run i uses seed first_seed + i), so
 * the OpenMP kernels return exactly what the serial reference returns,
 * whatever the thread count. The serial versions live in
 * iclq::batch::serial and exist for tests and the benchmark.
 */

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "iclq/teleport.hpp"

namespace iclq::batch {

/// Counts per Bell outcome, Φ⁺..Ψ⁻ order.
using OutcomeCounts = std::array<std::uint64_t, 4>;

struct FidelitySummary {
    std::uint64_t runs = 0;
    double min_fidelity = 1.0;
    /// Largest |p - 1/4| over all branch probabilities seen.
    double max_probability_deviation = 0.0;

    friend bool operator==(const FidelitySummary&, const FidelitySummary&) = default;
};

/// Sampled outcome histogram over `runs` seeded runs.
OutcomeCounts outcome_histogram(const InputQubit& u, std::uint64_t first_seed, std::uint64_t runs);

/// Every input × every forced outcome.
FidelitySummary fidelity_sweep(std::span<const InputQubit> inputs);

/// `count` random inputs drawn from one RandomSource(seed).
std::vector<InputQubit> random_inputs(std::uint64_t seed, std::size_t count);

namespace serial {
OutcomeCounts outcome_histogram(const InputQubit& u, std::uint64_t first_seed, std::uint64_t runs);
FidelitySummary fidelity_sweep(std::span<const InputQubit> inputs);
}  // namespace serial

}  // namespace iclq::batch
