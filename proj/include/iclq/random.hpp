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
#include <random>

namespace iclq {

/**
 * Seeded randomness for measurements and test-input generation.
 *
 * The algorithm is fixed so that a seed reproduces the same sequence on
 * every platform:
 *   - engine: std::mt19937_64 seeded with the 64-bit seed (the standard
 *     pins its output sequence exactly);
 *   - uniform(): the top 53 bits of one engine word times 2^-53, a double
 *     in [0, 1);
 *   - normal(): Box-Muller over two uniform() draws, cosine branch only.
 *
 * std::uniform_real_distribution is deliberately not used; its output is
 * implementation-defined.
 */
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    double uniform() {
        ++draws_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double normal();

    std::uint64_t seed() const { return seed_; }

    /// Number of uniform() draws consumed so far.
    std::uint64_t draws() const { return draws_; }

   private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
};

}  // namespace iclq
