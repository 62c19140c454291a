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


// OpenMP batch kernels against their serial references.

#include <benchmark/benchmark.h>

#include "iclq/batch.hpp"

namespace {

const iclq::InputQubit kInput(0.6, iclq::Amplitude(0, 0.8));

void BM_Histogram_Serial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            iclq::batch::serial::outcome_histogram(kInput, 0, static_cast<std::uint64_t>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Histogram_Serial)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Histogram_Parallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            iclq::batch::outcome_histogram(kInput, 0, static_cast<std::uint64_t>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Histogram_Parallel)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FidelitySweep_Serial(benchmark::State& state) {
    const auto inputs = iclq::batch::random_inputs(1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iclq::batch::serial::fidelity_sweep(inputs));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}
BENCHMARK(BM_FidelitySweep_Serial)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FidelitySweep_Parallel(benchmark::State& state) {
    const auto inputs = iclq::batch::random_inputs(1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iclq::batch::fidelity_sweep(inputs));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}
BENCHMARK(BM_FidelitySweep_Parallel)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
