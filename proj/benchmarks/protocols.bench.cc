// Copyright 2026 The Oneway Authors
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

#include "benchmark/benchmark.h"
#include "oneway/cluster.h"
#include "oneway/mbqc.h"
#include "oneway/noise.h"
#include "oneway/protocols.h"

namespace {

using namespace oneway;

void BM_run_pattern(benchmark::State &state) {
    RotationJob job{0.4, 1.1, Ordering::kA, true, RotationInput::kFromFirstOutcome, std::nullopt};
    auto pattern = rotation_pattern_computational(job);
    auto input = build_cluster(GraphSpec::linear_chain(4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pattern(input, pattern));
    }
}
BENCHMARK(BM_run_pattern);

void BM_run_pattern_dm(benchmark::State &state) {
    auto pattern = cphase_pattern(CphaseJob{0.3, 2.2, std::nullopt});
    auto rho = apply_white_noise(build_cluster(GraphSpec::linear_chain(4)), 0.872);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pattern_dm(rho, pattern));
    }
}
BENCHMARK(BM_run_pattern_dm);

void BM_sample(benchmark::State &state) {
    auto pattern = cnot_pattern(CnotJob{0.9, ControlPrep::kHadamard, true, std::nullopt});
    auto input = build_cluster(GraphSpec::linear_chain(4));
    auto shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pattern(input, pattern, SampleMode{3, shots}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sample)->Arg(1000)->Arg(100000);

void BM_run_rotation_noisy(benchmark::State &state) {
    RotationJob job{0.4, 1.1, Ordering::kB, true, RotationInput::kFromFirstOutcome, std::nullopt};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_rotation(job, NoiseSpec{0.872, {0.02, 0.02, 0.02, 0.02}}));
    }
}
BENCHMARK(BM_run_rotation_noisy);

}  // namespace

BENCHMARK_MAIN();
