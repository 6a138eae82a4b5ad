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

#include <random>

#include "benchmark/benchmark.h"
#include "oneway/cluster.h"
#include "oneway/density_matrix.h"
#include "oneway/statevec.h"

namespace {

using namespace oneway;

Ket random_ket(int n) {
    std::mt19937_64 gen(7);
    std::normal_distribution<double> normal(0, 1);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) a = {normal(gen), normal(gen)};
    return Ket::from_amplitudes(amps);
}

void BM_apply_1q(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Ket psi = random_ket(n);
    Operator h = gates::hadamard();
    for (auto _ : state) {
        psi = apply_1q(psi, h, 1 + n / 2, false);
        benchmark::DoNotOptimize(psi);
    }
}
BENCHMARK(BM_apply_1q)->DenseRange(4, 12, 4);

void BM_apply_cz(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Ket psi = random_ket(n);
    for (auto _ : state) {
        psi = apply_cz(psi, 1, n);
        benchmark::DoNotOptimize(psi);
    }
}
BENCHMARK(BM_apply_cz)->DenseRange(4, 12, 4);

void BM_build_chain(benchmark::State &state) {
    auto spec = GraphSpec::linear_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_cluster(spec));
    }
}
BENCHMARK(BM_build_chain)->DenseRange(4, 12, 4);

void BM_stabilizer_fidelity(benchmark::State &state) {
    auto spec = GraphSpec::linear_chain(4);
    auto group = stabilizer_group(spec);
    auto rho = DensityMatrix::from_ket(random_ket(4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(stabilizer_fidelity(rho, group));
    }
}
BENCHMARK(BM_stabilizer_fidelity);

void BM_partial_trace(benchmark::State &state) {
    auto rho = DensityMatrix::from_ket(random_ket(6));
    const int keep[] = {2, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, keep));
    }
}
BENCHMARK(BM_partial_trace);

}  // namespace
