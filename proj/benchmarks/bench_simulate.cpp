// Copyright 2026 The gatesynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "gatesynth/gatesynth.hpp"

namespace {

using namespace gatesynth;

void BM_SimulateQuadratic(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Circuit c = synth_mcu_quadratic(n, EulerDecomposition{0.3, 1.1, 0.7, -0.4}.reconstruct());
    for (auto _ : state) benchmark::DoNotOptimize(simulate(c));
    state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_SimulateQuadratic)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_OperatorDistance(benchmark::State &state) {
    const auto d = static_cast<Eigen::Index>(state.range(0));
    const DenseUnitary a = DenseUnitary::Identity(d, d);
    const Eigen::HouseholderQR<DenseUnitary> qr(DenseUnitary::Random(d, d));
    const DenseUnitary b = qr.householderQ();
    for (auto _ : state) benchmark::DoNotOptimize(operator_distance(a, b));
}
BENCHMARK(BM_OperatorDistance)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

void BM_MergeAdjacent(benchmark::State &state) {
    const Circuit raw = expand_mcx_split(static_cast<std::size_t>(state.range(0)), false);
    for (auto _ : state) benchmark::DoNotOptimize(merge_adjacent(raw));
}
BENCHMARK(BM_MergeAdjacent)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
