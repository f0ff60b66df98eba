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

const Unitary2 &payload() {
    static const Unitary2 u = EulerDecomposition{0.3, 1.1, 0.7, -0.4}.reconstruct();
    return u;
}

void BM_ControlledU(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(synth_c_u(payload()));
}
BENCHMARK(BM_ControlledU);

void BM_GrayCodeBasic(benchmark::State &state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(synth_graycode(m, payload(), Level::kBasic));
}
BENCHMARK(BM_GrayCodeBasic)->DenseRange(3, 9, 2);

void BM_SplitExpanded(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expand_mcx_split(n));
}
BENCHMARK(BM_SplitExpanded)->RangeMultiplier(2)->Range(8, 64);

void BM_Quadratic(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(synth_mcu_quadratic(n, payload()));
    state.counters["gates"] = static_cast<double>(synth_mcu_quadratic(n, payload()).size());
}
BENCHMARK(BM_Quadratic)->RangeMultiplier(2)->Range(8, 64);

void BM_GeneralUnitary(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Eigen::Index d = Eigen::Index{1} << n;
    const Eigen::HouseholderQR<DenseUnitary> qr(DenseUnitary::Random(d, d));
    const DenseUnitary u = qr.householderQ();
    for (auto _ : state) benchmark::DoNotOptimize(synth_unitary(u));
}
BENCHMARK(BM_GeneralUnitary)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
