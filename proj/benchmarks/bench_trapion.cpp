// Copyright 2026 The trapion Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "trapion/trapion.hpp"

using namespace trapion;

namespace {

const ParameterSolution &operating_point() {
    static const ParameterSolution s = solve_family_a(1.0, -0.5)[1];
    return s;
}

void BM_DisplacementLaguerre(benchmark::State &state) {
    const Truncation trunc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            displacement_matrix(Complex{0.0, -0.75}, trunc, DisplacementMethod::Laguerre));
    }
}
BENCHMARK(BM_DisplacementLaguerre)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_DisplacementSpectral(benchmark::State &state) {
    const Truncation trunc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            displacement_matrix(Complex{0.0, -0.75}, trunc, DisplacementMethod::Spectral));
    }
}
BENCHMARK(BM_DisplacementSpectral)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_BuildHamiltonian(benchmark::State &state) {
    const Truncation trunc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_hamiltonian(operating_point().trap, trunc));
    }
}
BENCHMARK(BM_BuildHamiltonian)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_Prepare(benchmark::State &state) {
    const Truncation trunc(static_cast<std::size_t>(state.range(0)));
    const auto &s = operating_point();
    const SuperpositionCoeffs sup{0.70710678118654752, 0.70710678118654752};
    for (auto _ : state) {
        benchmark::DoNotOptimize(prepare(s.trap, s.eigen_coeffs(1.0), sup, trunc));
    }
}
BENCHMARK(BM_Prepare)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_TimeSeries(benchmark::State &state) {
    const auto &s = operating_point();
    const auto sys = prepare(s.trap, s.eigen_coeffs(1.0),
                             {0.70710678118654752, 0.70710678118654752}, Truncation(64));
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(time_series(sys, 0.0, 50.0, steps));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TimeSeries)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_ClosedFormInversion(benchmark::State &state) {
    const auto &s = operating_point();
    const auto sys = prepare(s.trap, s.eigen_coeffs(1.0),
                             {0.70710678118654752, 0.70710678118654752}, Truncation(64));
    const auto terms = atomic_inversion_terms(sys);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(terms.value(t));
        t += 0.01;
    }
}
BENCHMARK(BM_ClosedFormInversion);

void BM_DominantFrequency(benchmark::State &state) {
    const auto &s = operating_point();
    const auto sys = prepare(s.trap, s.eigen_coeffs(1.0),
                             {0.70710678118654752, 0.70710678118654752}, Truncation(64));
    const auto ts = time_series(sys, 0.0, 50.0, 2001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dominant_frequency(ts.sigma_z_closed, ts.times));
    }
}
BENCHMARK(BM_DominantFrequency)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
