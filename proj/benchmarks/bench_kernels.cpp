// Copyright 2026 The bosim Authors
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

#include <benchmark/benchmark.h>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

#include "bosim/matrix.hpp"
#include "bosim/permanent.hpp"
#include "bosim/sampling.hpp"
#include "bosim/validate.hpp"

namespace bosim {
namespace {

CMatrix gaussian(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CMatrix a(n, n);
    for (auto &z : a.data()) {
        z = cplx(normal(rng), normal(rng));
    }
    return a;
}

void perm_naive_bench(benchmark::State &state) {
    const CMatrix a = gaussian(static_cast<size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(perm_naive(a));
    }
}

void perm_ryser_bench(benchmark::State &state) {
    const CMatrix a = gaussian(static_cast<size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(perm_ryser(a, 1));
    }
}

void perm_glynn_bench(benchmark::State &state) {
    const CMatrix a = gaussian(static_cast<size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(perm_glynn(a, 1));
    }
}

void boson_draw_bench(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const TransferMatrix u = haar_unitary(60, 7);
    std::vector<int> ports(static_cast<size_t>(n));
    std::iota(ports.begin(), ports.end(), 0);
    const BosonSampler sampler(u, InputConfig(60, ports));
    std::vector<int> out;
    uint64_t i = 0;
    for (auto _ : state) {
        SplitMix64 rng(draw_seed(1, i++));
        sampler.draw(rng, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void bayes_draw_bench(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const TransferMatrix u = haar_unitary(60, 7);
    std::vector<int> ports(static_cast<size_t>(n));
    std::iota(ports.begin(), ports.end(), 0);
    const SampleSet draws = sample_boson(u, InputConfig(60, ports), 64, 3);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bayes_log_ratio(u.elements, ports, draws.draw(i++ % draws.size())));
    }
}

BENCHMARK(perm_naive_bench)->Name("perm_naive")->DenseRange(2, 9, 1)->Unit(benchmark::kNanosecond);
BENCHMARK(perm_ryser_bench)->Name("perm_ryser")->DenseRange(2, 22, 2)->Unit(benchmark::kNanosecond);
BENCHMARK(perm_glynn_bench)->Name("perm_glynn")->DenseRange(2, 22, 2)->Unit(benchmark::kNanosecond);
BENCHMARK(boson_draw_bench)->Name("boson_draw_m60")->DenseRange(2, 20, 2)->Unit(benchmark::kNanosecond);
BENCHMARK(bayes_draw_bench)->Name("bayes_draw_m60")->DenseRange(2, 10, 2)->Unit(benchmark::kNanosecond);

class CsvReporter : public benchmark::BenchmarkReporter {
   public:
    bool ReportContext(const Context &) override {
        GetOutputStream() << "n,kernel,ns\n" << std::fixed << std::setprecision(1);
        return true;
    }
    void ReportRuns(const std::vector<Run> &runs) override {
        for (const Run &run : runs) {
            if (run.error_occurred) {
                continue;
            }
            const std::string name = run.benchmark_name();
            const size_t slash = name.find('/');
            GetOutputStream() << name.substr(slash + 1) << ',' << name.substr(0, slash) << ','
                              << run.GetAdjustedRealTime() << '\n';
        }
    }
};

}  // namespace
}  // namespace bosim

int main(int argc, char **argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    bosim::CsvReporter csv;
    benchmark::RunSpecifiedBenchmarks(&csv);
    benchmark::Shutdown();
    return 0;
}
