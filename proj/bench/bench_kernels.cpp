// Copyright 2026 The qroute Authors
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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qroute/coupling.hpp"
#include "qroute/generate.hpp"
#include "qroute/search.hpp"
#include "qroute/statevector.hpp"
#include "qroute/verify.hpp"

using namespace qroute;

namespace {

Circuit bench_circuit(std::size_t q, std::size_t cnots) {
  return random_circuit(11, {q, cnots, cnots});
}

void BM_Simulate(benchmark::State& state) {
  const std::size_t q = static_cast<std::size_t>(state.range(0));
  const Circuit c = bench_circuit(q, 40);
  const StateVector in = StateVector::basis(q, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate(c, in));
}

void BM_SimulateSerial(benchmark::State& state) {
  const std::size_t q = static_cast<std::size_t>(state.range(0));
  const Circuit c = bench_circuit(q, 40);
  const StateVector in = StateVector::basis(q, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_serial(c, in));
}

void BM_Apsp(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const CouplingGraph g = random_coupling(5, n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(all_pairs_shortest_paths(g));
}

void BM_ApspSerial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const CouplingGraph g = random_coupling(5, n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(all_pairs_shortest_paths_serial(g));
}

void BM_Equivalence(benchmark::State& state) {
  const std::size_t q = static_cast<std::size_t>(state.range(0));
  const Circuit c = bench_circuit(q, 20);
  const Configuration id = Configuration::identity(q);
  for (auto _ : state)
    benchmark::DoNotOptimize(equivalence_error(c, c, id, id));
}

void BM_EquivalenceSerial(benchmark::State& state) {
  const std::size_t q = static_cast<std::size_t>(state.range(0));
  const Circuit c = bench_circuit(q, 20);
  const Configuration id = Configuration::identity(q);
  for (auto _ : state)
    benchmark::DoNotOptimize(equivalence_error_serial(c, c, id, id));
}

void BM_Exact(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Circuit c = random_circuit(3, {5, n, 0});
  const CouplingGraph g = random_coupling(3, 5, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(compile_exact(c, g));
}

void BM_ExactSerial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Circuit c = random_circuit(3, {5, n, 0});
  const CouplingGraph g = random_coupling(3, 5, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(compile_exact_serial(c, g));
}

} // namespace

BENCHMARK(BM_Simulate)->DenseRange(8, 12, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SimulateSerial)->DenseRange(8, 12, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Apsp)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApspSerial)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Equivalence)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivalenceSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Exact)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactSerial)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
