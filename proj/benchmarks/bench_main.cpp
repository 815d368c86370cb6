// Copyright 2026 The quasibell Authors
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

#include "quasibell/quasibell.hpp"

namespace {

using namespace quasibell;

void BM_AssembleBehavior(benchmark::State& state) {
  const Model m = chained_saturating_model(static_cast<std::size_t>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_behavior(m));
}
BENCHMARK(BM_AssembleBehavior)->Arg(2)->Arg(8)->Arg(32);

void BM_CheckQuasiBell(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Model m = chained_saturating_model(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(check_quasi_bell(m, n));
}
BENCHMARK(BM_CheckQuasiBell)->Arg(2)->Arg(8)->Arg(32);

void BM_ClassicalBoundBruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::classical_bound_bruteforce(n));
}
BENCHMARK(BM_ClassicalBoundBruteForce)->DenseRange(4, 10, 2);

void BM_MaxScoreLp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::max_score_lp(n, 1.0));
}
BENCHMARK(BM_MaxScoreLp)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SignedSample(benchmark::State& state) {
  const Model m = chsh_saturating_model(1.0);
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::signed_sample(m, shots, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SignedSample)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
