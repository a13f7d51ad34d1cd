// Copyright 2026 The gleeful Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "gleeful/duplicates.h"
#include "gleeful/enumeration.h"
#include "gleeful/primes.h"

namespace {

using gleeful::u128;

void BM_Sieve(benchmark::State& state) {
  auto const limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gleeful::sieve_primes(limit).count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->RangeMultiplier(10)->Range(100000, 10000000)->Unit(benchmark::kMillisecond);

void BM_EnumerateInterval(benchmark::State& state) {
  u128 const x2 = static_cast<u128>(state.range(0));
  auto const prefix = gleeful::prefix_covering(2, x2);
  auto const iv = gleeful::make_interval(x2 / 2, x2);
  for (auto _ : state) {
    auto stats = gleeful::enumerate_interval(iv, prefix, [](auto const&) {});
    benchmark::DoNotOptimize(stats.emitted);
  }
}
BENCHMARK(BM_EnumerateInterval)->RangeMultiplier(100)->Range(1000000, 10000000000)
    ->Unit(benchmark::kMicrosecond);

void BM_CountExact(benchmark::State& state) {
  int const k = static_cast<int>(state.range(0));
  u128 const x = 1000000000000ULL;
  auto const prefix = gleeful::prefix_covering(k, x);
  for (auto _ : state) benchmark::DoNotOptimize(gleeful::count_exact(x, prefix));
}
BENCHMARK(BM_CountExact)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_SameKDuplicates(benchmark::State& state) {
  u128 const x = static_cast<u128>(state.range(0));
  auto const prefix = gleeful::prefix_covering(2, x);
  auto const iv = gleeful::make_interval(1, x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gleeful::find_same_k_duplicates(iv, prefix).size());
  }
}
BENCHMARK(BM_SameKDuplicates)->Arg(100000000)->Arg(1000000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
