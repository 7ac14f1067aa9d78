// Copyright 2026 The gapseq Authors
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

#include <vector>

#include "gapseq/enumeration.hpp"
#include "gapseq/rr_ledger.hpp"
#include "gapseq/semigroup.hpp"
#include "gapseq/structure.hpp"

using namespace gapseq;

static void BM_TreeCount(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = count_gap_sequences(genus, Method::kTree, {1});
    benchmark::DoNotOptimize(count);
  }
  state.counters["sequences"] = static_cast<double>(count);
  state.counters["seq/s"] = benchmark::Counter(static_cast<double>(count),
                                               benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_TreeCount)->DenseRange(10, 30, 5)->Unit(benchmark::kMillisecond);

static void BM_TreeCountWorkers(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_gap_sequences(28, Method::kTree, {workers}));
  }
}
BENCHMARK(BM_TreeCountWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_OracleCount(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_gap_sequences(genus, Method::kOracle));
  }
}
BENCHMARK(BM_OracleCount)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_TreeEnumerate(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = tree_enumerate(genus);
    benchmark::DoNotOptimize(result.sequences.data());
  }
}
BENCHMARK(BM_TreeEnumerate)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

static void BM_ValidateHyperelliptic(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const std::vector<int> gaps = hyperelliptic_sequence(genus).gaps();
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_gap_sequence(gaps, genus).valid);
  }
}
BENCHMARK(BM_ValidateHyperelliptic)->RangeMultiplier(2)->Range(4, 64);

static void BM_Ledger(benchmark::State& state) {
  const GapSequence seq = exceptional_sequence(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const DimensionLedger ledger = dimension_ledger(seq);
    benchmark::DoNotOptimize(verify_riemann_roch(ledger).valid);
  }
}
BENCHMARK(BM_Ledger)->RangeMultiplier(2)->Range(4, 64);

BENCHMARK_MAIN();
