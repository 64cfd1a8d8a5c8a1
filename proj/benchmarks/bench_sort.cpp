// Copyright 2026 The candidatesort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "csort/candidate_sort.hpp"
#include "csort/generators.hpp"
#include "csort/oracle.hpp"

namespace {

void BM_GenBanded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    csort::Instance inst = csort::gen_banded(n, 5);
    benchmark::DoNotOptimize(inst.graph);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_GenBanded)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SortBanded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const csort::Instance inst = csort::gen_banded(n, 5);
  std::size_t verifications = 0;
  for (auto _ : state) {
    csort::VerificationOracle oracle(inst.truth);
    csort::SortResult result =
        csort::sort(inst.graph, csort::AmbiguityParams{5, 5}, oracle);
    verifications = result.verifications;
    benchmark::DoNotOptimize(result.order);
  }
  state.counters["verifications"] = static_cast<double>(verifications);
  state.SetComplexityN(n);
}
BENCHMARK(BM_SortBanded)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SortCorrupt(benchmark::State& state) {
  const int n = 512;
  const int k = static_cast<int>(state.range(0));
  csort::Instance inst = csort::gen_banded(n, 5);
  inst.graph = csort::corrupt(inst.graph, inst.truth, k,
                              csort::CorruptionPolicy::RandomDirection, 7);
  std::size_t verifications = 0;
  for (auto _ : state) {
    csort::VerificationOracle oracle(inst.truth);
    csort::SortResult result =
        csort::sort(inst.graph, csort::AmbiguityParams{5, 5}, oracle);
    verifications = result.verifications;
    benchmark::DoNotOptimize(result.order);
  }
  state.counters["verifications"] = static_cast<double>(verifications);
}
BENCHMARK(BM_SortCorrupt)->RangeMultiplier(4)->Range(1, 256);

void BM_SortJnd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const csort::Instance inst = csort::gen_jnd(n, 4, 3, 11);
  std::size_t verifications = 0;
  for (auto _ : state) {
    csort::VerificationOracle oracle(inst.truth);
    csort::SortResult result =
        csort::sort(inst.graph, csort::AmbiguityParams{4, 4}, oracle);
    verifications = result.verifications;
    benchmark::DoNotOptimize(result.order);
  }
  state.counters["verifications"] = static_cast<double>(verifications);
  state.SetComplexityN(n);
}
BENCHMARK(BM_SortJnd)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ReferenceSort(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> values;
  for (int i = 0; i < n; ++i) values.push_back((i * 2654435761u) % 1000003);
  const csort::GroundTruth truth(std::move(values));
  for (auto _ : state) {
    csort::VerificationOracle oracle(truth);
    std::vector<csort::ElementId> order = csort::reference_sort(n, oracle);
    benchmark::DoNotOptimize(order);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ReferenceSort)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
