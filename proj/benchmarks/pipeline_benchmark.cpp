// Copyright 2026 The hullfilter Authors.
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

// Micro-benchmarks for the pipeline stages.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "hullfilter/compaction.hpp"
#include "hullfilter/datagen.hpp"
#include "hullfilter/filter.hpp"
#include "hullfilter/hull.hpp"

namespace {

using namespace hullfilter;

PointSet<float> dataset(Distribution kind, std::size_t n, double p = 0.0) {
  DistributionSpec spec{kind, n, 1};
  spec.p = p;
  return generate<float>(spec);
}

void BM_SupportPoints(benchmark::State& state) {
  const auto points = dataset(Distribution::Normal, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_support_points(points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SupportPoints)->Arg(1 << 16)->Arg(1 << 20);

void BM_FlagCandidates(benchmark::State& state) {
  const auto points = dataset(Distribution::Normal, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flag_points(points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FlagCandidates)->Arg(1 << 16)->Arg(1 << 20);

void BM_Compaction(benchmark::State& state) {
  const auto strategy = static_cast<CompactionStrategy>(state.range(0));
  const std::size_t n = 1 << 20;
  const auto points = dataset(Distribution::Normal, n);
  const auto flags = flag_points(points).flags;
  for (auto _ : state) benchmark::DoNotOptimize(compact(points, flags, strategy));
  state.SetLabel(std::string(to_string(strategy)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Compaction)
    ->Arg(static_cast<int>(CompactionStrategy::ScanScatter))
    ->Arg(static_cast<int>(CompactionStrategy::SegmentedScanScatter))
    ->Arg(static_cast<int>(CompactionStrategy::PredicateCopy))
    ->Arg(static_cast<int>(CompactionStrategy::FlaggedSelect))
    ->Arg(static_cast<int>(CompactionStrategy::Sequential));

void BM_MonotoneChain(benchmark::State& state) {
  const auto points = dataset(Distribution::DisplacedCircumference,
                              static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(monotone_chain(points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonotoneChain)->Arg(1 << 16)->Arg(1 << 20);

void BM_FilteredHull(benchmark::State& state) {
  const auto points = dataset(Distribution::DisplacedCircumference,
                              static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(filtered_hull(points, CompactionStrategy::SegmentedScanScatter));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FilteredHull)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
