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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hullfilter/compaction.hpp"
#include "hullfilter/datagen.hpp"
#include "hullfilter/hull.hpp"

namespace hullfilter {

/// What the filtered pipeline's speedup is measured against.
enum class Baseline {
  SequentialFilter,  ///< same pipeline, Sequential strategy, one thread
  NoFilter,          ///< monotone chain on every input point
};

std::string_view to_string(Baseline b) noexcept;
/// Accepts the CLI names: seqfilter, nofilter.
std::optional<Baseline> parse_baseline(std::string_view name) noexcept;
std::string_view cli_name(Baseline b) noexcept;

struct BenchConfig {
  DistributionSpec distribution;
  CompactionStrategy strategy = CompactionStrategy::SegmentedScanScatter;
  std::size_t repetitions = 5;
  std::size_t warmups = 2;
  Precision precision = Precision::F32;
  Baseline baseline = Baseline::NoFilter;
  PipelineOptions pipeline{};

  /// Throws InvalidSpec.
  void validate() const;
};

/// Median and minimum over repetitions, in milliseconds.
struct Timing {
  double median_ms = 0.0;
  double min_ms = 0.0;
};

/// Median is the middle element (mean of the two middle elements for an even
/// count) of the sorted samples, so it does not depend on sample order.
/// Throws std::invalid_argument on an empty span.
Timing summarize(std::span<const double> samples_ms);

struct BenchReport {
  BenchConfig config;
  std::size_t seeds = 1;  ///< > 1 for reports averaged over seeds

  Timing polygon;
  Timing flagging;
  Timing compaction;
  Timing hull;
  Timing total;
  Timing baseline_total;

  std::size_t n_input = 0;
  std::size_t n_candidates = 0;
  double discarded_fraction = 0.0;
  std::size_t hull_size = 0;
  double speedup_vs_baseline = 0.0;

  unsigned hardware_threads = 0;
  unsigned threads = 0;
};

/// Generates the configured dataset and benchmarks it. Warmups are run and
/// discarded; each repetition times every pipeline stage with a monotonic
/// clock and runs the baseline. The filtered hull is checked against the
/// unfiltered monotone chain before a report is returned.
///
/// Throws CorrectnessFailure when the hulls differ, ResourceError when the
/// dataset cannot be allocated and InvalidSpec for a bad config.
BenchReport run_bench(const BenchConfig& config);

/// Same, on a caller-supplied dataset (config.distribution is echoed only).
template <Coordinate T>
BenchReport run_bench(const BenchConfig& config, const PointSet<T>& points);

/// Averages discarded fraction, candidate count and hull size and takes the
/// median of each timing over reports of the same configuration but
/// different seeds.
BenchReport combine_seeds(std::span<const BenchReport> reports);

/// Displacement values of the filtered-percentage sweep.
inline constexpr double kTable1Displacements[] = {0.00, 0.02, 0.04, 0.06, 0.08, 0.10};

/// Displaced-circumference sweep over kTable1Displacements with `seeds`
/// seeds (1..seeds) per value; one seed-averaged report per value.
std::vector<BenchReport> table1_sweep(const BenchConfig& base, std::size_t seeds);

/// CSV with a fixed header; fractions with 4 decimals, times with 6.
std::string emit_report_csv(std::span<const BenchReport> reports);

}  // namespace hullfilter
