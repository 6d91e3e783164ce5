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

#include "hullfilter/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <new>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hullfilter {

std::string_view to_string(Baseline b) noexcept {
  return b == Baseline::SequentialFilter ? "sequential-filter" : "no-filter";
}

std::string_view cli_name(Baseline b) noexcept {
  return b == Baseline::SequentialFilter ? "seqfilter" : "nofilter";
}

std::optional<Baseline> parse_baseline(std::string_view name) noexcept {
  for (auto b : {Baseline::SequentialFilter, Baseline::NoFilter}) {
    if (name == cli_name(b) || name == to_string(b)) return b;
  }
  return std::nullopt;
}

void BenchConfig::validate() const {
  distribution.validate();
  if (repetitions < 1) throw InvalidSpec("bench: repetitions must be >= 1");
  if (pipeline.segment_size < 1) throw InvalidSpec("bench: segment size must be >= 1");
}

Timing summarize(std::span<const double> samples_ms) {
  if (samples_ms.empty()) throw std::invalid_argument("summarize: no samples");
  std::vector<double> sorted(samples_ms.begin(), samples_ms.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  const double median =
      sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return {median, sorted.front()};
}

namespace {

using Clock = std::chrono::steady_clock;

double to_ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

// Guards the speedup ratio against a zero-duration measurement.
constexpr double kMinMeasurableMs = 1e-6;

double speedup(const Timing& baseline, const Timing& filtered) {
  return std::max(baseline.median_ms, kMinMeasurableMs) /
         std::max(filtered.median_ms, kMinMeasurableMs);
}

}  // namespace

template <Coordinate T>
BenchReport run_bench(const BenchConfig& config, const PointSet<T>& points) {
  if (config.repetitions < 1) throw InvalidSpec("bench: repetitions must be >= 1");
  if (points.empty()) throw EmptySet("run_bench");

  const Hull<T> reference = monotone_chain(points);
  const auto check = [&](const Hull<T>& hull) {
    if (!hull_equal(hull, reference)) {
      throw CorrectnessFailure("filtered hull (" + std::to_string(hull.size()) +
                               " vertices) differs from unfiltered hull (" +
                               std::to_string(reference.size()) + " vertices) with strategy " +
                               std::string(to_string(config.strategy)));
    }
  };

  PipelineOptions baseline_opts = config.pipeline;
  baseline_opts.par = Parallelism::sequential();
  const auto run_baseline = [&]() -> double {
    const auto t0 = Clock::now();
    if (config.baseline == Baseline::NoFilter) {
      check(monotone_chain(points));
    } else {
      check(filtered_hull(points, CompactionStrategy::Sequential, baseline_opts).hull);
    }
    return to_ms(Clock::now() - t0);
  };

  for (std::size_t w = 0; w < config.warmups; ++w) {
    check(filtered_hull(points, config.strategy, config.pipeline).hull);
    run_baseline();
  }

  std::vector<double> polygon, flagging, compaction, hull, total, baseline;
  FilterStats last;
  std::size_t hull_size = 0;
  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    auto result = filtered_hull(points, config.strategy, config.pipeline);
    check(result.hull);
    hull_size = result.hull.size();
    polygon.push_back(to_ms(result.stats.polygon));
    flagging.push_back(to_ms(result.stats.flagging));
    compaction.push_back(to_ms(result.stats.compaction));
    hull.push_back(to_ms(result.stats.hull));
    total.push_back(to_ms(result.stats.total()));
    baseline.push_back(run_baseline());
    last = std::move(result.stats);
  }

  BenchReport report;
  report.config = config;
  report.config.precision = precision_of<T>;
  report.polygon = summarize(polygon);
  report.flagging = summarize(flagging);
  report.compaction = summarize(compaction);
  report.hull = summarize(hull);
  report.total = summarize(total);
  report.baseline_total = summarize(baseline);
  report.n_input = last.n_input;
  report.n_candidates = last.n_candidates;
  report.discarded_fraction = last.discarded_fraction;
  report.hull_size = hull_size;
  report.speedup_vs_baseline = speedup(report.baseline_total, report.total);
  report.hardware_threads = std::max(1u, std::thread::hardware_concurrency());
  report.threads = resolve_threads(config.pipeline.par);
  return report;
}

BenchReport run_bench(const BenchConfig& config) {
  config.validate();
  try {
    if (config.precision == Precision::F32) {
      return run_bench(config, generate<float>(config.distribution, config.pipeline.par));
    }
    return run_bench(config, generate<double>(config.distribution, config.pipeline.par));
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate a dataset of " + std::to_string(config.distribution.n) +
                        " points");
  } catch (const std::length_error&) {
    throw ResourceError("cannot allocate a dataset of " + std::to_string(config.distribution.n) +
                        " points");
  }
}

BenchReport combine_seeds(std::span<const BenchReport> reports) {
  if (reports.empty()) throw std::invalid_argument("combine_seeds: no reports");
  BenchReport out = reports.front();
  out.seeds = reports.size();

  const auto combine = [&](Timing BenchReport::*field) {
    std::vector<double> medians;
    double min_ms = (reports.front().*field).min_ms;
    for (const auto& r : reports) {
      medians.push_back((r.*field).median_ms);
      min_ms = std::min(min_ms, (r.*field).min_ms);
    }
    return Timing{summarize(medians).median_ms, min_ms};
  };
  out.polygon = combine(&BenchReport::polygon);
  out.flagging = combine(&BenchReport::flagging);
  out.compaction = combine(&BenchReport::compaction);
  out.hull = combine(&BenchReport::hull);
  out.total = combine(&BenchReport::total);
  out.baseline_total = combine(&BenchReport::baseline_total);

  double fraction = 0.0;
  double candidates = 0.0;
  double hull_size = 0.0;
  for (const auto& r : reports) {
    fraction += r.discarded_fraction;
    candidates += static_cast<double>(r.n_candidates);
    hull_size += static_cast<double>(r.hull_size);
  }
  const double count = static_cast<double>(reports.size());
  out.discarded_fraction = fraction / count;
  out.n_candidates = static_cast<std::size_t>(std::llround(candidates / count));
  out.hull_size = static_cast<std::size_t>(std::llround(hull_size / count));
  out.speedup_vs_baseline = speedup(out.baseline_total, out.total);
  return out;
}

std::vector<BenchReport> table1_sweep(const BenchConfig& base, std::size_t seeds) {
  if (seeds < 1) throw InvalidSpec("table1: seeds must be >= 1");
  std::vector<BenchReport> rows;
  for (double p : kTable1Displacements) {
    std::vector<BenchReport> per_seed;
    for (std::size_t seed = 1; seed <= seeds; ++seed) {
      BenchConfig cfg = base;
      cfg.distribution.kind = Distribution::DisplacedCircumference;
      cfg.distribution.p = p;
      cfg.distribution.seed = seed;
      per_seed.push_back(run_bench(cfg));
    }
    rows.push_back(combine_seeds(per_seed));
  }
  return rows;
}

std::string emit_report_csv(std::span<const BenchReport> reports) {
  std::string csv =
      "distribution,n,seed,seeds,p,precision,strategy,baseline,repetitions,warmups,threads,"
      "hardware_threads,n_candidates,discarded_fraction,hull_size,"
      "polygon_median_ms,polygon_min_ms,flagging_median_ms,flagging_min_ms,"
      "compaction_median_ms,compaction_min_ms,hull_median_ms,hull_min_ms,"
      "total_median_ms,total_min_ms,baseline_median_ms,baseline_min_ms,speedup\n";
  char buf[128];
  const auto field = [&](const char* fmt, auto value) {
    std::snprintf(buf, sizeof buf, fmt, value);
    csv += buf;
  };
  const auto timing = [&](const Timing& t) {
    field(",%.6f", t.median_ms);
    field(",%.6f", t.min_ms);
  };
  for (const auto& r : reports) {
    const auto& d = r.config.distribution;
    csv += cli_name(d.kind);
    field(",%zu", d.n);
    field(",%llu", static_cast<unsigned long long>(d.seed));
    field(",%zu", r.seeds);
    field(",%.4f", d.p);
    csv += ',';
    csv += to_string(r.config.precision);
    csv += ',';
    csv += cli_name(r.config.strategy);
    csv += ',';
    csv += cli_name(r.config.baseline);
    field(",%zu", r.config.repetitions);
    field(",%zu", r.config.warmups);
    field(",%u", r.threads);
    field(",%u", r.hardware_threads);
    field(",%zu", r.n_candidates);
    field(",%.4f", r.discarded_fraction);
    field(",%zu", r.hull_size);
    timing(r.polygon);
    timing(r.flagging);
    timing(r.compaction);
    timing(r.hull);
    timing(r.total);
    timing(r.baseline_total);
    field(",%.4f", r.speedup_vs_baseline);
    csv += '\n';
  }
  return csv;
}

template BenchReport run_bench(const BenchConfig&, const PointSet<float>&);
template BenchReport run_bench(const BenchConfig&, const PointSet<double>&);

}  // namespace hullfilter
