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

// hullfilter: generate point sets, run the filtered convex hull pipeline and
// benchmark it.
//
//   hullfilter generate --dist displaced --n 1000000 --seed 1 --p 0.1 --precision f32 --out pts.bin
//   hullfilter filter   --in pts.bin --strategy segscan --stats
//   hullfilter hull     --in pts.bin --out hull.csv
//   hullfilter bench    --dist normal --n 1000000 --strategy copyif --reps 5 --baseline nofilter --csv run.csv
//   hullfilter table1   --n 1000000 --csv table1.csv

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "hullfilter/bench.hpp"
#include "hullfilter/datagen.hpp"
#include "hullfilter/hull.hpp"
#include "hullfilter/point_io.hpp"

namespace {

using namespace hullfilter;

template <class E>
std::map<std::string, E> choices(std::initializer_list<E> values) {
  std::map<std::string, E> out;
  for (E v : values) out.emplace(std::string(cli_name(v)), v);
  return out;
}

const std::map<std::string, Precision> kPrecisions{{"f32", Precision::F32},
                                                   {"f64", Precision::F64}};

const auto kStrategies =
    choices({CompactionStrategy::ScanScatter, CompactionStrategy::SegmentedScanScatter,
             CompactionStrategy::PredicateCopy, CompactionStrategy::FlaggedSelect,
             CompactionStrategy::Sequential});

const auto kDistributions = choices(
    {Distribution::Normal, Distribution::Circumference, Distribution::DisplacedCircumference});

const auto kBaselines = choices({Baseline::SequentialFilter, Baseline::NoFilter});

// Enum-valued option selected by name; matching is case-insensitive.
template <class E>
CLI::Option* add_choice(CLI::App& cmd, const std::string& name, E& var,
                        const std::map<std::string, E>& names, const std::string& help) {
  std::string current;
  for (const auto& [key, value] : names)
    if (value == var) current = key;
  return cmd
      .add_option_function<std::string>(
          name, [&var, &names](const std::string& v) { var = names.at(v); }, help)
      ->transform(CLI::IsMember(names, CLI::ignore_case))
      ->default_str(current);
}

void add_distribution_options(CLI::App& cmd, DistributionSpec& spec, bool require_dist) {
  auto* dist = add_choice(cmd, "--dist", spec.kind, kDistributions, "Point distribution");
  if (require_dist) dist->required();
  cmd.add_option("--n", spec.n, "Number of points")->required()->check(CLI::PositiveNumber);
  cmd.add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
  cmd.add_option("--p", spec.p, "Displacement parameter in [0, 1]")->capture_default_str();
  cmd.add_option("--mu", spec.mu, "Normal mean")->capture_default_str();
  cmd.add_option("--sigma", spec.sigma, "Normal standard deviation")->capture_default_str();
  cmd.add_option("--r", spec.r, "Circle radius")->capture_default_str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

void print_stats(const FilterStats& s, std::size_t hull_size, bool with_hull) {
  std::printf("n_input=%zu\n", s.n_input);
  std::printf("n_candidates=%zu\n", s.n_candidates);
  std::printf("discarded_fraction=%.4f\n", s.discarded_fraction);
  std::printf("bypassed=%s\n", s.bypassed ? "true" : "false");
  std::printf("polygon_ms=%.6f\n", std::chrono::duration<double, std::milli>(s.polygon).count());
  std::printf("flagging_ms=%.6f\n", std::chrono::duration<double, std::milli>(s.flagging).count());
  std::printf("compaction_ms=%.6f\n",
              std::chrono::duration<double, std::milli>(s.compaction).count());
  if (with_hull) {
    std::printf("hull_ms=%.6f\n", std::chrono::duration<double, std::milli>(s.hull).count());
    std::printf("hull_size=%zu\n", hull_size);
  }
  if (s.bypassed) std::fprintf(stderr, "%s\n", s.diagnostic.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eight-point polygon filter for 2D convex hulls"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all hardware threads)")
      ->capture_default_str();

  // generate
  DistributionSpec gen_spec;
  Precision gen_precision = Precision::F32;
  std::string gen_out;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a point set");
  add_distribution_options(*generate_cmd, gen_spec, true);
  add_choice(*generate_cmd, "--precision", gen_precision, kPrecisions, "Storage precision");
  generate_cmd->add_option("--out", gen_out, "Output file (.csv for CSV)")->required();

  // filter
  std::string filter_in, filter_out;
  CompactionStrategy filter_strategy = CompactionStrategy::SegmentedScanScatter;
  bool filter_stats = false;
  Precision csv_precision = Precision::F32;
  auto* filter_cmd = app.add_subcommand("filter", "Discard points inside the support polygon");
  filter_cmd->add_option("--in", filter_in, "Input point file")->required()->check(CLI::ExistingFile);
  add_choice(*filter_cmd, "--strategy", filter_strategy, kStrategies, "Compaction strategy");
  filter_cmd->add_flag("--stats", filter_stats, "Print filter statistics");
  filter_cmd->add_option("--out", filter_out, "Write surviving candidates here");
  add_choice(*filter_cmd, "--csv-precision", csv_precision, kPrecisions, "Precision for CSV input");

  // hull
  std::string hull_in, hull_out;
  bool no_filter = false;
  bool hull_stats = false;
  CompactionStrategy hull_strategy = CompactionStrategy::SegmentedScanScatter;
  auto* hull_cmd = app.add_subcommand("hull", "Compute the convex hull");
  hull_cmd->add_option("--in", hull_in, "Input point file")->required()->check(CLI::ExistingFile);
  hull_cmd->add_option("--out", hull_out, "Hull vertices, counterclockwise (.csv for CSV)")
      ->required();
  hull_cmd->add_flag("--no-filter", no_filter, "Skip the filter stage");
  hull_cmd->add_flag("--stats", hull_stats, "Print pipeline statistics");
  add_choice(*hull_cmd, "--strategy", hull_strategy, kStrategies, "Compaction strategy");
  add_choice(*hull_cmd, "--csv-precision", csv_precision, kPrecisions, "Precision for CSV input");

  // bench
  BenchConfig bench_cfg;
  std::string bench_csv;
  std::size_t segment_size = kDefaultSegmentSize;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark one configuration");
  add_distribution_options(*bench_cmd, bench_cfg.distribution, true);
  add_choice(*bench_cmd, "--strategy", bench_cfg.strategy, kStrategies, "Compaction strategy");
  bench_cmd->add_option("--reps", bench_cfg.repetitions, "Timed repetitions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--warmups", bench_cfg.warmups, "Untimed warmup runs")
      ->capture_default_str();
  add_choice(*bench_cmd, "--baseline", bench_cfg.baseline, kBaselines, "Speedup baseline");
  add_choice(*bench_cmd, "--precision", bench_cfg.precision, kPrecisions, "Storage precision");
  bench_cmd->add_option("--segment-size", segment_size, "Segment size for segscan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--csv", bench_csv, "Report file (default: standard output)");

  // table1
  BenchConfig table_cfg;
  table_cfg.repetitions = 1;
  table_cfg.warmups = 0;
  std::size_t table_seeds = 5;
  std::string table_csv;
  auto* table_cmd =
      app.add_subcommand("table1", "Filtered-percentage sweep over displaced circumferences");
  table_cmd->add_option("--n", table_cfg.distribution.n, "Points per set")
      ->required()
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--seeds", table_seeds, "Seeds averaged per p value")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_choice(*table_cmd, "--strategy", table_cfg.strategy, kStrategies, "Compaction strategy");
  table_cmd->add_option("--reps", table_cfg.repetitions, "Timed repetitions per seed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table_cmd->add_option("--warmups", table_cfg.warmups, "Warmups per seed")->capture_default_str();
  add_choice(*table_cmd, "--baseline", table_cfg.baseline, kBaselines, "Speedup baseline");
  add_choice(*table_cmd, "--precision", table_cfg.precision, kPrecisions, "Storage precision");
  table_cmd->add_option("--csv", table_csv, "Report file (default: standard output)");

  CLI11_PARSE(app, argc, argv);

  const Parallelism par = threads == 0 ? Parallelism{} : Parallelism::with_threads(threads);
  PipelineOptions pipeline;
  pipeline.par = par;

  try {
    if (*generate_cmd) {
      if (gen_precision == Precision::F32) {
        save_points(gen_out, generate<float>(gen_spec, par));
      } else {
        save_points(gen_out, generate<double>(gen_spec, par));
      }
    } else if (*filter_cmd) {
      std::visit(
          [&](const auto& points) {
            const auto result = filter_points(points, filter_strategy, pipeline);
            if (!filter_out.empty()) save_points(filter_out, result.candidates);
            if (filter_stats) print_stats(result.stats, 0, false);
          },
          load_points(filter_in, csv_precision));
    } else if (*hull_cmd) {
      std::visit(
          [&](const auto& points) {
            using T = typename std::decay_t<decltype(points)>::value_type;
            Hull<T> hull;
            if (no_filter) {
              hull = monotone_chain(points);
            } else {
              auto result = filtered_hull(points, hull_strategy, pipeline);
              if (hull_stats) print_stats(result.stats, result.hull.size(), true);
              hull = std::move(result.hull);
            }
            save_points(hull_out, PointSet<T>::from_points(hull.vertices));
          },
          load_points(hull_in, csv_precision));
    } else if (*bench_cmd) {
      bench_cfg.pipeline = pipeline;
      bench_cfg.pipeline.segment_size = segment_size;
      const std::vector<BenchReport> reports{run_bench(bench_cfg)};
      write_text(bench_csv, emit_report_csv(reports));
    } else if (*table_cmd) {
      table_cfg.pipeline = pipeline;
      table_cfg.distribution.kind = Distribution::DisplacedCircumference;
      const auto reports = table1_sweep(table_cfg, table_seeds);
      write_text(table_csv, emit_report_csv(reports));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "hullfilter: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
