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

#include "hullfilter/compaction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hullfilter {

std::string_view to_string(CompactionStrategy s) noexcept {
  switch (s) {
    case CompactionStrategy::ScanScatter: return "scan-scatter";
    case CompactionStrategy::SegmentedScanScatter: return "segmented-scan-scatter";
    case CompactionStrategy::PredicateCopy: return "predicate-copy";
    case CompactionStrategy::FlaggedSelect: return "flagged-select";
    case CompactionStrategy::Sequential: return "sequential";
  }
  return "unknown";
}

std::string_view cli_name(CompactionStrategy s) noexcept {
  switch (s) {
    case CompactionStrategy::ScanScatter: return "scan";
    case CompactionStrategy::SegmentedScanScatter: return "segscan";
    case CompactionStrategy::PredicateCopy: return "copyif";
    case CompactionStrategy::FlaggedSelect: return "flagged";
    case CompactionStrategy::Sequential: return "seq";
  }
  return "unknown";
}

std::optional<CompactionStrategy> parse_strategy(std::string_view name) noexcept {
  for (auto s : {CompactionStrategy::ScanScatter, CompactionStrategy::SegmentedScanScatter,
                 CompactionStrategy::PredicateCopy, CompactionStrategy::FlaggedSelect,
                 CompactionStrategy::Sequential}) {
    if (name == cli_name(s) || name == to_string(s)) return s;
  }
  return std::nullopt;
}

namespace {

void require_matching(std::size_t points, const FlagVector& flags) {
  if (points != flags.size()) {
    throw std::invalid_argument("compaction: flag vector length " +
                                std::to_string(flags.size()) + " != point count " +
                                std::to_string(points));
  }
}

// Per-chunk flag counts turned into each chunk's first output slot.
std::vector<std::size_t> chunk_starts(const FlagVector& flags, const Parallelism& par,
                                      std::size_t& total) {
  const std::size_t chunks = chunk_count(flags.size(), par);
  std::vector<std::size_t> counts(chunks, 0);
  const auto* bits = flags.bits.data();
  parallel_chunks(flags.size(), par, [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::size_t count = 0;
    for (std::size_t i = begin; i < end; ++i) count += bits[i];
    counts[c] = count;
  });
  std::vector<std::size_t> starts(chunks);
  std::exclusive_scan(counts.begin(), counts.end(), starts.begin(), std::size_t{0});
  total = starts.back() + counts.back();
  return starts;
}

}  // namespace

OffsetVector exclusive_scan(const FlagVector& flags, const Parallelism& par) {
  if (flags.size() == 0) throw EmptySet("exclusive_scan");
  OffsetVector result;
  result.offsets.resize(flags.size());
  const auto starts = chunk_starts(flags, par, result.total);
  const auto* bits = flags.bits.data();
  auto* out = result.offsets.data();
  parallel_chunks(flags.size(), par, [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::size_t running = starts[c];
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = running;
      running += bits[i];
    }
  });
  return result;
}

SegmentedOffsets segmented_scan(const FlagVector& flags, std::size_t segment_size,
                                const Parallelism& par) {
  if (segment_size == 0) throw InvalidSegmentSize("segmented_scan: segment size must be >= 1");
  SegmentedOffsets result;
  result.segment_size = segment_size;
  const std::size_t n = flags.size();
  const std::size_t segments = (n + segment_size - 1) / segment_size;
  result.segment_offsets.resize(n);
  std::vector<std::size_t> totals(segments, 0);

  // Level 1: independent scans inside each segment.
  const auto* bits = flags.bits.data();
  auto* local = result.segment_offsets.data();
  Parallelism seg_par = par;
  seg_par.min_chunk = std::max<std::size_t>(1, par.min_chunk / segment_size);
  parallel_chunks(segments, seg_par, [&](std::size_t, std::size_t sbegin, std::size_t send) {
    for (std::size_t seg = sbegin; seg < send; ++seg) {
      const std::size_t begin = seg * segment_size;
      const std::size_t end = std::min(n, begin + segment_size);
      std::size_t running = 0;
      for (std::size_t i = begin; i < end; ++i) {
        local[i] = running;
        running += bits[i];
      }
      totals[seg] = running;
    }
  });

  // Level 2: scan of the per-segment totals.
  result.global_offsets.resize(segments);
  std::exclusive_scan(totals.begin(), totals.end(), result.global_offsets.begin(),
                      std::size_t{0});
  result.total = segments == 0 ? 0 : result.global_offsets.back() + totals.back();
  return result;
}

template <Coordinate T>
PointSet<T> compact_scan_scatter(const PointSet<T>& s, const FlagVector& flags, ScanMode mode,
                                 const CompactionOptions& opts) {
  require_matching(s.size(), flags);
  if (s.empty()) return {};

  const auto xs = s.xs();
  const auto ys = s.ys();
  const auto* bits = flags.bits.data();
  const auto scatter = [&](std::size_t total, const auto& slot) {
    std::vector<T> out_x(total);
    std::vector<T> out_y(total);
    parallel_chunks(s.size(), opts.par, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        if (bits[i]) {
          const std::size_t dst = slot(i);
          out_x[dst] = xs[i];
          out_y[dst] = ys[i];
        }
      }
    });
    return PointSet<T>::adopt(std::move(out_x), std::move(out_y));
  };

  if (mode == ScanMode::Flat) {
    const OffsetVector scan = exclusive_scan(flags, opts.par);
    return scatter(scan.total, [&](std::size_t i) { return scan.offsets[i]; });
  }
  const SegmentedOffsets scan = segmented_scan(flags, opts.segment_size, opts.par);
  return scatter(scan.total, [&](std::size_t i) { return scan.offset(i); });
}

template <Coordinate T>
PointSet<T> compact_copy_if(const PointSet<T>& s, const FlagVector& flags,
                            const CompactionOptions& opts) {
  require_matching(s.size(), flags);
  if (s.empty()) return {};

  std::size_t total = 0;
  const auto starts = chunk_starts(flags, opts.par, total);
  std::vector<T> out_x(total);
  std::vector<T> out_y(total);
  const auto xs = s.xs();
  const auto ys = s.ys();
  const auto* bits = flags.bits.data();
  parallel_chunks(s.size(), opts.par, [&](std::size_t c, std::size_t begin, std::size_t end) {
    // The predicate recovers each element's index from its address and reads
    // the flag at that index.
    const auto keep_x = [&](const T& v) { return bits[&v - xs.data()] != 0; };
    const auto keep_y = [&](const T& v) { return bits[&v - ys.data()] != 0; };
    std::copy_if(xs.begin() + begin, xs.begin() + end, out_x.begin() + starts[c], keep_x);
    std::copy_if(ys.begin() + begin, ys.begin() + end, out_y.begin() + starts[c], keep_y);
  });
  return PointSet<T>::adopt(std::move(out_x), std::move(out_y));
}

template <Coordinate T>
FlaggedSelection<T> compact_flagged(const PointSet<T>& s, const FlagVector& flags,
                                    const CompactionOptions& opts) {
  require_matching(s.size(), flags);
  if (s.empty()) return {};

  std::size_t total = 0;
  const auto starts = chunk_starts(flags, opts.par, total);
  std::vector<T> out_x(total);
  std::vector<T> out_y(total);
  std::vector<std::size_t> written(starts.size(), 0);
  const auto xs = s.xs();
  const auto ys = s.ys();
  const auto* bits = flags.bits.data();
  parallel_chunks(s.size(), opts.par, [&](std::size_t c, std::size_t begin, std::size_t end) {
    T* dst_x = out_x.data() + starts[c];
    T* dst_y = out_y.data() + starts[c];
    const std::size_t limit = (c + 1 < starts.size() ? starts[c + 1] : total) - starts[c];
    std::size_t k = 0;
    // Branch-free select: always write slot k, advance only on a set flag.
    // While k < limit a flagged element is still ahead and overwrites the
    // slot; at k == limit the rest of the chunk is unflagged.
    for (std::size_t i = begin; i < end && k < limit; ++i) {
      dst_x[k] = xs[i];
      dst_y[k] = ys[i];
      k += bits[i] != 0;
    }
    written[c] = k;
  });

  FlaggedSelection<T> result;
  result.selected_count = std::accumulate(written.begin(), written.end(), std::size_t{0});
  result.points = PointSet<T>::adopt(std::move(out_x), std::move(out_y));
  return result;
}

template <Coordinate T>
PointSet<T> compact_sequential(const PointSet<T>& s, const FlagVector& flags) {
  require_matching(s.size(), flags);
  std::vector<T> out_x;
  std::vector<T> out_y;
  const auto xs = s.xs();
  const auto ys = s.ys();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (flags.bits[i]) {
      out_x.push_back(xs[i]);
      out_y.push_back(ys[i]);
    }
  }
  return PointSet<T>::adopt(std::move(out_x), std::move(out_y));
}

template <Coordinate T>
PointSet<T> compact(const PointSet<T>& s, const FlagVector& flags, CompactionStrategy strategy,
                    const CompactionOptions& opts) {
  switch (strategy) {
    case CompactionStrategy::ScanScatter:
      return compact_scan_scatter(s, flags, ScanMode::Flat, opts);
    case CompactionStrategy::SegmentedScanScatter:
      return compact_scan_scatter(s, flags, ScanMode::Segmented, opts);
    case CompactionStrategy::PredicateCopy:
      return compact_copy_if(s, flags, opts);
    case CompactionStrategy::FlaggedSelect:
      return compact_flagged(s, flags, opts).points;
    case CompactionStrategy::Sequential:
      return compact_sequential(s, flags);
  }
  throw std::invalid_argument("compact: unknown strategy");
}

#define HULLFILTER_INSTANTIATE(T)                                                             \
  template PointSet<T> compact_scan_scatter(const PointSet<T>&, const FlagVector&, ScanMode, \
                                            const CompactionOptions&);                       \
  template PointSet<T> compact_copy_if(const PointSet<T>&, const FlagVector&,                \
                                       const CompactionOptions&);                            \
  template FlaggedSelection<T> compact_flagged(const PointSet<T>&, const FlagVector&,        \
                                               const CompactionOptions&);                    \
  template PointSet<T> compact_sequential(const PointSet<T>&, const FlagVector&);            \
  template PointSet<T> compact(const PointSet<T>&, const FlagVector&, CompactionStrategy,    \
                               const CompactionOptions&);

HULLFILTER_INSTANTIATE(float)
HULLFILTER_INSTANTIATE(double)

#undef HULLFILTER_INSTANTIATE

}  // namespace hullfilter
