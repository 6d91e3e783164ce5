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
#include <string_view>
#include <vector>

#include "hullfilter/filter.hpp"
#include "hullfilter/geometry.hpp"

namespace hullfilter {

/// Order-preserving compaction strategies. All compute the same function.
enum class CompactionStrategy {
  ScanScatter,           ///< flat exclusive scan, then scatter
  SegmentedScanScatter,  ///< two-level (per-segment + global) scan, then scatter
  PredicateCopy,         ///< stable copy driven by a predicate over the flags
  FlaggedSelect,         ///< flag-driven selection that also reports the count
  Sequential,            ///< single-threaded reference loop
};

std::string_view to_string(CompactionStrategy s) noexcept;
/// Accepts the CLI names: scan, segscan, copyif, flagged, seq.
std::optional<CompactionStrategy> parse_strategy(std::string_view name) noexcept;
std::string_view cli_name(CompactionStrategy s) noexcept;

inline constexpr std::size_t kDefaultSegmentSize = 256;

/// Exclusive prefix sum of a flag vector.
struct OffsetVector {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
};

/// Two-level scan: offset of element i is
/// segment_offsets[i] + global_offsets[i / segment_size].
struct SegmentedOffsets {
  std::size_t segment_size = 0;
  std::vector<std::size_t> segment_offsets;  ///< scan restarted at each segment
  std::vector<std::size_t> global_offsets;   ///< exclusive scan of segment totals
  std::size_t total = 0;

  std::size_t offset(std::size_t i) const noexcept {
    return segment_offsets[i] + global_offsets[i / segment_size];
  }
};

/// Throws EmptySet when flags is empty.
OffsetVector exclusive_scan(const FlagVector& flags, const Parallelism& par = {});

/// Throws InvalidSegmentSize when segment_size == 0.
SegmentedOffsets segmented_scan(const FlagVector& flags, std::size_t segment_size,
                                const Parallelism& par = {});

enum class ScanMode { Flat, Segmented };

struct CompactionOptions {
  Parallelism par{};
  std::size_t segment_size = kDefaultSegmentSize;
};

template <Coordinate T>
struct FlaggedSelection {
  PointSet<T> points;
  std::size_t selected_count = 0;
};

// Every compaction below requires flags.size() == s.size() and throws
// std::invalid_argument otherwise. The output holds the flagged points in
// their original relative order; an empty output is valid.

template <Coordinate T>
PointSet<T> compact_scan_scatter(const PointSet<T>& s, const FlagVector& flags,
                                 ScanMode mode, const CompactionOptions& opts = {});

template <Coordinate T>
PointSet<T> compact_copy_if(const PointSet<T>& s, const FlagVector& flags,
                            const CompactionOptions& opts = {});

template <Coordinate T>
FlaggedSelection<T> compact_flagged(const PointSet<T>& s, const FlagVector& flags,
                                    const CompactionOptions& opts = {});

template <Coordinate T>
PointSet<T> compact_sequential(const PointSet<T>& s, const FlagVector& flags);

/// Dispatches to the strategy's implementation.
template <Coordinate T>
PointSet<T> compact(const PointSet<T>& s, const FlagVector& flags,
                    CompactionStrategy strategy, const CompactionOptions& opts = {});

}  // namespace hullfilter
