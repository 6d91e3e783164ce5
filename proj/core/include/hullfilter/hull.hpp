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

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "hullfilter/compaction.hpp"
#include "hullfilter/filter.hpp"
#include "hullfilter/geometry.hpp"

namespace hullfilter {

/// Convex hull in canonical form: strictly convex, counterclockwise, no
/// duplicates, starting at the lexicographically smallest vertex.
template <Coordinate T>
struct Hull {
  std::vector<Point2<T>> vertices;

  std::size_t size() const noexcept { return vertices.size(); }

  friend bool operator==(const Hull&, const Hull&) = default;
};

/// Andrew's monotone chain, O(n log n). Collinear boundary points and
/// duplicates are excluded. Throws EmptySet.
template <Coordinate T>
Hull<T> monotone_chain(const PointSet<T>& s);

/// Jarvis march, O(nh). Meant as a slow reference for small inputs.
/// Throws EmptySet.
template <Coordinate T>
Hull<T> gift_wrapping(const PointSet<T>& s);

template <Coordinate T>
bool hull_equal(const Hull<T>& a, const Hull<T>& b) noexcept {
  return a.vertices == b.vertices;
}

enum class HullAlgorithm { MonotoneChain, GiftWrapping };

struct PipelineOptions {
  Parallelism par{};
  std::size_t segment_size = kDefaultSegmentSize;
  HullAlgorithm hull_algorithm = HullAlgorithm::MonotoneChain;
};

struct FilterStats {
  using Duration = std::chrono::nanoseconds;

  std::size_t n_input = 0;
  std::size_t n_candidates = 0;
  double discarded_fraction = 0.0;
  bool bypassed = false;   ///< polygon degenerate; every point kept
  std::string diagnostic;  ///< set when bypassed

  Duration polygon{};
  Duration flagging{};
  Duration compaction{};
  Duration hull{};

  Duration filter_total() const noexcept { return polygon + flagging + compaction; }
  Duration total() const noexcept { return filter_total() + hull; }
};

template <Coordinate T>
struct FilteredPoints {
  PointSet<T> candidates;
  FilterStats stats;  ///< hull duration is left at zero
};

/// Polygon construction, flagging and compaction. Throws EmptySet.
template <Coordinate T>
FilteredPoints<T> filter_points(const PointSet<T>& s, CompactionStrategy strategy,
                                const PipelineOptions& opts = {});

template <Coordinate T>
struct FilteredHull {
  Hull<T> hull;
  FilterStats stats;
};

/// The full pipeline: filter_points() followed by the configured hull
/// algorithm on the surviving candidates. Throws EmptySet.
template <Coordinate T>
FilteredHull<T> filtered_hull(const PointSet<T>& s, CompactionStrategy strategy,
                              const PipelineOptions& opts = {});

}  // namespace hullfilter
