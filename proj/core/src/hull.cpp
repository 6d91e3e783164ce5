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

#include "hullfilter/hull.hpp"

#include <algorithm>
#include <stdexcept>

namespace hullfilter {

namespace {

template <Coordinate T>
std::vector<Point2<T>> sorted_unique(const PointSet<T>& s) {
  std::vector<Point2<T>> pts = s.to_points();
  std::sort(pts.begin(), pts.end(), lex_less<T>);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// For collinear p, q, c with q != c: true iff q lies on the segment p-c.
template <Coordinate T>
bool on_segment(const Point2<T>& p, const Point2<T>& q, const Point2<T>& c) noexcept {
  return std::min(p.x, c.x) <= q.x && q.x <= std::max(p.x, c.x) &&
         std::min(p.y, c.y) <= q.y && q.y <= std::max(p.y, c.y);
}

using Clock = std::chrono::steady_clock;

FilterStats::Duration since(Clock::time_point start) {
  return std::chrono::duration_cast<FilterStats::Duration>(Clock::now() - start);
}

}  // namespace

template <Coordinate T>
Hull<T> monotone_chain(const PointSet<T>& s) {
  if (s.empty()) throw EmptySet("monotone_chain");
  const std::vector<Point2<T>> pts = sorted_unique(s);
  if (pts.size() == 1) return {pts};

  std::vector<Point2<T>> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {  // lower hull, left to right
    while (k >= 2 && orientation(chain[k - 2], chain[k - 1], p) != Orientation::CounterClockwise) {
      --k;
    }
    chain[k++] = p;
  }
  const std::size_t lower_size = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {  // upper hull, right to left
    const auto& p = pts[i];
    while (k >= lower_size &&
           orientation(chain[k - 2], chain[k - 1], p) != Orientation::CounterClockwise) {
      --k;
    }
    chain[k++] = p;
  }
  chain.resize(k - 1);  // last point repeats the first
  return {std::move(chain)};
}

template <Coordinate T>
Hull<T> gift_wrapping(const PointSet<T>& s) {
  if (s.empty()) throw EmptySet("gift_wrapping");
  const std::vector<Point2<T>> pts = sorted_unique(s);
  if (pts.size() == 1) return {pts};

  const Point2<T> start = pts.front();
  Hull<T> hull;
  hull.vertices.push_back(start);
  Point2<T> p = start;
  while (true) {
    Point2<T> q = pts[0] == p ? pts[1] : pts[0];
    for (const auto& c : pts) {
      if (c == p || c == q) continue;
      const Orientation o = orientation(p, q, c);
      if (o == Orientation::Clockwise || (o == Orientation::Collinear && on_segment(p, q, c))) {
        q = c;
      }
    }
    if (q == start) break;
    hull.vertices.push_back(q);
    p = q;
    if (hull.vertices.size() > pts.size()) {
      throw std::logic_error("gift_wrapping: walk did not close");
    }
  }
  return hull;
}

template <Coordinate T>
FilteredPoints<T> filter_points(const PointSet<T>& s, CompactionStrategy strategy,
                                const PipelineOptions& opts) {
  if (s.empty()) throw EmptySet("filter_points");
  FilteredPoints<T> result;
  FilterStats& stats = result.stats;
  stats.n_input = s.size();

  auto t0 = Clock::now();
  std::optional<OctagonFilter<T>> octagon;
  try {
    octagon.emplace(build_octagon(s, opts.par));
  } catch (const DegeneratePolygon& e) {
    stats.bypassed = true;
    stats.diagnostic = std::string("filter bypassed: ") + e.what();
  }
  stats.polygon = since(t0);

  if (!octagon) {
    t0 = Clock::now();
    result.candidates = s;
    stats.compaction = since(t0);
    stats.n_candidates = s.size();
    return result;
  }

  t0 = Clock::now();
  const FlagVector flags = flag_candidates(s, *octagon, opts.par);
  stats.flagging = since(t0);

  t0 = Clock::now();
  result.candidates = compact(s, flags, strategy, CompactionOptions{opts.par, opts.segment_size});
  stats.compaction = since(t0);

  stats.n_candidates = result.candidates.size();
  stats.discarded_fraction =
      static_cast<double>(stats.n_input - stats.n_candidates) / static_cast<double>(stats.n_input);
  return result;
}

template <Coordinate T>
FilteredHull<T> filtered_hull(const PointSet<T>& s, CompactionStrategy strategy,
                              const PipelineOptions& opts) {
  FilteredPoints<T> filtered = filter_points(s, strategy, opts);
  FilteredHull<T> result;
  result.stats = std::move(filtered.stats);
  const auto t0 = Clock::now();
  result.hull = opts.hull_algorithm == HullAlgorithm::GiftWrapping
                    ? gift_wrapping(filtered.candidates)
                    : monotone_chain(filtered.candidates);
  result.stats.hull = since(t0);
  return result;
}

#define HULLFILTER_INSTANTIATE(T)                                                        \
  template Hull<T> monotone_chain(const PointSet<T>&);                                   \
  template Hull<T> gift_wrapping(const PointSet<T>&);                                    \
  template FilteredPoints<T> filter_points(const PointSet<T>&, CompactionStrategy,       \
                                           const PipelineOptions&);                      \
  template FilteredHull<T> filtered_hull(const PointSet<T>&, CompactionStrategy,         \
                                         const PipelineOptions&);

HULLFILTER_INSTANTIATE(float)
HULLFILTER_INSTANTIATE(double)

#undef HULLFILTER_INSTANTIATE

}  // namespace hullfilter
