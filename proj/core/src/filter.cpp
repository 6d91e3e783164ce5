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

#include "hullfilter/filter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hullfilter {

namespace {

// Exact value of a sum u + v as (rounded sum, rounding error). Comparing keys
// lexicographically compares the exact sums, because round-to-nearest is
// monotone: a larger rounded sum implies a larger-or-equal exact sum.
struct Key {
  double hi;
  double lo;

  friend bool operator>(const Key& a, const Key& b) noexcept {
    return a.hi > b.hi || (a.hi == b.hi && a.lo > b.lo);
  }
};

inline Key exact_sum(double u, double v) noexcept {
  const double s = u + v;
  const double bb = s - u;
  return {s, (u - (s - bb)) + (v - bb)};
}

// Four simultaneous argmax reductions. Within a chunk indices ascend and only
// a strictly better key replaces the incumbent; chunks are merged in index
// order under the same rule. The result is therefore the smallest index
// attaining each maximum, independent of the chunking.
template <Coordinate T, class Objectives>
std::array<std::size_t, 4> argmax4(const PointSet<T>& s, const Parallelism& par,
                                   Objectives objectives) {
  struct Best {
    std::array<Key, 4> key;
    std::array<std::size_t, 4> idx;
  };
  const auto xs = s.xs();
  const auto ys = s.ys();
  std::vector<Best> partial(chunk_count(s.size(), par));
  parallel_chunks(s.size(), par, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Best best{objectives(xs[begin], ys[begin]), {begin, begin, begin, begin}};
    for (std::size_t i = begin + 1; i < end; ++i) {
      const std::array<Key, 4> k = objectives(xs[i], ys[i]);
      for (std::size_t d = 0; d < 4; ++d) {
        if (k[d] > best.key[d]) {
          best.key[d] = k[d];
          best.idx[d] = i;
        }
      }
    }
    partial[c] = best;
  });
  Best best = partial.front();
  for (std::size_t c = 1; c < partial.size(); ++c) {
    for (std::size_t d = 0; d < 4; ++d) {
      if (partial[c].key[d] > best.key[d]) {
        best.key[d] = partial[c].key[d];
        best.idx[d] = partial[c].idx[d];
      }
    }
  }
  return best.idx;
}

template <Coordinate T>
bool strictly_between(const Point2<T>& a, const Point2<T>& b, const Point2<T>& c) noexcept {
  // Caller guarantees a, b, c collinear and b distinct from a and c.
  if (a == c) return false;
  return std::min(a.x, c.x) <= b.x && b.x <= std::max(a.x, c.x) &&
         std::min(a.y, c.y) <= b.y && b.y <= std::max(a.y, c.y);
}

}  // namespace

std::size_t FlagVector::popcount() const noexcept {
  return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(),
                                                [](std::uint8_t b) { return b != 0; }));
}

std::array<std::size_t, 8> SupportPoints::cycle() const noexcept {
  return {extremes.right, corners.top_right, extremes.top,    corners.top_left,
          extremes.left,  corners.bottom_left, extremes.bottom, corners.bottom_right};
}

template <Coordinate T>
ExtremePoints find_extreme_points(const PointSet<T>& s, const Parallelism& par) {
  if (s.empty()) throw EmptySet("find_extreme_points");
  const auto idx = argmax4(s, par, [](T x, T y) {
    const double dx = x;
    const double dy = y;
    return std::array<Key, 4>{Key{-dx, 0.0}, Key{dx, 0.0}, Key{dy, 0.0}, Key{-dy, 0.0}};
  });
  return {idx[0], idx[1], idx[2], idx[3]};
}

template <Coordinate T>
CornerPoints find_corner_points(const PointSet<T>& s, const BoundingBox<T>& /*box*/,
                                const Parallelism& par) {
  if (s.empty()) throw EmptySet("find_corner_points");
  // Manhattan distance to (x_max, y_max) is (x_max + y_max) - (x + y), so the
  // closest point maximizes x + y; likewise for the other three corners.
  const auto idx = argmax4(s, par, [](T x, T y) {
    const double dx = x;
    const double dy = y;
    return std::array<Key, 4>{exact_sum(dx, dy), exact_sum(dy, -dx), exact_sum(-dx, -dy),
                              exact_sum(dx, -dy)};
  });
  return {idx[0], idx[1], idx[2], idx[3]};
}

template <Coordinate T>
SupportPoints find_support_points(const PointSet<T>& s, const Parallelism& par) {
  if (s.empty()) throw EmptySet("find_support_points");
  return {find_extreme_points(s, par), find_corner_points(s, BoundingBox<T>{}, par)};
}

template <Coordinate T>
OctagonFilter<T>::OctagonFilter(std::span<const Point2<T>> cycle, SupportPoints source)
    : vertices_(cycle.begin(), cycle.end()), source_(source) {
  auto& v = vertices_;
  const auto drop_repeats = [&v] {
    std::vector<Point2<T>> kept;
    kept.reserve(v.size());
    for (const auto& p : v) {
      if (kept.empty() || !(kept.back() == p)) kept.push_back(p);
    }
    while (kept.size() > 1 && kept.front() == kept.back()) kept.pop_back();
    v = std::move(kept);
  };

  // Remove clockwise turns and collinear spikes until every turn is
  // counterclockwise or a straight pass-through.
  bool changed = true;
  while (changed) {
    changed = false;
    drop_repeats();
    if (v.size() < 3) break;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[(i + v.size() - 1) % v.size()];
      const auto& b = v[i];
      const auto& c = v[(i + 1) % v.size()];
      const Orientation o = orientation(a, b, c);
      if (o == Orientation::Clockwise ||
          (o == Orientation::Collinear && !strictly_between(a, b, c))) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  bool has_area = false;
  for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
    if (orientation(v[(i + v.size() - 1) % v.size()], v[i], v[(i + 1) % v.size()]) ==
        Orientation::CounterClockwise) {
      has_area = true;
      break;
    }
  }
  if (!has_area) {
    std::ostringstream msg;
    msg << "support points span no area (" << v.size()
        << " distinct vertices); points are collinear or coincident";
    throw DegeneratePolygon(msg.str());
  }
}

template <Coordinate T>
bool OctagonFilter<T>::strictly_inside(const Point2<T>& p) const noexcept {
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[i + 1 == m ? 0 : i + 1];
    if (orientation(a, b, p) != Orientation::CounterClockwise) return false;
  }
  return true;
}

template <Coordinate T>
OctagonFilter<T> build_octagon(const PointSet<T>& s, const Parallelism& par) {
  if (s.empty()) throw EmptySet("build_octagon");
  if (s.size() < 3) {
    throw DegeneratePolygon("fewer than 3 points; nothing can be filtered");
  }
  const SupportPoints support = find_support_points(s, par);
  std::array<Point2<T>, 8> cycle;
  const auto idx = support.cycle();
  for (std::size_t k = 0; k < idx.size(); ++k) cycle[k] = s[idx[k]];
  return OctagonFilter<T>(cycle, support);
}

template <Coordinate T>
FlagVector flag_candidates(const PointSet<T>& s, const OctagonFilter<T>& oct,
                           const Parallelism& par) {
  FlagVector flags(s.size());
  const auto xs = s.xs();
  const auto ys = s.ys();
  auto* out = flags.bits.data();
  parallel_chunks(s.size(), par, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = oct.strictly_inside(Point2<T>{xs[i], ys[i]}) ? 0 : 1;
    }
  });
  return flags;
}

template <Coordinate T>
CandidateFlags<T> flag_points(const PointSet<T>& s, const Parallelism& par) {
  if (s.empty()) throw EmptySet("flag_points");
  CandidateFlags<T> result;
  try {
    result.octagon.emplace(build_octagon(s, par));
  } catch (const DegeneratePolygon& e) {
    result.flags = FlagVector(s.size(), 1);
    result.diagnostic = std::string("filter bypassed: ") + e.what();
    return result;
  }
  result.flags = flag_candidates(s, *result.octagon, par);
  return result;
}

#define HULLFILTER_INSTANTIATE(T)                                                            \
  template ExtremePoints find_extreme_points(const PointSet<T>&, const Parallelism&);       \
  template CornerPoints find_corner_points(const PointSet<T>&, const BoundingBox<T>&,        \
                                           const Parallelism&);                             \
  template SupportPoints find_support_points(const PointSet<T>&, const Parallelism&);       \
  template class OctagonFilter<T>;                                                           \
  template OctagonFilter<T> build_octagon(const PointSet<T>&, const Parallelism&);          \
  template FlagVector flag_candidates(const PointSet<T>&, const OctagonFilter<T>&,          \
                                      const Parallelism&);                                  \
  template CandidateFlags<T> flag_points(const PointSet<T>&, const Parallelism&);

HULLFILTER_INSTANTIATE(float)
HULLFILTER_INSTANTIATE(double)

#undef HULLFILTER_INSTANTIATE

}  // namespace hullfilter
