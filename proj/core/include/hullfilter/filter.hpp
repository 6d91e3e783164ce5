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

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hullfilter/geometry.hpp"

namespace hullfilter {

/// One flag per input point: 1 = hull candidate, 0 = discarded.
struct FlagVector {
  std::vector<std::uint8_t> bits;

  FlagVector() = default;
  explicit FlagVector(std::size_t n, std::uint8_t value = 0) : bits(n, value) {}
  explicit FlagVector(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
  FlagVector(std::initializer_list<std::uint8_t> b) : bits(b) {}

  std::size_t size() const noexcept { return bits.size(); }
  bool operator[](std::size_t i) const noexcept { return bits[i] != 0; }
  std::size_t popcount() const noexcept;

  friend bool operator==(const FlagVector&, const FlagVector&) = default;
};

/// Axis-extreme point indices; ties resolve to the smallest index.
struct ExtremePoints {
  std::size_t left = 0;    ///< argmin x
  std::size_t right = 0;   ///< argmax x
  std::size_t top = 0;     ///< argmax y
  std::size_t bottom = 0;  ///< argmin y

  friend bool operator==(const ExtremePoints&, const ExtremePoints&) = default;
};

/// Diagonal support points, i.e. the points closest in Manhattan distance to
/// each bounding-box corner; ties resolve to the smallest index.
struct CornerPoints {
  std::size_t top_right = 0;     ///< argmax  x + y
  std::size_t top_left = 0;      ///< argmax  y - x
  std::size_t bottom_left = 0;   ///< argmax -x - y
  std::size_t bottom_right = 0;  ///< argmax  x - y

  friend bool operator==(const CornerPoints&, const CornerPoints&) = default;
};

struct SupportPoints {
  ExtremePoints extremes;
  CornerPoints corners;

  /// Indices in counterclockwise cycle order:
  /// right, top-right, top, top-left, left, bottom-left, bottom, bottom-right.
  std::array<std::size_t, 8> cycle() const noexcept;

  friend bool operator==(const SupportPoints&, const SupportPoints&) = default;
};

/// Throws EmptySet.
template <Coordinate T>
ExtremePoints find_extreme_points(const PointSet<T>& s, const Parallelism& par = {});

/// `box` is the frame the corners are defined against; the reduction itself
/// maximizes the equivalent linear functionals and never reads it.
/// Throws EmptySet.
template <Coordinate T>
CornerPoints find_corner_points(const PointSet<T>& s, const BoundingBox<T>& box,
                                const Parallelism& par = {});

template <Coordinate T>
SupportPoints find_support_points(const PointSet<T>& s, const Parallelism& par = {});

/// Convex discard polygon on up to eight support points, counterclockwise.
template <Coordinate T>
class OctagonFilter {
 public:
  /// Cleans up a raw counterclockwise support cycle: drops repeated
  /// vertices, spikes and clockwise turns. Throws DegeneratePolygon when
  /// fewer than three vertices with non-zero area remain.
  OctagonFilter(std::span<const Point2<T>> cycle, SupportPoints source);

  std::span<const Point2<T>> vertices() const noexcept { return vertices_; }
  const SupportPoints& source() const noexcept { return source_; }

  /// True iff p is strictly left of every directed edge. Boundary points
  /// are reported as outside so they stay candidates.
  bool strictly_inside(const Point2<T>& p) const noexcept;

 private:
  std::vector<Point2<T>> vertices_;
  SupportPoints source_;
};

/// Throws EmptySet for an empty set and DegeneratePolygon when the support
/// points do not span a polygon (n < 3, all points collinear or coincident).
template <Coordinate T>
OctagonFilter<T> build_octagon(const PointSet<T>& s, const Parallelism& par = {});

template <Coordinate T>
bool point_strictly_inside(const OctagonFilter<T>& oct, const Point2<T>& p) noexcept {
  return oct.strictly_inside(p);
}

template <Coordinate T>
FlagVector flag_candidates(const PointSet<T>& s, const OctagonFilter<T>& oct,
                           const Parallelism& par = {});

/// Result of flag_points(): flags plus the polygon that produced them.
template <Coordinate T>
struct CandidateFlags {
  FlagVector flags;
  std::optional<OctagonFilter<T>> octagon;  ///< empty when filtering was bypassed
  std::string diagnostic;                   ///< why filtering was bypassed
  bool bypassed() const noexcept { return !octagon.has_value(); }
};

/// build_octagon() + flag_candidates(), falling back to all-ones flags with a
/// diagnostic when the polygon is degenerate. Throws EmptySet.
template <Coordinate T>
CandidateFlags<T> flag_points(const PointSet<T>& s, const Parallelism& par = {});

}  // namespace hullfilter
