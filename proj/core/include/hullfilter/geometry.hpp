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

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hullfilter/error.hpp"
#include "hullfilter/parallel.hpp"

namespace hullfilter {

/// Storage precision of a point set.
enum class Precision : std::uint8_t { F32 = 0, F64 = 1 };

std::string_view to_string(Precision p) noexcept;

template <class T>
concept Coordinate = std::same_as<T, float> || std::same_as<T, double>;

template <Coordinate T>
inline constexpr Precision precision_of =
    std::same_as<T, float> ? Precision::F32 : Precision::F64;

template <Coordinate T>
struct Point2 {
  T x{};
  T y{};

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

/// Lexicographic (x, then y) order used for hull canonicalization.
template <Coordinate T>
constexpr bool lex_less(const Point2<T>& a, const Point2<T>& b) noexcept {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Structure-of-arrays 2D point cloud. Every stored coordinate is finite.
template <Coordinate T>
class PointSet {
 public:
  using value_type = T;

  PointSet() = default;

  /// Throws std::invalid_argument on a length mismatch and
  /// NonFiniteCoordinate on NaN or infinite input.
  PointSet(std::vector<T> xs, std::vector<T> ys);

  static PointSet from_points(std::span<const Point2<T>> points);

  /// Adopts coordinate arrays already known to be finite and of equal
  /// length (for example, copied out of another PointSet).
  static PointSet adopt(std::vector<T> xs, std::vector<T> ys) noexcept {
    PointSet s;
    s.xs_ = std::move(xs);
    s.ys_ = std::move(ys);
    return s;
  }

  static constexpr Precision precision() noexcept { return precision_of<T>; }

  std::size_t size() const noexcept { return xs_.size(); }
  bool empty() const noexcept { return xs_.empty(); }

  std::span<const T> xs() const noexcept { return xs_; }
  std::span<const T> ys() const noexcept { return ys_; }

  Point2<T> operator[](std::size_t i) const noexcept { return {xs_[i], ys_[i]}; }

  void reserve(std::size_t n) {
    xs_.reserve(n);
    ys_.reserve(n);
  }

  /// Throws NonFiniteCoordinate.
  void push_back(Point2<T> p);

  std::vector<Point2<T>> to_points() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<T> xs_;
  std::vector<T> ys_;
};

template <Coordinate T>
struct BoundingBox {
  T x_min{};
  T x_max{};
  T y_min{};
  T y_max{};

  friend constexpr bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

enum class Orientation : std::int8_t {
  Clockwise = -1,
  Collinear = 0,
  CounterClockwise = 1,
};

/// L1 distance |p.x - q.x| + |p.y - q.y|.
template <Coordinate T>
constexpr T manhattan_distance(const Point2<T>& p, const Point2<T>& q) noexcept {
  const T dx = p.x - q.x;
  const T dy = p.y - q.y;
  return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
}

/// Exact sign of the cross product (b - a) x (c - a).
///
/// A floating-point filter decides almost every call; when its error bound
/// cannot certify the sign the determinant is re-evaluated with exact
/// expansion arithmetic. Single-precision inputs go through the same path
/// after a lossless widening to double.
Orientation orientation(const Point2<double>& a, const Point2<double>& b,
                        const Point2<double>& c) noexcept;
Orientation orientation(const Point2<float>& a, const Point2<float>& b,
                        const Point2<float>& c) noexcept;

/// Exact-arithmetic evaluation only (no filter). Exposed for testing.
Orientation orientation_exact(const Point2<double>& a, const Point2<double>& b,
                              const Point2<double>& c) noexcept;

/// Throws EmptySet when s is empty.
template <Coordinate T>
BoundingBox<T> bounding_box(const PointSet<T>& s, const Parallelism& par = {});

extern template class PointSet<float>;
extern template class PointSet<double>;
extern template BoundingBox<float> bounding_box(const PointSet<float>&, const Parallelism&);
extern template BoundingBox<double> bounding_box(const PointSet<double>&, const Parallelism&);

}  // namespace hullfilter
