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

#include "hullfilter/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hullfilter {

std::string_view to_string(Precision p) noexcept {
  return p == Precision::F32 ? "f32" : "f64";
}

namespace {

template <Coordinate T>
void require_finite(std::span<const T> xs, std::span<const T> ys) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      std::ostringstream msg;
      msg << "point " << i << " has a non-finite coordinate (" << xs[i] << ", " << ys[i] << ")";
      throw NonFiniteCoordinate(msg.str());
    }
  }
}

// Error-free transformations (Knuth two-sum, FMA two-product). Exact as long
// as nothing overflows or underflows.
struct Pair {
  double hi;
  double lo;
};

inline Pair two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline Pair two_diff(double a, double b) noexcept { return two_sum(a, -b); }

inline Pair two_product(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Nonoverlapping expansion, components in increasing magnitude.
template <std::size_t N>
class Expansion {
 public:
  void add(double b) noexcept {
    std::size_t out = 0;
    double q = b;
    for (std::size_t i = 0; i < size_; ++i) {
      const Pair s = two_sum(q, terms_[i]);
      q = s.hi;
      if (s.lo != 0.0) terms_[out++] = s.lo;
    }
    if (q != 0.0) terms_[out++] = q;
    size_ = out;
  }

  int sign() const noexcept {
    if (size_ == 0) return 0;
    return terms_[size_ - 1] > 0.0 ? 1 : -1;
  }

 private:
  std::array<double, N> terms_{};
  std::size_t size_ = 0;
};

inline Orientation from_sign(int s) noexcept {
  return s > 0 ? Orientation::CounterClockwise
               : (s < 0 ? Orientation::Clockwise : Orientation::Collinear);
}

template <class T>
inline int sign_of(T v) noexcept {
  return (v > 0) - (v < 0);
}

// Bound on the absolute error of the filtered determinant relative to
// |detleft| + |detright|: (3 + 16 eps) eps with eps = 2^-53.
constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2;
constexpr double kOrientErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;

}  // namespace

template <Coordinate T>
PointSet<T>::PointSet(std::vector<T> xs, std::vector<T> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("PointSet: xs and ys differ in length");
  }
  require_finite<T>(xs, ys);
  xs_ = std::move(xs);
  ys_ = std::move(ys);
}

template <Coordinate T>
PointSet<T> PointSet<T>::from_points(std::span<const Point2<T>> points) {
  std::vector<T> xs(points.size());
  std::vector<T> ys(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    xs[i] = points[i].x;
    ys[i] = points[i].y;
  }
  return PointSet(std::move(xs), std::move(ys));
}

template <Coordinate T>
void PointSet<T>::push_back(Point2<T> p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    std::ostringstream msg;
    msg << "non-finite coordinate (" << p.x << ", " << p.y << ")";
    throw NonFiniteCoordinate(msg.str());
  }
  xs_.push_back(p.x);
  ys_.push_back(p.y);
}

template <Coordinate T>
std::vector<Point2<T>> PointSet<T>::to_points() const {
  std::vector<Point2<T>> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = {xs_[i], ys_[i]};
  return out;
}

Orientation orientation_exact(const Point2<double>& a, const Point2<double>& b,
                              const Point2<double>& c) noexcept {
  // (b - a) x (c - a) = bax * cay - bay * cax with each difference held as an
  // exact two-term expansion; the 16 resulting product terms are summed
  // exactly.
  const Pair bax = two_diff(b.x, a.x);
  const Pair bay = two_diff(b.y, a.y);
  const Pair cax = two_diff(c.x, a.x);
  const Pair cay = two_diff(c.y, a.y);

  Expansion<16> det;
  const std::array<double, 2> l1{bax.hi, bax.lo};
  const std::array<double, 2> l2{cay.hi, cay.lo};
  const std::array<double, 2> r1{bay.hi, bay.lo};
  const std::array<double, 2> r2{cax.hi, cax.lo};
  for (double u : l1) {
    for (double v : l2) {
      const Pair p = two_product(u, v);
      det.add(p.lo);
      det.add(p.hi);
    }
  }
  for (double u : r1) {
    for (double v : r2) {
      const Pair p = two_product(u, v);
      det.add(-p.lo);
      det.add(-p.hi);
    }
  }
  return from_sign(det.sign());
}

Orientation orientation(const Point2<double>& a, const Point2<double>& b,
                        const Point2<double>& c) noexcept {
  const double detleft = (b.x - a.x) * (c.y - a.y);
  const double detright = (b.y - a.y) * (c.x - a.x);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return from_sign(sign_of(det));
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return from_sign(sign_of(det));
    detsum = -detleft - detright;
  } else {
    return orientation_exact(a, b, c);
  }

  if (std::abs(det) >= kOrientErrBound * detsum && det != 0.0) {
    return from_sign(sign_of(det));
  }
  return orientation_exact(a, b, c);
}

Orientation orientation(const Point2<float>& a, const Point2<float>& b,
                        const Point2<float>& c) noexcept {
  return orientation(Point2<double>{a.x, a.y}, Point2<double>{b.x, b.y},
                     Point2<double>{c.x, c.y});
}

template <Coordinate T>
BoundingBox<T> bounding_box(const PointSet<T>& s, const Parallelism& par) {
  if (s.empty()) throw EmptySet("bounding_box");
  const auto xs = s.xs();
  const auto ys = s.ys();
  std::vector<BoundingBox<T>> partial(chunk_count(s.size(), par));
  parallel_chunks(s.size(), par, [&](std::size_t c, std::size_t begin, std::size_t end) {
    BoundingBox<T> box{xs[begin], xs[begin], ys[begin], ys[begin]};
    for (std::size_t i = begin + 1; i < end; ++i) {
      box.x_min = std::min(box.x_min, xs[i]);
      box.x_max = std::max(box.x_max, xs[i]);
      box.y_min = std::min(box.y_min, ys[i]);
      box.y_max = std::max(box.y_max, ys[i]);
    }
    partial[c] = box;
  });
  BoundingBox<T> box = partial.front();
  for (const auto& b : partial) {
    box.x_min = std::min(box.x_min, b.x_min);
    box.x_max = std::max(box.x_max, b.x_max);
    box.y_min = std::min(box.y_min, b.y_min);
    box.y_max = std::max(box.y_max, b.y_max);
  }
  return box;
}

template class PointSet<float>;
template class PointSet<double>;
template BoundingBox<float> bounding_box(const PointSet<float>&, const Parallelism&);
template BoundingBox<double> bounding_box(const PointSet<double>&, const Parallelism&);

}  // namespace hullfilter
