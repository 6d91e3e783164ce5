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
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "hullfilter/geometry.hpp"

namespace hullfilter {

enum class Distribution { Normal, Circumference, DisplacedCircumference };

std::string_view to_string(Distribution d) noexcept;
/// Accepts the CLI names: normal, circle, displaced.
std::optional<Distribution> parse_distribution(std::string_view name) noexcept;
std::string_view cli_name(Distribution d) noexcept;

struct DistributionSpec {
  Distribution kind = Distribution::Normal;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double mu = 0.5;                  ///< Normal: mean of both axes
  double sigma = std::sqrt(0.1);    ///< Normal: standard deviation (variance 0.1)
  double r = 0.25;                  ///< circle kinds: radius
  double p = 0.0;                   ///< DisplacedCircumference: displacement parameter

  /// Throws InvalidSpec unless n >= 1, sigma > 0, r > 0 and 0 <= p <= 1
  /// (all finite).
  void validate() const;
};

/// Counter-based generator: draw `counter` of stream `seed` is the
/// SplitMix64 finalizer applied to seed + (counter + 1) * 0x9E3779B97F4A7C15,
/// i.e. the (counter+1)-th output of a SplitMix64 sequence seeded with
/// `seed`. Any draw can be computed independently, so generation parallelizes
/// without changing its output.
struct CounterRng {
  static std::uint64_t bits(std::uint64_t seed, std::uint64_t counter) noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  static double uniform(std::uint64_t seed, std::uint64_t counter) noexcept;
};

/// Draws per point. Point i uses counters [i * kDrawsPerPoint, (i+1) * kDrawsPerPoint).
inline constexpr std::uint64_t kDrawsPerPoint = 4;

/// x and y independently Normal(mu, sigma^2) via Box-Muller on draws 0 and 1:
/// z0 = sqrt(-2 ln(1 - u0)) cos(2 pi u1), z1 = ... sin(2 pi u1).
template <Coordinate T>
PointSet<T> gen_normal(const DistributionSpec& spec, const Parallelism& par = {});

/// (r cos t, r sin t) with t = 2 pi u0.
template <Coordinate T>
PointSet<T> gen_circle(const DistributionSpec& spec, const Parallelism& par = {});

/// Angle from draw 0 as in gen_circle. With probability p (draw 1 < p) the
/// point is displaced and its radius is uniform in [r - r p, r + r p]
/// (draw 2); otherwise it stays on the circle. p = 0 reproduces gen_circle
/// bit for bit.
template <Coordinate T>
PointSet<T> gen_displaced_circle(const DistributionSpec& spec, const Parallelism& par = {});

/// Dispatches on spec.kind.
template <Coordinate T>
PointSet<T> generate(const DistributionSpec& spec, const Parallelism& par = {});

/// Points (r cos t, r sin t) for the given angles, computed in double and
/// rounded once to T.
template <Coordinate T>
PointSet<T> points_on_circle(double r, std::span<const double> angles);

}  // namespace hullfilter
