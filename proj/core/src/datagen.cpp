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

#include "hullfilter/datagen.hpp"

#include <numbers>
#include <sstream>

namespace hullfilter {

std::string_view to_string(Distribution d) noexcept {
  switch (d) {
    case Distribution::Normal: return "normal";
    case Distribution::Circumference: return "circumference";
    case Distribution::DisplacedCircumference: return "displaced-circumference";
  }
  return "unknown";
}

std::string_view cli_name(Distribution d) noexcept {
  switch (d) {
    case Distribution::Normal: return "normal";
    case Distribution::Circumference: return "circle";
    case Distribution::DisplacedCircumference: return "displaced";
  }
  return "unknown";
}

std::optional<Distribution> parse_distribution(std::string_view name) noexcept {
  for (auto d : {Distribution::Normal, Distribution::Circumference,
                 Distribution::DisplacedCircumference}) {
    if (name == cli_name(d) || name == to_string(d)) return d;
  }
  return std::nullopt;
}

void DistributionSpec::validate() const {
  std::ostringstream err;
  if (n < 1) err << "n must be >= 1; ";
  if (!std::isfinite(mu)) err << "mu must be finite; ";
  if (!(std::isfinite(sigma) && sigma > 0)) err << "sigma must be > 0; ";
  if (!(std::isfinite(r) && r > 0)) err << "r must be > 0; ";
  if (!(p >= 0.0 && p <= 1.0)) err << "p must be in [0, 1]; ";
  const std::string msg = err.str();
  if (!msg.empty()) throw InvalidSpec("invalid distribution spec: " + msg.substr(0, msg.size() - 2));
}

std::uint64_t CounterRng::bits(std::uint64_t seed, std::uint64_t counter) noexcept {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t seed, std::uint64_t counter) noexcept {
  return static_cast<double>(bits(seed, counter) >> 11) * 0x1.0p-53;
}

namespace {

void require_kind(const DistributionSpec& spec, Distribution kind, const char* who) {
  if (spec.kind != kind) {
    throw InvalidSpec(std::string(who) + ": spec kind is " + std::string(to_string(spec.kind)));
  }
  spec.validate();
}

// Fills a point set of spec.n points where point i = make(i) (computed in
// double, rounded once to T).
template <Coordinate T, class Make>
PointSet<T> fill(std::size_t n, const Parallelism& par, Make make) {
  std::vector<T> xs(n);
  std::vector<T> ys(n);
  parallel_chunks(n, par, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto [x, y] = make(static_cast<std::uint64_t>(i));
      xs[i] = static_cast<T>(x);
      ys[i] = static_cast<T>(y);
    }
  });
  return PointSet<T>(std::move(xs), std::move(ys));
}

inline double draw(const DistributionSpec& spec, std::uint64_t point, std::uint64_t lane) {
  return CounterRng::uniform(spec.seed, point * kDrawsPerPoint + lane);
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

template <Coordinate T>
PointSet<T> gen_normal(const DistributionSpec& spec, const Parallelism& par) {
  require_kind(spec, Distribution::Normal, "gen_normal");
  return fill<T>(spec.n, par, [&](std::uint64_t i) {
    const double u0 = draw(spec, i, 0);
    const double u1 = draw(spec, i, 1);
    const double radius = std::sqrt(-2.0 * std::log1p(-u0));  // 1 - u0 in (0, 1]
    const double angle = kTwoPi * u1;
    return std::pair{spec.mu + spec.sigma * radius * std::cos(angle),
                     spec.mu + spec.sigma * radius * std::sin(angle)};
  });
}

template <Coordinate T>
PointSet<T> gen_circle(const DistributionSpec& spec, const Parallelism& par) {
  require_kind(spec, Distribution::Circumference, "gen_circle");
  return fill<T>(spec.n, par, [&](std::uint64_t i) {
    const double angle = kTwoPi * draw(spec, i, 0);
    return std::pair{spec.r * std::cos(angle), spec.r * std::sin(angle)};
  });
}

template <Coordinate T>
PointSet<T> gen_displaced_circle(const DistributionSpec& spec, const Parallelism& par) {
  require_kind(spec, Distribution::DisplacedCircumference, "gen_displaced_circle");
  const double band = spec.r * spec.p;
  return fill<T>(spec.n, par, [&](std::uint64_t i) {
    const double angle = kTwoPi * draw(spec, i, 0);
    double radius = spec.r;
    if (draw(spec, i, 1) < spec.p) {
      radius = (spec.r - band) + 2.0 * band * draw(spec, i, 2);
    }
    return std::pair{radius * std::cos(angle), radius * std::sin(angle)};
  });
}

template <Coordinate T>
PointSet<T> generate(const DistributionSpec& spec, const Parallelism& par) {
  switch (spec.kind) {
    case Distribution::Normal: return gen_normal<T>(spec, par);
    case Distribution::Circumference: return gen_circle<T>(spec, par);
    case Distribution::DisplacedCircumference: return gen_displaced_circle<T>(spec, par);
  }
  throw InvalidSpec("generate: unknown distribution");
}

template <Coordinate T>
PointSet<T> points_on_circle(double r, std::span<const double> angles) {
  std::vector<T> xs(angles.size());
  std::vector<T> ys(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    xs[i] = static_cast<T>(r * std::cos(angles[i]));
    ys[i] = static_cast<T>(r * std::sin(angles[i]));
  }
  return PointSet<T>(std::move(xs), std::move(ys));
}

#define HULLFILTER_INSTANTIATE(T)                                                    \
  template PointSet<T> gen_normal<T>(const DistributionSpec&, const Parallelism&);   \
  template PointSet<T> gen_circle<T>(const DistributionSpec&, const Parallelism&);   \
  template PointSet<T> gen_displaced_circle<T>(const DistributionSpec&,              \
                                               const Parallelism&);                  \
  template PointSet<T> generate<T>(const DistributionSpec&, const Parallelism&);     \
  template PointSet<T> points_on_circle<T>(double, std::span<const double>);

HULLFILTER_INSTANTIATE(float)
HULLFILTER_INSTANTIATE(double)

#undef HULLFILTER_INSTANTIATE

}  // namespace hullfilter
