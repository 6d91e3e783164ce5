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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "hullfilter/datagen.hpp"
#include "hullfilter/hull.hpp"
#include "oracles.hpp"

namespace hullfilter {
namespace {

using P = Point2<double>;

PointSet<double> square_and_center() { return PointSet<double>({0, 2, 2, 0, 1}, {0, 0, 2, 2, 1}); }

template <class T>
void expect_canonical(const Hull<T>& h, const PointSet<T>& input) {
  const auto& v = h.vertices;
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(std::all_of(v.begin() + 1, v.end(), [&](const auto& p) { return lex_less(v[0], p); }));
  if (v.size() >= 3) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      ASSERT_EQ(oracle::orientation(v[k], v[(k + 1) % v.size()], v[(k + 2) % v.size()]),
                Orientation::CounterClockwise);
    }
  }
  const auto pts = input.to_points();
  for (const auto& p : v) ASSERT_NE(std::find(pts.begin(), pts.end(), p), pts.end());
  if (v.size() >= 2) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      for (const auto& p : pts) {
        ASSERT_NE(oracle::orientation(v[k], v[(k + 1) % v.size()], p), Orientation::Clockwise);
      }
    }
  }
}

TEST(MonotoneChain, SquareAndCenter) {
  const auto h = monotone_chain(square_and_center());
  EXPECT_EQ(h.vertices, (std::vector<P>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
}

TEST(MonotoneChain, CollinearInteriorPointIsExcluded) {
  const auto h = monotone_chain(PointSet<double>({0, 1, 2}, {0, 1, 2}));
  EXPECT_EQ(h.vertices, (std::vector<P>{{0, 0}, {2, 2}}));
}

TEST(MonotoneChain, SmallAndDuplicateInputs) {
  EXPECT_EQ(monotone_chain(PointSet<double>({3}, {4})).vertices, (std::vector<P>{{3, 4}}));
  EXPECT_EQ(monotone_chain(PointSet<double>({3, 3, 3}, {4, 4, 4})).vertices,
            (std::vector<P>{{3, 4}}));
  EXPECT_EQ(monotone_chain(PointSet<double>({5, 1}, {0, 2})).vertices,
            (std::vector<P>{{1, 2}, {5, 0}}));
  EXPECT_THROW(monotone_chain(PointSet<double>{}), EmptySet);
}

TEST(MonotoneChain, AgreesWithGiftWrappingOnRandomPoints) {
  const auto s = oracle::uniform_points<double>(500, 123);
  const auto h = monotone_chain(s);
  EXPECT_TRUE(hull_equal(h, gift_wrapping(s)));
  expect_canonical(h, s);
}

TEST(GiftWrapping, HandExamples) {
  EXPECT_EQ(gift_wrapping(PointSet<double>({0, 4, 0}, {0, 0, 3})).vertices,
            (std::vector<P>{{0, 0}, {4, 0}, {0, 3}}));
  EXPECT_EQ(gift_wrapping(square_and_center()).vertices,
            (std::vector<P>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  EXPECT_EQ(gift_wrapping(PointSet<double>({0, 1, 2, 3}, {0, 1, 2, 3})).vertices,
            (std::vector<P>{{0, 0}, {3, 3}}));
  EXPECT_THROW(gift_wrapping(PointSet<double>{}), EmptySet);
}

TEST(GiftWrapping, EveryPointOfACircleIsAVertex) {
  std::vector<double> angles(200);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    angles[i] = 2.0 * std::numbers::pi * double(i) / 200.0;
  }
  // Shuffle the input order; the hull comes back sorted anyway.
  std::reverse(angles.begin() + 50, angles.end());
  const auto s = points_on_circle<double>(1.0, angles);
  const auto h = gift_wrapping(s);
  ASSERT_EQ(h.size(), 200u);
  expect_canonical(h, s);
  EXPECT_TRUE(hull_equal(h, monotone_chain(s)));
}

TEST(HullEqual, Examples) {
  const auto square = monotone_chain(square_and_center());
  const auto triangle = monotone_chain(PointSet<double>({0, 4, 0}, {0, 0, 3}));
  EXPECT_TRUE(hull_equal(square, square));
  EXPECT_FALSE(hull_equal(square, triangle));
}

TEST(Hull, OracleAgreementOnAdversarialSets) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    PointSet<double> s;
    switch (seed % 3) {
      case 0: s = oracle::uniform_points<double>(1 + seed * 30, seed); break;
      case 1: s = oracle::grid_points<double>(1 + seed * 30, seed, 4); break;
      default: s = oracle::collinear_heavy<double>(1 + seed * 30, seed); break;
    }
    const auto h = monotone_chain(s);
    ASSERT_TRUE(hull_equal(h, gift_wrapping(s))) << "seed " << seed;
    expect_canonical(h, s);
  }
}

TEST(Hull, Idempotent) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = oracle::grid_points<float>(2000, seed, 30);
    const auto h = monotone_chain(s);
    const auto again = monotone_chain(PointSet<float>::from_points(h.vertices));
    EXPECT_TRUE(hull_equal(h, again));
  }
}

TEST(FilteredHull, SquareAndCenter) {
  const auto s = square_and_center();
  const auto r = filtered_hull(s, CompactionStrategy::SegmentedScanScatter);
  EXPECT_TRUE(hull_equal(r.hull, monotone_chain(s)));
  EXPECT_DOUBLE_EQ(r.stats.discarded_fraction, 0.2);
  EXPECT_EQ(r.stats.n_input, 5u);
  EXPECT_EQ(r.stats.n_candidates, 4u);
  EXPECT_FALSE(r.stats.bypassed);
}

TEST(FilteredHull, DegenerateInputStillGivesTheHull) {
  const PointSet<double> s({0, 1, 2, 1}, {0, 1, 2, 1});
  const auto r = filtered_hull(s, CompactionStrategy::ScanScatter);
  EXPECT_TRUE(r.stats.bypassed);
  EXPECT_EQ(r.stats.n_candidates, r.stats.n_input);
  EXPECT_EQ(r.hull.vertices, (std::vector<P>{{0, 0}, {2, 2}}));
  EXPECT_THROW(filtered_hull(PointSet<double>{}, CompactionStrategy::ScanScatter), EmptySet);
}

TEST(FilteredHull, PerfectCircumferenceIsBarelyFiltered) {
  DistributionSpec spec{Distribution::Circumference, 10000, 3};
  const auto s = gen_circle<float>(spec);
  const auto r = filtered_hull(s, CompactionStrategy::FlaggedSelect);
  EXPECT_LE(r.stats.discarded_fraction, 0.001);
  EXPECT_TRUE(hull_equal(r.hull, monotone_chain(s)));
}

TEST(FilteredHull, GiftWrappingCanBePluggedIn) {
  const auto s = oracle::uniform_points<double>(3000, 31);
  PipelineOptions opts;
  opts.hull_algorithm = HullAlgorithm::GiftWrapping;
  const auto r = filtered_hull(s, CompactionStrategy::PredicateCopy, opts);
  EXPECT_TRUE(hull_equal(r.hull, monotone_chain(s)));
}

TEST(FilteredHull, TransparentAcrossDistributionsAndStrategies) {
  for (auto kind : {Distribution::Normal, Distribution::Circumference,
                    Distribution::DisplacedCircumference}) {
    for (auto strategy : {CompactionStrategy::ScanScatter, CompactionStrategy::SegmentedScanScatter,
                          CompactionStrategy::PredicateCopy, CompactionStrategy::FlaggedSelect,
                          CompactionStrategy::Sequential}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        DistributionSpec spec{kind, 5000, seed};
        spec.p = 0.05;
        const auto s = generate<float>(spec);
        const auto r = filtered_hull(s, strategy, PipelineOptions{Parallelism{3, 256}});
        ASSERT_TRUE(hull_equal(r.hull, monotone_chain(s)))
            << to_string(kind) << " " << to_string(strategy) << " seed " << seed;
      }
    }
  }
}

TEST(FilteredHull, TransparentOnGridInputsWithBoundaryPoints) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = oracle::grid_points<float>(500, seed, 5);
    const auto r = filtered_hull(s, CompactionStrategy::ScanScatter);
    ASSERT_TRUE(hull_equal(r.hull, monotone_chain(s))) << seed;
  }
}

}  // namespace
}  // namespace hullfilter
