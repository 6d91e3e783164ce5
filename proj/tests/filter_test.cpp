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

#include <numbers>

#include "hullfilter/datagen.hpp"
#include "hullfilter/filter.hpp"
#include "oracles.hpp"

namespace hullfilter {
namespace {

using P = Point2<double>;

PointSet<double> square_and_center() { return PointSet<double>({0, 2, 2, 0, 1}, {0, 0, 2, 2, 1}); }

std::vector<P> octagon_vertices(const OctagonFilter<double>& oct) {
  return {oct.vertices().begin(), oct.vertices().end()};
}

TEST(FindExtremePoints, TiesResolveToSmallestIndex) {
  const auto e = find_extreme_points(square_and_center());
  EXPECT_EQ(e.left, 0u);
  EXPECT_EQ(e.right, 1u);
  EXPECT_EQ(e.top, 2u);
  EXPECT_EQ(e.bottom, 0u);
}

TEST(FindExtremePoints, SinglePoint) {
  EXPECT_EQ(find_extreme_points(PointSet<double>({5.0}, {5.0})), (ExtremePoints{0, 0, 0, 0}));
  EXPECT_THROW(find_extreme_points(PointSet<float>{}), EmptySet);
}

TEST(FindExtremePoints, MatchesSequentialScan) {
  const auto s = oracle::uniform_points<float>(100000, 1);
  const auto expected = oracle::extremes(s);
  for (unsigned threads : {1u, 3u, 8u}) {
    const auto e = find_extreme_points(s, Parallelism{threads, 1000});
    EXPECT_EQ((std::array{e.left, e.right, e.top, e.bottom}), expected) << threads;
  }
}

TEST(FindCornerPoints, SquareCorners) {
  const auto s = square_and_center();
  const auto c = find_corner_points(s, bounding_box(s));
  EXPECT_EQ(c.top_right, 2u);
  EXPECT_EQ(c.top_left, 3u);
  EXPECT_EQ(c.bottom_left, 0u);
  EXPECT_EQ(c.bottom_right, 1u);
}

TEST(FindCornerPoints, DiagonalBeatsAxisPoints) {
  const PointSet<double> s({1.0, 0.0, 0.9}, {0.0, 1.0, 0.9});
  const auto c = find_corner_points(s, BoundingBox<double>{0, 1, 0, 1});
  EXPECT_EQ(c.top_right, 2u);  // 1.8 > 1.0
}

TEST(FindCornerPoints, EqualsBruteForceManhattanMinimization) {
  for (std::uint64_t seed : {2u, 3u}) {
    const auto s = oracle::uniform_points<float>(100000, seed);
    const auto expected = oracle::manhattan_corners(s);
    const auto c = find_corner_points(s, bounding_box(s), Parallelism{4, 1000});
    EXPECT_EQ((std::array{c.top_right, c.top_left, c.bottom_left, c.bottom_right}), expected);
  }
}

TEST(FindCornerPoints, TiesOnGridResolveToSmallestIndex) {
  const auto s = oracle::grid_points<double>(5000, 4, 20);
  const auto expected = oracle::manhattan_corners(s);
  const auto c = find_corner_points(s, bounding_box(s), Parallelism{7, 100});
  EXPECT_EQ((std::array{c.top_right, c.top_left, c.bottom_left, c.bottom_right}), expected);
}

TEST(SupportPoints, EveryIndexIsOptimalForItsDirection) {
  const auto s = oracle::uniform_points<double>(20000, 8, -3.0, 3.0);
  const auto sp = find_support_points(s);
  const std::array<std::pair<std::size_t, std::size_t>, 8> pairs{{
      {sp.extremes.right, oracle::argmax(s, [](const mpq_class& x, const mpq_class&) { return mpq_class(x); })},
      {sp.extremes.left, oracle::argmax(s, [](const mpq_class& x, const mpq_class&) { return mpq_class(-x); })},
      {sp.extremes.top, oracle::argmax(s, [](const mpq_class&, const mpq_class& y) { return mpq_class(y); })},
      {sp.extremes.bottom, oracle::argmax(s, [](const mpq_class&, const mpq_class& y) { return mpq_class(-y); })},
      {sp.corners.top_right, oracle::argmax(s, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); })},
      {sp.corners.top_left, oracle::argmax(s, [](const mpq_class& x, const mpq_class& y) { return mpq_class(y - x); })},
      {sp.corners.bottom_left, oracle::argmax(s, [](const mpq_class& x, const mpq_class& y) { return mpq_class(-x - y); })},
      {sp.corners.bottom_right, oracle::argmax(s, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); })},
  }};
  for (const auto& [got, want] : pairs) EXPECT_EQ(got, want);
}

TEST(SupportPoints, DuplicatingTheSetKeepsTheSmallestIndices) {
  const auto s = oracle::uniform_points<float>(5000, 12);
  std::vector<float> xs(s.xs().begin(), s.xs().end());
  std::vector<float> ys(s.ys().begin(), s.ys().end());
  xs.insert(xs.end(), s.xs().begin(), s.xs().end());
  ys.insert(ys.end(), s.ys().begin(), s.ys().end());
  const PointSet<float> doubled(std::move(xs), std::move(ys));
  EXPECT_EQ(find_support_points(doubled, Parallelism{5, 100}), find_support_points(s));
}

TEST(BuildOctagon, SquareCollapsesToFourVertices) {
  const auto oct = build_octagon(square_and_center());
  EXPECT_EQ(octagon_vertices(oct), (std::vector<P>{{2, 0}, {2, 2}, {0, 2}, {0, 0}}));
}

TEST(BuildOctagon, CollinearInputIsDegenerate) {
  EXPECT_THROW(build_octagon(PointSet<double>({0, 1, 2}, {0, 1, 2})), DegeneratePolygon);
  EXPECT_THROW(build_octagon(PointSet<double>({0, 0, 0}, {1, 0, 2})), DegeneratePolygon);
  EXPECT_THROW(build_octagon(PointSet<double>({3, 3, 3, 3}, {1, 1, 1, 1})), DegeneratePolygon);
  EXPECT_THROW(build_octagon(PointSet<double>({0, 1}, {0, 1})), DegeneratePolygon);
  EXPECT_THROW(build_octagon(PointSet<double>{}), EmptySet);
}

TEST(BuildOctagon, UniformPointsGiveEightConvexVerticesFromSupportPoints) {
  const auto s = oracle::uniform_points<float>(100000, 21);
  const auto oct = build_octagon(s);
  ASSERT_EQ(oct.vertices().size(), 8u);
  const auto ext = oracle::extremes(s);
  const auto cor = oracle::manhattan_corners(s);
  const std::array<std::size_t, 8> cycle{ext[1], cor[0], ext[2], cor[1],
                                         ext[0], cor[2], ext[3], cor[3]};
  for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(oct.vertices()[k], s[cycle[k]]) << k;
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_EQ(oracle::orientation(oct.vertices()[k], oct.vertices()[(k + 1) % 8],
                                  oct.vertices()[(k + 2) % 8]),
              Orientation::CounterClockwise);
  }
}

TEST(BuildOctagon, VerticesAreConvexAndBelongToInputOnAdversarialSets) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = seed % 2 ? oracle::grid_points<double>(200, seed, 3)
                            : oracle::collinear_heavy<double>(200, seed);
    try {
      const auto oct = build_octagon(s);
      const auto v = oct.vertices();
      ASSERT_GE(v.size(), 3u);
      for (std::size_t k = 0; k < v.size(); ++k) {
        EXPECT_NE(oracle::orientation(v[k], v[(k + 1) % v.size()], v[(k + 2) % v.size()]),
                  Orientation::Clockwise);
        const auto pts = s.to_points();
        EXPECT_NE(std::find(pts.begin(), pts.end(), v[k]), pts.end());
      }
    } catch (const DegeneratePolygon&) {
      // Only legitimate when every point is collinear.
      const auto pts = s.to_points();
      for (const auto& c : pts) EXPECT_EQ(oracle::orientation_sign(pts[0], pts[1], c), 0);
    }
  }
}

TEST(PointStrictlyInside, SquareExamples) {
  const auto oct = build_octagon(square_and_center());
  EXPECT_TRUE(point_strictly_inside(oct, P{1, 1}));
  EXPECT_FALSE(point_strictly_inside(oct, P{2, 1}));  // on an edge
  EXPECT_FALSE(point_strictly_inside(oct, P{3, 3}));
  EXPECT_FALSE(point_strictly_inside(oct, P{0, 0}));  // a vertex
}

TEST(FlagCandidates, OnlyTheCenterIsDiscarded) {
  const auto s = square_and_center();
  const auto flags = flag_candidates(s, build_octagon(s));
  EXPECT_EQ(flags.bits, (std::vector<std::uint8_t>{1, 1, 1, 1, 0}));
}

TEST(FlagCandidates, CircumferenceKeepsAlmostEveryPoint) {
  DistributionSpec spec{Distribution::Circumference, 10000, 5};
  const auto s = gen_circle<float>(spec);
  const auto oct = build_octagon(s);
  const auto flags = flag_candidates(s, oct);
  const auto v = oct.vertices();
  for (std::size_t i = 0; i < s.size(); ++i) {
    ASSERT_EQ(flags[i], !oracle::strictly_inside<float>(v, s[i])) << i;
  }
  EXPECT_LE(s.size() - flags.popcount(), s.size() / 1000);
}

TEST(FlagCandidates, MatchesRationalInsideTestAndIsConservativeOnBoundary) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = seed % 2 ? oracle::grid_points<float>(3000, seed, 6)
                            : oracle::uniform_points<float>(3000, seed);
    const auto oct = build_octagon(s);
    const auto flags = flag_candidates(s, oct, Parallelism{3, 64});
    const auto v = oct.vertices();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const bool inside = oracle::strictly_inside<float>(v, s[i]);
      ASSERT_EQ(flags[i], !inside);
      if (!flags[i]) {
        for (std::size_t k = 0; k < v.size(); ++k) {
          ASSERT_NE(oracle::orientation_sign(v[k], v[(k + 1) % v.size()], s[i]), 0);
        }
      }
    }
    for (auto idx : oct.source().cycle()) EXPECT_TRUE(flags[idx]);
  }
}

TEST(FlagCandidates, ParallelMatchesSequential) {
  const auto s = oracle::uniform_points<float>(200000, 77);
  const auto oct = build_octagon(s, Parallelism::sequential());
  const auto reference = flag_candidates(s, oct, Parallelism::sequential());
  for (unsigned threads : {2u, 5u, 8u, 16u}) {
    EXPECT_EQ(flag_candidates(s, oct, Parallelism{threads, 1000}), reference);
    EXPECT_EQ(build_octagon(s, Parallelism{threads, 1000}).source(), oct.source());
  }
}

TEST(FlagCandidates, DisplacedCircumferenceDiscardsAboutNinetySevenPercent) {
  // Reference: 97.16 % discarded at p = 0.10.
  DistributionSpec spec{Distribution::DisplacedCircumference, 1000000, 1};
  spec.p = 0.10;
  const auto s = gen_displaced_circle<float>(spec);
  const auto flags = flag_candidates(s, build_octagon(s));
  const double discarded = 1.0 - double(flags.popcount()) / double(s.size());
  EXPECT_NEAR(discarded, 0.972, 0.02);
}

TEST(FlagPoints, DegenerateInputBypassesWithDiagnostic) {
  const auto r = flag_points(PointSet<double>({0, 1, 2}, {0, 1, 2}));
  EXPECT_TRUE(r.bypassed());
  EXPECT_EQ(r.flags.bits, (std::vector<std::uint8_t>{1, 1, 1}));
  EXPECT_FALSE(r.diagnostic.empty());

  const auto two = flag_points(PointSet<float>({0.0f, 1.0f}, {0.0f, 0.0f}));
  EXPECT_TRUE(two.bypassed());
  EXPECT_EQ(two.flags.popcount(), 2u);

  const auto normal = flag_points(square_and_center());
  EXPECT_FALSE(normal.bypassed());
  EXPECT_EQ(normal.flags.popcount(), 4u);
}

}  // namespace
}  // namespace hullfilter
