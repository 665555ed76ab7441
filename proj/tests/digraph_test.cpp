// Copyright 2026 The sublabel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sublabel/digraph.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

namespace sublabel {
namespace {

std::vector<Arc> arcs_of(const Digraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

TEST(DigraphTest, RejectsBadArcs) {
  EXPECT_THROW(Digraph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Digraph(2, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(Digraph(2, {{0, 1}, {1, 0}}));
}

TEST(DigraphTest, Degrees) {
  Digraph g(3, {{0, 1}, {0, 2}, {2, 1}});
  EXPECT_EQ(g.out_degree(0), 2u);
  EXPECT_EQ(g.in_degree(1), 2u);
  EXPECT_FALSE(g.is_balanced());
  EXPECT_TRUE(build_family(Family::kCycle, 5).is_balanced());
}

TEST(BuildFamilyTest, SmallestCycle) {
  Digraph g = build_family(Family::kCycle, 3);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(arcs_of(g), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(BuildFamilyTest, AlternatingPath) {
  Digraph g = build_family(Family::kPath, 4, std::nullopt, Orientation::kAlternating);
  EXPECT_EQ(arcs_of(g), (std::vector<Arc>{{1, 0}, {1, 2}, {3, 2}}));
  EXPECT_EQ(g.family_tag()->orientation, Orientation::kAlternating);
}

TEST(BuildFamilyTest, Tadpole) {
  Digraph g = build_family(Family::kTadpole, 3, 2);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(arcs_of(g), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 0}}));
  EXPECT_EQ(g.vertex_name(3), "u_1");
  EXPECT_EQ(g.arc_name(4), "c");
}

TEST(BuildFamilyTest, TadpoleWithSingleVertexTail) {
  Digraph g = build_family(Family::kTadpole, 4, 1);
  EXPECT_EQ(g.arc_count(), 5u);
  EXPECT_EQ(g.arc(4), (Arc{4, 0}));
}

TEST(BuildFamilyTest, StarOrientations) {
  EXPECT_EQ(arcs_of(build_family(Family::kStar, 2)), (std::vector<Arc>{{0, 1}, {0, 2}}));
  EXPECT_EQ(arcs_of(build_family(Family::kStar, 2, std::nullopt, Orientation::kIn)),
            (std::vector<Arc>{{1, 0}, {2, 0}}));
}

TEST(BuildFamilyTest, WheelSpokesThenRim) {
  Digraph g = build_family(Family::kWheel, 3);
  EXPECT_EQ(arcs_of(g), (std::vector<Arc>{{1, 0}, {2, 0}, {3, 0}, {1, 2}, {2, 3}, {3, 1}}));
}

TEST(BuildFamilyTest, CountsMatchClosedForms) {
  for (int n = 1; n <= 12; ++n) {
    if (n >= 2) {
      EXPECT_EQ(build_family(Family::kPath, n).arc_count(), static_cast<std::size_t>(n - 1));
    }
    EXPECT_EQ(build_family(Family::kStar, n).vertex_count(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(build_family(Family::kStar, n).arc_count(), static_cast<std::size_t>(n));
    auto f = build_family(Family::kFriendship, n);
    EXPECT_EQ(f.vertex_count(), static_cast<std::size_t>(2 * n + 1));
    EXPECT_EQ(f.arc_count(), static_cast<std::size_t>(3 * n));
    if (n < 3) continue;
    EXPECT_EQ(build_family(Family::kCycle, n).arc_count(), static_cast<std::size_t>(n));
    EXPECT_EQ(build_family(Family::kWheel, n).arc_count(), static_cast<std::size_t>(2 * n));
    auto b = build_family(Family::kButterfly, n);
    EXPECT_EQ(b.vertex_count(), static_cast<std::size_t>(2 * n - 1));
    EXPECT_EQ(b.arc_count(), static_cast<std::size_t>(2 * n));
    for (int t = 1; t <= 6; ++t) {
      auto g = build_family(Family::kTadpole, n, t);
      EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>(n + t));
      EXPECT_EQ(g.arc_count(), static_cast<std::size_t>(n + t));
    }
  }
}

TEST(BuildFamilyTest, BoundsErrorsNameTheParameter) {
  auto param = [](auto&& fn) {
    try {
      fn();
    } catch (const BoundsError& e) {
      return e.parameter();
    }
    return std::string("no throw");
  };
  EXPECT_EQ(param([] { build_family(Family::kCycle, 2); }), "n");
  EXPECT_EQ(param([] { build_family(Family::kPath, 1); }), "n");
  EXPECT_EQ(param([] { build_family(Family::kStar, 0); }), "n");
  EXPECT_EQ(param([] { build_family(Family::kTadpole, 3); }), "t");
  EXPECT_EQ(param([] { build_family(Family::kTadpole, 3, 0); }), "t");
  EXPECT_EQ(param([] { build_family(Family::kWheel, 4, 2); }), "t");
  EXPECT_EQ(param([] { build_family(Family::kCycle, 4, std::nullopt, Orientation::kIn); }),
            "orientation");
  EXPECT_EQ(param([] { build_family(Family::kStar, 4, std::nullopt, Orientation::kForward); }),
            "orientation");
}

TEST(BuildFamilyTest, ButterflyThreeIsFriendshipTwo) {
  Digraph butterfly = build_family(Family::kButterfly, 3);
  Digraph friendship = build_family(Family::kFriendship, 2);
  // x, v_1, v_2, u_1, u_2  ->  x, v_{11}, v_{12}, v_{21}, v_{22}
  const std::map<Vertex, Vertex> to_friendship{{0, 0}, {1, 1}, {2, 3}, {3, 2}, {4, 4}};
  std::set<Arc> mapped;
  for (const Arc& a : butterfly.arcs()) {
    mapped.insert({to_friendship.at(a.tail), to_friendship.at(a.head)});
  }
  EXPECT_EQ(mapped, std::set<Arc>(friendship.arcs().begin(), friendship.arcs().end()));
}

TEST(AllOrientationsTest, TreesHaveTwoToTheArcs) {
  auto variants = all_orientations(build_family(Family::kStar, 3));
  EXPECT_EQ(variants.size(), 8u);
  EXPECT_EQ(variants.front(), build_family(Family::kStar, 3));
  EXPECT_EQ(arcs_of(variants.back()), (std::vector<Arc>{{1, 0}, {2, 0}, {3, 0}}));
}

TEST(AllOrientationsTest, SkipsDuplicates) {
  // Flipping either arc of a 2-cycle duplicates the other.
  auto variants = all_orientations(Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(variants.size(), 2u);
}

TEST(FamilyNamesTest, RoundTrip) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kStar, Family::kWheel, Family::kTadpole,
                   Family::kFriendship, Family::kButterfly}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_family("petersen"));
}

}  // namespace
}  // namespace sublabel
