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

#include "sublabel/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracle/brute_force.hpp"
#include "sublabel/constructions.hpp"
#include "sublabel/document.hpp"

namespace sublabel {
namespace {

const Target kSaml{TargetKind::kMagic, Side::kArc, std::nullopt, std::nullopt};
const Target kSvml{TargetKind::kMagic, Side::kVertex, std::nullopt, std::nullopt};
const Target kSaal{TargetKind::kAntimagic, Side::kArc, std::nullopt, std::nullopt};
const Target kSval{TargetKind::kAntimagic, Side::kVertex, std::nullopt, std::nullopt};
const Target kSaAl{TargetKind::kArithmetic, Side::kArc, std::nullopt, std::nullopt};
const Target kSvAl{TargetKind::kArithmetic, Side::kVertex, std::nullopt, std::nullopt};

SearchQuery make_query(Digraph g, Target target, SearchMode mode = SearchMode::count_all()) {
  SearchQuery q;
  q.graph = std::move(g);
  q.target = target;
  q.mode = mode;
  return q;
}

std::string name_of(const Digraph& g) {
  auto f = descriptor_of(g);
  if (!f) return "graph";
  return std::string(to_string(f->family)) + " n=" + std::to_string(f->n) + " " +
         std::string(to_string(f->orientation));
}

oracle::Arcs oracle_arcs(const Digraph& g) {
  oracle::Arcs out;
  for (const Arc& a : g.arcs()) out.emplace_back(static_cast<int>(a.tail), static_cast<int>(a.head));
  return out;
}

oracle::Want oracle_want(TargetKind kind) {
  switch (kind) {
    case TargetKind::kMagic: return oracle::Want::kMagic;
    case TargetKind::kAntimagic: return oracle::Want::kDistinct;
    case TargetKind::kArithmetic: return oracle::Want::kProgression;
  }
  return oracle::Want::kMagic;
}

std::vector<int> slots(const TotalLabeling& l) {
  std::vector<int> out(l.vertex_labels.begin(), l.vertex_labels.end());
  out.insert(out.end(), l.arc_labels.begin(), l.arc_labels.end());
  return out;
}

// Family instances with |V| + |A| <= 8.
std::vector<Digraph> small_instances() {
  std::vector<Digraph> out;
  for (int n = 2; n <= 4; ++n) {
    out.push_back(build_family(Family::kPath, n));
    out.push_back(build_family(Family::kPath, n, std::nullopt, Orientation::kAlternating));
  }
  for (int n = 3; n <= 4; ++n) out.push_back(build_family(Family::kCycle, n));
  for (int n = 1; n <= 3; ++n) {
    out.push_back(build_family(Family::kStar, n));
    out.push_back(build_family(Family::kStar, n, std::nullopt, Orientation::kIn));
  }
  out.push_back(build_family(Family::kTadpole, 3, 1));
  out.push_back(build_family(Family::kFriendship, 1));
  return out;
}

const std::vector<Target> kAllTargets{kSaml, kSvml, kSaal, kSval, kSaAl, kSvAl};

TEST(SearchTest, FrozenCounts) {
  // Values from an independent brute force over all N! bijections.
  struct Case {
    Digraph g;
    Target target;
    std::uint64_t expected;
  };
  const std::vector<Case> cases{
      {build_family(Family::kPath, 2), kSvml, 0},
      {build_family(Family::kPath, 2), kSaml, 6},
      {build_family(Family::kPath, 3), kSaml, 0},
      {build_family(Family::kPath, 3, std::nullopt, Orientation::kAlternating), kSaml, 24},
      {build_family(Family::kPath, 3), kSaal, 120},
      {build_family(Family::kPath, 3), kSvAl, 24},
      {build_family(Family::kCycle, 3), kSaml, 0},
      {build_family(Family::kCycle, 3), kSvml, 0},
      {build_family(Family::kCycle, 3), kSaAl, 156},
      {build_family(Family::kCycle, 3), kSvAl, 156},
      {build_family(Family::kStar, 2), kSaml, 24},
      {build_family(Family::kStar, 2, std::nullopt, Orientation::kIn), kSvml, 0},
      {build_family(Family::kStar, 2), kSval, 96},
  };
  for (const Case& c : cases) {
    const SearchReport r = search(make_query(c.g, c.target));
    EXPECT_EQ(r.solutions_found, c.expected) << to_string(c.target) << " on " << name_of(c.g);
    EXPECT_TRUE(r.exhaustive);
  }
}

TEST(SearchTest, AgreesWithIndependentBruteForce) {
  for (const Digraph& g : small_instances()) {
    for (const Target& target : kAllTargets) {
      for (int flags = 0; flags < 4; ++flags) {
        SearchQuery q = make_query(g, target, SearchMode::count_all(1000000));
        q.require_strong = flags & 1;
        q.require_strong_star = flags & 2;
        const SearchReport r = search(q);
        const oracle::Result expected =
            oracle::enumerate(static_cast<int>(g.vertex_count()), oracle_arcs(g),
                              target.side == Side::kArc, oracle_want(target.kind),
                              q.require_strong, q.require_strong_star);
        ASSERT_EQ(r.solutions_found, expected.count)
            << to_string(target) << " flags=" << flags << " on " << name_of(g);
        ASSERT_EQ(r.witnesses.size(), expected.solutions.size());
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
          ASSERT_EQ(slots(r.witnesses[i]), expected.solutions[i]);
        }
      }
    }
  }
}

TEST(SearchTest, ArithmeticParametersFilter) {
  const Digraph g = build_family(Family::kCycle, 3);
  const oracle::Result all =
      oracle::enumerate(3, oracle_arcs(g), /*arc_side=*/true, oracle::Want::kProgression);
  for (Weight a = 0; a <= 8; ++a) {
    for (Weight d = 1; d <= 3; ++d) {
      std::uint64_t expected = 0;
      std::uint64_t expected_d = 0;
      for (const auto& perm : all.solutions) {
        long first = 0;
        long step = 0;
        oracle::progression(oracle::weights(3, oracle_arcs(g), perm).arc, &first, &step);
        if (step == d) ++expected_d;
        if (first == a && step == d) ++expected;
      }
      Target t = kSaAl;
      t.a = a;
      t.d = d;
      EXPECT_EQ(search(make_query(g, t)).solutions_found, expected) << "a=" << a << " d=" << d;
      t.a.reset();
      EXPECT_EQ(search(make_query(g, t)).solutions_found, expected_d) << "d=" << d;
    }
  }
}

TEST(SearchTest, WitnessesReclassifyToTarget) {
  for (const Digraph& g : small_instances()) {
    for (const Target& target : kAllTargets) {
      const SearchReport r = search(make_query(g, target, SearchMode::collect(5)));
      for (const TotalLabeling& w : r.witnesses) {
        ASSERT_TRUE(is_bijection(g, w));
        EXPECT_TRUE(matches(target, classify(g, w), g.arc_count(), g.vertex_count()));
      }
    }
  }
}

TEST(SearchTest, PrunedMatchesReferenceAndVisitsFewerNodes) {
  for (const Digraph& g : small_instances()) {
    for (const Target& target : kAllTargets) {
      for (SearchMode mode : {SearchMode::count_all(50), SearchMode::first_witness(),
                              SearchMode::collect(3)}) {
        const SearchQuery q = make_query(g, target, mode);
        const SearchReport pruned = search(q);
        const SearchReport reference = reference_enumerate(q);
        ASSERT_EQ(pruned.solutions_found, reference.solutions_found)
            << to_string(target) << " on " << name_of(g);
        ASSERT_EQ(pruned.witnesses, reference.witnesses);
        ASSERT_EQ(pruned.exhaustive, reference.exhaustive);
        EXPECT_LE(pruned.nodes_visited, reference.nodes_visited);
      }
    }
  }
}

TEST(SearchTest, ModesBoundWitnesses) {
  const Digraph g = build_family(Family::kCycle, 3);
  const SearchReport first = search(make_query(g, kSaAl, SearchMode::first_witness()));
  EXPECT_EQ(first.solutions_found, 1u);
  EXPECT_EQ(first.witnesses.size(), 1u);
  EXPECT_FALSE(first.exhaustive);

  const SearchReport some = search(make_query(g, kSaAl, SearchMode::collect(10)));
  EXPECT_EQ(some.witnesses.size(), 10u);
  EXPECT_FALSE(some.exhaustive);

  const SearchReport all = search(make_query(g, kSaAl, SearchMode::count_all(4)));
  EXPECT_EQ(all.solutions_found, 156u);
  EXPECT_EQ(all.witnesses.size(), 4u);
  EXPECT_TRUE(all.exhaustive);
  EXPECT_TRUE(std::is_sorted(all.witnesses.begin(), all.witnesses.end(),
                             [](const auto& a, const auto& b) { return slots(a) < slots(b); }));
  EXPECT_EQ(std::vector<TotalLabeling>(all.witnesses.begin(), all.witnesses.begin() + 4),
            std::vector<TotalLabeling>(some.witnesses.begin(), some.witnesses.begin() + 4));

  // Fewer solutions than the limit: the space is covered.
  const SearchReport none = search(make_query(g, kSaml, SearchMode::first_witness()));
  EXPECT_EQ(none.solutions_found, 0u);
  EXPECT_TRUE(none.exhaustive);
}

TEST(SearchTest, WorkerCountDoesNotChangeReports) {
  const std::vector<SearchQuery> queries{
      make_query(build_family(Family::kCycle, 4), kSaAl, SearchMode::count_all(20)),
      make_query(build_family(Family::kStar, 3, std::nullopt, Orientation::kIn), kSval,
                 SearchMode::collect(37)),
      make_query(build_family(Family::kTadpole, 3, 1), kSaml, SearchMode::first_witness()),
  };
  for (const SearchQuery& q : queries) {
    const std::string single = to_json(search(q, {SearchOptions::kDefaultCap, 1}), false).dump();
    for (unsigned workers : {2U, 3U, 8U}) {
      EXPECT_EQ(to_json(search(q, {SearchOptions::kDefaultCap, workers}), false).dump(), single);
    }
  }
}

TEST(SearchTest, CapRefusal) {
  const SearchQuery q = make_query(build_family(Family::kStar, 6), kSvml);
  try {
    search(q);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 12u);
    EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
  }
  EXPECT_THROW(search(make_query(build_family(Family::kCycle, 3), kSaml), {5, 1}), CapExceeded);
  EXPECT_NO_THROW(search(make_query(build_family(Family::kCycle, 3), kSaml), {6, 1}));
}

TEST(SearchTest, EmptyGraphIsTrivial) {
  const SearchReport r = search(make_query(Digraph(), kSaml));
  EXPECT_EQ(r.solutions_found, 0u);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(SearchTest, ConstructionsAreAmongTheSolutions) {
  struct Case {
    Construction c;
    Target target;
  };
  auto with = [](Target t, Weight a, Weight d) {
    t.a = a;
    t.d = d;
    return t;
  };
  const std::vector<Case> cases{
      {construct_path(4, LabelingKind::kSaml), kSaml},
      {construct_path(4, LabelingKind::kSaAl), with(kSaAl, 6, 1)},
      {construct_path(4, LabelingKind::kSvAl), with(kSvAl, 4, 1)},
      {construct_cycle(3), with(kSaAl, 4, 1)},
      {construct_cycle(3), with(kSvAl, 1, 1)},
      {construct_star(3, LabelingKind::kSaml), kSaml},
      {construct_star(3, LabelingKind::kSaAl), with(kSaAl, 8, 2)},
      {construct_star(3, LabelingKind::kSval), kSval},
      {construct_tadpole(3, 1, LabelingKind::kSaal), kSaal},
      {construct_tadpole(3, 1, LabelingKind::kSvAl), with(kSvAl, 5, 1)},
      {construct_friendship(1), with(kSaAl, 4, 1)},
  };
  for (const Case& k : cases) {
    SearchQuery q = make_query(k.c.graph, k.target, SearchMode::count_all(1000000));
    const Classification cl = classify(k.c.graph, k.c.labeling);
    q.require_strong = cl.strong;
    q.require_strong_star = cl.strong_star;
    const SearchReport r = search(q);
    EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), k.c.labeling), r.witnesses.end())
        << to_string(k.target) << " on " << name_of(k.c.graph);
  }
}

TEST(SearchTest, CyclesAreNeitherArcNorVertexMagic) {
  EXPECT_TRUE(verify_iff_cycles(3));
  EXPECT_TRUE(verify_iff_cycles(4));
  EXPECT_THROW(verify_iff_cycles(7), CapExceeded);
}

TEST(SearchTest, TargetNames) {
  for (const Target& t : kAllTargets) EXPECT_EQ(parse_target(to_string(t)), t);
  EXPECT_FALSE(parse_target("sxml"));
  EXPECT_EQ(parse_search_mode("collect"), SearchMode::Kind::kCollect);
}

}  // namespace
}  // namespace sublabel
