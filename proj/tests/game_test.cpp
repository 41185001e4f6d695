// Copyright 2026 The almostcore Authors
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

#include "almostcore/game.hpp"

#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "almostcore/instances.hpp"
#include "almostcore/mst_game.hpp"
#include "almostcore/random_instances.hpp"
#include "support/oracles.hpp"

namespace almostcore {
namespace {

std::vector<Rational> ThreeAgentTable() { return {0, 1, 1, 1, 1, 1, 1, 2}; }

TEST(GameTest, ExplicitValidation) {
  EXPECT_THROW(Game::Explicit(2, {0, 1, 1}), PreconditionError);
  EXPECT_THROW(Game::Explicit(2, {1, 1, 1, 1}), PreconditionError);
  EXPECT_THROW(Game::Explicit(2, {0, 1, -1, 1}), PreconditionError);
  EXPECT_THROW(Game::Explicit(0, {0}), PreconditionError);
  EXPECT_THROW(Game::Explicit(kEnumerationLimit + 1, {}), LimitExceeded);
  EXPECT_NO_THROW(Game::ExplicitSigned(2, {0, 1, -1, 1}));
}

TEST(GameTest, EvaluateChecksDimension) {
  const Game g = Game::Explicit(3, ThreeAgentTable());
  EXPECT_EQ(g(Coalition::Grand(3)), Rational(2));
  EXPECT_EQ(g.GrandCost(), Rational(2));
  EXPECT_THROW(g(Coalition::Grand(2)), PreconditionError);
}

TEST(GameTest, GraphGameMatchesKruskal) {
  auto graph = std::make_shared<const GraphInstance>(instances::LargeGap(5));
  const Game g = Game::FromGraph(graph, false);
  EXPECT_FALSE(g.is_explicit());
  EXPECT_EQ(*g.Table(), oracle::KruskalTable(*graph));
  // (0, 10, 10, 0, 5, 0) weights: c({1,3}) = 5, c(N) = 0.
  EXPECT_EQ(g(Coalition::Of(3, {0, 2})), Rational(5));
  EXPECT_EQ(g.GrandCost(), Rational(0));
}

TEST(GameTest, MonotonizeMatchesSupersetEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    const Game g = RandomExplicitGame(rng, n, 9);
    EXPECT_EQ(MonotonizeTable(n, *g.Table()),
              oracle::MonotonizeByEnumeration(*g.Table()));
  }
  const auto graph = instances::SteinerShortcut();
  const Game bar = Game::FromGraph(
      std::make_shared<const GraphInstance>(graph), true);
  EXPECT_TRUE(bar.is_monotonized());
  for (std::uint64_t s = 1; s < 8; ++s) {
    EXPECT_EQ(bar(Coalition(3, s)), Rational(1));
  }
}

TEST(GameTest, StructureOfNamedGames) {
  const Game three = Game::Explicit(3, ThreeAgentTable());
  EXPECT_TRUE(IsSubadditive(three).holds);
  EXPECT_TRUE(IsMonotone(three).holds);
  const PairCheck sub = IsSubmodular(three);
  ASSERT_FALSE(sub.holds);
  const auto& [s, t] = *sub.witness;
  EXPECT_LT((*three.Table())[s.bits()] + (*three.Table())[t.bits()],
            (*three.Table())[s.Union(t).bits()] +
                (*three.Table())[s.Intersection(t).bits()]);

  // The Steiner shortcut game is submodular on its 8 coalitions.
  const Game shortcut = ExplicitFromGraph(instances::SteinerShortcut(), false);
  EXPECT_TRUE(IsSubmodular(shortcut).holds);
  EXPECT_FALSE(IsMonotone(shortcut).holds);

  const Game gap = ExplicitFromGraph(instances::LargeGap(5), false);
  const PairCheck mono = IsMonotone(gap);
  ASSERT_FALSE(mono.holds);
  EXPECT_EQ(mono.witness->first, Coalition::Singleton(3, 1));
  EXPECT_EQ(mono.witness->second, Coalition::Of(3, {0, 1}));
  // The coalition pair ({2,3}, N) is also a violation.
  EXPECT_GT(gap(Coalition::Of(3, {1, 2})), gap(Coalition::Grand(3)));
  EXPECT_FALSE(SatisfiesLastMonotone(gap).holds);
}

TEST(GameTest, NonSubmodularPairWitness) {
  const Game g = Game::Explicit(2, {0, 1, 1, 3});
  const PairCheck sub = IsSubmodular(g);
  ASSERT_FALSE(sub.holds);
  EXPECT_EQ(sub.witness->first, Coalition::Singleton(2, 0));
  EXPECT_EQ(sub.witness->second, Coalition::Singleton(2, 1));
  EXPECT_FALSE(IsSubadditive(g).holds);
}

TEST(GameTest, StructureChecksAgreeWithPairScan) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const Game g = RandomExplicitGame(rng, n, 4);
    const auto& c = *g.Table();
    bool submodular = true, monotone = true, subadditive = true;
    for (std::uint64_t s = 0; s < c.size(); ++s) {
      for (std::uint64_t t = 0; t < c.size(); ++t) {
        if (c[s] + c[t] < c[s | t] + c[s & t]) submodular = false;
        if ((s & t) == s && c[s] > c[t]) monotone = false;
        if ((s & t) == 0 && s && t && c[s | t] > c[s] + c[t]) {
          subadditive = false;
        }
      }
    }
    EXPECT_EQ(IsSubmodular(g).holds, submodular);
    EXPECT_EQ(IsMonotone(g).holds, monotone);
    EXPECT_EQ(IsSubadditive(g).holds, subadditive);
  }
}

TEST(GameTest, LastMonotoneReportsSmallestAgent) {
  const Game g = Game::Explicit(3, {0, 1, 1, 3, 1, 1, 1, 2});
  const AgentCheck check = SatisfiesLastMonotone(g);
  EXPECT_FALSE(check.holds);
  EXPECT_EQ(check.agent, 2);
  EXPECT_TRUE(SatisfiesLastMonotone(Game::Explicit(3, ThreeAgentTable())).holds);
}

TEST(GameTest, ProfitTransform) {
  const Game c = Game::Explicit(3, ThreeAgentTable());
  const Game v = ToProfitGame(c);
  EXPECT_EQ(v(Coalition::Singleton(3, 0)), Rational(0));
  EXPECT_EQ(v(Coalition::Of(3, {0, 1})), Rational(1));
  EXPECT_EQ(v(Coalition::Grand(3)), Rational(1));
  const Allocation x({Rational(1, 2), Rational(0), Rational(-1)});
  const Allocation xv = ProfitTransformAllocation(c, x);
  EXPECT_EQ(xv, Allocation({Rational(1, 2), Rational(1), Rational(2)}));
  EXPECT_EQ(ProfitTransformAllocation(c, xv), x);
  EXPECT_THROW(ProfitTransformAllocation(c, Allocation(std::size_t{2})),
               PreconditionError);
}

TEST(GameTest, AllocationHelpers) {
  const Allocation x({Rational(1), Rational(-1, 2), Rational(3)});
  EXPECT_EQ(x.Total(), Rational(7, 2));
  EXPECT_EQ(x.Sum(Coalition::Of(3, {0, 1})), Rational(1, 2));
  EXPECT_FALSE(x.IsNonnegative());
  EXPECT_EQ(x.ToString(), "(1, -1/2, 3)");
}

}  // namespace
}  // namespace almostcore
