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

#include "almostcore/relaxations.hpp"

#include <gtest/gtest.h>

#include <random>

#include "almostcore/instances.hpp"
#include "almostcore/mst_game.hpp"
#include "almostcore/random_instances.hpp"
#include "support/oracles.hpp"

namespace almostcore {
namespace {

Allocation A(std::initializer_list<Rational> v) {
  return Allocation(std::vector<Rational>(v));
}

Game ThreeAgentGame() { return Game::Explicit(3, {0, 1, 1, 1, 1, 1, 1, 2}); }

TEST(RelaxationsTest, ThreeAgentEmptyCoreValues) {
  const Game g = ThreeAgentGame();
  const auto& t = *g.Table();
  const RelaxationReport r = FullReport(g);
  EXPECT_FALSE(r.core_nonempty);
  EXPECT_FALSE(r.core_element.has_value());
  EXPECT_EQ(r.ac_opt.value, Rational(3, 2));
  EXPECT_EQ(r.ac_opt.allocation,
            A({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(r.eps_strong.value, Rational(1, 3));
  EXPECT_EQ(r.eps_strong.value, oracle::AdditiveEpsByVertices(t, 3, false));
  EXPECT_EQ(r.eps_strong.allocation,
            A({Rational(2, 3), Rational(2, 3), Rational(2, 3)}));
  EXPECT_EQ(r.eps_weak.value, Rational(1, 6));
  EXPECT_EQ(r.eps_weak.value, oracle::AdditiveEpsByVertices(t, 3, true));
  ASSERT_TRUE(r.eps_mult.has_value());
  EXPECT_EQ(r.eps_mult->value, Rational(1, 3));
  ASSERT_TRUE(r.gamma_approx.has_value());
  EXPECT_EQ(r.gamma_approx->value, Rational(3, 4));
  EXPECT_EQ(r.cos_delta.value, Rational(1, 2));
  EXPECT_EQ(r.cos_delta.value,
            Rational(2) - oracle::CoreMaxByVertices(t, 3));
  EXPECT_EQ(r.ext_core.delta, Rational(1, 2));
  EXPECT_EQ(r.ext_core.shares.Total(), Rational(2));
  EXPECT_EQ(r.ext_core.subsidy.Total(), Rational(1, 2));
  EXPECT_TRUE(r.ext_core.subsidy.IsNonnegative());
}

TEST(RelaxationsTest, ExtendedCoreSolutionIsFeasible) {
  const Game g = ThreeAgentGame();
  const ExtendedCoreResult ec = ExtendedCoreDelta(g);
  std::vector<Rational> shifted(3);
  for (std::size_t i = 0; i < 3; ++i) {
    shifted[i] = ec.shares[i] - ec.subsidy[i];
  }
  EXPECT_TRUE(oracle::InAlmostCore(*g.Table(), shifted, false));
  EXPECT_EQ(ec.shares.Total(), g.GrandCost());
}

TEST(RelaxationsTest, NamedInstanceOptima) {
  const Game gap = ExplicitFromGraph(instances::LargeGap(5), false);
  EXPECT_EQ(AlmostCoreOptimum(gap, false).value, Rational(15, 2));
  EXPECT_EQ(AlmostCoreOptimum(gap, false).allocation,
            A({Rational(-5, 2), Rational(5, 2), Rational(15, 2)}));
  const ValuedAllocation gap_nonneg = AlmostCoreOptimum(gap, true);
  EXPECT_EQ(gap_nonneg.value, Rational(5));
  EXPECT_EQ(gap_nonneg.allocation, A({0, 0, 5}));

  const Game subsidy = ExplicitFromGraph(instances::Subsidy(5), false);
  EXPECT_EQ(AlmostCoreOptimum(subsidy, false).allocation, A({-5, 5, 5}));
  EXPECT_EQ(AlmostCoreOptimum(subsidy, true).value, Rational(0));

  const Game tight = ExplicitFromGraph(instances::TightRatio(Rational(1, 4)), false);
  const ValuedAllocation tight_nonneg = AlmostCoreOptimum(tight, true);
  EXPECT_EQ(tight_nonneg.value, Rational(17, 8));
  EXPECT_EQ(tight_nonneg.allocation, A({Rational(1, 8), Rational(7, 8), Rational(9, 8)}));

  const Game shortcut = ExplicitFromGraph(instances::SteinerShortcut(), false);
  EXPECT_EQ(AlmostCoreOptimum(shortcut, true).allocation, A({0, 1, 1}));
  const Game shortcut_bar = ExplicitFromGraph(instances::SteinerShortcut(), true);
  EXPECT_EQ(AlmostCoreOptimum(shortcut_bar, true).allocation,
            A({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
}

TEST(RelaxationsTest, TightRatioOptimumHasPairCertificate) {
  // Half of each pair constraint sums to x(N) <= (c12 + c13 + c23) / 2, and
  // (eps/2, 1 - eps/2, 1 + eps/2) meets it.
  for (const Rational& eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8),
                              Rational(1, 100)}) {
    const Game g = ExplicitFromGraph(instances::TightRatio(eps), false);
    const Rational bound = (g(Coalition::Of(3, {0, 1})) +
                            g(Coalition::Of(3, {0, 2})) +
                            g(Coalition::Of(3, {1, 2}))) /
                           Rational(2);
    EXPECT_EQ(bound, Rational(2) + eps / Rational(2));
    const std::vector<Rational> x{eps / Rational(2),
                                  Rational(1) - eps / Rational(2),
                                  Rational(1) + eps / Rational(2)};
    EXPECT_TRUE(oracle::InAlmostCore(*g.Table(), x, true));
    const ValuedAllocation opt = AlmostCoreOptimum(g, true);
    EXPECT_EQ(opt.value, bound);
    EXPECT_EQ(opt.allocation.shares(), x);
  }
}

TEST(RelaxationsTest, CoreNonemptyWitness) {
  const Game shortcut = ExplicitFromGraph(instances::SteinerShortcut(), false);
  const CoreCheck check = CoreNonempty(shortcut);
  ASSERT_TRUE(check.nonempty);
  EXPECT_TRUE(oracle::InCore(*shortcut.Table(), check.element->shares()));
  EXPECT_FALSE(CoreNonempty(ThreeAgentGame()).nonempty);
  EXPECT_TRUE(CoreNonempty(Game::Explicit(1, {0, 4})).nonempty);
}

TEST(RelaxationsTest, Preconditions) {
  EXPECT_THROW(AlmostCoreOptimum(Game::Explicit(1, {0, 3}), true),
               PreconditionError);
  const Game gap = ExplicitFromGraph(instances::LargeGap(5), false);
  EXPECT_THROW(GammaApprox(gap), PreconditionError);
  // max x(N) over P_core is 0 while c(N) = 1: no finite multiplicative eps.
  const Game flat = Game::Explicit(2, {0, 0, 0, 1});
  EXPECT_FALSE(MultCoreEps(flat).has_value());
  EXPECT_EQ(GammaApprox(flat).value, Rational(0));
}

TEST(RelaxationsTest, BalancedGameHasZeroRelaxations) {
  const Game g = Game::Explicit(2, {0, 2, 2, 3});
  const RelaxationReport r = FullReport(g);
  EXPECT_TRUE(r.core_nonempty);
  EXPECT_EQ(r.cos_delta.value, Rational(0));
  EXPECT_EQ(r.ext_core.delta, Rational(0));
  EXPECT_EQ(r.eps_mult->value, Rational(0));
  EXPECT_EQ(r.gamma_approx->value, Rational(1));
  EXPECT_LE(r.eps_strong.value, Rational(0));
}

TEST(RelaxationsTest, RandomThreeAgentGamesAgreeWithVertexOracles) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Game g = RandomExplicitGame(rng, 3, 6);
    const auto& t = *g.Table();
    for (bool nonneg : {false, true}) {
      const auto ref = oracle::AlmostCoreByVertices(t, 3, nonneg);
      const ValuedAllocation got = AlmostCoreOptimum(g, nonneg);
      EXPECT_EQ(got.value, ref.value);
      EXPECT_TRUE(oracle::InAlmostCore(t, got.allocation.shares(), nonneg));
    }
    EXPECT_EQ(LeastCoreEps(g).value, oracle::AdditiveEpsByVertices(t, 3, false));
    EXPECT_EQ(WeakCoreEps(g).value, oracle::AdditiveEpsByVertices(t, 3, true));
    EXPECT_EQ(CostOfStability(g).value,
              g.GrandCost() - oracle::CoreMaxByVertices(t, 3));
  }
}

TEST(RelaxationsTest, MinStableProfitOnTransformedGame) {
  const Game c = ThreeAgentGame();
  const ValuedAllocation p = MinStableProfit(ToProfitGame(c));
  // sum c({i}) = 3 and the cost-side optimum is 3/2.
  EXPECT_EQ(p.value, Rational(3, 2));
}

}  // namespace
}  // namespace almostcore
