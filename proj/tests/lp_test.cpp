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

#include "almostcore/lp.hpp"

#include <gtest/gtest.h>

#include <random>

#include "almostcore/random_instances.hpp"
#include "support/oracles.hpp"

namespace almostcore {
namespace {

std::vector<Rational> R(std::initializer_list<long long> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

TEST(LpTest, SmallTextbookProblem) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18, x, y >= 0.
  LpProblem p(2);
  p.objective = R({3, 5});
  p.lower_bounds = {Rational(0), Rational(0)};
  p.AddConstraint(R({1, 0}), Relation::kLessEqual, 4);
  p.AddConstraint(R({0, 2}), Relation::kLessEqual, 12);
  p.AddConstraint(R({3, 2}), Relation::kLessEqual, 18);
  const LpSolution s = Solve(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(36));
  EXPECT_EQ(s.point, R({2, 6}));
}

TEST(LpTest, FreeVariablesEqualitiesAndBounds) {
  // max -x - y, x + y = 3, x >= 1, y free, x - y <= 5.
  LpProblem p(2);
  p.objective = R({-1, -1});
  p.lower_bounds = {Rational(1), std::nullopt};
  p.AddConstraint(R({1, 1}), Relation::kEqual, 3);
  p.AddConstraint(R({1, -1}), Relation::kLessEqual, 5);
  const LpSolution s = Solve(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(-3));
  EXPECT_TRUE(VerifyPoint(p, s.point).feasible);
}

TEST(LpTest, GreaterEqualRows) {
  // max -(x + y), x + 2y >= 4, 3x + y >= 6 with x, y >= 0: (8/5, 6/5).
  LpProblem p(2);
  p.objective = R({-1, -1});
  p.lower_bounds = {Rational(0), Rational(0)};
  p.AddConstraint(R({1, 2}), Relation::kGreaterEqual, 4);
  p.AddConstraint(R({3, 1}), Relation::kGreaterEqual, 6);
  const LpSolution s = Solve(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(-14, 5));
  EXPECT_EQ(s.point, (std::vector<Rational>{Rational(8, 5), Rational(6, 5)}));
}

TEST(LpTest, InfeasibleAndUnbounded) {
  LpProblem inf(1);
  inf.objective = R({1});
  inf.AddConstraint(R({1}), Relation::kLessEqual, 1);
  inf.AddConstraint(R({1}), Relation::kGreaterEqual, 2);
  EXPECT_EQ(Solve(inf).status, LpStatus::kInfeasible);

  LpProblem unb(2);
  unb.objective = R({1, 1});
  unb.AddConstraint(R({1, -1}), Relation::kLessEqual, 1);
  EXPECT_EQ(Solve(unb).status, LpStatus::kUnbounded);
}

TEST(LpTest, DegenerateProblemTerminates) {
  // A classic cycling example for the largest-coefficient rule.
  LpProblem p(4);
  p.objective = {Rational(3, 4), Rational(-20), Rational(1, 2), Rational(-6)};
  p.lower_bounds.assign(4, Rational(0));
  p.AddConstraint({Rational(1, 4), Rational(-8), Rational(-1), Rational(9)},
                  Relation::kLessEqual, 0);
  p.AddConstraint({Rational(1, 2), Rational(-12), Rational(-1, 2), Rational(3)},
                  Relation::kLessEqual, 0);
  p.AddConstraint(R({0, 0, 1, 0}), Relation::kLessEqual, 1);
  const LpSolution s = Solve(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(5, 4));
  EXPECT_EQ(s.point, R({1, 0, 1, 0}));
}

TEST(LpTest, ValidateRejectsShapeErrors) {
  LpProblem p(2);
  p.AddConstraint(R({1}), Relation::kLessEqual, 1);
  EXPECT_THROW(Solve(p), PreconditionError);
}

TEST(LpTest, VerifyPointReportsViolations) {
  LpProblem p(2);
  p.lower_bounds = {Rational(0), std::nullopt};
  p.AddConstraint(R({1, 1}), Relation::kLessEqual, 1);
  p.AddConstraint(R({1, -1}), Relation::kEqual, 0);
  const PointCheck check = VerifyPoint(p, R({-1, 3}));
  EXPECT_FALSE(check.feasible);
  EXPECT_EQ(check.violated_constraints, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(check.violated_bounds, (std::vector<std::size_t>{0}));
}

// Random bounded problems against vertex enumeration, and strong duality
// against the dual solved by the same code.
TEST(LpTest, RandomProblemsAgreeWithVertexEnumeration) {
  std::mt19937_64 rng(3);
  int optimal = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    const int m = 3 + trial % 4;
    LpProblem p(static_cast<std::size_t>(n));
    oracle::Mat a;
    oracle::Vec b;
    for (auto& c : p.objective) c = Rational(UniformInt(rng, -5, 5));
    for (int r = 0; r < m; ++r) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      for (auto& v : row) v = Rational(UniformInt(rng, -4, 6));
      const Rational rhs(UniformInt(rng, -3, 12));
      p.AddConstraint(row, Relation::kLessEqual, rhs);
      a.push_back(row);
      b.push_back(rhs);
    }
    const LpSolution s = Solve(p);
    const auto ref = oracle::MaxByVertices(a, b, p.objective);
    if (!ref.feasible) {
      EXPECT_EQ(s.status, LpStatus::kInfeasible) << trial;
      continue;
    }
    if (ref.unbounded) {
      EXPECT_EQ(s.status, LpStatus::kUnbounded) << trial;
      continue;
    }
    ASSERT_EQ(s.status, LpStatus::kOptimal) << trial;
    ++optimal;
    EXPECT_EQ(s.value, ref.value) << trial;
    EXPECT_TRUE(VerifyPoint(p, s.point).feasible);

    // Dual: min b.y, A^T y = c, y >= 0.
    LpProblem d(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) d.objective[r] = -b[r];
    d.lower_bounds.assign(static_cast<std::size_t>(m), Rational(0));
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> col(static_cast<std::size_t>(m));
      for (int r = 0; r < m; ++r) col[r] = a[r][j];
      d.AddConstraint(col, Relation::kEqual, p.objective[j]);
    }
    const LpSolution ds = Solve(d);
    ASSERT_EQ(ds.status, LpStatus::kOptimal);
    EXPECT_EQ(-ds.value, s.value) << trial;
  }
  EXPECT_GT(optimal, 30);
}

TEST(LpTest, Deterministic) {
  std::mt19937_64 rng(21);
  LpProblem p(3);
  for (auto& c : p.objective) c = Rational(UniformInt(rng, 1, 4));
  p.lower_bounds.assign(3, Rational(0));
  for (int r = 0; r < 6; ++r) {
    std::vector<Rational> row(3);
    for (auto& v : row) v = Rational(UniformInt(rng, 0, 3));
    p.AddConstraint(row, Relation::kLessEqual, Rational(UniformInt(rng, 1, 9)));
  }
  const LpSolution a = Solve(p);
  const LpSolution b = Solve(p);
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.value, b.value);
}

}  // namespace
}  // namespace almostcore
