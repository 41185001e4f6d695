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

#ifndef ALMOSTCORE_INSTANCES_HPP_
#define ALMOSTCORE_INSTANCES_HPP_

#include <vector>

#include "almostcore/graph.hpp"
#include "almostcore/rational.hpp"

namespace almostcore::instances {

// Three agents on K4 with the given weights on edges
// 0-1, 0-2, 0-3, 1-2, 1-3, 2-3.
inline GraphInstance ThreeAgentGraph(const Rational& w01, const Rational& w02,
                                     const Rational& w03, const Rational& w12,
                                     const Rational& w13, const Rational& w23) {
  return GraphInstance::FromEdges(3, {{0, 1, w01},
                                      {0, 2, w02},
                                      {0, 3, w03},
                                      {1, 2, w12},
                                      {1, 3, w13},
                                      {2, 3, w23}});
}

// c(N) = 0 while the nonnegative almost core optimum is k.
inline GraphInstance LargeGap(const Rational& k) {
  return ThreeAgentGraph(0, 2 * k, 2 * k, 0, k, 0);
}

// The unique almost core optimum (-k, k, k) needs a subsidy; with x >= 0 the
// optimum is 0.
inline GraphInstance Subsidy(const Rational& k) {
  return ThreeAgentGraph(0, 2 * k, 2 * k, 0, 0, 0);
}

// The approximation returns 1 + eps against an optimum of 2.
inline GraphInstance TightRatio(const Rational& eps) {
  return ThreeAgentGraph(1, 2, 2, 0, eps, 0);
}

// c = 1 everywhere except c({2,3}) = 2; the monotonized game is 1 on every
// nonempty coalition.
inline GraphInstance SteinerShortcut() { return ThreeAgentGraph(1, 1, 1, 0, 0, 1); }

}  // namespace almostcore::instances

#endif  // ALMOSTCORE_INSTANCES_HPP_
