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

#ifndef ALMOSTCORE_MST_GAME_HPP_
#define ALMOSTCORE_MST_GAME_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "almostcore/coalition.hpp"
#include "almostcore/errors.hpp"
#include "almostcore/game.hpp"
#include "almostcore/graph.hpp"
#include "almostcore/rational.hpp"

namespace almostcore {

// cbar for every coalition, by one sweep over the subset lattice.
inline std::vector<Rational> MonotonizedTable(const GraphInstance& g) {
  CheckEnumerable(g.num_agents(), "monotonized cost");
  return MonotonizeTable(g.num_agents(), MstCostTable(g));
}

// cbar(S) = min over supersets R of S of c(R). Builds the whole table; use
// MonotonizedTable or a monotonized Game for repeated queries.
inline Rational MonotonizedCost(const GraphInstance& g, const Coalition& s) {
  if (s.num_agents() != g.num_agents()) {
    throw PreconditionError("coalition and graph disagree on n");
  }
  return MonotonizedTable(g)[s.bits()];
}

// Materializes c (or cbar) as an explicit game.
inline Game ExplicitFromGraph(const GraphInstance& g, bool monotonize) {
  CheckEnumerable(g.num_agents(), "explicit MST table");
  return Game::Explicit(g.num_agents(),
                        monotonize ? MonotonizedTable(g) : MstCostTable(g));
}

// Core allocation of Granot and Huberman: in a Prim run from the supplier,
// each agent pays the edge that connected it.
inline Allocation GranotHuberman(const GraphInstance& g,
                                 TieBreak tie = TieBreak::kHighestIndex) {
  const int n = g.num_agents();
  std::vector<int> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nodes[i] = i + 1;
  const PrimRun run = RunPrim(g, nodes, tie);
  Allocation x(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < run.order.size(); ++k) {
    x[static_cast<std::size_t>(run.order[k] - 1)] = run.edge_weight[k];
  }
  return x;
}

struct AlgorithmTrace {
  std::vector<int> insertion_order;      // 0-based agents, Prim order
  std::vector<WeightedEdge> tree_edges;  // node indices, 0 = supplier
  Allocation pre_update_shares;          // x_j = w(i, j) at insertion
  int last_agent = -1;                   // 0-based
  int argmin_agent = -1;                 // 0-based k attaining the update min
  Allocation final_shares;
};

struct AlgorithmResult {
  Allocation allocation;
  Rational value;
  AlgorithmTrace trace;
};

// Cost of the minimum spanning tree on the supplier plus every agent except
// `skip` (0-based).
inline Rational MstCostWithout(const GraphInstance& g, int skip,
                               TieBreak tie = TieBreak::kHighestIndex) {
  std::vector<int> nodes;
  nodes.reserve(static_cast<std::size_t>(g.num_agents()));
  for (int i = 0; i < g.num_agents(); ++i) {
    if (i != skip) nodes.push_back(i + 1);
  }
  return RunPrim(g, nodes, tie).total;
}

// 2-approximation for max x(N) over the nonnegative almost core of an MST
// game. Prim from the supplier charges each agent its connecting edge; the
// last agent l is then raised to
//     min_{k != l} c(N \ {k}) - x(N \ {k, l}).
inline AlgorithmResult ApproximateAlmostCore(
    const GraphInstance& g, TieBreak tie = TieBreak::kHighestIndex) {
  const int n = g.num_agents();
  if (n < 2) {
    throw PreconditionError(
        "the last-agent update minimizes over the other agents; needs n >= 2");
  }
  std::vector<int> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nodes[i] = i + 1;
  const PrimRun run = RunPrim(g, nodes, tie);

  AlgorithmTrace trace;
  trace.pre_update_shares = Allocation(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < run.order.size(); ++k) {
    const int agent = run.order[k] - 1;
    trace.insertion_order.push_back(agent);
    trace.tree_edges.push_back({run.parent[k], run.order[k], run.edge_weight[k]});
    trace.pre_update_shares[static_cast<std::size_t>(agent)] =
        run.edge_weight[k];
  }
  const int last = trace.insertion_order.back();
  trace.last_agent = last;

  const Rational pre_total = run.total;
  const Allocation& pre = trace.pre_update_shares;
  std::optional<Rational> best;
  for (int k = 0; k < n; ++k) {
    if (k == last) continue;
    Rational candidate =
        MstCostWithout(g, k, tie) - (pre_total - pre[k] - pre[last]);
    if (!best || candidate < *best) {
      best = std::move(candidate);
      trace.argmin_agent = k;
    }
  }
  trace.final_shares = pre;
  trace.final_shares[static_cast<std::size_t>(last)] = *best;
  return {trace.final_shares, trace.final_shares.Total(), std::move(trace)};
}

// sum_j c({j}) = sum_j w(0, j): the default shift that makes nonnegativity
// redundant for the almost core optimum.
inline Rational DefaultShift(const GraphInstance& g) {
  Rational m(0);
  for (int j = 1; j <= g.num_agents(); ++j) m += g.weight(0, j);
  return m;
}

// w'(e) = w(e) + M on every edge, so c'(S) = c(S) + |S| M.
inline GraphInstance ShiftWeights(const GraphInstance& g,
                                  std::optional<Rational> shift = std::nullopt) {
  const Rational m = shift.value_or(DefaultShift(g));
  if (m.Sign() < 0) {
    throw PreconditionError("weight shift must be nonnegative, got " +
                            m.ToString());
  }
  const int nodes = static_cast<int>(g.num_nodes());
  std::vector<Rational> w = g.weight_matrix();
  for (int u = 0; u < nodes; ++u) {
    for (int v = 0; v < nodes; ++v) {
      if (u != v) w[static_cast<std::size_t>(u * nodes + v)] += m;
    }
  }
  return GraphInstance(g.num_agents(), std::move(w));
}

}  // namespace almostcore

#endif  // ALMOSTCORE_MST_GAME_HPP_
