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

#ifndef ALMOSTCORE_GRAPH_HPP_
#define ALMOSTCORE_GRAPH_HPP_

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "almostcore/coalition.hpp"
#include "almostcore/errors.hpp"
#include "almostcore/rational.hpp"

namespace almostcore {

// Which minimum-weight edge Prim's algorithm takes when several tie. Both
// rules then prefer the smallest tree-side endpoint.
enum class TieBreak {
  kHighestIndex,  // largest new node first
  kLowestIndex,   // smallest new node first
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Rational weight;
};

// Complete undirected graph on nodes {0, 1, ..., n}; node 0 is the supplier
// and node i (i >= 1) is agent i-1. Weights are symmetric and nonnegative.
class GraphInstance {
 public:
  // `weights` is the full (n+1)x(n+1) row-major matrix. Diagonal is ignored.
  GraphInstance(int num_agents, std::vector<Rational> weights)
      : num_agents_(num_agents), weights_(std::move(weights)) {
    if (num_agents < 1) {
      throw PreconditionError("graph needs at least one agent");
    }
    const std::size_t nodes = num_nodes();
    if (weights_.size() != nodes * nodes) {
      throw PreconditionError("weight matrix must be (n+1)x(n+1)");
    }
    for (std::size_t i = 0; i < nodes; ++i) {
      weights_[i * nodes + i] = Rational(0);
      for (std::size_t j = 0; j < i; ++j) {
        const Rational& a = weights_[i * nodes + j];
        if (a != weights_[j * nodes + i]) {
          throw PreconditionError("weight matrix is not symmetric at (" +
                                  std::to_string(j) + "," + std::to_string(i) +
                                  ")");
        }
        if (a.Sign() < 0) {
          throw PreconditionError("negative edge weight on (" +
                                  std::to_string(j) + "," + std::to_string(i) +
                                  ")");
        }
      }
    }
  }

  // Builds the complete graph from a partial edge list. Missing edges get
  // weight 1 + (sum of all given weights), so they never enter a minimum
  // spanning tree of any node set connected by the given edges. The given
  // edges must connect all nodes.
  static GraphInstance FromEdges(int num_agents,
                                 const std::vector<WeightedEdge>& edges) {
    if (num_agents < 1) {
      throw PreconditionError("graph needs at least one agent");
    }
    const int nodes = num_agents + 1;
    std::vector<std::optional<Rational>> given(
        static_cast<std::size_t>(nodes) * nodes);
    Rational total(0);
    std::vector<int> component(nodes);
    std::iota(component.begin(), component.end(), 0);
    auto find = [&](int x) {
      while (component[x] != x) x = component[x] = component[component[x]];
      return x;
    };
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= nodes || e.v >= nodes) {
        throw PreconditionError("edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ") has a node outside 0.." +
                                std::to_string(num_agents));
      }
      if (e.u == e.v) {
        throw PreconditionError("self-loop on node " + std::to_string(e.u));
      }
      if (e.weight.Sign() < 0) {
        throw PreconditionError("negative edge weight on (" +
                                std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
      }
      auto& slot = given[static_cast<std::size_t>(e.u) * nodes + e.v];
      if (slot.has_value()) {
        throw PreconditionError("duplicate edge (" + std::to_string(e.u) +
                                "," + std::to_string(e.v) + ")");
      }
      slot = e.weight;
      given[static_cast<std::size_t>(e.v) * nodes + e.u] = e.weight;
      total += e.weight;
      component[find(e.u)] = find(e.v);
    }
    for (int i = 1; i < nodes; ++i) {
      if (find(i) != find(0)) {
        throw PreconditionError("graph is disconnected: node " +
                                std::to_string(i) +
                                " is not reachable from the supplier");
      }
    }
    const Rational filler = total + Rational(1);
    std::vector<Rational> weights(given.size());
    for (std::size_t k = 0; k < given.size(); ++k) {
      weights[k] = given[k].value_or(filler);
    }
    return GraphInstance(num_agents, std::move(weights));
  }

  int num_agents() const { return num_agents_; }
  std::size_t num_nodes() const {
    return static_cast<std::size_t>(num_agents_) + 1;
  }

  // Weight between nodes u and v (0 = supplier).
  const Rational& weight(int u, int v) const {
    return weights_[static_cast<std::size_t>(u) * num_nodes() +
                    static_cast<std::size_t>(v)];
  }

  // All edges u < v of the complete graph, ordered by (u, v).
  std::vector<WeightedEdge> Edges() const {
    std::vector<WeightedEdge> out;
    const int nodes = static_cast<int>(num_nodes());
    for (int u = 0; u < nodes; ++u) {
      for (int v = u + 1; v < nodes; ++v) out.push_back({u, v, weight(u, v)});
    }
    return out;
  }

  const std::vector<Rational>& weight_matrix() const { return weights_; }

  friend bool operator==(const GraphInstance&, const GraphInstance&) = default;

 private:
  int num_agents_;
  std::vector<Rational> weights_;
};

// One run of Prim's algorithm from the supplier over a node subset.
struct PrimRun {
  std::vector<int> order;         // nodes in insertion order (supplier excluded)
  std::vector<int> parent;        // parent[k] is the tree node order[k] hung off
  std::vector<Rational> edge_weight;  // weight of that connecting edge
  Rational total;
};

// Prim's algorithm on the subgraph induced by {0} and `nodes` (agent nodes,
// 1-based, any order). Deterministic under `tie`.
inline PrimRun RunPrim(const GraphInstance& g, const std::vector<int>& nodes,
                       TieBreak tie = TieBreak::kHighestIndex) {
  PrimRun run;
  const std::size_t k = nodes.size();
  run.order.reserve(k);
  run.parent.reserve(k);
  run.edge_weight.reserve(k);
  std::vector<bool> in_tree(k, false);
  std::vector<Rational> key(k);
  std::vector<int> parent(k, 0);
  for (std::size_t j = 0; j < k; ++j) key[j] = g.weight(0, nodes[j]);

  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (in_tree[j]) continue;
      if (best == k || key[j] < key[best]) {
        best = j;
        continue;
      }
      if (key[j] == key[best]) {
        const bool prefer = tie == TieBreak::kHighestIndex
                                ? nodes[j] > nodes[best]
                                : nodes[j] < nodes[best];
        if (prefer) best = j;
      }
    }
    in_tree[best] = true;
    const int v = nodes[best];
    run.order.push_back(v);
    run.parent.push_back(parent[best]);
    run.edge_weight.push_back(key[best]);
    run.total += key[best];
    for (std::size_t j = 0; j < k; ++j) {
      if (in_tree[j]) continue;
      const Rational& w = g.weight(v, nodes[j]);
      if (w < key[j] || (w == key[j] && v < parent[j])) {
        key[j] = w;
        parent[j] = v;
      }
    }
  }
  return run;
}

// Agent nodes (1-based) of a coalition over the graph's agents.
inline std::vector<int> NodesOf(const Coalition& s) {
  std::vector<int> nodes = s.Members();
  for (int& v : nodes) ++v;
  return nodes;
}

// c(S): cost of a minimum spanning tree on the subgraph induced by S and the
// supplier. c(empty) = 0.
inline Rational MstCost(const GraphInstance& g, const Coalition& s) {
  if (s.num_agents() != g.num_agents()) {
    throw PreconditionError("coalition is over " +
                            std::to_string(s.num_agents()) +
                            " agents but the graph has " +
                            std::to_string(g.num_agents()));
  }
  return RunPrim(g, NodesOf(s)).total;
}

}  // namespace almostcore

#endif  // ALMOSTCORE_GRAPH_HPP_
