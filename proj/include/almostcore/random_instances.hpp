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

#ifndef ALMOSTCORE_RANDOM_INSTANCES_HPP_
#define ALMOSTCORE_RANDOM_INSTANCES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "almostcore/errors.hpp"
#include "almostcore/game.hpp"
#include "almostcore/graph.hpp"
#include "almostcore/rational.hpp"

namespace almostcore {

// The standard distributions are implementation-defined; draws here go
// through this helper so seeded streams match across standard libraries.
inline std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo,
                               std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

enum class WeightModel {
  kUniform,    // independent weights p/q, p in [0, 20], q in [1, 4]
  kEuclidean,  // squared distances between integer points in [0, 10]^2
  kNearPath,   // cheap Hamiltonian path through the agents, costly elsewhere
};

inline WeightModel ParseWeightModel(std::string_view name) {
  if (name == "uniform") return WeightModel::kUniform;
  if (name == "euclidean") return WeightModel::kEuclidean;
  if (name == "path") return WeightModel::kNearPath;
  throw PreconditionError("unknown weight model '" + std::string(name) +
                              "' (expected uniform, euclidean or path)");
}

inline const char* ToString(WeightModel m) {
  switch (m) {
    case WeightModel::kUniform:
      return "uniform";
    case WeightModel::kEuclidean:
      return "euclidean";
    case WeightModel::kNearPath:
      return "path";
  }
  return "?";
}

inline GraphInstance RandomGraph(std::mt19937_64& rng, int n,
                                 WeightModel model) {
  const int nodes = n + 1;
  std::vector<Rational> w(static_cast<std::size_t>(nodes) * nodes);
  auto set = [&](int u, int v, const Rational& value) {
    w[static_cast<std::size_t>(u) * nodes + v] = value;
    w[static_cast<std::size_t>(v) * nodes + u] = value;
  };
  switch (model) {
    case WeightModel::kUniform:
      for (int u = 0; u < nodes; ++u) {
        for (int v = u + 1; v < nodes; ++v) {
          const auto num = UniformInt(rng, 0, 20);
          set(u, v, Rational(num, UniformInt(rng, 1, 4)));
        }
      }
      break;
    case WeightModel::kEuclidean: {
      std::vector<std::pair<std::int64_t, std::int64_t>> pts(
          static_cast<std::size_t>(nodes));
      for (auto& p : pts) p = {UniformInt(rng, 0, 10), UniformInt(rng, 0, 10)};
      for (int u = 0; u < nodes; ++u) {
        for (int v = u + 1; v < nodes; ++v) {
          const auto dx = pts[u].first - pts[v].first;
          const auto dy = pts[u].second - pts[v].second;
          set(u, v, Rational(dx * dx + dy * dy));
        }
      }
      break;
    }
    case WeightModel::kNearPath: {
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 1);
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[static_cast<std::size_t>(i)],
                  order[static_cast<std::size_t>(UniformInt(rng, 0, i))]);
      }
      for (int u = 0; u < nodes; ++u) {
        for (int v = u + 1; v < nodes; ++v) {
          set(u, v, Rational(UniformInt(rng, 6, 20)));
        }
      }
      set(0, order[0], Rational(UniformInt(rng, 0, 3)));
      for (int i = 0; i + 1 < n; ++i) {
        set(order[i], order[i + 1], Rational(UniformInt(rng, 0, 3)));
      }
      break;
    }
  }
  return GraphInstance(n, std::move(w));
}

// Explicit game with c(S) uniform in [0, max_cost] for nonempty S.
inline Game RandomExplicitGame(std::mt19937_64& rng, int n,
                               std::int64_t max_cost) {
  std::vector<Rational> c(std::size_t{1} << n);
  for (std::size_t s = 1; s < c.size(); ++s) {
    c[s] = Rational(UniformInt(rng, 0, max_cost));
  }
  return Game::Explicit(n, std::move(c));
}

}  // namespace almostcore

#endif  // ALMOSTCORE_RANDOM_INSTANCES_HPP_
