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

#ifndef ALMOSTCORE_GAME_HPP_
#define ALMOSTCORE_GAME_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "almostcore/coalition.hpp"
#include "almostcore/errors.hpp"
#include "almostcore/graph.hpp"
#include "almostcore/rational.hpp"

namespace almostcore {

// Full 2^n table of an MST game's characteristic function.
inline std::vector<Rational> MstCostTable(const GraphInstance& g) {
  const int n = g.num_agents();
  CheckEnumerable(n, "MST cost table");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Rational> table(size);
  for (std::uint64_t s = 1; s < size; ++s) {
    table[s] = MstCost(g, Coalition(n, s));
  }
  return table;
}

// Monotonized table cbar(S) = min over R >= S of table(R), by one descending
// sweep over the subset lattice: cbar(S) = min(c(S), min_i cbar(S + i)).
inline std::vector<Rational> MonotonizeTable(int n,
                                             std::vector<Rational> table) {
  const std::uint64_t full = Coalition::FullMask(n);
  for (std::uint64_t s = full; s-- > 0;) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((s & bit) == 0 && table[s | bit] < table[s]) {
        table[s] = table[s | bit];
      }
    }
  }
  table[0] = Rational(0);
  return table;
}

// A TU game (N, c). Either an explicit 2^n table or backed by an MST graph
// (optionally monotonized). Immutable; copies share the underlying data.
class Game {
 public:
  // Explicit table indexed by coalition bitmask. Requires c(empty) = 0 and
  // c >= 0.
  static Game Explicit(int n, std::vector<Rational> table) {
    Game game = ExplicitSigned(n, std::move(table));
    for (std::size_t s = 1; s < game.table_->size(); ++s) {
      if ((*game.table_)[s].Sign() < 0) {
        throw PreconditionError("negative cost for coalition {" +
                                Coalition(n, s).ToString() + "}");
      }
    }
    return game;
  }

  // Explicit table that may take negative values (profit games derived from
  // non-subadditive cost games). Still requires c(empty) = 0.
  static Game ExplicitSigned(int n, std::vector<Rational> table) {
    if (n < 1) throw PreconditionError("a game needs at least one agent");
    CheckEnumerable(n, "explicit game");
    if (table.size() != (std::size_t{1} << n)) {
      throw PreconditionError("explicit table for n = " + std::to_string(n) +
                              " must have " +
                              std::to_string(std::size_t{1} << n) +
                              " entries, got " + std::to_string(table.size()));
    }
    if (!table[0].IsZero()) {
      throw PreconditionError("c(empty set) must be 0");
    }
    Game game;
    game.n_ = n;
    game.table_ = std::make_shared<const std::vector<Rational>>(std::move(table));
    return game;
  }

  // Game evaluated through the graph. With `monotonize`, the cbar table is
  // built eagerly (needs n within the enumeration limit).
  static Game FromGraph(std::shared_ptr<const GraphInstance> graph,
                        bool monotonize) {
    if (!graph) throw PreconditionError("null graph");
    Game game;
    game.n_ = graph->num_agents();
    if (game.n_ > kMaxCoalitionAgents) {
      throw PreconditionError("graph too large for coalition evaluation");
    }
    game.graph_ = std::move(graph);
    game.monotonized_ = monotonize;
    if (monotonize) {
      game.table_ = std::make_shared<const std::vector<Rational>>(
          MonotonizeTable(game.n_, MstCostTable(*game.graph_)));
    }
    return game;
  }

  int num_agents() const { return n_; }
  bool is_explicit() const { return graph_ == nullptr; }
  bool is_monotonized() const { return monotonized_; }
  const GraphInstance* graph() const { return graph_.get(); }

  Rational Evaluate(const Coalition& s) const {
    if (s.num_agents() != n_) {
      throw PreconditionError("coalition over " +
                              std::to_string(s.num_agents()) +
                              " agents evaluated in a game with n = " +
                              std::to_string(n_));
    }
    if (table_) return (*table_)[s.bits()];
    return MstCost(*graph_, s);
  }
  Rational operator()(const Coalition& s) const { return Evaluate(s); }

  Rational GrandCost() const { return Evaluate(Coalition::Grand(n_)); }

  // The full 2^n table (materialized on demand for plain MST games).
  std::shared_ptr<const std::vector<Rational>> Table() const {
    if (table_) return table_;
    return std::make_shared<const std::vector<Rational>>(MstCostTable(*graph_));
  }

 private:
  Game() = default;

  int n_ = 0;
  std::shared_ptr<const std::vector<Rational>> table_;
  std::shared_ptr<const GraphInstance> graph_;
  bool monotonized_ = false;
};

// Cost shares x_1..x_n; x(S) is the coalition sum.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<Rational> shares)
      : shares_(std::move(shares)) {}
  explicit Allocation(std::size_t n) : shares_(n) {}

  std::size_t size() const { return shares_.size(); }
  const Rational& operator[](std::size_t i) const { return shares_[i]; }
  Rational& operator[](std::size_t i) { return shares_[i]; }
  const std::vector<Rational>& shares() const { return shares_; }

  Rational Sum(const Coalition& s) const {
    Rational total(0);
    for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
      total += shares_[static_cast<std::size_t>(std::countr_zero(b))];
    }
    return total;
  }
  Rational Total() const {
    Rational total(0);
    for (const auto& x : shares_) total += x;
    return total;
  }
  bool IsNonnegative() const {
    for (const auto& x : shares_) {
      if (x.Sign() < 0) return false;
    }
    return true;
  }

  // "(a, b, c)" with exact rationals.
  std::string ToString() const {
    std::string out = "(";
    for (std::size_t i = 0; i < shares_.size(); ++i) {
      if (i) out += ", ";
      out += shares_[i].ToString();
    }
    return out + ")";
  }

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Allocation& a) {
    return os << a.ToString();
  }

 private:
  std::vector<Rational> shares_;
};

// Result of a brute-force structural check. On failure `witness` holds the
// lexicographically smallest violating pair under bitmask order.
struct PairCheck {
  bool holds = true;
  std::optional<std::pair<Coalition, Coalition>> witness;
};

struct AgentCheck {
  bool holds = true;
  std::optional<int> agent;  // 0-based
};

namespace detail {

inline std::shared_ptr<const std::vector<Rational>> CheckedTable(
    const Game& game, const char* what) {
  CheckEnumerable(game.num_agents(), what);
  return game.Table();
}

}  // namespace detail

// c(S u T) <= c(S) + c(T) for all disjoint nonempty S, T.
inline PairCheck IsSubadditive(const Game& game) {
  const auto table = detail::CheckedTable(game, "subadditivity check");
  const int n = game.num_agents();
  const std::uint64_t full = Coalition::FullMask(n);
  const auto& c = *table;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::uint64_t rest = full & ~s;
    // Nonempty submasks of `rest` in ascending order.
    for (std::uint64_t t = rest & (0 - rest); t != 0;
         t = t == rest ? 0 : ((t - rest) & rest)) {
      if (c[s | t] > c[s] + c[t]) {
        return {false, std::make_pair(Coalition(n, s), Coalition(n, t))};
      }
    }
  }
  return {};
}

// c(S) + c(T) >= c(S u T) + c(S n T) for all S, T.
inline PairCheck IsSubmodular(const Game& game) {
  const auto table = detail::CheckedTable(game, "submodularity check");
  const int n = game.num_agents();
  const std::uint64_t full = Coalition::FullMask(n);
  const auto& c = *table;
  // Submodularity is equivalent to the local diminishing-returns condition;
  // only fall back to the full pair scan to locate the smallest witness.
  bool local_ok = true;
  for (std::uint64_t s = 0; s <= full && local_ok; ++s) {
    for (int i = 0; i < n && local_ok; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (s & bi) continue;
      for (int j = i + 1; j < n; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (s & bj) continue;
        if (c[s | bi] + c[s | bj] < c[s | bi | bj] + c[s]) {
          local_ok = false;
          break;
        }
      }
    }
  }
  if (local_ok) return {};
  for (std::uint64_t s = 0; s <= full; ++s) {
    for (std::uint64_t t = 0; t <= full; ++t) {
      if (c[s] + c[t] < c[s | t] + c[s & t]) {
        return {false, std::make_pair(Coalition(n, s), Coalition(n, t))};
      }
    }
  }
  return {false, std::nullopt};  // unreachable
}

// c(S) <= c(T) whenever S is a subset of T.
inline PairCheck IsMonotone(const Game& game) {
  const auto table = detail::CheckedTable(game, "monotonicity check");
  const int n = game.num_agents();
  const std::uint64_t full = Coalition::FullMask(n);
  const auto& c = *table;
  bool local_ok = true;
  for (std::uint64_t s = 0; s <= full && local_ok; ++s) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if ((s & bi) == 0 && c[s] > c[s | bi]) {
        local_ok = false;
        break;
      }
    }
  }
  if (local_ok) return {};
  for (std::uint64_t s = 0; s <= full; ++s) {
    const std::uint64_t rest = full & ~s;
    // Supersets s | t, t a submask of rest, ascending.
    for (std::uint64_t t = 0;; t = (t - rest) & rest) {
      if (c[s] > c[s | t]) {
        return {false, std::make_pair(Coalition(n, s), Coalition(n, s | t))};
      }
      if (t == rest) break;
    }
  }
  return {false, std::nullopt};  // unreachable
}

// c(N \ {k}) <= c(N) for every agent k; reports the smallest violating k.
inline AgentCheck SatisfiesLastMonotone(const Game& game) {
  const int n = game.num_agents();
  const Coalition grand = Coalition::Grand(n);
  const Rational grand_cost = game.Evaluate(grand);
  for (int k = 0; k < n; ++k) {
    if (game.Evaluate(grand.Without(k)) > grand_cost) return {false, k};
  }
  return {};
}

// The cost-savings game v(S) = sum_{i in S} c({i}) - c(S).
inline Game ToProfitGame(const Game& game) {
  const auto table = detail::CheckedTable(game, "profit transformation");
  const int n = game.num_agents();
  const auto& c = *table;
  std::vector<Rational> v(c.size());
  for (std::uint64_t s = 1; s < c.size(); ++s) {
    Rational standalone(0);
    for (std::uint64_t b = s; b != 0; b &= b - 1) {
      standalone += c[b & (0 - b)];
    }
    v[s] = standalone - c[s];
  }
  return Game::ExplicitSigned(n, std::move(v));
}

// x^v_i = c({i}) - x_i. An involution.
inline Allocation ProfitTransformAllocation(const Game& game,
                                            const Allocation& x) {
  const int n = game.num_agents();
  if (x.size() != static_cast<std::size_t>(n)) {
    throw PreconditionError("allocation has " + std::to_string(x.size()) +
                            " entries, game has " + std::to_string(n) +
                            " agents");
  }
  Allocation out(x.size());
  for (int i = 0; i < n; ++i) {
    out[i] = game.Evaluate(Coalition::Singleton(n, i)) - x[i];
  }
  return out;
}

}  // namespace almostcore

#endif  // ALMOSTCORE_GAME_HPP_
