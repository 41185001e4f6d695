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

#ifndef ALMOSTCORE_RELAXATIONS_HPP_
#define ALMOSTCORE_RELAXATIONS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "almostcore/coalition.hpp"
#include "almostcore/errors.hpp"
#include "almostcore/game.hpp"
#include "almostcore/lp.hpp"
#include "almostcore/rational.hpp"

namespace almostcore {

// An optimal value together with an allocation attaining it.
struct ValuedAllocation {
  Rational value;
  Allocation allocation;
};

struct CoreCheck {
  bool nonempty = false;
  std::optional<Allocation> element;  // budget balanced and stable
};

struct ExtendedCoreResult {
  Rational delta;
  Allocation shares;   // x, with x(N) = c(N)
  Allocation subsidy;  // t >= 0
};

// Every core relaxation of a game, each computed by its own LP.
struct RelaxationReport {
  int n = 0;
  Rational grand_cost;
  bool core_nonempty = false;
  std::optional<Allocation> core_element;
  ValuedAllocation ac_opt;
  ValuedAllocation ac_opt_nonneg;
  ValuedAllocation eps_strong;
  ValuedAllocation eps_weak;
  std::optional<ValuedAllocation> eps_mult;
  std::optional<ValuedAllocation> gamma_approx;
  ValuedAllocation cos_delta;  // allocation: maximizer of x(N) over P_core
  ExtendedCoreResult ext_core;
};

namespace detail {

inline std::vector<Rational> Indicator(int n, std::uint64_t s,
                                       std::size_t width) {
  std::vector<Rational> row(width);
  for (int i = 0; i < n; ++i) {
    if ((s >> i) & 1U) row[static_cast<std::size_t>(i)] = Rational(1);
  }
  return row;
}

inline Allocation Head(const std::vector<Rational>& point, int n) {
  return Allocation(std::vector<Rational>(point.begin(), point.begin() + n));
}

inline LpSolution SolveOrThrow(const LpProblem& p, const char* what) {
  LpSolution s = Solve(p);
  if (s.status == LpStatus::kOptimal) return s;
  throw std::logic_error(std::string(what) + " LP is " + ToString(s.status));
}

// max x(N) over P_core (all S including N). Always feasible for c >= 0.
inline LpProblem MaxOverCore(int n, const std::vector<Rational>& c) {
  LpProblem p(static_cast<std::size_t>(n));
  for (auto& a : p.objective) a = Rational(1);
  for (std::uint64_t s = 1; s < c.size(); ++s) {
    p.AddConstraint(Indicator(n, s, p.num_vars), Relation::kLessEqual, c[s]);
  }
  return p;
}

}  // namespace detail

// The almost-core constraint system x(S) <= c(S) for nonempty S != N in
// ascending bitmask order, objective x(N); with `nonneg`, x >= 0.
inline LpProblem AlmostCoreProblem(const Game& game, bool nonneg) {
  const int n = game.num_agents();
  CheckEnumerable(n, "almost core LP");
  const auto table = game.Table();
  LpProblem p(static_cast<std::size_t>(n));
  for (auto& a : p.objective) a = Rational(1);
  if (nonneg) {
    for (auto& lb : p.lower_bounds) lb = Rational(0);
  }
  const std::uint64_t full = Coalition::FullMask(n);
  for (std::uint64_t s = 1; s < full; ++s) {
    p.AddConstraint(detail::Indicator(n, s, p.num_vars), Relation::kLessEqual,
                    (*table)[s]);
  }
  return p;
}

// max { x(N) : x(S) <= c(S) for all nonempty S != N } (and x >= 0 when
// `require_nonneg`). Unbounded for a single agent, which is rejected.
inline ValuedAllocation AlmostCoreOptimum(const Game& game,
                                          bool require_nonneg) {
  if (game.num_agents() < 2) {
    throw PreconditionError(
        "almost core optimum is unbounded for a single agent");
  }
  const LpSolution s = Solve(AlmostCoreProblem(game, require_nonneg));
  if (s.status != LpStatus::kOptimal) {
    throw std::logic_error(std::string("almost core LP is ") +
                           ToString(s.status));
  }
  return {s.value, detail::Head(s.point, game.num_agents())};
}

// Optimizes `objective` over P_core = { x : x(S) <= c(S) for all S }.
inline LpSolution CoreOptimum(const Game& game,
                              const std::vector<Rational>& objective) {
  const int n = game.num_agents();
  CheckEnumerable(n, "core LP");
  if (objective.size() != static_cast<std::size_t>(n)) {
    throw PreconditionError("objective has " +
                            std::to_string(objective.size()) +
                            " entries, game has " + std::to_string(n) +
                            " agents");
  }
  const auto table = game.Table();
  LpProblem p(static_cast<std::size_t>(n));
  p.objective = objective;
  for (std::uint64_t s = 1; s < table->size(); ++s) {
    p.AddConstraint(detail::Indicator(n, s, p.num_vars), Relation::kLessEqual,
                    (*table)[s]);
  }
  return Solve(p);
}

// Core nonempty iff the almost core optimum reaches c(N). The witness is a
// maximizer of x(N) over P_core, which is budget balanced exactly then.
inline CoreCheck CoreNonempty(const Game& game) {
  const int n = game.num_agents();
  CheckEnumerable(n, "core check");
  const Rational grand = game.GrandCost();
  bool nonempty = true;
  if (n >= 2) nonempty = AlmostCoreOptimum(game, false).value >= grand;
  if (!nonempty) return {};
  const LpSolution s = Solve(detail::MaxOverCore(n, *game.Table()));
  if (s.status != LpStatus::kOptimal || s.value != grand) {
    throw std::logic_error("core witness LP disagrees with the almost core");
  }
  return {true, Allocation(s.point)};
}

namespace detail {

// min eps >= 0 s.t. x(S) <= c(S) + eps * weight(S) for nonempty S != N and
// x(N) = c(N). Variables (x, eps).
template <typename Weight>
ValuedAllocation MinAdditiveRelaxation(const Game& game, Weight weight,
                                       const char* what) {
  const int n = game.num_agents();
  CheckEnumerable(n, what);
  const auto table = game.Table();
  const std::size_t vars = static_cast<std::size_t>(n) + 1;
  LpProblem p(vars);
  p.objective[n] = Rational(-1);
  p.lower_bounds[n] = Rational(0);
  const std::uint64_t full = Coalition::FullMask(n);
  for (std::uint64_t s = 1; s < full; ++s) {
    auto row = Indicator(n, s, vars);
    row[n] = -weight(Coalition(n, s));
    p.AddConstraint(std::move(row), Relation::kLessEqual, (*table)[s]);
  }
  p.AddConstraint(Indicator(n, full, vars), Relation::kEqual, (*table)[full]);
  const LpSolution s = SolveOrThrow(p, what);
  return {s.point[n], Head(s.point, n)};
}

}  // namespace detail

// eps_s*: the least core value.
inline ValuedAllocation LeastCoreEps(const Game& game) {
  return detail::MinAdditiveRelaxation(
      game, [](const Coalition&) { return Rational(1); }, "strong eps-core");
}

// eps_w*: smallest eps with x(S) <= c(S) + eps |S|.
inline ValuedAllocation WeakCoreEps(const Game& game) {
  return detail::MinAdditiveRelaxation(
      game, [](const Coalition& s) { return Rational(s.size()); },
      "weak eps-core");
}

// gamma_a* = max{x(N) : x in P_core} / c(N); the bound gamma <= 1 holds
// automatically since x(N) <= c(N) is one of the constraints.
inline ValuedAllocation GammaApprox(const Game& game) {
  const int n = game.num_agents();
  CheckEnumerable(n, "gamma-core");
  const Rational grand = game.GrandCost();
  if (grand.Sign() <= 0) {
    throw PreconditionError("gamma-core ratio is undefined for c(N) = " +
                            grand.ToString());
  }
  const LpSolution s = detail::SolveOrThrow(
      detail::MaxOverCore(n, *game.Table()), "gamma-core");
  return {Min(s.value / grand, Rational(1)), Allocation(s.point)};
}

// eps_m* via gamma = 1 / (1 + eps): an x maximizing x(N) over P_core scales
// to a budget-balanced member of the multiplicative core. Absent when no
// finite eps works (max x(N) over P_core is 0 while c(N) > 0).
inline std::optional<ValuedAllocation> MultCoreEps(const Game& game) {
  const int n = game.num_agents();
  CheckEnumerable(n, "multiplicative eps-core");
  const Rational grand = game.GrandCost();
  const LpSolution s = detail::SolveOrThrow(
      detail::MaxOverCore(n, *game.Table()), "multiplicative eps-core");
  if (s.value >= grand) return ValuedAllocation{Rational(0), Allocation(s.point)};
  if (s.value.Sign() <= 0) return std::nullopt;
  const Rational scale = grand / s.value;
  std::vector<Rational> x = s.point;
  for (auto& xi : x) xi *= scale;
  return ValuedAllocation{scale - Rational(1), Allocation(std::move(x))};
}

// delta_CoS = c(N) - max{ x(N) : x(S) <= c(S) for all S, including N }.
inline ValuedAllocation CostOfStability(const Game& game) {
  const int n = game.num_agents();
  CheckEnumerable(n, "cost of stability");
  const LpSolution s = detail::SolveOrThrow(
      detail::MaxOverCore(n, *game.Table()), "cost of stability");
  return {game.GrandCost() - s.value, Allocation(s.point)};
}

// delta_ec = min{ t(N) : x(N) = c(N), (x - t)(S) <= c(S) for S != N, t >= 0 }.
inline ExtendedCoreResult ExtendedCoreDelta(const Game& game) {
  const int n = game.num_agents();
  CheckEnumerable(n, "extended core");
  const auto table = game.Table();
  const std::size_t un = static_cast<std::size_t>(n);
  LpProblem p(2 * un);
  for (std::size_t i = 0; i < un; ++i) {
    p.objective[un + i] = Rational(-1);
    p.lower_bounds[un + i] = Rational(0);
  }
  const std::uint64_t full = Coalition::FullMask(n);
  for (std::uint64_t s = 1; s < full; ++s) {
    auto row = detail::Indicator(n, s, 2 * un);
    for (std::size_t i = 0; i < un; ++i) {
      if (!row[i].IsZero()) row[un + i] = Rational(-1);
    }
    p.AddConstraint(std::move(row), Relation::kLessEqual, (*table)[s]);
  }
  p.AddConstraint(detail::Indicator(n, full, 2 * un), Relation::kEqual,
                  (*table)[full]);
  const LpSolution s = detail::SolveOrThrow(p, "extended core");
  ExtendedCoreResult out;
  out.delta = -s.value;
  out.shares = detail::Head(s.point, n);
  out.subsidy =
      Allocation(std::vector<Rational>(s.point.begin() + n, s.point.end()));
  return out;
}

// min { x(N) : x(S) >= v(S) for all nonempty S != N } for a profit game v.
inline ValuedAllocation MinStableProfit(const Game& profit_game) {
  const int n = profit_game.num_agents();
  if (n < 2) {
    throw PreconditionError("stable profit minimum is unbounded for n = 1");
  }
  CheckEnumerable(n, "stable profit LP");
  const auto table = profit_game.Table();
  LpProblem p(static_cast<std::size_t>(n));
  for (auto& a : p.objective) a = Rational(-1);
  const std::uint64_t full = Coalition::FullMask(n);
  for (std::uint64_t s = 1; s < full; ++s) {
    p.AddConstraint(detail::Indicator(n, s, p.num_vars),
                    Relation::kGreaterEqual, (*table)[s]);
  }
  const LpSolution s = detail::SolveOrThrow(p, "stable profit");
  return {-s.value, Allocation(s.point)};
}

// All relaxations, each from its own LP, with the equivalences for
// empty-core games and the eps_w / eps_s sandwich checked exactly. A failed
// check throws std::logic_error.
inline RelaxationReport FullReport(const Game& game) {
  const int n = game.num_agents();
  CheckEnumerable(n, "relaxation report");
  RelaxationReport r;
  r.n = n;
  r.grand_cost = game.GrandCost();
  r.ac_opt = AlmostCoreOptimum(game, false);
  r.ac_opt_nonneg = AlmostCoreOptimum(game, true);
  const CoreCheck core = CoreNonempty(game);
  r.core_nonempty = core.nonempty;
  r.core_element = core.element;
  r.eps_strong = LeastCoreEps(game);
  r.eps_weak = WeakCoreEps(game);
  r.eps_mult = MultCoreEps(game);
  if (r.grand_cost.Sign() > 0) r.gamma_approx = GammaApprox(game);
  r.cos_delta = CostOfStability(game);
  r.ext_core = ExtendedCoreDelta(game);

  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("report identity failed: ") + what);
  };
  require(r.core_nonempty == (r.ac_opt.value >= r.grand_cost),
          "core nonempty iff almost core optimum >= c(N)");
  require(r.eps_weak.value <= r.eps_strong.value, "eps_w <= eps_s");
  require(Rational(n - 1) * r.eps_weak.value >= r.eps_strong.value,
          "(n-1) eps_w >= eps_s");
  if (!r.core_nonempty) {
    const Rational& delta = r.cos_delta.value;
    require(r.ext_core.delta == delta, "delta_ec = delta_CoS");
    require(r.gamma_approx.has_value() &&
                (Rational(1) - r.gamma_approx->value) * r.grand_cost == delta,
            "(1 - gamma) c(N) = delta_CoS");
    // An absent eps_m is the limit eps_m / (1 + eps_m) -> 1.
    const Rational mult_ratio =
        r.eps_mult ? r.eps_mult->value / (Rational(1) + r.eps_mult->value)
                   : Rational(1);
    require(mult_ratio * r.grand_cost == delta,
            "eps_m / (1 + eps_m) c(N) = delta_CoS");
    require(r.eps_weak.value * Rational(n) == delta, "eps_w n = delta_CoS");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Separation

enum class Verdict { kMember, kViolated };

struct SeparationResult {
  Verdict verdict = Verdict::kMember;
  std::optional<Coalition> coalition;  // x(S) > c(S)
  std::optional<int> negative_agent;   // x_i < 0 (nonnegative variants)
  Rational amount;                     // x(S) - c(S), or -x_i

  bool is_member() const { return verdict == Verdict::kMember; }

  static SeparationResult Member() { return {}; }
  static SeparationResult CoalitionViolation(Coalition s, Rational amount) {
    return {Verdict::kViolated, s, std::nullopt, std::move(amount)};
  }
  static SeparationResult BoundViolation(int agent, Rational amount) {
    return {Verdict::kViolated, std::nullopt, agent, std::move(amount)};
  }
};

// Separation oracle for P_core (or P_core with x >= 0).
using CoreSeparationOracle =
    std::function<SeparationResult(const Allocation&)>;

// Exhaustive P_core oracle over an enumerable game: reports the violated
// coalition with the smallest bitmask (negative entries first, smallest agent,
// when `nonneg`).
inline CoreSeparationOracle BruteForceCoreOracle(const Game& game,
                                                 bool nonneg = false) {
  CheckEnumerable(game.num_agents(), "brute-force core oracle");
  return [n = game.num_agents(), table = game.Table(),
          nonneg](const Allocation& x) {
    if (x.size() != static_cast<std::size_t>(n)) {
      throw PreconditionError("point has " + std::to_string(x.size()) +
                              " entries, game has " + std::to_string(n) +
                              " agents");
    }
    if (nonneg) {
      for (int i = 0; i < n; ++i) {
        if (x[i].Sign() < 0) return SeparationResult::BoundViolation(i, -x[i]);
      }
    }
    for (std::uint64_t s = 1; s < table->size(); ++s) {
      const Coalition coalition(n, s);
      Rational excess = x.Sum(coalition) - (*table)[s];
      if (excess.Sign() > 0) {
        return SeparationResult::CoalitionViolation(coalition, std::move(excess));
      }
    }
    return SeparationResult::Member();
  };
}

namespace detail {

inline void CheckPointSize(const Allocation& x, int n) {
  if (x.size() != static_cast<std::size_t>(n)) {
    throw PreconditionError("point has " + std::to_string(x.size()) +
                            " entries, game has " + std::to_string(n) +
                            " agents");
  }
}

// Queries the oracle with x^k (x with coordinate k lowered to `lowered`); a
// violated S != N for x^k is violated for x by at least as much.
inline std::optional<SeparationResult> QueryLowered(
    const Allocation& x, int k, const Rational& lowered,
    const CoreSeparationOracle& oracle) {
  Allocation xk = x;
  xk[k] = lowered;
  SeparationResult res = oracle(xk);
  if (res.is_member()) return std::nullopt;
  if (!res.coalition) {
    throw std::logic_error("core oracle reported a bound violation for a "
                           "point with nonnegative entries");
  }
  if (res.coalition->IsGrand()) {
    throw std::logic_error("core oracle reported the grand coalition for a "
                           "point with x(N) <= c(N)");
  }
  if (res.coalition->Contains(k)) res.amount += x[k] - lowered;
  return res;
}

}  // namespace detail

// Separation over the almost core using only a P_core oracle: query the n
// points obtained by lowering x_k until x(N) <= c(N).
inline SeparationResult SeparateAlmostCore(const Allocation& x,
                                           const CoreSeparationOracle& oracle,
                                           const Rational& grand_cost) {
  const int n = static_cast<int>(x.size());
  const Rational total = x.Total();
  for (int k = 0; k < n; ++k) {
    const Rational lowered = Min(x[k], grand_cost - (total - x[k]));
    if (auto res = detail::QueryLowered(x, k, lowered, oracle)) return *res;
  }
  return SeparationResult::Member();
}

// Separation over AC intersected with x >= 0, given an oracle for P_core with
// x >= 0. Requires c(N \ {k}) <= c(N) for all k: if lowering x_k would need a
// negative value then x(N \ {k}) > c(N) >= c(N \ {k}) is itself violated.
inline SeparationResult SeparateAlmostCoreNonneg(
    const Allocation& x, const CoreSeparationOracle& oracle, const Game& game) {
  const int n = game.num_agents();
  detail::CheckPointSize(x, n);
  const AgentCheck last = SatisfiesLastMonotone(game);
  if (!last.holds) {
    throw PreconditionError(
        "nonnegative almost core separation requires c(N \\ {k}) <= c(N); "
        "violated for agent " +
        std::to_string(*last.agent + 1));
  }
  for (int i = 0; i < n; ++i) {
    if (x[i].Sign() < 0) return SeparationResult::BoundViolation(i, -x[i]);
  }
  const Rational grand_cost = game.GrandCost();
  const Rational total = x.Total();
  const Coalition grand = Coalition::Grand(n);
  for (int k = 0; k < n; ++k) {
    const Rational headroom = grand_cost - (total - x[k]);
    if (headroom.Sign() < 0) {
      const Coalition rest = grand.Without(k);
      return SeparationResult::CoalitionViolation(
          rest, x.Sum(rest) - game.Evaluate(rest));
    }
    if (auto res = detail::QueryLowered(x, k, Min(x[k], headroom), oracle)) {
      return *res;
    }
  }
  return SeparationResult::Member();
}

}  // namespace almostcore

#endif  // ALMOSTCORE_RELAXATIONS_HPP_
