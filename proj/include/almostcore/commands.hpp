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

#ifndef ALMOSTCORE_COMMANDS_HPP_
#define ALMOSTCORE_COMMANDS_HPP_

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "almostcore/coalition.hpp"
#include "almostcore/errors.hpp"
#include "almostcore/game.hpp"
#include "almostcore/instance_file.hpp"
#include "almostcore/instances.hpp"
#include "almostcore/mst_game.hpp"
#include "almostcore/random_instances.hpp"
#include "almostcore/relaxations.hpp"

namespace almostcore {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Serialization helpers. Every number leaves as an exact "p/q" string; the
// optional "approximate" block is the only place doubles appear.

inline Json ToJson(const Rational& r) { return r.ToString(); }

inline Json ToJson(const Allocation& x) {
  Json out = Json::array();
  for (const auto& v : x.shares()) out.push_back(v.ToString());
  return out;
}

inline Json ToJson(const std::optional<Allocation>& x) {
  return x ? ToJson(*x) : Json(nullptr);
}

inline Json ToJson(const std::optional<Rational>& r) {
  return r ? ToJson(*r) : Json(nullptr);
}

// Parses "a,b,c" (rationals) into an allocation.
inline Allocation ParsePoint(std::string_view text) {
  std::vector<Rational> shares;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = detail::Trim(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start));
    try {
      shares.push_back(Rational::Parse(token));
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, std::string("point: ") + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Allocation(std::move(shares));
}

inline Json InstanceEcho(const InstanceFile& file, bool monotonize) {
  Json echo;
  echo["format"] =
      file.format == InstanceFile::Format::kExplicit ? "explicit" : "mst";
  echo["n"] = file.n;
  echo["monotonized"] = monotonize;
  return echo;
}

// Appends an "approximate" block with double renderings of the listed
// top-level rational fields.
inline void AddApproximate(Json& report, const std::vector<std::string>& keys) {
  Json approx;
  for (const auto& key : keys) {
    if (!report.contains(key) || !report[key].is_string()) continue;
    approx[key] = Rational::Parse(report[key].get<std::string>()).ToDouble();
  }
  report["approximate"] = std::move(approx);
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  bool monotonize = false;
  bool nonneg = false;
  bool decimal = false;
};

inline Json CmdAnalyze(const InstanceFile& file, const AnalyzeOptions& opts) {
  CheckEnumerable(file.n, "analyze");
  const Game game = ToGame(file, opts.monotonize);
  const RelaxationReport r = FullReport(game);

  Json out;
  out["instance"] = InstanceEcho(file, opts.monotonize);
  out["grand_cost"] = ToJson(r.grand_cost);
  out["core_nonempty"] = r.core_nonempty;
  out["core_element"] = ToJson(r.core_element);
  out["ac_opt"] = ToJson(r.ac_opt.value);
  out["ac_opt_allocation"] = ToJson(r.ac_opt.allocation);
  out["ac_opt_nonneg"] = ToJson(r.ac_opt_nonneg.value);
  out["ac_opt_nonneg_allocation"] = ToJson(r.ac_opt_nonneg.allocation);
  out["eps_strong"] = ToJson(r.eps_strong.value);
  out["eps_strong_allocation"] = ToJson(r.eps_strong.allocation);
  out["eps_weak"] = ToJson(r.eps_weak.value);
  out["eps_weak_allocation"] = ToJson(r.eps_weak.allocation);
  out["eps_mult"] =
      r.eps_mult ? ToJson(r.eps_mult->value) : Json(nullptr);
  out["eps_mult_allocation"] =
      r.eps_mult ? ToJson(r.eps_mult->allocation) : Json(nullptr);
  out["gamma_approx"] =
      r.gamma_approx ? ToJson(r.gamma_approx->value) : Json(nullptr);
  out["gamma_approx_allocation"] =
      r.gamma_approx ? ToJson(r.gamma_approx->allocation) : Json(nullptr);
  out["delta_cos"] = ToJson(r.cos_delta.value);
  out["delta_cos_allocation"] = ToJson(r.cos_delta.allocation);
  out["delta_ec"] = ToJson(r.ext_core.delta);
  out["delta_ec_shares"] = ToJson(r.ext_core.shares);
  out["delta_ec_subsidy"] = ToJson(r.ext_core.subsidy);

  const AgentCheck last = SatisfiesLastMonotone(game);
  Json structure;
  structure["subadditive"] = IsSubadditive(game).holds;
  structure["submodular"] = IsSubmodular(game).holds;
  structure["monotone"] = IsMonotone(game).holds;
  structure["last_monotone"] = last.holds;
  out["structure"] = std::move(structure);

  if (opts.nonneg) {
    // Under c(N \ {k}) <= c(N) every x in the almost core has
    // x(N) <= (1 + 1/(n-1)) c(N) and optimal allocations are nonnegative.
    Json nonneg;
    nonneg["last_monotone"] = last.holds;
    nonneg["violating_agent"] =
        last.agent ? Json(*last.agent + 1) : Json(nullptr);
    nonneg["ac_opt_bound"] =
        last.holds && file.n >= 2
            ? ToJson(Rational(file.n, file.n - 1) * r.grand_cost)
            : Json(nullptr);
    nonneg["subsidy_gain"] = ToJson(r.ac_opt.value - r.ac_opt_nonneg.value);
    out["nonneg"] = std::move(nonneg);
  }
  if (opts.decimal) {
    AddApproximate(out, {"grand_cost", "ac_opt", "ac_opt_nonneg", "eps_strong",
                         "eps_weak", "eps_mult", "gamma_approx", "delta_cos",
                         "delta_ec"});
  }
  return out;
}

// ---------------------------------------------------------------------------
// mst approx | gh | table

struct MstOptions {
  bool monotonize = false;  // table only
  bool decimal = false;
  int limit = kEnumerationLimit;  // exact optimum only for n <= limit
  TieBreak tie = TieBreak::kHighestIndex;
};

// opt / alg, with 0/0 read as 1.
inline Rational ApproximationRatio(const Rational& optimum,
                                   const Rational& value) {
  if (value.IsZero()) {
    if (optimum.IsZero()) return Rational(1);
    throw std::logic_error("approximation returned 0 against a positive "
                           "optimum");
  }
  return optimum / value;
}

inline Json TraceJson(const AlgorithmTrace& t) {
  Json trace;
  Json order = Json::array();
  for (int a : t.insertion_order) order.push_back(a + 1);
  trace["insertion_order"] = std::move(order);
  Json edges = Json::array();
  for (const auto& e : t.tree_edges) {
    edges.push_back(Json::array({e.u, e.v, e.weight.ToString()}));
  }
  trace["tree_edges"] = std::move(edges);
  trace["pre_update_shares"] = ToJson(t.pre_update_shares);
  trace["last_agent"] = t.last_agent + 1;
  trace["argmin_agent"] = t.argmin_agent + 1;
  return trace;
}

inline Json CmdMstApprox(const InstanceFile& file, const MstOptions& opts) {
  if (opts.limit > kEnumerationLimit) {
    throw LimitExceeded("--limit", opts.limit);
  }
  const GraphInstance g = ToGraph(file);
  const AlgorithmResult res = ApproximateAlmostCore(g, opts.tie);
  Json out;
  out["instance"] = InstanceEcho(file, false);
  out["allocation"] = ToJson(res.allocation);
  out["value"] = ToJson(res.value);
  out["trace"] = TraceJson(res.trace);
  if (file.n <= opts.limit) {
    const Game game =
        Game::FromGraph(std::make_shared<const GraphInstance>(g), false);
    const ValuedAllocation opt = AlmostCoreOptimum(game, true);
    out["optimum"] = ToJson(opt.value);
    out["optimum_allocation"] = ToJson(opt.allocation);
    out["ratio"] = ToJson(ApproximationRatio(opt.value, res.value));
  } else {
    out["optimum"] = nullptr;
    out["optimum_allocation"] = nullptr;
    out["ratio"] = nullptr;
  }
  if (opts.decimal) AddApproximate(out, {"value", "optimum", "ratio"});
  return out;
}

inline Json CmdMstGh(const InstanceFile& file, const MstOptions& opts) {
  const GraphInstance g = ToGraph(file);
  const Allocation x = GranotHuberman(g, opts.tie);
  Json out;
  out["instance"] = InstanceEcho(file, false);
  out["allocation"] = ToJson(x);
  out["total"] = ToJson(x.Total());
  out["grand_cost"] = ToJson(MstCost(g, Coalition::Grand(g.num_agents())));
  if (opts.decimal) AddApproximate(out, {"total", "grand_cost"});
  return out;
}

inline Json CmdMstTable(const InstanceFile& file, const MstOptions& opts) {
  const GraphInstance g = ToGraph(file);
  const Game game = ExplicitFromGraph(g, opts.monotonize);
  const auto table = game.Table();
  Json out;
  out["instance"] = InstanceEcho(file, opts.monotonize);
  Json entries;
  for (std::uint64_t s = 1; s < table->size(); ++s) {
    entries[Coalition(file.n, s).ToString()] = ToJson((*table)[s]);
  }
  out["table"] = std::move(entries);
  return out;
}

// ---------------------------------------------------------------------------
// separate

struct SeparateOptions {
  bool nonneg = false;
  bool monotonize = false;
};

inline Json SeparationJson(const SeparationResult& r) {
  Json out;
  out["verdict"] = r.is_member() ? "member" : "violated";
  out["coalition"] = r.coalition ? Json(r.coalition->ToString()) : Json(nullptr);
  out["negative_agent"] =
      r.negative_agent ? Json(*r.negative_agent + 1) : Json(nullptr);
  out["amount"] = r.is_member() ? Json(nullptr) : ToJson(r.amount);
  return out;
}

inline Json CmdSeparate(const InstanceFile& file, const Allocation& point,
                        const SeparateOptions& opts) {
  CheckEnumerable(file.n, "separate");
  const Game game = ToGame(file, opts.monotonize);
  if (point.size() != static_cast<std::size_t>(file.n)) {
    throw PreconditionError("point has " + std::to_string(point.size()) +
                            " entries, instance has " + std::to_string(file.n) +
                            " agents");
  }
  const SeparationResult r =
      opts.nonneg
          ? SeparateAlmostCoreNonneg(point, BruteForceCoreOracle(game, true),
                                     game)
          : SeparateAlmostCore(point, BruteForceCoreOracle(game),
                               game.GrandCost());
  Json out;
  out["instance"] = InstanceEcho(file, opts.monotonize);
  out["point"] = ToJson(point);
  out["nonneg"] = opts.nonneg;
  out.update(SeparationJson(r));
  return out;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::uint64_t seed = 1;
  int count = 100;
  int n_min = 2;
  int n_max = 9;
  std::string model = "uniform";  // uniform | euclidean | path | tight
  int jobs = 1;
  bool decimal = false;
};

struct BenchSummary {
  int count = 0;
  Rational min_ratio;
  Rational max_ratio;
  Rational sum_ratio;
};

// Runs one bench instance. `tight` walks the eps = 1/2, 1/4, ... family of
// the instance where the approximation factor approaches 2.
inline Json BenchRecord(const BenchOptions& opts, int index, Rational* ratio) {
  GraphInstance g = instances::TightRatio(Rational(1, 2));
  Json rec;
  rec["index"] = index;
  if (opts.model == "tight") {
    if (index >= 62) {
      throw PreconditionError("tight family supports at most 62 instances");
    }
    const Rational eps(1, std::int64_t{1} << (index + 1));
    g = instances::TightRatio(eps);
    rec["model"] = "tight";
    rec["eps"] = eps.ToString();
  } else {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed),
                      static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    const int n = static_cast<int>(UniformInt(rng, opts.n_min, opts.n_max));
    const WeightModel model = ParseWeightModel(opts.model);
    g = RandomGraph(rng, n, model);
    rec["model"] = ToString(model);
  }
  rec["n"] = g.num_agents();
  const AlgorithmResult alg = ApproximateAlmostCore(g);
  const Game game =
      Game::FromGraph(std::make_shared<const GraphInstance>(g), false);
  const ValuedAllocation opt = AlmostCoreOptimum(game, true);
  *ratio = ApproximationRatio(opt.value, alg.value);
  if (*ratio < Rational(1) || *ratio > Rational(2)) {
    throw std::logic_error("instance " + std::to_string(index) +
                           ": approximation ratio " + ratio->ToString() +
                           " outside [1, 2]");
  }
  rec["value"] = ToJson(alg.value);
  rec["optimum"] = ToJson(opt.value);
  rec["ratio"] = ToJson(*ratio);
  if (opts.decimal) AddApproximate(rec, {"value", "optimum", "ratio"});
  return rec;
}

inline void ValidateBench(const BenchOptions& opts) {
  if (opts.count < 0) throw PreconditionError("--count must be nonnegative");
  if (opts.jobs < 1) throw PreconditionError("--jobs must be positive");
  if (opts.model != "tight") {
    (void)ParseWeightModel(opts.model);
    if (opts.n_min < 2 || opts.n_min > opts.n_max) {
      throw PreconditionError("--n range must satisfy 2 <= min <= max");
    }
    if (opts.n_max > kEnumerationLimit) {
      throw LimitExceeded("bench --n", opts.n_max);
    }
  }
}

// Streams one JSON line per instance, in index order, then a summary line.
// Instances run on `jobs` threads; output order never depends on scheduling.
inline BenchSummary CmdBench(const BenchOptions& opts, std::ostream& out) {
  ValidateBench(opts);
  const auto count = static_cast<std::size_t>(opts.count);
  std::vector<std::optional<std::string>> lines(count);
  std::vector<Rational> ratios(count);
  std::exception_ptr failure;
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      std::string line;
      try {
        line = BenchRecord(opts, static_cast<int>(i), &ratios[i]).dump();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = count;
        ready.notify_all();
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      lines[i] = std::move(line);
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < opts.jobs; ++t) pool.emplace_back(worker);

  BenchSummary summary;
  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock<std::mutex> lock(mu);
    ready.wait(lock, [&] { return lines[i].has_value() || failure; });
    if (failure) break;
    out << *lines[i] << '\n';
    const Rational& r = ratios[i];
    if (summary.count == 0 || r < summary.min_ratio) summary.min_ratio = r;
    if (summary.count == 0 || r > summary.max_ratio) summary.max_ratio = r;
    summary.sum_ratio += r;
    ++summary.count;
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  Json s;
  s["count"] = summary.count;
  if (summary.count > 0) {
    s["min_ratio"] = ToJson(summary.min_ratio);
    s["mean_ratio"] = ToJson(summary.sum_ratio / Rational(summary.count));
    s["max_ratio"] = ToJson(summary.max_ratio);
  }
  Json line;
  line["summary"] = std::move(s);
  if (opts.decimal && summary.count > 0) {
    Json approx;
    approx["min_ratio"] = summary.min_ratio.ToDouble();
    approx["mean_ratio"] = (summary.sum_ratio / Rational(summary.count)).ToDouble();
    approx["max_ratio"] = summary.max_ratio.ToDouble();
    line["approximate"] = std::move(approx);
  }
  out << line.dump() << '\n';
  return summary;
}

}  // namespace almostcore

#endif  // ALMOSTCORE_COMMANDS_HPP_
