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

// almostcore: command-line front end.
//
//   almostcore analyze FILE [--monotonize] [--nonneg] [--decimal]
//   almostcore mst approx|gh|table FILE [--limit N] [--tie highest|lowest]
//   almostcore separate FILE --point 0,1,1 [--nonneg]
//   almostcore bench [--seed S] [--count C] [--n 2-9] [--model uniform]
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 limit exceeded,
// 4 precondition failure, 5 anything else.

#include <charconv>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "almostcore/commands.hpp"

namespace {

using namespace almostcore;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kLimit = 3, kPrecondition = 4,
                kOther = 5 };

void Emit(const Json& report) { std::cout << report.dump(2) << '\n'; }

// "5" or "2-9".
std::pair<int, int> ParseRange(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw ParseError(0, "--n: malformed range '" + text + "'");
    }
    return v;
  };
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(std::string_view(text).substr(0, dash)),
          to_int(std::string_view(text).substr(dash + 1))};
}

int Run(int argc, char** argv) {
  CLI::App app{"Stable cost allocations for cooperative cost games"};
  app.require_subcommand(1);

  std::string file;
  bool monotonize = false;
  bool nonneg = false;
  bool decimal = false;

  auto* analyze = app.add_subcommand("analyze", "core, almost core and relaxations");
  analyze->add_option("file", file, "instance file")->required();
  analyze->add_flag("--monotonize", monotonize, "analyze cbar instead of c");
  analyze->add_flag("--nonneg", nonneg, "report the nonnegative-allocation bounds");
  analyze->add_flag("--decimal", decimal, "add approximate decimal values");

  auto* mst = app.add_subcommand("mst", "minimum spanning tree games");
  mst->require_subcommand(1);
  MstOptions mst_opts;
  bool as_instance = false;
  std::string tie = "highest";
  const std::map<std::string, TieBreak> ties{
      {"highest", TieBreak::kHighestIndex}, {"lowest", TieBreak::kLowestIndex}};
  auto add_mst = [&](const char* name, const char* help) {
    auto* sub = mst->add_subcommand(name, help);
    sub->add_option("file", file, "mst instance file")->required();
    sub->add_option("--tie", tie, "Prim tie-break among equal keys")
        ->check(CLI::IsMember({"highest", "lowest"}));
    sub->add_flag("--decimal", decimal, "add approximate decimal values");
    return sub;
  };
  auto* approx = add_mst("approx", "approximate nonnegative almost-core optimum");
  approx->add_option("--limit", mst_opts.limit,
                     "solve the exact optimum only for n <= limit");
  auto* gh = add_mst("gh", "Granot-Huberman core allocation");
  auto* table = add_mst("table", "characteristic cost table");
  table->add_flag("--monotonize", monotonize, "dump cbar instead of c");
  table->add_flag("--as-instance", as_instance,
                  "print an explicit instance file instead of JSON");

  auto* separate = app.add_subcommand("separate", "almost-core membership of a point");
  std::string point;
  separate->add_option("file", file, "instance file")->required();
  separate->add_option("--point", point, "comma-separated shares")->required();
  separate->add_flag("--nonneg", nonneg, "separate over the x >= 0 almost core");
  separate->add_flag("--monotonize", monotonize, "use cbar instead of c");

  auto* bench = app.add_subcommand("bench", "approximation ratio on random instances");
  BenchOptions bench_opts;
  std::string n_range = "2-9";
  bench->add_option("--seed", bench_opts.seed, "base seed");
  bench->add_option("--count", bench_opts.count, "number of instances");
  bench->add_option("--n", n_range, "agent count or range, e.g. 2-9");
  bench->add_option("--model", bench_opts.model,
                    "uniform | euclidean | path | tight");
  bench->add_option("--jobs", bench_opts.jobs, "worker threads");
  bench->add_flag("--decimal", decimal, "add approximate decimal values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (analyze->parsed()) {
    Emit(CmdAnalyze(LoadInstance(file), {monotonize, nonneg, decimal}));
  } else if (mst->parsed()) {
    mst_opts.tie = ties.at(tie);
    mst_opts.decimal = decimal;
    mst_opts.monotonize = monotonize;
    const InstanceFile instance = LoadInstance(file);
    if (approx->parsed()) {
      Emit(CmdMstApprox(instance, mst_opts));
    } else if (gh->parsed()) {
      Emit(CmdMstGh(instance, mst_opts));
    } else if (as_instance) {
      std::cout << SerializeInstance(ExplicitInstance(
          ExplicitFromGraph(ToGraph(instance), monotonize)));
    } else {
      Emit(CmdMstTable(instance, mst_opts));
    }
  } else if (separate->parsed()) {
    Emit(CmdSeparate(LoadInstance(file), ParsePoint(point),
                     {nonneg, monotonize}));
  } else if (bench->parsed()) {
    std::tie(bench_opts.n_min, bench_opts.n_max) = ParseRange(n_range);
    bench_opts.decimal = decimal;
    CmdBench(bench_opts, std::cout);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const almostcore::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const almostcore::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const almostcore::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
}
