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

#ifndef ALMOSTCORE_INSTANCE_FILE_HPP_
#define ALMOSTCORE_INSTANCE_FILE_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "almostcore/coalition.hpp"
#include "almostcore/errors.hpp"
#include "almostcore/game.hpp"
#include "almostcore/graph.hpp"
#include "almostcore/rational.hpp"

namespace almostcore {

// Line-oriented instance file.
//
//   # comment
//   format explicit          format mst
//   n 3                      n 3
//   default 1                0 1 1
//   1,2 = 1                  1 3 1/4
//   1,2,3 = 2                ...
//
// Explicit files map comma-separated, strictly ascending 1-based agent lists
// to costs; every nonempty coalition needs an entry unless `default` is
// given. MST files list edges "u v weight" over nodes 0..n (0 = supplier);
// missing edges are completed by GraphInstance::FromEdges. Weights and costs
// are integers or "p/q".
struct InstanceFile {
  enum class Format { kExplicit, kMst };

  Format format = Format::kExplicit;
  int n = 0;
  std::vector<Rational> table;      // kExplicit: 2^n entries, table[0] = 0
  std::vector<WeightedEdge> edges;  // kMst: u < v, sorted by (u, v)

  friend bool operator==(const InstanceFile& a, const InstanceFile& b) {
    if (a.format != b.format || a.n != b.n || a.table != b.table) return false;
    if (a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
      const auto& x = a.edges[i];
      const auto& y = b.edges[i];
      if (x.u != y.u || x.v != y.v || x.weight != y.weight) return false;
    }
    return true;
  }
};

namespace detail {

inline std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline Rational ParseRationalAt(std::size_t line, std::string_view text) {
  try {
    return Rational::Parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

inline int ParseIntAt(std::size_t line, std::string_view text,
                      const char* what) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(text) + "'");
  }
  return std::stoi(std::string(text));
}

}  // namespace detail

// Parses a coalition key such as "1,3" (strictly ascending, 1-based).
inline Coalition ParseCoalitionKey(std::string_view key, int n,
                                   std::size_t line = 0) {
  const std::string shown(key);
  if (key.empty()) throw ParseError(line, "empty coalition key");
  std::uint64_t bits = 0;
  int previous = 0;
  std::size_t start = 0;
  while (start <= key.size()) {
    const auto comma = key.find(',', start);
    const auto token = detail::Trim(key.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start));
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        token.size() > 9) {
      throw ParseError(line, "malformed coalition key '" + shown + "'");
    }
    const int agent = std::stoi(std::string(token));
    if (agent < 1 || agent > n) {
      throw ParseError(line, "coalition key '" + shown + "' names agent " +
                                 std::to_string(agent) + " outside 1.." +
                                 std::to_string(n));
    }
    if (agent <= previous) {
      throw ParseError(line, "coalition key '" + shown +
                                 "' is not strictly ascending");
    }
    previous = agent;
    bits |= std::uint64_t{1} << (agent - 1);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Coalition(n, bits);
}

inline InstanceFile ParseInstance(std::string_view text) {
  InstanceFile file;
  std::optional<InstanceFile::Format> format;
  std::optional<int> n;
  std::optional<Rational> default_cost;
  std::vector<std::optional<Rational>> entries;
  std::vector<std::size_t> entry_line;

  std::size_t line_no = 0;
  std::size_t last_line = 0;  // last line with content
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const std::string_view line = detail::Trim(raw);
    if (line.empty()) continue;
    last_line = line_no;
    const auto words = detail::SplitWhitespace(line);

    if (!format) {
      if (words.size() != 2 || words[0] != "format") {
        throw ParseError(line_no, "expected 'format explicit' or 'format mst'");
      }
      if (words[1] == "explicit") {
        format = InstanceFile::Format::kExplicit;
      } else if (words[1] == "mst") {
        format = InstanceFile::Format::kMst;
      } else {
        throw ParseError(line_no, "unknown format '" + std::string(words[1]) +
                                      "'");
      }
      continue;
    }
    if (!n) {
      if (words.size() != 2 || words[0] != "n") {
        throw ParseError(line_no, "expected 'n <agent count>'");
      }
      n = detail::ParseIntAt(line_no, words[1], "agent count");
      if (*n < 1) throw ParseError(line_no, "agent count must be positive");
      if (*format == InstanceFile::Format::kExplicit) {
        if (*n > kEnumerationLimit) {
          throw LimitExceeded("explicit instance", *n);
        }
        entries.assign(std::size_t{1} << *n, std::nullopt);
        entry_line.assign(entries.size(), 0);
      } else if (*n > kMaxCoalitionAgents) {
        throw ParseError(line_no, "MST instances support at most " +
                                      std::to_string(kMaxCoalitionAgents) +
                                      " agents");
      }
      continue;
    }

    if (*format == InstanceFile::Format::kExplicit) {
      if (words[0] == "default") {
        if (words.size() != 2) {
          throw ParseError(line_no, "expected 'default <cost>'");
        }
        if (default_cost) throw ParseError(line_no, "duplicate default");
        default_cost = detail::ParseRationalAt(line_no, words[1]);
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError(line_no, "expected '<coalition> = <cost>'");
      }
      const auto key = detail::Trim(line.substr(0, eq));
      const auto value = detail::Trim(line.substr(eq + 1));
      const Coalition s = ParseCoalitionKey(key, *n, line_no);
      if (entries[s.bits()]) {
        throw ParseError(line_no, "duplicate coalition key '" +
                                      std::string(key) + "' (first on line " +
                                      std::to_string(entry_line[s.bits()]) +
                                      ")");
      }
      entries[s.bits()] = detail::ParseRationalAt(line_no, value);
      entry_line[s.bits()] = line_no;
    } else {
      if (words.size() != 3) {
        throw ParseError(line_no, "expected '<u> <v> <weight>'");
      }
      WeightedEdge e{detail::ParseIntAt(line_no, words[0], "node"),
                     detail::ParseIntAt(line_no, words[1], "node"),
                     detail::ParseRationalAt(line_no, words[2])};
      if (e.u > *n || e.v > *n) {
        throw ParseError(line_no, "edge node outside 0.." + std::to_string(*n));
      }
      if (e.u == e.v) throw ParseError(line_no, "self-loop");
      if (e.weight.Sign() < 0) {
        throw ParseError(line_no, "negative edge weight");
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      for (const auto& other : file.edges) {
        if (other.u == e.u && other.v == e.v) {
          throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) +
                                        " " + std::to_string(e.v));
        }
      }
      file.edges.push_back(std::move(e));
    }
  }
  if (!format) throw ParseError(last_line, "missing 'format' line");
  if (!n) throw ParseError(last_line, "missing 'n' line");
  file.format = *format;
  file.n = *n;

  if (file.format == InstanceFile::Format::kExplicit) {
    file.table.assign(entries.size(), Rational(0));
    for (std::uint64_t s = 1; s < entries.size(); ++s) {
      if (entries[s]) {
        file.table[s] = *entries[s];
      } else if (default_cost) {
        file.table[s] = *default_cost;
      } else {
        throw ParseError(last_line, "missing cost for coalition '" +
                                      Coalition(file.n, s).ToString() +
                                      "' and no default given");
      }
      if (file.table[s].Sign() < 0) {
        throw ParseError(entry_line[s], "negative cost for coalition '" +
                                            Coalition(file.n, s).ToString() +
                                            "'");
      }
    }
  } else {
    std::sort(file.edges.begin(), file.edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                return a.u != b.u ? a.u < b.u : a.v < b.v;
              });
    try {
      (void)GraphInstance::FromEdges(file.n, file.edges);
    } catch (const PreconditionError& e) {
      throw ParseError(0, e.what());
    }
  }
  return file;
}

inline InstanceFile LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

// Normalized text: explicit tables list every nonempty coalition in ascending
// bitmask order; MST files list edges sorted by (u, v).
inline std::string SerializeInstance(const InstanceFile& file) {
  std::string out;
  if (file.format == InstanceFile::Format::kExplicit) {
    out += "format explicit\nn " + std::to_string(file.n) + "\n";
    for (std::uint64_t s = 1; s < file.table.size(); ++s) {
      out += Coalition(file.n, s).ToString() + " = " +
             file.table[s].ToString() + "\n";
    }
  } else {
    out += "format mst\nn " + std::to_string(file.n) + "\n";
    for (const auto& e : file.edges) {
      out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
             e.weight.ToString() + "\n";
    }
  }
  return out;
}

inline InstanceFile ExplicitInstance(const Game& game) {
  InstanceFile file;
  file.format = InstanceFile::Format::kExplicit;
  file.n = game.num_agents();
  CheckEnumerable(file.n, "explicit instance");
  file.table = *game.Table();
  return file;
}

inline InstanceFile MstInstance(const GraphInstance& g) {
  InstanceFile file;
  file.format = InstanceFile::Format::kMst;
  file.n = g.num_agents();
  file.edges = g.Edges();
  return file;
}

inline GraphInstance ToGraph(const InstanceFile& file) {
  if (file.format != InstanceFile::Format::kMst) {
    throw PreconditionError("instance is not in mst format");
  }
  return GraphInstance::FromEdges(file.n, file.edges);
}

// The game described by the file; `monotonize` replaces c by
// cbar(S) = min over supersets R of c(R).
inline Game ToGame(const InstanceFile& file, bool monotonize) {
  if (file.format == InstanceFile::Format::kMst) {
    return Game::FromGraph(std::make_shared<const GraphInstance>(ToGraph(file)),
                           monotonize);
  }
  if (monotonize) {
    return Game::Explicit(file.n, MonotonizeTable(file.n, file.table));
  }
  return Game::Explicit(file.n, file.table);
}

}  // namespace almostcore

#endif  // ALMOSTCORE_INSTANCE_FILE_HPP_
