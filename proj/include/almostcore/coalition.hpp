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

#ifndef ALMOSTCORE_COALITION_HPP_
#define ALMOSTCORE_COALITION_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "almostcore/errors.hpp"

namespace almostcore {

inline constexpr int kMaxCoalitionAgents = 63;

// A subset of the agents {0, ..., n-1}, stored as a bitmask (bit i set iff
// agent i is a member). Agents are 0-indexed here; all text I/O is 1-indexed.
class Coalition {
 public:
  Coalition(int num_agents, std::uint64_t bits)
      : bits_(bits), num_agents_(num_agents) {
    if (num_agents < 0 || num_agents > kMaxCoalitionAgents) {
      throw PreconditionError("coalition agent count out of range: " +
                              std::to_string(num_agents));
    }
    if (bits >= (std::uint64_t{1} << num_agents)) {
      throw PreconditionError("coalition index " + std::to_string(bits) +
                              " out of range for n = " +
                              std::to_string(num_agents));
    }
  }

  static Coalition Empty(int n) { return Coalition(n, 0); }
  static Coalition Grand(int n) { return Coalition(n, FullMask(n)); }
  static Coalition Singleton(int n, int agent) {
    CheckAgent(n, agent);
    return Coalition(n, std::uint64_t{1} << agent);
  }
  static Coalition Of(int n, std::initializer_list<int> agents) {
    std::uint64_t bits = 0;
    for (int a : agents) {
      CheckAgent(n, a);
      bits |= std::uint64_t{1} << a;
    }
    return Coalition(n, bits);
  }
  static Coalition Of(int n, const std::vector<int>& agents) {
    std::uint64_t bits = 0;
    for (int a : agents) {
      CheckAgent(n, a);
      bits |= std::uint64_t{1} << a;
    }
    return Coalition(n, bits);
  }

  static std::uint64_t FullMask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  std::uint64_t bits() const { return bits_; }
  int num_agents() const { return num_agents_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool IsGrand() const { return bits_ == FullMask(num_agents_); }
  // Nonempty and not the grand coalition.
  bool IsProper() const { return !empty() && !IsGrand(); }

  bool Contains(int agent) const {
    return agent >= 0 && agent < num_agents_ && ((bits_ >> agent) & 1U);
  }
  bool IsSubsetOf(const Coalition& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  bool IsSupersetOf(const Coalition& other) const {
    return other.IsSubsetOf(*this);
  }

  Coalition With(int agent) const {
    CheckAgent(num_agents_, agent);
    return Coalition(num_agents_, bits_ | (std::uint64_t{1} << agent));
  }
  Coalition Without(int agent) const {
    CheckAgent(num_agents_, agent);
    return Coalition(num_agents_, bits_ & ~(std::uint64_t{1} << agent));
  }
  Coalition Union(const Coalition& o) const {
    return Coalition(num_agents_, bits_ | o.bits_);
  }
  Coalition Intersection(const Coalition& o) const {
    return Coalition(num_agents_, bits_ & o.bits_);
  }
  Coalition Complement() const {
    return Coalition(num_agents_, ~bits_ & FullMask(num_agents_));
  }

  // Members in ascending order.
  std::vector<int> Members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  // Comma-separated 1-based member list, e.g. "1,3"; "" for the empty set.
  std::string ToString() const {
    std::string out;
    for (int a : Members()) {
      if (!out.empty()) out += ',';
      out += std::to_string(a + 1);
    }
    return out;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Coalition& c) {
    return os << '{' << c.ToString() << '}';
  }

 private:
  static void CheckAgent(int n, int agent) {
    if (agent < 0 || agent >= n) {
      throw PreconditionError("agent index " + std::to_string(agent) +
                              " out of range for n = " + std::to_string(n));
    }
  }

  std::uint64_t bits_;
  int num_agents_;
};

}  // namespace almostcore

#endif  // ALMOSTCORE_COALITION_HPP_
