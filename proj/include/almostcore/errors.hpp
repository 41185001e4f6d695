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

#ifndef ALMOSTCORE_ERRORS_HPP_
#define ALMOSTCORE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace almostcore {

// Maximum agent count for anything that enumerates the 2^n coalitions.
inline constexpr int kEnumerationLimit = 16;

// Requested n is beyond what brute-force enumeration accepts.
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(const std::string& what, int n)
      : std::runtime_error(what + ": n = " + std::to_string(n) +
                           " exceeds the enumeration limit " +
                           std::to_string(kEnumerationLimit)),
        n_(n) {}
  int n() const { return n_; }

 private:
  int n_;
};

// An operation's precondition does not hold for the given input (dimension
// mismatch, n too small, undefined ratio, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed instance file or value string. line() is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline void CheckEnumerable(int n, const char* what) {
  if (n > kEnumerationLimit) throw LimitExceeded(what, n);
}

}  // namespace almostcore

#endif  // ALMOSTCORE_ERRORS_HPP_
