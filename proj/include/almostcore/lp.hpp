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

#ifndef ALMOSTCORE_LP_HPP_
#define ALMOSTCORE_LP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "almostcore/errors.hpp"
#include "almostcore/rational.hpp"

namespace almostcore {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LpConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Dense exact linear program: maximize objective . x subject to the
// constraints and optional per-variable lower bounds. Variables without a
// lower bound are free.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;  // empty: all free

  explicit LpProblem(std::size_t vars = 0)
      : num_vars(vars), objective(vars), lower_bounds(vars) {}

  void AddConstraint(std::vector<Rational> coefficients, Relation relation,
                     Rational rhs) {
    constraints.push_back(
        {std::move(coefficients), relation, std::move(rhs)});
  }

  void Validate() const {
    if (objective.size() != num_vars) {
      throw PreconditionError("objective has " +
                              std::to_string(objective.size()) +
                              " entries for " + std::to_string(num_vars) +
                              " variables");
    }
    if (!lower_bounds.empty() && lower_bounds.size() != num_vars) {
      throw PreconditionError("lower bound vector has wrong length");
    }
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      if (constraints[i].coefficients.size() != num_vars) {
        throw PreconditionError("constraint " + std::to_string(i) + " has " +
                                std::to_string(
                                    constraints[i].coefficients.size()) +
                                " coefficients for " +
                                std::to_string(num_vars) + " variables");
      }
    }
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* ToString(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;               // valid when optimal
  std::vector<Rational> point;  // valid when optimal
};

struct PointCheck {
  bool feasible = true;
  std::vector<std::size_t> violated_constraints;
  std::vector<std::size_t> violated_bounds;
};

inline bool Satisfies(const LpConstraint& row, std::span<const Rational> x) {
  Rational lhs(0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!row.coefficients[j].IsZero()) lhs.AddProduct(row.coefficients[j], x[j]);
  }
  switch (row.relation) {
    case Relation::kLessEqual:
      return lhs <= row.rhs;
    case Relation::kEqual:
      return lhs == row.rhs;
    case Relation::kGreaterEqual:
      return lhs >= row.rhs;
  }
  return false;
}

// Exact feasibility audit of `point`.
inline PointCheck VerifyPoint(const LpProblem& problem,
                              std::span<const Rational> point) {
  problem.Validate();
  if (point.size() != problem.num_vars) {
    throw PreconditionError("point has " + std::to_string(point.size()) +
                            " entries for " + std::to_string(problem.num_vars) +
                            " variables");
  }
  PointCheck check;
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    if (!Satisfies(problem.constraints[i], point)) {
      check.violated_constraints.push_back(i);
    }
  }
  for (std::size_t j = 0; j < problem.lower_bounds.size(); ++j) {
    if (problem.lower_bounds[j] && point[j] < *problem.lower_bounds[j]) {
      check.violated_bounds.push_back(j);
    }
  }
  check.feasible =
      check.violated_constraints.empty() && check.violated_bounds.empty();
  return check;
}

namespace detail {

// Simplex dictionary  x_B = beta + alpha * x_N,  z = z0 + gamma . x_N  over
// nonnegative variables, maximized with Bland's rule. Variables are ranked by
// their id, which fixes every tie.
class Dictionary {
 public:
  Dictionary(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), beta_(rows), alpha_(rows * cols),
        gamma_(cols), basic_(rows), nonbasic_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& alpha(std::size_t i, std::size_t j) { return alpha_[i * cols_ + j]; }
  Rational& beta(std::size_t i) { return beta_[i]; }
  Rational& gamma(std::size_t j) { return gamma_[j]; }
  Rational& z0() { return z0_; }
  std::size_t& basic(std::size_t i) { return basic_[i]; }
  std::size_t& nonbasic(std::size_t j) { return nonbasic_[j]; }

  // Exchanges basic row r with nonbasic column e.
  void Pivot(std::size_t r, std::size_t e) {
    Rational* row = &alpha_[r * cols_];
    const Rational inv = Rational(1) / row[e];
    const Rational neg_inv = -inv;
    beta_[r] *= neg_inv;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j == e) continue;
      if (!row[j].IsZero()) {
        row[j] *= neg_inv;
        support.push_back(j);
      }
    }
    row[e] = inv;
    std::swap(basic_[r], nonbasic_[e]);

    auto eliminate = [&](Rational* target, Rational& constant) {
      const Rational t = target[e];
      if (t.IsZero()) return;
      constant.AddProduct(t, beta_[r]);
      for (std::size_t j : support) target[j].AddProduct(t, row[j]);
      target[e] = t * inv;
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(&alpha_[i * cols_], beta_[i]);
    }
    eliminate(gamma_.data(), z0_);
  }

  // Runs Bland's rule to optimality. Returns false if unbounded.
  bool Optimize() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (gamma_[j].Sign() > 0 &&
            (enter == cols_ || nonbasic_[j] < nonbasic_[enter])) {
          enter = j;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& a = alpha_[i * cols_ + enter];
        if (a.Sign() >= 0) continue;
        Rational ratio = beta_[i] / -a;
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_) return false;
      Pivot(leave, enter);
    }
  }

  void DropRow(std::size_t r) {
    beta_.erase(beta_.begin() + static_cast<std::ptrdiff_t>(r));
    basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(r));
    alpha_.erase(alpha_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 alpha_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    --rows_;
  }

  void DropColumn(std::size_t c) {
    std::vector<Rational> next;
    next.reserve(rows_ * (cols_ - 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != c) next.push_back(std::move(alpha_[i * cols_ + j]));
      }
    }
    alpha_ = std::move(next);
    gamma_.erase(gamma_.begin() + static_cast<std::ptrdiff_t>(c));
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(c));
    --cols_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> beta_;
  std::vector<Rational> alpha_;
  std::vector<Rational> gamma_;
  Rational z0_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

}  // namespace detail

// Two-phase primal simplex over exact rationals with Bland's rule.
//
// Each variable is shifted by its lower bound or split into a difference of
// nonnegatives when free; every row becomes one or two "<=" rows with a slack.
// An infeasible starting dictionary is repaired with a single auxiliary
// variable (phase one). Deterministic: same problem, same vertex.
inline LpSolution Solve(const LpProblem& problem) {
  problem.Validate();
  const std::size_t n = problem.num_vars;
  auto lower = [&](std::size_t j) -> const std::optional<Rational>& {
    static const std::optional<Rational> kFree;
    return problem.lower_bounds.empty() ? kFree : problem.lower_bounds[j];
  };

  // Structural columns: (variable, sign).
  struct Column {
    std::size_t var;
    int sign;
  };
  std::vector<Column> columns;
  for (std::size_t j = 0; j < n; ++j) {
    columns.push_back({j, 1});
    if (!lower(j)) columns.push_back({j, -1});
  }
  const std::size_t num_cols = columns.size();

  // "<=" rows over the columns.
  struct Row {
    std::vector<Rational> coef;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : problem.constraints) {
    Row row{std::vector<Rational>(num_cols), c.rhs};
    for (std::size_t k = 0; k < num_cols; ++k) {
      const auto& a = c.coefficients[columns[k].var];
      if (!a.IsZero()) row.coef[k] = columns[k].sign > 0 ? a : -a;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (lower(j) && !c.coefficients[j].IsZero()) {
        row.rhs -= c.coefficients[j] * *lower(j);
      }
    }
    if (c.relation != Relation::kGreaterEqual) rows.push_back(row);
    if (c.relation != Relation::kLessEqual) {
      for (auto& a : row.coef) a = -a;
      row.rhs = -row.rhs;
      rows.push_back(std::move(row));
    }
  }

  const std::size_t m = rows.size();
  bool needs_phase_one = false;
  for (const auto& r : rows) needs_phase_one |= r.rhs.Sign() < 0;

  const std::size_t aux_id = num_cols + m;
  detail::Dictionary dict(m, num_cols + (needs_phase_one ? 1 : 0));
  for (std::size_t i = 0; i < m; ++i) {
    dict.basic(i) = num_cols + i;
    dict.beta(i) = rows[i].rhs;
    for (std::size_t k = 0; k < num_cols; ++k) {
      if (!rows[i].coef[k].IsZero()) dict.alpha(i, k) = -rows[i].coef[k];
    }
  }
  for (std::size_t k = 0; k < num_cols; ++k) dict.nonbasic(k) = k;

  if (needs_phase_one) {
    const std::size_t aux = num_cols;
    dict.nonbasic(aux) = aux_id;
    for (std::size_t i = 0; i < m; ++i) dict.alpha(i, aux) = Rational(1);
    dict.gamma(aux) = Rational(-1);
    std::size_t leave = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (dict.beta(i) < dict.beta(leave)) leave = i;
    }
    dict.Pivot(leave, aux);
    dict.Optimize();  // bounded above by 0
    if (dict.z0().Sign() < 0) return {LpStatus::kInfeasible, {}, {}};

    for (std::size_t i = 0; i < dict.rows(); ++i) {
      if (dict.basic(i) != aux_id) continue;
      std::size_t enter = dict.cols();
      for (std::size_t j = 0; j < dict.cols(); ++j) {
        if (!dict.alpha(i, j).IsZero() &&
            (enter == dict.cols() || dict.nonbasic(j) < dict.nonbasic(enter))) {
          enter = j;
        }
      }
      if (enter == dict.cols()) {
        dict.DropRow(i);
      } else {
        dict.Pivot(i, enter);
      }
      break;
    }
    for (std::size_t j = 0; j < dict.cols(); ++j) {
      if (dict.nonbasic(j) == aux_id) {
        dict.DropColumn(j);
        break;
      }
    }
  }

  // Phase two objective in terms of the current nonbasic variables.
  auto column_cost = [&](std::size_t id) {
    if (id >= num_cols) return Rational(0);
    const auto& col = columns[id];
    const auto& c = problem.objective[col.var];
    return col.sign > 0 ? c : -c;
  };
  dict.z0() = Rational(0);
  for (std::size_t j = 0; j < dict.cols(); ++j) {
    dict.gamma(j) = column_cost(dict.nonbasic(j));
  }
  for (std::size_t i = 0; i < dict.rows(); ++i) {
    const Rational cost = column_cost(dict.basic(i));
    if (cost.IsZero()) continue;
    dict.z0().AddProduct(cost, dict.beta(i));
    for (std::size_t j = 0; j < dict.cols(); ++j) {
      if (!dict.alpha(i, j).IsZero()) dict.gamma(j).AddProduct(cost, dict.alpha(i, j));
    }
  }
  if (!dict.Optimize()) return {LpStatus::kUnbounded, {}, {}};

  std::vector<Rational> column_value(num_cols);
  for (std::size_t i = 0; i < dict.rows(); ++i) {
    if (dict.basic(i) < num_cols) column_value[dict.basic(i)] = dict.beta(i);
  }
  LpSolution solution;
  solution.status = LpStatus::kOptimal;
  solution.point.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (lower(j)) solution.point[j] = *lower(j);
  }
  for (std::size_t k = 0; k < num_cols; ++k) {
    if (columns[k].sign > 0) {
      solution.point[columns[k].var] += column_value[k];
    } else {
      solution.point[columns[k].var] -= column_value[k];
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    solution.value.AddProduct(problem.objective[j], solution.point[j]);
  }
  return solution;
}

}  // namespace almostcore

#endif  // ALMOSTCORE_LP_HPP_
