// Copyright 2026 The quasibell Authors
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

#include "quasibell/oracle/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "quasibell/errors.hpp"

namespace quasibell::oracle {
namespace {

enum class Pricing { kDantzig, kBland };

// Row-major tableau. Rows 0..m-1 are constraints, row m is the reduced-cost
// row d_j = c_B^T B^{-1} a_j - c_j; the last column holds the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0),
        basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const {
    return data_[r * (cols_ + 1) + c];
  }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }
  double objective() const { return at(rows_, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t width = cols_ + 1;
    double* pivot_row = &data_[r * width];
    const double inv = 1.0 / pivot_row[c];
    for (std::size_t j = 0; j < width; ++j) pivot_row[j] *= inv;
    pivot_row[c] = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      double* row = &data_[i * width];
      const double factor = row[c];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) row[j] -= factor * pivot_row[j];
      row[c] = 0.0;
    }
    basis_[r] = c;
  }

  // Drops constraint row r (keeps the objective row last).
  void erase_row(std::size_t r) {
    const std::size_t width = cols_ + 1;
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * width),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Rebuilds the reduced-cost row for maximizing `costs` (indexed by column).
  void set_objective(const std::vector<double>& costs) {
    for (std::size_t j = 0; j <= cols_; ++j) cost(j) = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) cost(j) = -costs[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      const double cb = costs[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost(j) += cb * at(i, j);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class PhaseOutcome { kOptimal, kUnbounded, kIterationLimit };

std::optional<std::size_t> choose_entering(Tableau& t, std::size_t allowed_cols,
                                           Pricing pricing, double tol) {
  std::optional<std::size_t> best;
  double best_value = -tol;
  for (std::size_t j = 0; j < allowed_cols; ++j) {
    const double d = t.cost(j);
    if (pricing == Pricing::kBland) {
      if (d < -tol) return j;
    } else if (d < best_value) {
      best_value = d;
      best = j;
    }
  }
  return best;
}

std::optional<std::size_t> choose_leaving(Tableau& t, std::size_t col,
                                          double tol) {
  std::optional<std::size_t> best;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const double a = t.at(i, col);
    if (a <= tol) continue;
    const double ratio = std::max(t.rhs(i), 0.0) / a;
    const double slack = 1e-12 * std::max(1.0, std::abs(best_ratio));
    if (!best || ratio < best_ratio - slack ||
        (ratio <= best_ratio + slack && t.basis()[i] < t.basis()[*best])) {
      best = i;
      best_ratio = std::min(ratio, best_ratio);
    }
  }
  return best;
}

PhaseOutcome run_phase(Tableau& t, std::size_t allowed_cols,
                       const SimplexOptions& options, std::size_t& iterations) {
  Pricing pricing = Pricing::kDantzig;
  std::size_t degenerate_streak = 0;
  while (true) {
    if (iterations >= options.max_iterations) return PhaseOutcome::kIterationLimit;
    const auto entering =
        choose_entering(t, allowed_cols, pricing, options.pivot_tolerance);
    if (!entering) return PhaseOutcome::kOptimal;
    const auto leaving = choose_leaving(t, *entering, options.pivot_tolerance);
    if (!leaving) return PhaseOutcome::kUnbounded;
    const bool degenerate = t.rhs(*leaving) <= options.pivot_tolerance;
    degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
    if (degenerate_streak >= options.degenerate_streak_before_bland) {
      pricing = Pricing::kBland;
    }
    t.pivot(*leaving, *entering);
    ++iterations;
  }
}

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "OPTIMAL";
    case LpStatus::kInfeasible:
      return "INFEASIBLE";
    case LpStatus::kUnbounded:
      return "UNBOUNDED";
    case LpStatus::kNumericalFailure:
      return "NUMERICAL_FAILURE";
  }
  return "UNKNOWN";
}

SimplexResult solve_simplex(const LinearProgram& program,
                            const SimplexOptions& options) {
  const std::size_t n = program.objective.size();
  const std::size_t m = program.constraints.size();
  for (const auto& c : program.constraints) {
    if (c.coefficients.size() != n) {
      throw StructuralError("constraint width does not match the objective");
    }
  }

  // Normalize to b >= 0, then count slack/surplus and artificial columns.
  struct Row {
    const Constraint* source;
    double sign;
    Relation relation;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (const auto& c : program.constraints) {
    Row row{&c, 1.0, c.relation};
    if (c.rhs < 0.0) {
      row.sign = -1.0;
      if (c.relation == Relation::kLessEqual) row.relation = Relation::kGreaterEqual;
      else if (c.relation == Relation::kGreaterEqual) row.relation = Relation::kLessEqual;
    }
    if (row.relation != Relation::kEqual) ++n_slack;
    if (row.relation != Relation::kLessEqual) ++n_art;
    rows.push_back(row);
  }

  const std::size_t art_begin = n + n_slack;
  const std::size_t total_cols = art_begin + n_art;
  Tableau t(m, total_cols);
  std::size_t slack_col = n;
  std::size_t art_col = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      t.at(i, j) = row.sign * row.source->coefficients[j];
    }
    t.rhs(i) = row.sign * row.source->rhs;
    switch (row.relation) {
      case Relation::kLessEqual:
        t.at(i, slack_col) = 1.0;
        t.basis()[i] = slack_col++;
        break;
      case Relation::kGreaterEqual:
        t.at(i, slack_col++) = -1.0;
        t.at(i, art_col) = 1.0;
        t.basis()[i] = art_col++;
        break;
      case Relation::kEqual:
        t.at(i, art_col) = 1.0;
        t.basis()[i] = art_col++;
        break;
    }
  }

  SimplexResult result;
  std::size_t iterations = 0;

  if (n_art > 0) {
    std::vector<double> phase1(total_cols, 0.0);
    for (std::size_t j = art_begin; j < total_cols; ++j) phase1[j] = -1.0;
    t.set_objective(phase1);
    const auto outcome = run_phase(t, total_cols, options, iterations);
    result.iterations = iterations;
    if (outcome == PhaseOutcome::kIterationLimit) return result;
    if (t.objective() < -options.feasibility_tolerance) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Pivot zero-level artificials out of the basis; rows where that is
    // impossible are linear combinations of the others.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis()[i] < art_begin) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      double best = options.pivot_tolerance;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (std::abs(t.at(i, j)) > best) {
          best = std::abs(t.at(i, j));
          col = j;
        }
      }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.erase_row(i);
      }
    }
  }

  std::vector<double> costs(total_cols, 0.0);
  std::copy(program.objective.begin(), program.objective.end(), costs.begin());
  t.set_objective(costs);
  const auto outcome = run_phase(t, art_begin, options, iterations);
  result.iterations = iterations;
  if (outcome == PhaseOutcome::kIterationLimit) return result;
  if (outcome == PhaseOutcome::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis()[i] < n) result.x[t.basis()[i]] = std::max(t.rhs(i), 0.0);
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    result.objective += program.objective[j] * result.x[j];
  }
  return result;
}

}  // namespace quasibell::oracle
