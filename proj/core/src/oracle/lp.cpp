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

#include "quasibell/oracle/lp.hpp"

#include <cmath>
#include <string>

#include "quasibell/inequalities.hpp"
#include "quasibell/oracle/enumeration.hpp"

namespace quasibell::oracle {
namespace {

constexpr double kWeightCutoff = 1e-12;

struct StrategySpace {
  std::size_t n = 0;
  std::vector<SymbolString> local;
  std::size_t joint_count() const { return local.size() * local.size(); }
  const SymbolString& alice(std::size_t s) const { return local[s / local.size()]; }
  const SymbolString& bob(std::size_t s) const { return local[s % local.size()]; }
};

StrategySpace make_space(std::size_t n) {
  if (n < 1 || n > kMaxLpSettings) {
    throw ResourceError("LP oracle supports 1 <= n <= " +
                        std::to_string(kMaxLpSettings) + " settings, got " +
                        std::to_string(n));
  }
  return {n, enumerate_deterministic(n)};
}

std::size_t outcome_index(Symbol s) { return s == Symbol::Plus ? 1 : 0; }

// Row of coefficients for the cell (x_a, x_b, cell) over [p | q].
std::vector<double> cell_row(const StrategySpace& space, std::size_t x_a,
                             std::size_t x_b, std::size_t cell) {
  const std::size_t k = space.joint_count();
  std::vector<double> row(2 * k, 0.0);
  for (std::size_t s = 0; s < k; ++s) {
    const std::size_t c = cell_index(outcome_index(space.alice(s)[x_a]),
                                     outcome_index(space.bob(s)[x_b]));
    if (c == cell) {
      row[s] = 1.0;
      row[k + s] = -1.0;
    }
  }
  return row;
}

Constraint normalization_row(const StrategySpace& space) {
  const std::size_t k = space.joint_count();
  Constraint c;
  c.coefficients.assign(2 * k, 1.0);
  for (std::size_t s = 0; s < k; ++s) c.coefficients[k + s] = -1.0;
  c.relation = Relation::kEqual;
  c.rhs = 1.0;
  return c;
}

LPResult finish(const StrategySpace& space, const SimplexResult& solution) {
  LPResult result;
  result.status = solution.status;
  result.n = space.n;
  result.iterations = solution.iterations;
  if (solution.status != LpStatus::kOptimal) return result;
  result.objective = solution.objective;

  const std::size_t k = space.joint_count();
  const std::size_t n = space.n;
  std::vector<OutcomeRow<double>> rows(n * n, OutcomeRow<double>{0, 0, 0, 0});
  for (std::size_t s = 0; s < k; ++s) {
    const double w = solution.x[s] - solution.x[k + s];
    if (std::abs(w) <= kWeightCutoff) continue;
    result.weights.push_back({space.alice(s), space.bob(s), w});
    if (w < 0.0) result.negative_mass -= w;
    for (std::size_t xa = 0; xa < n; ++xa) {
      for (std::size_t xb = 0; xb < n; ++xb) {
        rows[xa * n + xb][cell_index(outcome_index(space.alice(s)[xa]),
                                     outcome_index(space.bob(s)[xb]))] += w;
      }
    }
  }
  result.faithful_witness = 8.0 * result.negative_mass;
  result.induced_behavior.emplace(n, n, std::move(rows), 1e-7);
  if (n >= 2) result.optimal_score = chained_score(*result.induced_behavior, n);
  return result;
}

}  // namespace

LPResult max_score_lp(std::size_t n, double budget, const SimplexOptions& options) {
  if (n < 2) throw DomainError("max_score_lp needs n >= 2");
  if (std::isnan(budget) || budget < 0.0) {
    throw DomainError("negativity budget must be >= 0");
  }
  const StrategySpace space = make_space(n);
  const std::size_t k = space.joint_count();

  LinearProgram program;
  program.objective.assign(2 * k, 0.0);
  for (std::size_t s = 0; s < k; ++s) {
    const double m = deterministic_chained_combination(space.alice(s), space.bob(s), n);
    program.objective[s] = m;
    program.objective[k + s] = -m;
  }
  program.constraints.push_back(normalization_row(space));
  for (std::size_t xa = 0; xa < n; ++xa) {
    for (std::size_t xb = 0; xb < n; ++xb) {
      for (std::size_t cell = 0; cell < 4; ++cell) {
        program.constraints.push_back(
            {cell_row(space, xa, xb, cell), Relation::kGreaterEqual, 0.0});
      }
    }
  }
  if (std::isfinite(budget)) {
    Constraint c;
    c.coefficients.assign(2 * k, 0.0);
    for (std::size_t s = 0; s < k; ++s) c.coefficients[k + s] = 8.0;
    c.relation = Relation::kLessEqual;
    c.rhs = budget;
    program.constraints.push_back(std::move(c));
  }
  return finish(space, solve_simplex(program, options));
}

LPResult min_negativity_lp(const Behavior& target, const SimplexOptions& options) {
  if (target.n_settings_a() != target.n_settings_b()) {
    throw DomainError("min_negativity_lp needs equal setting counts");
  }
  const std::size_t n = target.n_settings_a();
  const StrategySpace space = make_space(n);
  const std::size_t k = space.joint_count();

  LinearProgram program;
  program.objective.assign(2 * k, 0.0);
  for (std::size_t s = 0; s < k; ++s) program.objective[k + s] = -1.0;
  program.constraints.push_back(normalization_row(space));
  for (std::size_t xa = 0; xa < n; ++xa) {
    for (std::size_t xb = 0; xb < n; ++xb) {
      for (std::size_t cell = 0; cell < 4; ++cell) {
        program.constraints.push_back({cell_row(space, xa, xb, cell),
                                       Relation::kEqual,
                                       target.at(xa, xb, cell)});
      }
    }
  }
  return finish(space, solve_simplex(program, options));
}

Model model_from_lp(const LPResult& result, double tolerance) {
  if (result.status != LpStatus::kOptimal || result.weights.empty()) {
    throw DomainError("LP result carries no solution");
  }
  std::vector<SymbolStrategy> strategies;
  std::vector<HiddenValue> labels;
  std::vector<double> weights;
  for (std::size_t i = 0; i < result.weights.size(); ++i) {
    strategies.push_back({result.weights[i].alice, result.weights[i].bob});
    labels.push_back(static_cast<HiddenValue>(i + 1));
    weights.push_back(result.weights[i].weight);
  }
  return mix_strategies<double>(strategies, labels, std::move(weights), tolerance);
}

}  // namespace quasibell::oracle
