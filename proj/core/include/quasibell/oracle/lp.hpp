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

#ifndef QUASIBELL_ORACLE_LP_HPP_
#define QUASIBELL_ORACLE_LP_HPP_

// Linear programs over signed mixtures of joint deterministic strategies.
//
// Each joint strategy s = (alice, bob) gets a weight w_s = p_s - q_s with
// p_s, q_s >= 0, so the negative part stays linear. The induced behavior is
//
//   P(y_A, y_B | x_A, x_B) = sum_s w_s [alice_s(x_A) = y_A][bob_s(x_B) = y_B],
//
// which is no-signalling for any real weights. Validity is imposed as
// P >= 0 on every cell; together with sum_s w_s = 1 this also gives P <= 1.
//
// Note: min_negativity_lp minimizes the negative mass of a representation,
// which is a different quantity from the case-selected witness of the
// two-setting inequality.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "quasibell/constructions.hpp"
#include "quasibell/model.hpp"
#include "quasibell/oracle/simplex.hpp"

namespace quasibell::oracle {

inline constexpr std::size_t kMaxLpSettings = 5;
inline constexpr double kUnlimitedBudget = std::numeric_limits<double>::infinity();

struct JointStrategyWeight {
  SymbolString alice;
  SymbolString bob;
  double weight = 0.0;
};

struct LPResult {
  LpStatus status = LpStatus::kNumericalFailure;
  std::size_t n = 0;
  // |chained combination| of the induced behavior (the LP objective for
  // max_score_lp).
  double optimal_score = 0.0;
  // Raw objective value of the program that was solved.
  double objective = 0.0;
  // Non-zero net weights (|w| > 1e-12).
  std::vector<JointStrategyWeight> weights;
  double negative_mass = 0.0;
  // Faithful witness of the solution: 8 * negative_mass.
  double faithful_witness = 0.0;
  std::optional<Behavior> induced_behavior;
  std::size_t iterations = 0;
};

// Maximizes the chained score over signed strategy mixtures with valid
// induced behavior and faithful witness 8 * (negative mass) <= budget.
// budget may be kUnlimitedBudget.
LPResult max_score_lp(std::size_t n, double budget,
                      const SimplexOptions& options = {});

// Minimizes the negative mass of a signed strategy mixture that reproduces
// `target` entrywise. Signalling targets come back INFEASIBLE.
LPResult min_negativity_lp(const Behavior& target,
                           const SimplexOptions& options = {});

// Diagonal model whose hidden values 1..K carry the LP weights.
Model model_from_lp(const LPResult& result, double tolerance = 1e-7);

}  // namespace quasibell::oracle

#endif  // QUASIBELL_ORACLE_LP_HPP_
