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

#ifndef QUASIBELL_INEQUALITIES_HPP_
#define QUASIBELL_INEQUALITIES_HPP_

#include <cstddef>
#include <string>

#include "quasibell/model.hpp"
#include "quasibell/witnesses.hpp"

namespace quasibell {

namespace detail {

inline void require_chain(std::size_t n_a, std::size_t n_b, std::size_t n) {
  if (n < 2) throw DomainError("chained score needs n >= 2");
  if (n_a < n || n_b < n) {
    throw DomainError("chained score with n = " + std::to_string(n) +
                      " needs that many settings per party");
  }
}

}  // namespace detail

// E(0,0) - E(0,1) + E(1,0) + E(1,1), without the absolute value.
template <class T>
T chsh_combination(const BasicBehavior<T>& behavior) {
  detail::require_chain(behavior.n_settings_a(), behavior.n_settings_b(), 2);
  return correlation(behavior, 0, 0) - correlation(behavior, 0, 1) +
         correlation(behavior, 1, 0) + correlation(behavior, 1, 1);
}

template <class T>
T chsh_score(const BasicBehavior<T>& behavior) {
  return abs_value(chsh_combination(behavior));
}

// sum_{i=0}^{n-1} E(i,i) + sum_{i=1}^{n-1} E(i,i-1) - E(0,n-1), unsigned.
template <class T>
T chained_combination(const BasicBehavior<T>& behavior, std::size_t n) {
  detail::require_chain(behavior.n_settings_a(), behavior.n_settings_b(), n);
  T sum(0);
  for (std::size_t i = 0; i < n; ++i) sum += correlation(behavior, i, i);
  for (std::size_t i = 1; i < n; ++i) sum += correlation(behavior, i, i - 1);
  sum -= correlation(behavior, 0, n - 1);
  return sum;
}

template <class T>
T chained_score(const BasicBehavior<T>& behavior, std::size_t n) {
  return abs_value(chained_combination(behavior, n));
}

// Chained combination of the lambda-local expectations at one support
// point. Bounded by 2n - 2 in absolute value.
double lambda_local_score(const Model& model, JointPoint point, std::size_t n);

struct ScoreReport {
  std::size_t n = 2;
  double score = 0.0;
  double bound = 0.0;
  double witness_total = 0.0;
  double classical_part = 0.0;  // 2n - 2
  bool holds = true;
  double margin = 0.0;  // bound - score
  // |sum over support of lambda_local_score * weight|; equals score.
  double decomposed_score = 0.0;
  double tolerance = kDefaultTolerance;
};

// Evaluates |chained combination| <= 2n - 2 + witness. For n = 2 the
// witness is the case-selected two-setting witness.
ScoreReport check_quasi_bell(
    const Model& model, std::size_t n, double tolerance = kDefaultTolerance,
    DiscriminantConvention convention = DiscriminantConvention::kProofDerived);

}  // namespace quasibell

#endif  // QUASIBELL_INEQUALITIES_HPP_
