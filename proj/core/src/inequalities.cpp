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

#include "quasibell/inequalities.hpp"

#include <cmath>

namespace quasibell {

double lambda_local_score(const Model& model, JointPoint point, std::size_t n) {
  detail::require_chain(model.n_settings_a(), model.n_settings_b(), n);
  const auto [ka, kb] = model.support_indices()[model.point_index(point)];
  const auto a = [&](std::size_t x) {
    const auto& p = model.response_a().at(x, ka);
    return p[1] - p[0];
  };
  const auto b = [&](std::size_t x) {
    const auto& p = model.response_b().at(x, kb);
    return p[1] - p[0];
  };
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m += a(i) * b(i);
  for (std::size_t i = 1; i < n; ++i) m += a(i) * b(i - 1);
  m -= a(0) * b(n - 1);
  return m;
}

ScoreReport check_quasi_bell(const Model& model, std::size_t n, double tolerance,
                             DiscriminantConvention convention) {
  detail::require_chain(model.n_settings_a(), model.n_settings_b(), n);
  const Behavior behavior = assemble_behavior(model);

  ScoreReport report;
  report.n = n;
  report.tolerance = tolerance;
  report.classical_part = 2.0 * static_cast<double>(n) - 2.0;
  if (n == 2) {
    report.score = chsh_score(behavior);
    report.witness_total = witness_chsh(model).selected;
  } else {
    report.score = chained_score(behavior, n);
    report.witness_total = witness_chained(model, n, convention).total;
  }
  report.bound = report.classical_part + report.witness_total;
  report.margin = report.bound - report.score;
  report.holds = report.score <= report.bound + tolerance;

  double decomposed = 0.0;
  const auto& support = model.dist().support();
  const auto& weights = model.dist().weights();
  for (std::size_t i = 0; i < support.size(); ++i) {
    decomposed += lambda_local_score(model, support[i], n) * weights[i];
  }
  report.decomposed_score = std::abs(decomposed);
  return report;
}

}  // namespace quasibell
