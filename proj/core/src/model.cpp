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

#include "quasibell/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quasibell {

ValidityReport validate_behavior(const Behavior& behavior, double tolerance) {
  if (!(tolerance >= 0.0)) {
    throw DomainError("validity tolerance must be non-negative");
  }
  ValidityReport report;
  report.tolerance = tolerance;

  const std::size_t n_a = behavior.n_settings_a();
  const std::size_t n_b = behavior.n_settings_b();

  double worst_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t xa = 0; xa < n_a; ++xa) {
    for (std::size_t xb = 0; xb < n_b; ++xb) {
      const auto& row = behavior.row(xa, xb);
      for (std::size_t cell = 0; cell < 4; ++cell) {
        const double value = row[cell];
        // Signed distance outside [0, 1]; negative when inside.
        const double excess = std::max(-value, value - 1.0);
        if (excess > worst_excess) {
          worst_excess = excess;
          report.worst_entry = {xa, xb, cell, value};
        }
        if (!(value >= -tolerance && value <= 1.0 + tolerance)) {
          report.is_valid = false;
        }
      }
    }
  }

  // Alice's marginal must not depend on x_B and Bob's must not depend on x_A.
  double violation = 0.0;
  for (std::size_t xa = 0; xa < n_a; ++xa) {
    for (std::size_t ia = 0; ia < 2; ++ia) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t xb = 0; xb < n_b; ++xb) {
        const auto& row = behavior.row(xa, xb);
        const double marginal = row[cell_index(ia, 0)] + row[cell_index(ia, 1)];
        lo = std::min(lo, marginal);
        hi = std::max(hi, marginal);
      }
      violation = std::max(violation, hi - lo);
    }
  }
  for (std::size_t xb = 0; xb < n_b; ++xb) {
    for (std::size_t ib = 0; ib < 2; ++ib) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t xa = 0; xa < n_a; ++xa) {
        const auto& row = behavior.row(xa, xb);
        const double marginal = row[cell_index(0, ib)] + row[cell_index(1, ib)];
        lo = std::min(lo, marginal);
        hi = std::max(hi, marginal);
      }
      violation = std::max(violation, hi - lo);
    }
  }
  report.no_signalling_violation = violation;
  return report;
}

}  // namespace quasibell
