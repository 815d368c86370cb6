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

#ifndef QUASIBELL_ORACLE_SAMPLING_HPP_
#define QUASIBELL_ORACLE_SAMPLING_HPP_

// Sign-weighted Monte Carlo estimate of a quasi-probabilistic model's
// behavior.
//
// With W = sum |w|, each shot draws a support point with probability
// |w| / W, then for every setting pair draws the two outcomes from that
// point's local tables, and scores the hit cell with sign(w) * W. The mean
// over shots is an unbiased estimate of the assembled behavior, and each
// cell's standard error is at most W / sqrt(shots).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quasibell/model.hpp"

namespace quasibell::oracle {

// Cell table that need not be normalized: signed estimates only sum to 1
// in expectation.
struct CellTable {
  std::size_t n_settings_a = 0;
  std::size_t n_settings_b = 0;
  std::vector<OutcomeRow<double>> rows;

  const OutcomeRow<double>& row(std::size_t x_a, std::size_t x_b) const {
    return rows.at(x_a * n_settings_b + x_b);
  }
};

struct SampleEstimate {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  CellTable empirical_behavior;
  CellTable standard_errors;
  double total_variation_weight = 0.0;
};

// Refuses (DomainError) models whose assembled behavior is invalid.
SampleEstimate signed_sample(const Model& model, std::uint64_t shots,
                             std::uint64_t seed,
                             double tolerance = kDefaultTolerance);

}  // namespace quasibell::oracle

#endif  // QUASIBELL_ORACLE_SAMPLING_HPP_
