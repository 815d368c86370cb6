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

#include "quasibell/oracle/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace quasibell::oracle {
namespace {

// 53 random mantissa bits; mt19937_64 output is fixed by the standard, so
// the stream is identical across platforms.
double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SampleEstimate signed_sample(const Model& model, std::uint64_t shots,
                             std::uint64_t seed, double tolerance) {
  if (shots == 0) throw DomainError("need at least one shot");
  const auto report = validate_behavior(assemble_behavior(model), tolerance);
  if (!report.is_valid) {
    throw DomainError("model behavior is invalid (entry " +
                      std::to_string(report.worst_entry.value) +
                      "); refusing to sample");
  }

  const auto& weights = model.dist().weights();
  const auto& indices = model.support_indices();
  const double total = to_double(model.dist().total_variation());
  std::vector<double> cumulative(weights.size());
  double running = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    running += std::abs(weights[i]);
    cumulative[i] = running / total;
  }

  const auto& ra = model.response_a();
  const auto& rb = model.response_b();
  const std::size_t n_a = ra.n_settings();
  const std::size_t n_b = rb.n_settings();
  // Signed hit counts per cell.
  std::vector<OutcomeRow<std::int64_t>> positive(n_a * n_b, {0, 0, 0, 0});
  std::vector<OutcomeRow<std::int64_t>> negative(n_a * n_b, {0, 0, 0, 0});

  std::mt19937_64 rng(seed);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = uniform(rng);
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) -
        cumulative.begin());
    i = std::min(i, weights.size() - 1);
    while (weights[i] == 0.0 && i > 0) --i;
    auto& counts = weights[i] < 0.0 ? negative : positive;
    const auto [ka, kb] = indices[i];
    for (std::size_t xa = 0; xa < n_a; ++xa) {
      for (std::size_t xb = 0; xb < n_b; ++xb) {
        const std::size_t ia = uniform(rng) < ra.at(xa, ka)[1] ? 1 : 0;
        const std::size_t ib = uniform(rng) < rb.at(xb, kb)[1] ? 1 : 0;
        ++counts[xa * n_b + xb][cell_index(ia, ib)];
      }
    }
  }

  SampleEstimate estimate;
  estimate.shots = shots;
  estimate.seed = seed;
  estimate.total_variation_weight = total;
  estimate.empirical_behavior = {n_a, n_b, {}};
  estimate.standard_errors = {n_a, n_b, {}};
  const double n = static_cast<double>(shots);
  for (std::size_t r = 0; r < n_a * n_b; ++r) {
    OutcomeRow<double> mean{};
    OutcomeRow<double> error{};
    for (std::size_t c = 0; c < 4; ++c) {
      const double plus = static_cast<double>(positive[r][c]);
      const double minus = static_cast<double>(negative[r][c]);
      mean[c] = total * (plus - minus) / n;
      const double second_moment = total * total * (plus + minus) / n;
      error[c] = std::sqrt(std::max(0.0, second_moment - mean[c] * mean[c]) / n);
    }
    estimate.empirical_behavior.rows.push_back(mean);
    estimate.standard_errors.rows.push_back(error);
  }
  return estimate;
}

}  // namespace quasibell::oracle
