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

#ifndef QUASIBELL_TESTS_SUPPORT_GENERATORS_HPP_
#define QUASIBELL_TESTS_SUPPORT_GENERATORS_HPP_

// Random model generators and implementation-independent oracles shared by
// the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "quasibell/quasibell.hpp"

namespace quasibell::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_);
  }
  bool coin(double p = 0.5) { return uniform() < p; }

  // Half the tables deterministic, the rest uniformly random.
  LocalResponse response(Party party, std::size_t n_settings,
                         std::size_t hidden_count) {
    std::vector<HiddenValue> lambdas(hidden_count);
    std::iota(lambdas.begin(), lambdas.end(), HiddenValue{1});
    std::vector<OutcomePair<double>> table;
    const bool deterministic = coin();
    for (std::size_t i = 0; i < n_settings * hidden_count; ++i) {
      const double plus = deterministic ? (coin() ? 1.0 : 0.0) : uniform();
      table.push_back({1.0 - plus, plus});
    }
    return LocalResponse(party, n_settings, std::move(lambdas), std::move(table));
  }

  // Distinct joint points drawn from {1..ka} x {1..kb}.
  std::vector<JointPoint> support(std::size_t ka, std::size_t kb,
                                  std::size_t max_points) {
    std::vector<JointPoint> all;
    for (std::size_t a = 1; a <= ka; ++a) {
      for (std::size_t b = 1; b <= kb; ++b) {
        all.push_back({static_cast<HiddenValue>(a), static_cast<HiddenValue>(b)});
      }
    }
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(1 + index(std::min(max_points, all.size())));
    return all;
  }

  std::vector<double> positive_weights(std::size_t count) {
    std::vector<double> w(count);
    for (auto& x : w) x = uniform(0.01, 1.0);
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= sum;
    return w;
  }

  // Normalized weights with at least one strictly negative entry (needs
  // count >= 2).
  std::vector<double> signed_weights(std::size_t count, double lo = -0.6) {
    while (true) {
      std::vector<double> w(count);
      for (auto& x : w) x = uniform(lo, 1.0);
      w[index(count)] = uniform(lo, -0.01);
      const double sum = std::accumulate(w.begin(), w.end(), 0.0);
      if (sum < 0.25) continue;
      for (auto& x : w) x /= sum;
      if (std::any_of(w.begin(), w.end(), [](double x) { return x < 0.0; })) {
        return w;
      }
    }
  }

  Model model(std::size_t n_settings, bool allow_negative,
              std::size_t max_points = 6) {
    const std::size_t ka = 1 + index(3);
    const std::size_t kb = 1 + index(3);
    auto ra = response(Party::A, n_settings, ka);
    auto rb = response(Party::B, n_settings, kb);
    auto points = support(ka, kb, max_points);
    std::vector<double> weights;
    if (allow_negative && points.size() >= 2 && coin(0.8)) {
      weights = signed_weights(points.size());
    } else {
      weights = positive_weights(points.size());
    }
    return Model(std::move(ra), std::move(rb),
                 QuasiDist(std::move(points), std::move(weights)));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Sum over support of <A>^{x_a} <B>^{x_b} w, read straight from the tables.
inline double hidden_correlation(const Model& model, std::size_t x_a,
                                 std::size_t x_b) {
  double sum = 0.0;
  const auto& support = model.dist().support();
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto& pa = model.response_a().probabilities(x_a, support[i].a);
    const auto& pb = model.response_b().probabilities(x_b, support[i].b);
    sum += (pa[1] - pa[0]) * (pb[1] - pb[0]) * model.dist().weights()[i];
  }
  return sum;
}

// Bob's outcome labels swapped at every setting and hidden value.
inline Model flip_bob(const Model& model) {
  std::vector<OutcomePair<double>> table;
  for (const auto& p : model.response_b().table()) table.push_back({p[1], p[0]});
  LocalResponse flipped(Party::B, model.response_b().n_settings(),
                        model.response_b().hidden_values(), std::move(table));
  return Model(model.response_a(), std::move(flipped), model.dist());
}

// Witness sum evaluated from symbol strings and weights only:
// sum_l [2 + s (a_l(x) b_l(x) + a_l(x) b_l(x-1))] (|w_l| - w_l).
inline double symbol_witness(const std::vector<SymbolStrategy>& strategies,
                             const std::vector<double>& weights, int sign,
                             std::size_t x) {
  double total = 0.0;
  for (std::size_t l = 0; l < strategies.size(); ++l) {
    const int a = static_cast<int>(strategies[l].alice[x]);
    const int b = static_cast<int>(strategies[l].bob[x]);
    const int b_prev = static_cast<int>(strategies[l].bob[x - 1]);
    total += (2.0 + sign * (a * b + a * b_prev)) *
             (std::abs(weights[l]) - weights[l]);
  }
  return total;
}

// The printed twelfths table of the saturating two-setting model, as a
// function of N. Rows 00, 01, 10, 11; columns --, -+, +-, ++.
template <class T>
std::vector<OutcomeRow<T>> golden_chsh_table(const T& negativity) {
  const T n = negativity;
  const T twelfth = T(1) / T(12);
  const T a = (T(4) + n) * twelfth;
  const T c = (T(4) - T(2) * n) * twelfth;
  const T d = (T(8) - n) * twelfth;
  return {
      {a, T(0), c, a},
      {T(0), a, a, c},
      {d, T(0), T(0), a},
      {a, c, T(0), a},
  };
}

// Analytic singlet correlator for X-Z plane measurements.
inline double singlet_correlator(double theta_a, double theta_b) {
  return -std::cos(theta_a - theta_b);
}

}  // namespace quasibell::testing

#endif  // QUASIBELL_TESTS_SUPPORT_GENERATORS_HPP_
