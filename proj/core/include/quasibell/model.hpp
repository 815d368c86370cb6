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

#ifndef QUASIBELL_MODEL_HPP_
#define QUASIBELL_MODEL_HPP_

// Two-party hidden-variable models mixed by a signed weight table, and the
// observable behavior they induce.

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasibell/errors.hpp"
#include "quasibell/scalar.hpp"

namespace quasibell {

using HiddenValue = std::int64_t;

enum class Party { A, B };

inline const char* party_name(Party party) {
  return party == Party::A ? "A" : "B";
}

// Outcome index 0 encodes y = -1 and index 1 encodes y = +1.
constexpr int outcome_value(std::size_t index) { return index == 0 ? -1 : 1; }

// Position of (y_A, y_B) inside a behavior row. Rows are ordered --, -+, +-, ++.
constexpr std::size_t cell_index(std::size_t index_a, std::size_t index_b) {
  return 2 * index_a + index_b;
}

template <class T>
using OutcomePair = std::array<T, 2>;

template <class T>
using OutcomeRow = std::array<T, 4>;

namespace detail {

inline bool within(double value, double target, double tolerance) {
  return std::isfinite(value) && std::abs(value - target) <= tolerance;
}

inline std::string setting_context(std::size_t x, HiddenValue lambda) {
  return "(x=" + std::to_string(x) + ", lambda=" + std::to_string(lambda) + ")";
}

}  // namespace detail

// Per-party conditional tables P_k(y | x, lambda) for every setting and
// hidden value. Storage is setting-major: entry (x, k) lives at
// x * hidden_count() + k.
template <class T>
class BasicLocalResponse {
 public:
  BasicLocalResponse(Party party, std::size_t n_settings,
                     std::vector<HiddenValue> hidden_values,
                     std::vector<OutcomePair<T>> table,
                     double tolerance = kDefaultTolerance)
      : party_(party),
        n_settings_(n_settings),
        hidden_values_(std::move(hidden_values)),
        table_(std::move(table)) {
    if (n_settings_ == 0) {
      throw StructuralError("local response needs at least one setting");
    }
    if (hidden_values_.empty()) {
      throw StructuralError("local response needs at least one hidden value");
    }
    auto sorted = hidden_values_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw StructuralError("duplicate hidden value in local response");
    }
    if (table_.size() != n_settings_ * hidden_values_.size()) {
      throw StructuralError("local response table has " +
                            std::to_string(table_.size()) + " entries, expected " +
                            std::to_string(n_settings_ * hidden_values_.size()));
    }
    for (std::size_t x = 0; x < n_settings_; ++x) {
      for (std::size_t k = 0; k < hidden_values_.size(); ++k) {
        const auto& probs = table_[x * hidden_values_.size() + k];
        const double minus = to_double(probs[0]);
        const double plus = to_double(probs[1]);
        const bool in_range = minus >= -tolerance && minus <= 1.0 + tolerance &&
                              plus >= -tolerance && plus <= 1.0 + tolerance;
        if (!in_range || !detail::within(minus + plus, 1.0, tolerance)) {
          throw StructuralError(std::string("party ") + party_name(party_) +
                                " response " +
                                detail::setting_context(x, hidden_values_[k]) +
                                " is not a probability vector");
        }
      }
    }
  }

  Party party() const noexcept { return party_; }
  std::size_t n_settings() const noexcept { return n_settings_; }
  std::size_t hidden_count() const noexcept { return hidden_values_.size(); }
  const std::vector<HiddenValue>& hidden_values() const noexcept {
    return hidden_values_;
  }
  const std::vector<OutcomePair<T>>& table() const noexcept { return table_; }

  std::optional<std::size_t> find(HiddenValue lambda) const {
    auto it = std::find(hidden_values_.begin(), hidden_values_.end(), lambda);
    if (it == hidden_values_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - hidden_values_.begin());
  }

  std::size_t index_of(HiddenValue lambda) const {
    if (auto k = find(lambda)) return *k;
    throw IndexError(std::string("party ") + party_name(party_) +
                     " has no hidden value " + std::to_string(lambda));
  }

  const OutcomePair<T>& at(std::size_t x, std::size_t k) const {
    if (x >= n_settings_) {
      throw IndexError(std::string("party ") + party_name(party_) + " setting " +
                       std::to_string(x) + " out of range");
    }
    if (k >= hidden_values_.size()) {
      throw IndexError("hidden value index out of range");
    }
    return table_[x * hidden_values_.size() + k];
  }

  const OutcomePair<T>& probabilities(std::size_t x, HiddenValue lambda) const {
    return at(x, index_of(lambda));
  }

 private:
  Party party_;
  std::size_t n_settings_;
  std::vector<HiddenValue> hidden_values_;
  std::vector<OutcomePair<T>> table_;
};

struct JointPoint {
  HiddenValue a = 0;
  HiddenValue b = 0;

  friend auto operator<=>(const JointPoint&, const JointPoint&) = default;
};

// Normalized, possibly negative weights over joint hidden values. A
// single-variable model is the diagonal support a == b.
template <class T>
class BasicQuasiDist {
 public:
  BasicQuasiDist(std::vector<JointPoint> support, std::vector<T> weights,
                 double tolerance = kDefaultTolerance)
      : support_(std::move(support)),
        weights_(std::move(weights)),
        tolerance_(tolerance) {
    if (support_.empty()) {
      throw StructuralError("quasi-distribution support is empty");
    }
    if (support_.size() != weights_.size()) {
      throw StructuralError("quasi-distribution has " +
                            std::to_string(support_.size()) + " points but " +
                            std::to_string(weights_.size()) + " weights");
    }
    auto sorted = support_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw StructuralError("duplicate point in quasi-distribution support");
    }
    double total = 0.0;
    for (const auto& w : weights_) {
      if (!std::isfinite(to_double(w))) {
        throw StructuralError("quasi-distribution weight is not finite");
      }
      total += to_double(w);
    }
    if (!detail::within(total, 1.0, tolerance_)) {
      throw StructuralError("quasi-distribution weights sum to " +
                            std::to_string(total) + ", not 1");
    }
  }

  static BasicQuasiDist diagonal(const std::vector<HiddenValue>& lambdas,
                                 std::vector<T> weights,
                                 double tolerance = kDefaultTolerance) {
    std::vector<JointPoint> support;
    support.reserve(lambdas.size());
    for (HiddenValue lambda : lambdas) support.push_back({lambda, lambda});
    return BasicQuasiDist(std::move(support), std::move(weights), tolerance);
  }

  const std::vector<JointPoint>& support() const noexcept { return support_; }
  const std::vector<T>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return support_.size(); }
  double tolerance() const noexcept { return tolerance_; }

  std::optional<std::size_t> find(JointPoint point) const {
    auto it = std::find(support_.begin(), support_.end(), point);
    if (it == support_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - support_.begin());
  }

  bool is_diagonal() const {
    return std::all_of(support_.begin(), support_.end(),
                       [](const JointPoint& p) { return p.a == p.b; });
  }

  bool has_negative() const {
    return std::any_of(weights_.begin(), weights_.end(),
                       [](const T& w) { return w < T(0); });
  }

  // Sum of max(0, -w).
  T negative_mass() const {
    T mass(0);
    for (const auto& w : weights_) {
      if (w < T(0)) mass -= w;
    }
    return mass;
  }

  // Sum of |w|; equals 1 exactly when no weight is negative.
  T total_variation() const {
    T total(0);
    for (const auto& w : weights_) total += abs_value(w);
    return total;
  }

 private:
  std::vector<JointPoint> support_;
  std::vector<T> weights_;
  double tolerance_;
};

template <class T>
class BasicModel {
 public:
  BasicModel(BasicLocalResponse<T> response_a, BasicLocalResponse<T> response_b,
             BasicQuasiDist<T> dist)
      : response_a_(std::move(response_a)),
        response_b_(std::move(response_b)),
        dist_(std::move(dist)) {
    if (response_a_.party() != Party::A || response_b_.party() != Party::B) {
      throw StructuralError("model responses must be labelled A then B");
    }
    indices_.reserve(dist_.size());
    for (const auto& point : dist_.support()) {
      auto ka = response_a_.find(point.a);
      auto kb = response_b_.find(point.b);
      if (!ka || !kb) {
        throw StructuralError("support point (" + std::to_string(point.a) + "," +
                              std::to_string(point.b) +
                              ") references an unknown hidden value");
      }
      indices_.emplace_back(*ka, *kb);
    }
  }

  const BasicLocalResponse<T>& response_a() const noexcept { return response_a_; }
  const BasicLocalResponse<T>& response_b() const noexcept { return response_b_; }
  const BasicQuasiDist<T>& dist() const noexcept { return dist_; }
  std::size_t n_settings_a() const noexcept { return response_a_.n_settings(); }
  std::size_t n_settings_b() const noexcept { return response_b_.n_settings(); }

  // (k_A, k_B) table indices of each support point, aligned with dist().support().
  const std::vector<std::pair<std::size_t, std::size_t>>& support_indices()
      const noexcept {
    return indices_;
  }

  std::size_t point_index(JointPoint point) const {
    if (auto i = dist_.find(point)) return *i;
    throw IndexError("point (" + std::to_string(point.a) + "," +
                     std::to_string(point.b) + ") is not in the support");
  }

 private:
  BasicLocalResponse<T> response_a_;
  BasicLocalResponse<T> response_b_;
  BasicQuasiDist<T> dist_;
  std::vector<std::pair<std::size_t, std::size_t>> indices_;
};

// Observable table P(y_A, y_B | x_A, x_B). Row (x_A, x_B) lives at
// x_A * n_settings_b() + x_B.
template <class T>
class BasicBehavior {
 public:
  BasicBehavior(std::size_t n_settings_a, std::size_t n_settings_b,
                std::vector<OutcomeRow<T>> rows,
                double tolerance = kDefaultTolerance)
      : n_a_(n_settings_a), n_b_(n_settings_b), rows_(std::move(rows)),
        tolerance_(tolerance) {
    if (n_a_ == 0 || n_b_ == 0) {
      throw StructuralError("behavior needs at least one setting per party");
    }
    if (rows_.size() != n_a_ * n_b_) {
      throw StructuralError("behavior has " + std::to_string(rows_.size()) +
                            " rows, expected " + std::to_string(n_a_ * n_b_));
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      double sum = 0.0;
      for (const auto& p : rows_[r]) sum += to_double(p);
      if (!detail::within(sum, 1.0, tolerance_)) {
        throw StructuralError("behavior row (" + std::to_string(r / n_b_) + "," +
                              std::to_string(r % n_b_) + ") sums to " +
                              std::to_string(sum));
      }
    }
  }

  std::size_t n_settings_a() const noexcept { return n_a_; }
  std::size_t n_settings_b() const noexcept { return n_b_; }
  double tolerance() const noexcept { return tolerance_; }
  const std::vector<OutcomeRow<T>>& rows() const noexcept { return rows_; }

  const OutcomeRow<T>& row(std::size_t x_a, std::size_t x_b) const {
    if (x_a >= n_a_ || x_b >= n_b_) {
      throw IndexError("setting pair (" + std::to_string(x_a) + "," +
                       std::to_string(x_b) + ") out of range");
    }
    return rows_[x_a * n_b_ + x_b];
  }

  const T& at(std::size_t x_a, std::size_t x_b, std::size_t cell) const {
    return row(x_a, x_b).at(cell);
  }

 private:
  std::size_t n_a_;
  std::size_t n_b_;
  std::vector<OutcomeRow<T>> rows_;
  double tolerance_;
};

using LocalResponse = BasicLocalResponse<double>;
using QuasiDist = BasicQuasiDist<double>;
using Model = BasicModel<double>;
using Behavior = BasicBehavior<double>;

using ExactLocalResponse = BasicLocalResponse<Rational>;
using ExactQuasiDist = BasicQuasiDist<Rational>;
using ExactModel = BasicModel<Rational>;
using ExactBehavior = BasicBehavior<Rational>;

// Mixes the product tables of every support point with its signed weight.
// Entries outside [0, 1] are returned as computed; see validate_behavior.
template <class T>
BasicBehavior<T> assemble_behavior(const BasicModel<T>& model) {
  const auto& ra = model.response_a();
  const auto& rb = model.response_b();
  const std::size_t n_a = ra.n_settings();
  const std::size_t n_b = rb.n_settings();
  std::vector<OutcomeRow<T>> rows(n_a * n_b);
  for (auto& row : rows) row.fill(T(0));

  const auto& weights = model.dist().weights();
  const auto& indices = model.support_indices();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto [ka, kb] = indices[i];
    for (std::size_t xa = 0; xa < n_a; ++xa) {
      const auto& pa = ra.at(xa, ka);
      for (std::size_t xb = 0; xb < n_b; ++xb) {
        const auto& pb = rb.at(xb, kb);
        auto& row = rows[xa * n_b + xb];
        for (std::size_t ia = 0; ia < 2; ++ia) {
          for (std::size_t ib = 0; ib < 2; ++ib) {
            row[cell_index(ia, ib)] += pa[ia] * pb[ib] * weights[i];
          }
        }
      }
    }
  }
  // Rounding in the mixture scales with the total weight magnitude.
  const double slack = model.dist().tolerance() +
                       1e-12 * to_double(model.dist().total_variation());
  return BasicBehavior<T>(n_a, n_b, std::move(rows), slack);
}

// Sum over y of y * P_k(y | x, lambda).
template <class T>
T local_expectation(const BasicLocalResponse<T>& response, std::size_t x,
                    HiddenValue lambda) {
  const auto& p = response.probabilities(x, lambda);
  return p[1] - p[0];
}

// E(x_A, x_B) = sum over outcomes of y_A * y_B * P(y_A, y_B | x_A, x_B).
template <class T>
T correlation(const BasicBehavior<T>& behavior, std::size_t x_a, std::size_t x_b) {
  const auto& row = behavior.row(x_a, x_b);
  T sum(0);
  for (std::size_t ia = 0; ia < 2; ++ia) {
    for (std::size_t ib = 0; ib < 2; ++ib) {
      const int sign = outcome_value(ia) * outcome_value(ib);
      sum += T(sign) * row[cell_index(ia, ib)];
    }
  }
  return sum;
}

struct WorstEntry {
  std::size_t x_a = 0;
  std::size_t x_b = 0;
  std::size_t cell = 0;
  double value = 0.0;
};

struct ValidityReport {
  bool is_valid = true;
  // Entry farthest outside (or closest to the edge of) [0, 1].
  WorstEntry worst_entry;
  // Largest spread of a one-party marginal across the other party's settings.
  double no_signalling_violation = 0.0;
  double tolerance = kDefaultTolerance;
};

ValidityReport validate_behavior(const Behavior& behavior,
                                 double tolerance = kDefaultTolerance);

template <class T>
ValidityReport validate_behavior(const BasicBehavior<T>& behavior,
                                 double tolerance = kDefaultTolerance) {
  std::vector<OutcomeRow<double>> rows;
  rows.reserve(behavior.rows().size());
  for (const auto& row : behavior.rows()) {
    rows.push_back({to_double(row[0]), to_double(row[1]), to_double(row[2]),
                    to_double(row[3])});
  }
  return validate_behavior(
      Behavior(behavior.n_settings_a(), behavior.n_settings_b(), std::move(rows),
               behavior.tolerance() + 1e-12),
      tolerance);
}

}  // namespace quasibell

#endif  // QUASIBELL_MODEL_HPP_
