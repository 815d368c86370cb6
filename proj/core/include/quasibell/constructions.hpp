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

#ifndef QUASIBELL_CONSTRUCTIONS_HPP_
#define QUASIBELL_CONSTRUCTIONS_HPP_

// Deterministic symbol strategies and the saturating quasi-probabilistic
// models built from them.
//
// A strategy hands each party a string of signs, one per setting. Measuring
// setting x reads symbol x, and the outcome is that sign. The saturating
// family mixes four such strategies on a single hidden variable
// lambda = 1..4 with weights
//
//   w(1) = w(2) = w(3) = (4 + N) / 12,   w(4) = -N / 4,
//
// where lambda = 1, 2, 3 reach the classical chained score 2n - 2 and
// lambda = 4 scores 2n - 6. The observable score is then 2n - 2 + N, which
// equals the chained bound since only lambda = 4 carries negativity and its
// witness coefficient is zero on every link except x = n - 1. Entries of the
// behavior stay non-negative for N <= 2.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasibell/model.hpp"

namespace quasibell {

enum class Symbol : int { Minus = -1, Plus = 1 };

using SymbolString = std::vector<Symbol>;

// Parses "+-+" style strings. Throws StructuralError on other characters.
SymbolString parse_symbols(std::string_view text);
std::string to_string(const SymbolString& symbols);

struct SymbolStrategy {
  SymbolString alice;
  SymbolString bob;

  std::size_t n_settings() const { return alice.size(); }
  friend bool operator==(const SymbolStrategy&, const SymbolStrategy&) = default;
};

namespace detail {

inline void require_strategy(const SymbolStrategy& s) {
  if (s.alice.empty() || s.alice.size() != s.bob.size()) {
    throw StructuralError("strategy symbol strings must be non-empty and of equal length (" +
                          std::to_string(s.alice.size()) + " vs " +
                          std::to_string(s.bob.size()) + ")");
  }
}

template <class T>
OutcomePair<T> deterministic_pair(Symbol symbol) {
  return symbol == Symbol::Plus ? OutcomePair<T>{T(0), T(1)}
                                : OutcomePair<T>{T(1), T(0)};
}

}  // namespace detail

// 0/1 response tables of one strategy, both bound to hidden value `lambda`.
template <class T = double>
std::pair<BasicLocalResponse<T>, BasicLocalResponse<T>> deterministic_strategy(
    const SymbolStrategy& strategy, HiddenValue lambda) {
  detail::require_strategy(strategy);
  const std::size_t n = strategy.n_settings();
  std::vector<OutcomePair<T>> table_a;
  std::vector<OutcomePair<T>> table_b;
  for (std::size_t x = 0; x < n; ++x) {
    table_a.push_back(detail::deterministic_pair<T>(strategy.alice[x]));
    table_b.push_back(detail::deterministic_pair<T>(strategy.bob[x]));
  }
  return {BasicLocalResponse<T>(Party::A, n, {lambda}, std::move(table_a)),
          BasicLocalResponse<T>(Party::B, n, {lambda}, std::move(table_b))};
}

// Diagonal model: strategy i is attached to hidden value labels[i] with
// weight weights[i].
template <class T = double>
BasicModel<T> mix_strategies(const std::vector<SymbolStrategy>& strategies,
                             const std::vector<HiddenValue>& labels,
                             std::vector<T> weights,
                             double tolerance = kDefaultTolerance) {
  if (strategies.empty() || strategies.size() != labels.size()) {
    throw StructuralError("need one label per strategy");
  }
  const std::size_t n = strategies.front().n_settings();
  const std::size_t k = strategies.size();
  std::vector<OutcomePair<T>> table_a(n * k);
  std::vector<OutcomePair<T>> table_b(n * k);
  for (std::size_t i = 0; i < k; ++i) {
    detail::require_strategy(strategies[i]);
    if (strategies[i].n_settings() != n) {
      throw StructuralError("strategies disagree on the number of settings");
    }
    for (std::size_t x = 0; x < n; ++x) {
      table_a[x * k + i] = detail::deterministic_pair<T>(strategies[i].alice[x]);
      table_b[x * k + i] = detail::deterministic_pair<T>(strategies[i].bob[x]);
    }
  }
  return BasicModel<T>(
      BasicLocalResponse<T>(Party::A, n, labels, std::move(table_a)),
      BasicLocalResponse<T>(Party::B, n, labels, std::move(table_b)),
      BasicQuasiDist<T>::diagonal(labels, std::move(weights), tolerance));
}

// The four strategies of the saturating family for n settings, in label
// order 1..4:
//   [(-...-)_A, (-...-+)_B], [(+-...-)_A, (-...-)_B],
//   [(+...+)_A, (+...+)_B],  [(+-...-)_A, (-...-+)_B].
std::vector<SymbolStrategy> saturating_strategies(std::size_t n);

inline const std::vector<HiddenValue>& saturating_labels() {
  static const std::vector<HiddenValue> labels{1, 2, 3, 4};
  return labels;
}

struct ConstructionOptions {
  // Build models outside 0 <= N <= 2, whose behaviors are not valid.
  bool force = false;
};

template <class T = double>
BasicModel<T> chained_saturating_model(std::size_t n, T negativity,
                                       ConstructionOptions options = {}) {
  if (n < 2) throw DomainError("saturating model needs n >= 2");
  if (!std::isfinite(to_double(negativity))) {
    throw DomainError("negativity must be finite");
  }
  if (!options.force && (negativity < T(0) || negativity > T(2))) {
    throw DomainError("negativity " + std::to_string(to_double(negativity)) +
                      " outside [0, 2] yields an invalid behavior");
  }
  const T positive = (T(4) + negativity) / T(12);
  const T negative = -negativity / T(4);
  return mix_strategies<T>(saturating_strategies(n), saturating_labels(),
                           {positive, positive, positive, negative});
}

template <class T = double>
BasicModel<T> chsh_saturating_model(T negativity,
                                    ConstructionOptions options = {}) {
  return chained_saturating_model<T>(2, negativity, options);
}

}  // namespace quasibell

#endif  // QUASIBELL_CONSTRUCTIONS_HPP_
