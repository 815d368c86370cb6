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

#include "quasibell/oracle/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace quasibell::oracle {

std::vector<SymbolString> enumerate_deterministic(std::size_t n) {
  if (n == 0) throw DomainError("need at least one setting");
  if (n > kMaxEnumeratedSettings) {
    throw ResourceError("refusing to enumerate 2^" + std::to_string(n) +
                        " strategies (limit n <= " +
                        std::to_string(kMaxEnumeratedSettings) + ")");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<SymbolString> strategies;
  strategies.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    SymbolString s(n);
    for (std::size_t x = 0; x < n; ++x) {
      s[x] = (bits >> x) & 1U ? Symbol::Plus : Symbol::Minus;
    }
    strategies.push_back(std::move(s));
  }
  return strategies;
}

int deterministic_chained_combination(const SymbolString& alice,
                                      const SymbolString& bob, std::size_t n) {
  const auto v = [](Symbol s) { return static_cast<int>(s); };
  int sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += v(alice[i]) * v(bob[i]);
  for (std::size_t i = 1; i < n; ++i) sum += v(alice[i]) * v(bob[i - 1]);
  sum -= v(alice[0]) * v(bob[n - 1]);
  return sum;
}

double classical_bound_bruteforce(std::size_t n) {
  if (n < 2) throw DomainError("chained score needs n >= 2");
  if (n > kMaxBruteForceSettings) {
    throw ResourceError("brute force limited to n <= " +
                        std::to_string(kMaxBruteForceSettings));
  }
  const auto strategies = enumerate_deterministic(n);
  int best = 0;
  for (const auto& alice : strategies) {
    for (const auto& bob : strategies) {
      best = std::max(best, std::abs(deterministic_chained_combination(alice, bob, n)));
    }
  }
  return static_cast<double>(best);
}

}  // namespace quasibell::oracle
