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

#ifndef QUASIBELL_ORACLE_ENUMERATION_HPP_
#define QUASIBELL_ORACLE_ENUMERATION_HPP_

#include <cstddef>
#include <vector>

#include "quasibell/constructions.hpp"

namespace quasibell::oracle {

inline constexpr std::size_t kMaxEnumeratedSettings = 16;
inline constexpr std::size_t kMaxBruteForceSettings = 12;

// All 2^n deterministic symbol strings for one party. Bit x of the list
// index is set iff the symbol at setting x is '+'.
std::vector<SymbolString> enumerate_deterministic(std::size_t n);

// Signed chained combination of one joint deterministic strategy.
int deterministic_chained_combination(const SymbolString& alice,
                                      const SymbolString& bob, std::size_t n);

// Maximum |chained combination| over every joint deterministic strategy.
double classical_bound_bruteforce(std::size_t n);

}  // namespace quasibell::oracle

#endif  // QUASIBELL_ORACLE_ENUMERATION_HPP_
