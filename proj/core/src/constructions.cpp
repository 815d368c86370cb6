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

#include "quasibell/constructions.hpp"

namespace quasibell {

SymbolString parse_symbols(std::string_view text) {
  SymbolString symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      symbols.push_back(Symbol::Plus);
    } else if (c == '-') {
      symbols.push_back(Symbol::Minus);
    } else {
      throw StructuralError(std::string("invalid strategy symbol '") + c + "'");
    }
  }
  return symbols;
}

std::string to_string(const SymbolString& symbols) {
  std::string text;
  text.reserve(symbols.size());
  for (Symbol s : symbols) text.push_back(s == Symbol::Plus ? '+' : '-');
  return text;
}

std::vector<SymbolStrategy> saturating_strategies(std::size_t n) {
  if (n < 2) throw DomainError("saturating strategies need n >= 2");
  const SymbolString all_minus(n, Symbol::Minus);
  const SymbolString all_plus(n, Symbol::Plus);
  SymbolString minus_then_plus = all_minus;
  minus_then_plus.back() = Symbol::Plus;
  SymbolString plus_then_minus = all_minus;
  plus_then_minus.front() = Symbol::Plus;
  return {
      {all_minus, minus_then_plus},
      {plus_then_minus, all_minus},
      {all_plus, all_plus},
      {plus_then_minus, minus_then_plus},
  };
}

}  // namespace quasibell
