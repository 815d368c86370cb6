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

#ifndef QUASIBELL_SCALAR_HPP_
#define QUASIBELL_SCALAR_HPP_

#include <cmath>
#include <cstdint>

#include <boost/rational.hpp>

namespace quasibell {

// Exact arithmetic for golden tables whose entries are small rationals.
using Rational = boost::rational<std::int64_t>;

inline constexpr double kDefaultTolerance = 1e-9;

inline double to_double(double value) { return value; }
inline double to_double(const Rational& value) {
  return boost::rational_cast<double>(value);
}

inline double abs_value(double value) { return std::abs(value); }
inline Rational abs_value(const Rational& value) { return boost::abs(value); }

}  // namespace quasibell

#endif  // QUASIBELL_SCALAR_HPP_
