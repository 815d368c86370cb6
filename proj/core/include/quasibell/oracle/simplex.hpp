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

#ifndef QUASIBELL_ORACLE_SIMPLEX_HPP_
#define QUASIBELL_ORACLE_SIMPLEX_HPP_

// Dense two-phase tableau simplex for small linear programs
//
//   maximize  c^T x   subject to  rows of (a_i^T x  {<=, >=, =}  b_i),  x >= 0.
//
// Pricing is Dantzig's rule until a run of degenerate pivots is seen, after
// which the solve switches to Bland's smallest-index rule, which cannot
// cycle. Ratio-test ties go to the smallest basic variable index. The solve
// is deterministic for a given program.

#include <cstddef>
#include <vector>

namespace quasibell::oracle {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct LinearProgram {
  std::vector<double> objective;  // maximized
  std::vector<Constraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

const char* to_string(LpStatus status);

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-8;
  std::size_t max_iterations = 500000;
  std::size_t degenerate_streak_before_bland = 64;
};

struct SimplexResult {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

SimplexResult solve_simplex(const LinearProgram& program,
                            const SimplexOptions& options = {});

}  // namespace quasibell::oracle

#endif  // QUASIBELL_ORACLE_SIMPLEX_HPP_
