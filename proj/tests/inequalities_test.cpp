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

#include "quasibell/inequalities.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "quasibell/constructions.hpp"
#include "quasibell/oracle/quantum.hpp"
#include "support/generators.hpp"

namespace quasibell {
namespace {

constexpr double kTol = 1e-12;

TEST(ChshScore, SaturatingModelIsTwoPlusN) {
  for (double n : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const Behavior b = assemble_behavior(chsh_saturating_model(n));
    EXPECT_NEAR(chsh_score(b), 2.0 + n, kTol);
  }
}

TEST(ChshScore, PrBoxReachesFour) {
  const Behavior pr(2, 2,
                    {{0.5, 0, 0, 0.5}, {0, 0.5, 0.5, 0}, {0.5, 0, 0, 0.5}, {0.5, 0, 0, 0.5}});
  EXPECT_DOUBLE_EQ(chsh_score(pr), 4.0);
  EXPECT_NEAR(chsh_score(assemble_behavior(chsh_saturating_model(2.0))), 4.0, kTol);
}

TEST(ChshScore, SingletAtOptimalAngles) {
  const std::vector<double> a{0.0, M_PI / 2.0};
  const std::vector<double> b{M_PI / 4.0, 3.0 * M_PI / 4.0};
  const Behavior q = oracle::quantum_behavior(oracle::singlet_state(), a, b);
  double analytic = 0.0;
  for (std::size_t xa = 0; xa < 2; ++xa) {
    for (std::size_t xb = 0; xb < 2; ++xb) {
      const double sign = xa == 0 && xb == 1 ? -1.0 : 1.0;
      analytic += sign * testing::singlet_correlator(a[xa], b[xb]);
    }
  }
  EXPECT_NEAR(chsh_score(q), std::abs(analytic), 1e-12);
  EXPECT_NEAR(chsh_score(q), 2.0 * std::sqrt(2.0), 1e-12);
}

TEST(ChshScore, ExactArithmetic) {
  const auto b = assemble_behavior(chsh_saturating_model<Rational>(Rational(3, 2)));
  EXPECT_EQ(chsh_score(b), Rational(7, 2));
}

TEST(ChainedScore, TwoSettingsEqualsChsh) {
  testing::Generator gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Behavior b = assemble_behavior(gen.model(2, true));
    EXPECT_NEAR(chained_score(b, 2), chsh_score(b), 1e-12);
  }
}

TEST(ChainedScore, SaturatingModel) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (double neg : {0.0, 0.5, 1.0, 2.0}) {
      const Behavior b = assemble_behavior(chained_saturating_model(n, neg));
      EXPECT_NEAR(chained_score(b, n), 2.0 * n - 2.0 + neg, 1e-11) << n;
    }
  }
}

TEST(ChainedScore, SettingsMustMatch) {
  const Behavior b = assemble_behavior(chained_saturating_model(3, 1.0));
  EXPECT_THROW(chained_score(b, 4), DomainError);
  EXPECT_THROW(chained_score(b, 1), DomainError);
  // Fewer settings than the behavior carries reads the leading ones.
  EXPECT_EQ(chsh_score(b), chained_score(b, 2));
}

TEST(LambdaLocalScore, SaturatingStrategies) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Model m = chained_saturating_model(n, 1.0);
    const double classical = 2.0 * n - 2.0;
    EXPECT_NEAR(lambda_local_score(m, {1, 1}, n), classical, kTol);
    EXPECT_NEAR(lambda_local_score(m, {2, 2}, n), classical, kTol);
    EXPECT_NEAR(lambda_local_score(m, {3, 3}, n), classical, kTol);
    EXPECT_NEAR(lambda_local_score(m, {4, 4}, n), 2.0 * n - 6.0, kTol);
  }
}

TEST(LambdaLocalScore, BoundedByClassicalValue) {
  testing::Generator gen(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + gen.index(4);
    const Model m = gen.model(n, true);
    for (const auto& p : m.dist().support()) {
      EXPECT_LE(std::abs(lambda_local_score(m, p, n)), 2.0 * n - 2.0 + 1e-12);
    }
  }
}

TEST(CheckQuasiBell, SaturatesWithZeroMargin) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (double neg : {0.0, 0.5, 1.0, 2.0}) {
      const auto r = check_quasi_bell(chained_saturating_model(n, neg), n);
      EXPECT_TRUE(r.holds);
      EXPECT_NEAR(r.score, 2.0 * n - 2.0 + neg, 1e-11);
      EXPECT_NEAR(r.bound, r.score, 1e-11);
      EXPECT_NEAR(r.margin, 0.0, 1e-11);
      EXPECT_NEAR(r.decomposed_score, r.score, 1e-11);
      EXPECT_EQ(r.classical_part, 2.0 * n - 2.0);
    }
  }
}

TEST(CheckQuasiBell, PositiveModelsStayClassical) {
  testing::Generator gen(33);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + gen.index(4);
    const auto r = check_quasi_bell(gen.model(n, false), n);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.witness_total, 0.0);
    EXPECT_LE(r.score, 2.0 * n - 2.0 + 1e-9);
  }
}

TEST(CheckQuasiBell, BoundHoldsOnRandomQuasiModels) {
  testing::Generator gen(34);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 2 + gen.index(4);
    const Model m = gen.model(n, true);
    const auto r = check_quasi_bell(m, n);
    EXPECT_TRUE(r.holds) << "n=" << n << " score=" << r.score << " bound=" << r.bound;
    EXPECT_NEAR(r.decomposed_score, r.score, 1e-9);
  }
}

TEST(CheckQuasiBell, ForcedModelsStillSatisfyBound) {
  // Outside 0 <= N <= 2 the behavior is invalid but the algebra holds.
  for (double neg : {2.4, 3.0}) {
    const auto r = check_quasi_bell(chsh_saturating_model(neg, {.force = true}), 2);
    EXPECT_TRUE(r.holds);
    EXPECT_NEAR(r.score, 2.0 + neg, kTol);
  }
}

}  // namespace
}  // namespace quasibell
