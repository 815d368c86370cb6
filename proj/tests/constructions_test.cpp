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

#include <gtest/gtest.h>

#include "quasibell/inequalities.hpp"
#include "support/generators.hpp"

namespace quasibell {
namespace {

TEST(Symbols, ParseAndPrint) {
  const auto s = parse_symbols("+--+");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], Symbol::Plus);
  EXPECT_EQ(s[1], Symbol::Minus);
  EXPECT_EQ(to_string(s), "+--+");
  EXPECT_THROW(parse_symbols("+x"), StructuralError);
  EXPECT_TRUE(parse_symbols("").empty());
}

TEST(SaturatingStrategies, ShapeForThreeSettings) {
  const auto s = saturating_strategies(3);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(to_string(s[0].alice), "---");
  EXPECT_EQ(to_string(s[0].bob), "--+");
  EXPECT_EQ(to_string(s[1].alice), "+--");
  EXPECT_EQ(to_string(s[1].bob), "---");
  EXPECT_EQ(to_string(s[2].alice), "+++");
  EXPECT_EQ(to_string(s[2].bob), "+++");
  EXPECT_EQ(to_string(s[3].alice), "+--");
  EXPECT_EQ(to_string(s[3].bob), "--+");
  EXPECT_THROW(saturating_strategies(1), DomainError);
}

TEST(SaturatingModel, WeightsNormalizedAndSigned) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (double neg : {0.0, 0.7, 2.0}) {
      const Model m = chained_saturating_model(n, neg);
      const auto& w = m.dist().weights();
      ASSERT_EQ(w.size(), 4u);
      EXPECT_NEAR(w[0] + w[1] + w[2] + w[3], 1.0, 1e-15);
      EXPECT_NEAR(w[3], -neg / 4.0, 1e-15);
      EXPECT_NEAR(m.dist().negative_mass(), neg / 4.0, 1e-15);
      EXPECT_TRUE(m.dist().is_diagonal());
    }
  }
}

TEST(SaturatingModel, ExactTableMatchesTwelfths) {
  for (const Rational neg : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2),
                             Rational(2)}) {
    const ExactBehavior b = assemble_behavior(chsh_saturating_model<Rational>(neg));
    const auto golden = testing::golden_chsh_table<Rational>(neg);
    for (std::size_t xa = 0; xa < 2; ++xa) {
      for (std::size_t xb = 0; xb < 2; ++xb) {
        for (std::size_t c = 0; c < 4; ++c) {
          EXPECT_EQ(b.row(xa, xb)[c], golden[xa * 2 + xb][c])
              << "N=" << neg << " row " << xa << xb << " cell " << c;
        }
      }
    }
    EXPECT_EQ(chsh_score(b), Rational(2) + neg);
  }
}

TEST(SaturatingModel, FloatingTableMatchesTwelfths) {
  testing::Generator gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const double neg = gen.uniform(0.0, 2.0);
    const Behavior b = assemble_behavior(chsh_saturating_model(neg));
    const auto golden = testing::golden_chsh_table<double>(neg);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        EXPECT_NEAR(b.rows()[r][c], golden[r][c], 1e-15);
      }
    }
  }
}

TEST(SaturatingModel, ValidityBoundaryIsTwo) {
  double lo = 1.0;
  double hi = 3.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    const auto m = chsh_saturating_model(mid, {.force = true});
    (validate_behavior(assemble_behavior(m), 0.0).is_valid ? lo : hi) = mid;
  }
  EXPECT_NEAR(lo, 2.0, 1e-12);
}

TEST(SaturatingModel, RejectsOutOfRangeUnlessForced) {
  EXPECT_THROW(chsh_saturating_model(2.5), DomainError);
  EXPECT_THROW(chsh_saturating_model(-0.1), DomainError);
  EXPECT_THROW(chained_saturating_model(1, 1.0), DomainError);
  EXPECT_NO_THROW(chsh_saturating_model(2.5, {.force = true}));
  EXPECT_THROW(chsh_saturating_model(std::nan(""), {.force = true}), DomainError);
}

TEST(SaturatingModel, FiveSettingsAtHalf) {
  const Model m = chained_saturating_model(5, 0.5);
  const Behavior b = assemble_behavior(m);
  EXPECT_TRUE(validate_behavior(b).is_valid);
  EXPECT_NEAR(chained_score(b, 5), 8.5, 1e-12);
}

TEST(SaturatingModel, ChainedFamilyValidOnRange) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (double neg : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      const auto r = validate_behavior(assemble_behavior(chained_saturating_model(n, neg)));
      EXPECT_TRUE(r.is_valid) << n << " " << neg;
      EXPECT_LE(r.no_signalling_violation, 1e-9);
    }
  }
}

TEST(MixStrategies, RejectsMismatchedInput) {
  const SymbolStrategy s{parse_symbols("++"), parse_symbols("--")};
  const SymbolStrategy t{parse_symbols("+++"), parse_symbols("---")};
  EXPECT_THROW(mix_strategies<double>({s}, {1, 2}, {1.0}), StructuralError);
  EXPECT_THROW(mix_strategies<double>({s, t}, {1, 2}, {0.5, 0.5}), StructuralError);
  EXPECT_THROW(mix_strategies<double>({{parse_symbols("+"), parse_symbols("--")}}, {1},
                                      {1.0}),
               StructuralError);
}

}  // namespace
}  // namespace quasibell
