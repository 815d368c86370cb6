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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "quasibell/quasibell.hpp"
#include "support/generators.hpp"
#include "support/surd.hpp"

namespace {

using namespace quasibell;
using testing::Surd;

const double kSqrt2 = std::sqrt(2.0);
const double kTsirelsonN = 2.0 * (kSqrt2 - 1.0);

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string fmt(const char* format, double a, double b = 0.0) {
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, format, a, b);
  return buffer;
}

template <class T>
bool table_equals(const BasicBehavior<T>& behavior, const std::vector<OutcomeRow<T>>& golden) {
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (!(behavior.rows()[r][c] == golden[r][c])) return false;
    }
  }
  return true;
}

// Exact values of the grid; the irrational point lives in Q(sqrt 2).
std::vector<Surd> exact_grid() {
  return {Surd(0), Surd(Rational(1, 2)), Surd(1), Surd(-2) + Surd(2) * Surd::sqrt2(),
          Surd(2)};
}
const std::vector<double> kGrid{0.0, 0.5, 1.0, kTsirelsonN, 2.0};

Outcome golden_table() {
  Outcome o;
  for (const Surd& n : exact_grid()) {
    const auto b = assemble_behavior(chsh_saturating_model<Surd>(n));
    o.require(table_equals(b, testing::golden_chsh_table<Surd>(n)),
              fmt("exact Q(sqrt2) table differs at N=%.6f", to_double(n)));
  }
  for (const Rational n : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    const auto b = assemble_behavior(chsh_saturating_model<Rational>(n));
    o.require(table_equals(b, testing::golden_chsh_table<Rational>(n)),
              fmt("rational table differs at N=%.6f", to_double(n)));
  }
  double worst = 0.0;
  for (double n : kGrid) {
    const Behavior b = assemble_behavior(chsh_saturating_model(n));
    const auto golden = testing::golden_chsh_table<double>(n);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        worst = std::max(worst, std::abs(b.rows()[r][c] - golden[r][c]));
      }
    }
  }
  o.require(worst <= 1e-12, fmt("float deviation %.3g > 1e-12", worst));
  if (o.pass) o.detail = fmt("exact on 5 values, float max deviation %.2g", worst);
  return o;
}

Outcome saturation() {
  Outcome o;
  double worst = 0.0;
  for (double n : kGrid) {
    const Model m = chsh_saturating_model(n);
    const double score = chsh_score(assemble_behavior(m));
    const auto w = witness_chsh(m);
    const auto check = check_quasi_bell(m, 2);
    worst = std::max({worst, std::abs(score - (2.0 + n)), std::abs(w.selected - n),
                      std::abs(check.margin)});
  }
  o.require(worst <= 1e-9, fmt("deviation %.3g > 1e-9", worst));
  if (o.pass) o.detail = fmt("score = 2+N, witness = N, margin 0 (max deviation %.2g)", worst);
  return o;
}

Outcome tsirelson() {
  Outcome o;
  const double model_score = chsh_score(assemble_behavior(chsh_saturating_model(kTsirelsonN)));
  const std::vector<double> a{0.0, M_PI / 2.0};
  const std::vector<double> b{M_PI / 4.0, 3.0 * M_PI / 4.0};
  const double quantum_score =
      chsh_score(oracle::quantum_behavior(oracle::singlet_state(), a, b));
  o.require(std::abs(model_score - 2.0 * kSqrt2) <= 1e-9,
            fmt("model score %.12f", model_score));
  o.require(std::abs(model_score - quantum_score) <= 1e-9,
            fmt("model %.12f vs quantum %.12f", model_score, quantum_score));
  if (o.pass) o.detail = fmt("model %.12f, singlet %.12f", model_score, quantum_score);
  return o;
}

Outcome ceiling() {
  Outcome o;
  const auto lp = oracle::max_score_lp(2, oracle::kUnlimitedBudget);
  o.require(lp.status == oracle::LpStatus::kOptimal, "LP not optimal");
  o.require(std::abs(lp.optimal_score - 4.0) <= 1e-7, fmt("LP score %.9f", lp.optimal_score));
  for (double n : {2.000001, 2.5, 3.0}) {
    bool threw = false;
    try {
      (void)chsh_saturating_model(n);
    } catch (const DomainError&) {
      threw = true;
    }
    o.require(threw, fmt("no error at N=%.6f", n));
  }
  double lo = 0.0;
  double hi = 4.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    const auto m = chsh_saturating_model(mid, {.force = true});
    (validate_behavior(assemble_behavior(m), 0.0).is_valid ? lo : hi) = mid;
  }
  o.require(std::abs(lo - 2.0) <= 1e-6, fmt("validity boundary %.9f", lo));
  if (o.pass) o.detail = fmt("LP max %.9f, validity boundary %.9f", lp.optimal_score, lo);
  return o;
}

Outcome classical_bounds() {
  Outcome o;
  for (std::size_t n = 2; n <= 5; ++n) {
    const double brute = oracle::classical_bound_bruteforce(n);
    o.require(brute == 2.0 * n - 2.0, fmt("brute force n=%.0f gives %.0f", n, brute));
    const auto lp = oracle::max_score_lp(n, 0.0);
    o.require(lp.status == oracle::LpStatus::kOptimal &&
                  std::abs(lp.optimal_score - brute) <= 1e-7,
              fmt("LP n=%.0f gives %.9f", n, lp.optimal_score));
  }
  if (o.pass) o.detail = "2n-2 for n = 2..5 by enumeration and LP";
  return o;
}

Outcome bound_on_random_models() {
  Outcome o;
  testing::Generator gen(20260101);
  std::size_t valid = 0;
  std::size_t negative = 0;
  std::size_t drawn = 0;
  double worst = -INFINITY;
  while (valid < 10000) {
    const std::size_t n = 2 + (valid % 2);
    const Model m = gen.model(n, true);
    ++drawn;
    if (!validate_behavior(assemble_behavior(m)).is_valid) continue;
    ++valid;
    negative += m.dist().has_negative();
    const auto r = check_quasi_bell(m, n, 1e-9);
    worst = std::max(worst, r.score - r.bound);
    o.require(r.holds, fmt("violation %.3g at model %.0f", r.score - r.bound, valid));
  }
  o.detail = fmt("10000 valid models (%.0f drawn), ", drawn, 0) +
             fmt("%.0f with negative weight, max excess %.3g", negative, worst);
  o.require(negative >= 1000, "too few negative models to be meaningful");
  return o;
}

Outcome chained_saturation() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (double neg : {0.0, 1.0, 2.0}) {
      const Model m = chained_saturating_model(n, neg);
      const double score = chained_score(assemble_behavior(m), n);
      const auto w = witness_chained(m, n);
      worst = std::max({worst, std::abs(score - (2.0 * n - 2.0 + neg)),
                        std::abs(w.total - neg)});
      for (std::size_t x = 1; x < n; ++x) {
        const double expected = x + 1 == n ? neg : 0.0;
        worst = std::max(worst, std::abs(w.terms[x - 1].selected - expected));
      }
    }
  }
  o.require(worst <= 1e-9, fmt("deviation %.3g", worst));
  if (o.pass) o.detail = fmt("n = 2..5, links (0,...,0,N), max deviation %.2g", worst);
  return o;
}

Outcome witness_definitions() {
  Outcome o;
  testing::Generator gen(8);
  double worst_positive = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const Model m = gen.model(n, false);
    const double values[] = {
        n == 2 ? witness_pm(m, Sign::Plus) : 0.0, n == 2 ? witness_pm(m, Sign::Minus) : 0.0,
        witness_chained(m, n).total, witness_faithful(m.dist())};
    for (double v : values) worst_positive = std::max(worst_positive, std::abs(v));
  }
  o.require(worst_positive <= 1e-12, fmt("witness %.3g on a positive dist", worst_positive));
  double smallest_faithful = INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const auto points = gen.support(3, 3, 6);
    if (points.size() < 2) {
      --i;
      continue;
    }
    const QuasiDist d(points, gen.signed_weights(points.size()));
    smallest_faithful = std::min(smallest_faithful, witness_faithful(d));
  }
  o.require(smallest_faithful > 0.0, "faithful witness vanished on a negative dist");
  const Model m = mix_strategies<double>(
      {{parse_symbols("--"), parse_symbols("++")}, {parse_symbols("++"), parse_symbols("--")}},
      {1, 2}, {1.5, -0.5});
  const auto w = witness_chsh(m);
  o.require(w.selected == 0.0 && m.dist().has_negative() && w.faithful > 0.0,
            "non-faithfulness example failed");
  if (o.pass) {
    o.detail = fmt("max on positive %.2g, min faithful on negative %.3g", worst_positive,
                   smallest_faithful) +
               fmt(", example selected %.1f with faithful %.1f", w.selected, w.faithful);
  }
  return o;
}

Outcome sampling() {
  Outcome o;
  const Model m = chsh_saturating_model(1.0);
  const Behavior exact = assemble_behavior(m);
  const auto small = oracle::signed_sample(m, 1000000, 2024);
  const auto large = oracle::signed_sample(m, 4000000, 2024);
  double worst_z = 0.0;
  double se_small = 0.0;
  double se_large = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const double se = small.standard_errors.rows[r][c];
      const double err = std::abs(small.empirical_behavior.rows[r][c] - exact.rows()[r][c]);
      if (se > 0.0) worst_z = std::max(worst_z, err / se);
      o.require(se > 0.0 || err == 0.0, "nonzero error with zero standard error");
      se_small += se;
      se_large += large.standard_errors.rows[r][c];
    }
  }
  o.require(worst_z <= 5.0, fmt("cell off by %.2f standard errors", worst_z));
  const double ratio = se_small / se_large;
  o.require(ratio >= 2.0 / 1.5 && ratio <= 2.0 * 1.5, fmt("error ratio %.3f", ratio));
  if (o.pass) o.detail = fmt("max |z| %.2f, error ratio at 4x shots %.3f", worst_z, ratio);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "saturating table", 1.0, golden_table},
      {2, "two-setting saturation", 0.0, saturation},
      {3, "Tsirelson emulation", 0.0, tsirelson},
      {4, "no-signalling ceiling", 0.0, ceiling},
      {5, "classical bounds", 10.0, classical_bounds},
      {6, "bound on random models", 60.0, bound_on_random_models},
      {7, "chained saturation", 0.0, chained_saturation},
      {8, "witness definitions", 0.0, witness_definitions},
      {9, "signed sampling", 30.0, sampling},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds > c.budget_seconds && o.pass) {
      o.pass = false;
      o.detail = fmt("took %.2f s, budget %.0f s", seconds, c.budget_seconds);
    }
    failures += !o.pass;
    std::printf("[%s] %d %-26s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                seconds, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
