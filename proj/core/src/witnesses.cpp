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

#include "quasibell/witnesses.hpp"

#include <cmath>
#include <string>

namespace quasibell {
namespace {

void require_settings(const Model& model, std::size_t n) {
  if (model.n_settings_a() < n || model.n_settings_b() < n) {
    throw DomainError("witness needs " + std::to_string(n) +
                      " settings per party, model has (" +
                      std::to_string(model.n_settings_a()) + ", " +
                      std::to_string(model.n_settings_b()) + ")");
  }
}

// <A>^{x_a} * (<B>^{x_b} + <B>^{x_b_prev}) at support point i.
double cross_term(const Model& model, std::size_t i, std::size_t x_a,
                  std::size_t x_b, std::size_t x_b_prev) {
  const auto [ka, kb] = model.support_indices()[i];
  const auto& pa = model.response_a().at(x_a, ka);
  const auto& pb = model.response_b().at(x_b, kb);
  const auto& pb_prev = model.response_b().at(x_b_prev, kb);
  const double a = pa[1] - pa[0];
  return a * (pb[1] - pb[0]) + a * (pb_prev[1] - pb_prev[0]);
}

double negativity(double weight) { return std::abs(weight) - weight; }

double bracket_sum(const Model& model, Sign sign, std::size_t x_a,
                   std::size_t x_b, std::size_t x_b_prev,
                   std::vector<double>* contributions) {
  const auto& weights = model.dist().weights();
  const double s = sign == Sign::Plus ? 1.0 : -1.0;
  double total = 0.0;
  if (contributions) contributions->assign(weights.size(), 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double neg = negativity(weights[i]);
    if (neg == 0.0) continue;
    const double term =
        (2.0 + s * cross_term(model, i, x_a, x_b, x_b_prev)) * neg;
    total += term;
    if (contributions) (*contributions)[i] = term;
  }
  return total;
}

WitnessReport make_report(const Model& model, std::size_t x_a, std::size_t x_b,
                          std::size_t x_b_prev, double discriminant,
                          double alternate, std::size_t disc_alice) {
  WitnessReport report;
  report.alice_setting = x_a;
  report.bob_setting = x_b;
  report.bob_previous_setting = x_b_prev;
  report.discriminant_alice_setting = disc_alice;
  report.discriminant = discriminant;
  report.alternate_discriminant = alternate;
  report.branch = discriminant < 0.0 ? Branch::Plus : Branch::Minus;

  std::vector<double> plus_terms;
  std::vector<double> minus_terms;
  report.n_plus = bracket_sum(model, Sign::Plus, x_a, x_b, x_b_prev, &plus_terms);
  report.n_minus =
      bracket_sum(model, Sign::Minus, x_a, x_b, x_b_prev, &minus_terms);
  if (report.branch == Branch::Plus) {
    report.selected = report.n_plus;
    report.per_lambda_contributions = std::move(plus_terms);
  } else {
    report.selected = report.n_minus;
    report.per_lambda_contributions = std::move(minus_terms);
  }
  report.faithful = witness_faithful(model.dist());
  return report;
}

}  // namespace

const char* to_string(Branch branch) {
  return branch == Branch::Plus ? "PLUS" : "MINUS";
}

const char* to_string(DiscriminantConvention convention) {
  return convention == DiscriminantConvention::kProofDerived ? "proof-derived"
                                                             : "printed";
}

double witness_pm(const Model& model, Sign sign) {
  require_settings(model, 2);
  return bracket_sum(model, sign, 1, 1, 0, nullptr);
}

WitnessReport witness_chsh(const Model& model) {
  require_settings(model, 2);
  const Behavior behavior = assemble_behavior(model);
  const double discriminant =
      correlation(behavior, 1, 0) + correlation(behavior, 1, 1);
  return make_report(model, 1, 1, 0, discriminant, discriminant, 1);
}

double witness_faithful(const QuasiDist& dist) {
  double total = 0.0;
  for (double w : dist.weights()) total += 4.0 * negativity(w);
  return total;
}

namespace {

WitnessReport link_from_behavior(const Model& model, const Behavior& behavior,
                                 std::size_t x,
                                 DiscriminantConvention convention) {
  const double derived =
      correlation(behavior, x, x) + correlation(behavior, x, x - 1);
  const double printed =
      correlation(behavior, 0, x) + correlation(behavior, 0, x - 1);
  if (convention == DiscriminantConvention::kProofDerived) {
    return make_report(model, x, x, x - 1, derived, printed, x);
  }
  return make_report(model, x, x, x - 1, printed, derived, 0);
}

}  // namespace

WitnessReport chained_link_witness(const Model& model, std::size_t link,
                                   DiscriminantConvention convention) {
  if (link == 0) throw DomainError("chained links start at x = 1");
  require_settings(model, link + 1);
  return link_from_behavior(model, assemble_behavior(model), link, convention);
}

ChainedWitnessReport witness_chained(const Model& model, std::size_t n,
                                     DiscriminantConvention convention) {
  if (n < 2) throw DomainError("chained witness needs n >= 2");
  require_settings(model, n);
  const Behavior behavior = assemble_behavior(model);
  ChainedWitnessReport report;
  report.convention = convention;
  report.terms.reserve(n - 1);
  for (std::size_t x = 1; x < n; ++x) {
    report.terms.push_back(link_from_behavior(model, behavior, x, convention));
    report.total += report.terms.back().selected;
  }
  return report;
}

}  // namespace quasibell
