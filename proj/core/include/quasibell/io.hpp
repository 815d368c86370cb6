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

#ifndef QUASIBELL_IO_HPP_
#define QUASIBELL_IO_HPP_

// Serialization of models, behaviors and reports.
//
// Model documents:
//
//   {"parties": [{"settings": 2, "lambdas": [1, 2],
//                 "table": {"0,1": [p_minus, p_plus], ...}},   // party A
//                {...}],                                        // party B
//    "dist": {"1,1": 0.75, "2,2": 0.25}}
//
// Table keys are "x,lambda" and must cover every setting/hidden value pair.
// Dist keys are "lambda_A,lambda_B"; their order is the support order.
//
// Behavior CSV has the header xA,xB,P--,P-+,P+-,P++ and one row per setting
// pair.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "quasibell/inequalities.hpp"
#include "quasibell/model.hpp"
#include "quasibell/oracle/lp.hpp"
#include "quasibell/oracle/sampling.hpp"
#include "quasibell/witnesses.hpp"

namespace quasibell::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kBehaviorCsvHeader = "xA,xB,P--,P-+,P+-,P++";

Json model_to_json(const Model& model);
Model model_from_json(const Json& document, double tolerance = kDefaultTolerance);
Model parse_model(std::string_view text, double tolerance = kDefaultTolerance);

Json behavior_to_json(const Behavior& behavior);
Behavior behavior_from_json(const Json& document,
                            double tolerance = kDefaultTolerance);
std::string behavior_to_csv(const Behavior& behavior);
Behavior behavior_from_csv(std::string_view text,
                           double tolerance = kDefaultTolerance);
// Accepts either the CSV or the JSON behavior format.
Behavior parse_behavior(std::string_view text,
                        double tolerance = kDefaultTolerance);

// Rows x_A x_B, columns --, -+, +-, ++.
std::string pretty_table(const Behavior& behavior);
// Exact entries printed as fractions over their common denominator.
std::string pretty_table(const ExactBehavior& behavior);

Json to_json(const ValidityReport& report);
Json to_json(const WitnessReport& report);
Json to_json(const ChainedWitnessReport& report);
Json to_json(const ScoreReport& report);
Json to_json(const oracle::LPResult& result);
Json to_json(const oracle::SampleEstimate& estimate);

}  // namespace quasibell::io

#endif  // QUASIBELL_IO_HPP_
