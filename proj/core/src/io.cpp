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

#include "quasibell/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "quasibell/constructions.hpp"

namespace quasibell::io {
namespace {

constexpr const char* kColumns[4] = {"--", "-+", "+-", "++"};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormatError((where.empty() ? std::string("/") : where) + ": " + what);
}

void require_keys(const Json& object, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  if (!object.is_object()) fail(where, "expected an object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) fail(where, "unknown field \"" + item.key() + "\"");
  }
  for (const char* key : allowed) {
    if (!object.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  }
}

std::int64_t parse_integer(std::string_view text, const std::string& where) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(where, "expected an integer, got \"" + std::string(text) + "\"");
  }
  return value;
}

std::pair<std::int64_t, std::int64_t> parse_pair_key(const std::string& key,
                                                     const std::string& where) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) fail(where, "key must have the form \"i,j\"");
  const std::string_view view(key);
  return {parse_integer(view.substr(0, comma), where),
          parse_integer(view.substr(comma + 1), where)};
}

double number_at(const Json& value, const std::string& where) {
  if (!value.is_number()) fail(where, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) fail(where, "number is not finite");
  return v;
}

std::int64_t integer_at(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  return value.get<std::int64_t>();
}

LocalResponse response_from_json(const Json& party, Party label,
                                 const std::string& where, double tolerance) {
  require_keys(party, where, {"settings", "lambdas", "table"});
  const std::int64_t settings = integer_at(party["settings"], where + "/settings");
  if (settings <= 0) fail(where + "/settings", "must be positive");
  const auto& lambdas_json = party["lambdas"];
  if (!lambdas_json.is_array() || lambdas_json.empty()) {
    fail(where + "/lambdas", "expected a non-empty array");
  }
  std::vector<HiddenValue> lambdas;
  for (std::size_t i = 0; i < lambdas_json.size(); ++i) {
    lambdas.push_back(
        integer_at(lambdas_json[i], where + "/lambdas/" + std::to_string(i)));
  }
  const std::size_t n = static_cast<std::size_t>(settings);
  const std::size_t k = lambdas.size();
  std::vector<OutcomePair<double>> table(n * k);
  std::vector<bool> seen(n * k, false);
  const auto& table_json = party["table"];
  const std::string table_where = where + "/table";
  if (!table_json.is_object()) fail(table_where, "expected an object");
  for (const auto& item : table_json.items()) {
    const std::string entry_where = table_where + "/" + item.key();
    const auto [x, lambda] = parse_pair_key(item.key(), entry_where);
    if (x < 0 || static_cast<std::size_t>(x) >= n) {
      fail(entry_where, "setting out of range");
    }
    const auto it = std::find(lambdas.begin(), lambdas.end(), lambda);
    if (it == lambdas.end()) fail(entry_where, "hidden value not listed in lambdas");
    const std::size_t index =
        static_cast<std::size_t>(x) * k + static_cast<std::size_t>(it - lambdas.begin());
    if (seen[index]) fail(entry_where, "duplicate entry");
    const auto& probs = item.value();
    if (!probs.is_array() || probs.size() != 2) {
      fail(entry_where, "expected [p_minus, p_plus]");
    }
    table[index] = {number_at(probs[0], entry_where + "/0"),
                    number_at(probs[1], entry_where + "/1")};
    seen[index] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!seen[x * k + j]) {
        fail(table_where, "missing entry \"" + std::to_string(x) + "," +
                              std::to_string(lambdas[j]) + "\"");
      }
    }
  }
  try {
    return LocalResponse(label, n, std::move(lambdas), std::move(table), tolerance);
  } catch (const StructuralError& e) {
    fail(where, e.what());
  }
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace

Json model_to_json(const Model& model) {
  Json parties = Json::array();
  for (const LocalResponse* response : {&model.response_a(), &model.response_b()}) {
    Json party;
    party["settings"] = response->n_settings();
    party["lambdas"] = response->hidden_values();
    Json table = Json::object();
    for (std::size_t x = 0; x < response->n_settings(); ++x) {
      for (std::size_t k = 0; k < response->hidden_count(); ++k) {
        const auto& p = response->at(x, k);
        table[std::to_string(x) + "," + std::to_string(response->hidden_values()[k])] =
            Json::array({p[0], p[1]});
      }
    }
    party["table"] = std::move(table);
    parties.push_back(std::move(party));
  }
  Json dist = Json::object();
  const auto& support = model.dist().support();
  for (std::size_t i = 0; i < support.size(); ++i) {
    dist[std::to_string(support[i].a) + "," + std::to_string(support[i].b)] =
        model.dist().weights()[i];
  }
  Json document;
  document["parties"] = std::move(parties);
  document["dist"] = std::move(dist);
  return document;
}

Model model_from_json(const Json& document, double tolerance) {
  require_keys(document, "", {"parties", "dist"});
  const auto& parties = document["parties"];
  if (!parties.is_array() || parties.size() != 2) {
    fail("/parties", "expected exactly two parties (A, B)");
  }
  LocalResponse a = response_from_json(parties[0], Party::A, "/parties/0", tolerance);
  LocalResponse b = response_from_json(parties[1], Party::B, "/parties/1", tolerance);

  const auto& dist_json = document["dist"];
  if (!dist_json.is_object() || dist_json.empty()) {
    fail("/dist", "expected a non-empty object");
  }
  std::vector<JointPoint> support;
  std::vector<double> weights;
  for (const auto& item : dist_json.items()) {
    const std::string where = "/dist/" + item.key();
    const auto [la, lb] = parse_pair_key(item.key(), where);
    support.push_back({la, lb});
    weights.push_back(number_at(item.value(), where));
  }
  try {
    return Model(std::move(a), std::move(b),
                 QuasiDist(std::move(support), std::move(weights), tolerance));
  } catch (const StructuralError& e) {
    fail("/dist", e.what());
  }
}

Model parse_model(std::string_view text, double tolerance) {
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("model JSON: ") + e.what());
  }
  return model_from_json(document, tolerance);
}

Json behavior_to_json(const Behavior& behavior) {
  Json document;
  document["settings"] = {behavior.n_settings_a(), behavior.n_settings_b()};
  document["columns"] = {kColumns[0], kColumns[1], kColumns[2], kColumns[3]};
  Json rows = Json::array();
  for (std::size_t xa = 0; xa < behavior.n_settings_a(); ++xa) {
    for (std::size_t xb = 0; xb < behavior.n_settings_b(); ++xb) {
      const auto& r = behavior.row(xa, xb);
      Json row;
      row["xA"] = xa;
      row["xB"] = xb;
      row["p"] = {r[0], r[1], r[2], r[3]};
      rows.push_back(std::move(row));
    }
  }
  document["rows"] = std::move(rows);
  return document;
}

namespace {

Behavior assemble_rows(std::size_t n_a, std::size_t n_b,
                       const std::vector<std::tuple<std::size_t, std::size_t,
                                                    OutcomeRow<double>, std::string>>& entries,
                       double tolerance) {
  std::vector<OutcomeRow<double>> rows(n_a * n_b);
  std::vector<bool> seen(n_a * n_b, false);
  for (const auto& [xa, xb, row, where] : entries) {
    if (xa >= n_a || xb >= n_b) fail(where, "setting pair out of range");
    if (seen[xa * n_b + xb]) fail(where, "duplicate setting pair");
    rows[xa * n_b + xb] = row;
    seen[xa * n_b + xb] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      fail("behavior", "missing setting pair (" + std::to_string(i / n_b) + "," +
                           std::to_string(i % n_b) + ")");
    }
  }
  try {
    return Behavior(n_a, n_b, std::move(rows), tolerance);
  } catch (const StructuralError& e) {
    fail("behavior", e.what());
  }
}

}  // namespace

Behavior behavior_from_json(const Json& document, double tolerance) {
  require_keys(document, "", {"settings", "columns", "rows"});
  const auto& settings = document["settings"];
  if (!settings.is_array() || settings.size() != 2) {
    fail("/settings", "expected [n_settings_a, n_settings_b]");
  }
  const auto n_a = integer_at(settings[0], "/settings/0");
  const auto n_b = integer_at(settings[1], "/settings/1");
  if (n_a <= 0 || n_b <= 0) fail("/settings", "must be positive");
  const auto& columns = document["columns"];
  if (columns != Json({kColumns[0], kColumns[1], kColumns[2], kColumns[3]})) {
    fail("/columns", "expected [\"--\", \"-+\", \"+-\", \"++\"]");
  }
  const auto& rows_json = document["rows"];
  if (!rows_json.is_array()) fail("/rows", "expected an array");
  std::vector<std::tuple<std::size_t, std::size_t, OutcomeRow<double>, std::string>>
      entries;
  for (std::size_t i = 0; i < rows_json.size(); ++i) {
    const std::string where = "/rows/" + std::to_string(i);
    const auto& row = rows_json[i];
    require_keys(row, where, {"xA", "xB", "p"});
    const auto xa = integer_at(row["xA"], where + "/xA");
    const auto xb = integer_at(row["xB"], where + "/xB");
    if (xa < 0 || xb < 0) fail(where, "negative setting");
    const auto& p = row["p"];
    if (!p.is_array() || p.size() != 4) fail(where + "/p", "expected four entries");
    OutcomeRow<double> values{};
    for (std::size_t c = 0; c < 4; ++c) {
      values[c] = number_at(p[c], where + "/p/" + std::to_string(c));
    }
    entries.emplace_back(static_cast<std::size_t>(xa), static_cast<std::size_t>(xb),
                         values, where);
  }
  return assemble_rows(static_cast<std::size_t>(n_a), static_cast<std::size_t>(n_b),
                       entries, tolerance);
}

std::string behavior_to_csv(const Behavior& behavior) {
  std::string out(kBehaviorCsvHeader);
  out += '\n';
  for (std::size_t xa = 0; xa < behavior.n_settings_a(); ++xa) {
    for (std::size_t xb = 0; xb < behavior.n_settings_b(); ++xb) {
      out += std::to_string(xa) + "," + std::to_string(xb);
      for (double p : behavior.row(xa, xb)) out += "," + format_double(p);
      out += '\n';
    }
  }
  return out;
}

Behavior behavior_from_csv(std::string_view text, double tolerance) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) break;
  }
  if (line != kBehaviorCsvHeader) {
    fail("line " + std::to_string(line_number),
         "expected header \"" + std::string(kBehaviorCsvHeader) + "\"");
  }
  std::vector<std::tuple<std::size_t, std::size_t, OutcomeRow<double>, std::string>>
      entries;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_number);
    std::vector<std::string> fields;
    std::stringstream fields_in(line);
    std::string field;
    while (std::getline(fields_in, field, ',')) fields.push_back(field);
    if (fields.size() != 6) fail(where, "expected 6 comma-separated fields");
    const auto xa = parse_integer(fields[0], where);
    const auto xb = parse_integer(fields[1], where);
    if (xa < 0 || xb < 0) fail(where, "negative setting");
    OutcomeRow<double> row{};
    for (std::size_t c = 0; c < 4; ++c) {
      const std::string& f = fields[c + 2];
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
      if (ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(value)) {
        fail(where, "field " + std::to_string(c + 3) + " is not a number");
      }
      row[c] = value;
    }
    n_a = std::max(n_a, static_cast<std::size_t>(xa) + 1);
    n_b = std::max(n_b, static_cast<std::size_t>(xb) + 1);
    entries.emplace_back(static_cast<std::size_t>(xa), static_cast<std::size_t>(xb),
                         row, where);
  }
  if (entries.empty()) fail("behavior CSV", "no data rows");
  return assemble_rows(n_a, n_b, entries, tolerance);
}

Behavior parse_behavior(std::string_view text, double tolerance) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json document;
    try {
      document = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw FormatError(std::string("behavior JSON: ") + e.what());
    }
    return behavior_from_json(document, tolerance);
  }
  return behavior_from_csv(text, tolerance);
}

std::string pretty_table(const Behavior& behavior) {
  std::string out = "xAxB |       --        -+        +-        ++\n";
  out += "-----+-----------------------------------------\n";
  char buffer[64];
  for (std::size_t xa = 0; xa < behavior.n_settings_a(); ++xa) {
    for (std::size_t xb = 0; xb < behavior.n_settings_b(); ++xb) {
      const auto& r = behavior.row(xa, xb);
      std::snprintf(buffer, sizeof buffer, "%2zu%-2zu |", xa, xb);
      out += buffer;
      for (double p : r) {
        std::snprintf(buffer, sizeof buffer, " %9.6f", p);
        out += buffer;
      }
      out += '\n';
    }
  }
  return out;
}

std::string pretty_table(const ExactBehavior& behavior) {
  std::int64_t denominator = 1;
  for (const auto& row : behavior.rows()) {
    for (const auto& p : row) denominator = std::lcm(denominator, p.denominator());
  }
  std::string out;
  if (denominator != 1) out += "1/" + std::to_string(denominator) + " x\n";
  out += "xAxB |       --        -+        +-        ++\n";
  out += "-----+-----------------------------------------\n";
  char buffer[64];
  for (std::size_t xa = 0; xa < behavior.n_settings_a(); ++xa) {
    for (std::size_t xb = 0; xb < behavior.n_settings_b(); ++xb) {
      std::snprintf(buffer, sizeof buffer, "%2zu%-2zu |", xa, xb);
      out += buffer;
      for (const auto& p : behavior.row(xa, xb)) {
        const auto scaled = p * Rational(denominator);
        std::snprintf(buffer, sizeof buffer, " %9lld",
                      static_cast<long long>(scaled.numerator()));
        out += buffer;
      }
      out += '\n';
    }
  }
  return out;
}

Json to_json(const ValidityReport& report) {
  Json j;
  j["is_valid"] = report.is_valid;
  j["worst_entry"] = {{"xA", report.worst_entry.x_a},
                      {"xB", report.worst_entry.x_b},
                      {"outcome", kColumns[report.worst_entry.cell]},
                      {"value", report.worst_entry.value}};
  j["no_signalling_violation"] = report.no_signalling_violation;
  j["tolerance"] = report.tolerance;
  return j;
}

Json to_json(const WitnessReport& report) {
  Json j;
  j["n_plus"] = report.n_plus;
  j["n_minus"] = report.n_minus;
  j["selected"] = report.selected;
  j["branch"] = to_string(report.branch);
  j["discriminant"] = report.discriminant;
  j["faithful"] = report.faithful;
  j["alternate_discriminant"] = report.alternate_discriminant;
  j["settings"] = {{"alice", report.alice_setting},
                   {"bob", report.bob_setting},
                   {"bob_previous", report.bob_previous_setting},
                   {"discriminant_alice", report.discriminant_alice_setting}};
  j["per_lambda_contributions"] = report.per_lambda_contributions;
  return j;
}

Json to_json(const ChainedWitnessReport& report) {
  Json j;
  j["total"] = report.total;
  j["convention"] = to_string(report.convention);
  Json terms = Json::array();
  for (const auto& term : report.terms) terms.push_back(to_json(term));
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const ScoreReport& report) {
  Json j;
  j["n"] = report.n;
  j["score"] = report.score;
  j["bound"] = report.bound;
  j["witness"] = report.witness_total;
  j["classical_part"] = report.classical_part;
  j["holds"] = report.holds;
  j["margin"] = report.margin;
  j["decomposed_score"] = report.decomposed_score;
  return j;
}

Json to_json(const oracle::LPResult& result) {
  Json j;
  j["status"] = oracle::to_string(result.status);
  j["n"] = result.n;
  j["optimal_score"] = result.optimal_score;
  j["objective"] = result.objective;
  j["negative_mass"] = result.negative_mass;
  j["faithful_witness"] = result.faithful_witness;
  j["iterations"] = result.iterations;
  Json weights = Json::array();
  for (const auto& w : result.weights) {
    weights.push_back({{"alice", to_string(w.alice)},
                       {"bob", to_string(w.bob)},
                       {"weight", w.weight}});
  }
  j["weights"] = std::move(weights);
  return j;
}

namespace {

Json cell_table_json(const oracle::CellTable& table) {
  Json rows = Json::array();
  for (std::size_t xa = 0; xa < table.n_settings_a; ++xa) {
    for (std::size_t xb = 0; xb < table.n_settings_b; ++xb) {
      const auto& r = table.row(xa, xb);
      rows.push_back({{"xA", xa}, {"xB", xb}, {"p", {r[0], r[1], r[2], r[3]}}});
    }
  }
  return rows;
}

}  // namespace

Json to_json(const oracle::SampleEstimate& estimate) {
  Json j;
  j["shots"] = estimate.shots;
  j["seed"] = estimate.seed;
  j["total_variation_weight"] = estimate.total_variation_weight;
  j["columns"] = {kColumns[0], kColumns[1], kColumns[2], kColumns[3]};
  j["empirical_behavior"] = cell_table_json(estimate.empirical_behavior);
  j["standard_errors"] = cell_table_json(estimate.standard_errors);
  return j;
}

}  // namespace quasibell::io
