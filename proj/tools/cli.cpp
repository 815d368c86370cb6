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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "quasibell/quasibell.hpp"

namespace quasibell::cli {
namespace {

using io::Json;

// Reported with exit status 1 after the payload has been written.
struct CheckFailed {};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Model load_model(const std::string& path, double tolerance) {
  try {
    return io::parse_model(read_file(path), tolerance);
  } catch (const FormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

double parse_budget(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "unlimited") {
    return oracle::kUnlimitedBudget;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || std::isnan(value) || value < 0.0) {
    throw UsageError("--budget must be a non-negative number or 'inf'");
  }
  return value;
}

// "p/q", an integer, or a decimal with a short fractional part.
std::optional<Rational> parse_exact(const std::string& text) {
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      std::size_t used_p = 0;
      std::size_t used_q = 0;
      const auto p = std::stoll(text.substr(0, slash), &used_p);
      const auto q = std::stoll(text.substr(slash + 1), &used_q);
      if (used_p != slash || used_q != text.size() - slash - 1 || q == 0) {
        return std::nullopt;
      }
      return Rational(p, q);
    }
    const auto dot = text.find('.');
    const std::string whole = text.substr(0, dot);
    const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (frac.size() > 6 || whole.empty()) return std::nullopt;
    for (char c : frac) {
      if (c < '0' || c > '9') return std::nullopt;
    }
    std::size_t used = 0;
    const auto integral = std::stoll(whole, &used);
    if (used != whole.size() || whole.front() == '+') return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t fraction = frac.empty() ? 0 : std::stoll(frac);
    const bool negative = whole.front() == '-';
    return Rational(integral * scale + (negative ? -fraction : fraction), scale);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

double parse_negativity(const std::string& text) {
  if (auto exact = parse_exact(text)) return to_double(*exact);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw UsageError("--negativity must be a number or a fraction p/q");
  }
  return value;
}

std::string format_behavior(const Behavior& behavior, OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv:
      return io::behavior_to_csv(behavior);
    case OutputFormat::kPrettyTable:
      return io::pretty_table(behavior);
    case OutputFormat::kJson:
      break;
  }
  return io::behavior_to_json(behavior).dump() + "\n";
}

Json score_summary(const Model& model, std::size_t n, double tolerance,
                   DiscriminantConvention convention) {
  const ScoreReport score = check_quasi_bell(model, n, tolerance, convention);
  Json j = io::to_json(score);
  const Behavior behavior = assemble_behavior(model);
  j["valid"] = validate_behavior(behavior, tolerance).is_valid;
  if (n == 2) {
    j["witness_report"] = io::to_json(witness_chsh(model));
  } else {
    j["witness_report"] = io::to_json(witness_chained(model, n, convention));
  }
  j["faithful_witness"] = witness_faithful(model.dist());
  return j;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Quasi-probabilistic Bell models: witnesses, bounds and oracles",
                 "quasibell"};
    app.require_subcommand(1);
    app.fallthrough();

    const char* env = std::getenv(kToleranceEnv);
    std::optional<double> tolerance_flag;
    std::string format = "json";
    std::optional<std::string> output;
    app.add_option("--tolerance", tolerance_flag, "Numerical tolerance (default 1e-9)");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty-table"}));
    app.add_option("--output", output, "Write the report to this file");

    // build
    std::size_t n = 2;
    std::string negativity;
    bool force = false;
    auto* build = app.add_subcommand("build", "Write the saturating model as JSON");
    build->add_option("--n", n, "Number of settings per party")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    build->add_option("--negativity", negativity, "Witness value N")->required();
    build->add_flag("--force", force, "Allow N outside [0, 2]");

    // verify
    std::vector<std::string> models;
    std::optional<std::size_t> verify_n;
    std::string convention = "proof-derived";
    auto* verify = app.add_subcommand("verify", "Check the quasi-probabilistic Bell bound");
    verify->add_option("--model", models, "Model JSON file(s)")->required();
    verify->add_option("--n", verify_n, "Chained inequality size (default: settings)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    verify->add_option("--convention", convention, "Chained branch rule")
        ->check(CLI::IsMember({"proof-derived", "printed"}));

    // saturate
    auto* saturate = app.add_subcommand("saturate", "Build and report the saturating model");
    saturate->add_option("--n", n, "Number of settings per party")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    saturate->add_option("--negativity", negativity, "Witness value N")->required();
    saturate->add_flag("--force", force, "Allow N outside [0, 2]");

    // export
    std::string model_path;
    auto* exporter = app.add_subcommand("export", "Export the behavior of a model");
    exporter->add_option("--model", model_path, "Model JSON file")->required();

    // sample (also under oracle)
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    auto add_sample_options = [&](CLI::App* sub) {
      sub->add_option("--model", model_path, "Model JSON file")->required();
      sub->add_option("--shots", shots, "Number of shots")
          ->required()
          ->check(CLI::PositiveNumber);
      sub->add_option("--seed", seed, "Generator seed")->required();
    };
    auto* sample = app.add_subcommand("sample", "Sign-weighted Monte Carlo estimate");
    add_sample_options(sample);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Independent verification oracles");
    oracle_cmd->require_subcommand(1);
    oracle_cmd->fallthrough();
    auto* classical = oracle_cmd->add_subcommand("classical-bound",
                                                 "Brute-force classical chained bound");
    classical->add_option("--n", n, "Settings per party")
        ->required()
        ->check(CLI::Range(std::size_t{2}, oracle::kMaxBruteForceSettings));
    std::string budget = "inf";
    auto* lp = oracle_cmd->add_subcommand("lp", "Maximize the score under a negativity budget");
    lp->add_option("--n", n, "Settings per party")
        ->required()
        ->check(CLI::Range(std::size_t{2}, oracle::kMaxLpSettings));
    lp->add_option("--budget", budget, "Faithful-witness budget, or 'inf'");
    std::string behavior_path;
    auto* min_neg = oracle_cmd->add_subcommand("min-neg",
                                               "Minimal negative mass reproducing a behavior");
    min_neg->add_option("--behavior", behavior_path, "Behavior CSV or JSON file")
        ->required();
    auto* oracle_sample = oracle_cmd->add_subcommand("sample",
                                                     "Sign-weighted Monte Carlo estimate");
    add_sample_options(oracle_sample);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitUsage;
    }

    try {
      config_.tolerance = 1e-9;
      if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        const double value = std::strtod(env, &end);
        if (end == env || *end != '\0') {
          throw UsageError(std::string(kToleranceEnv) + " is not a number");
        }
        config_.tolerance = value;
      }
      if (tolerance_flag) config_.tolerance = *tolerance_flag;
      if (!(config_.tolerance > 0.0) || !std::isfinite(config_.tolerance)) {
        throw UsageError("tolerance must be a positive number");
      }
      config_.output_format = format == "csv"            ? OutputFormat::kCsv
                              : format == "pretty-table" ? OutputFormat::kPrettyTable
                                                         : OutputFormat::kJson;
      config_.output = output;

      if (build->parsed()) {
        config_.command = "build";
        const auto model =
            chained_saturating_model(n, parse_negativity(negativity), {force});
        emit(io::model_to_json(model).dump(2) + "\n");
      } else if (verify->parsed()) {
        config_.command = "verify";
        config_.inputs = models;
        run_verify(verify_n, convention == "printed"
                                 ? DiscriminantConvention::kPrinted
                                 : DiscriminantConvention::kProofDerived);
      } else if (saturate->parsed()) {
        config_.command = "saturate";
        run_saturate(n, negativity, force);
      } else if (exporter->parsed()) {
        config_.command = "export";
        const Model model = load_model(model_path, config_.tolerance);
        emit(format_behavior(assemble_behavior(model), config_.output_format));
      } else if (sample->parsed() || oracle_sample->parsed()) {
        config_.command = "sample";
        config_.seed = seed;
        run_sample(model_path, shots, seed);
      } else if (classical->parsed()) {
        config_.command = "oracle classical-bound";
        Json j;
        j["n"] = n;
        j["classical_bound"] = oracle::classical_bound_bruteforce(n);
        emit(j.dump() + "\n");
      } else if (lp->parsed()) {
        config_.command = "oracle lp";
        const double b = parse_budget(budget);
        const auto result = oracle::max_score_lp(n, b);
        Json j = io::to_json(result);
        j["budget"] = std::isfinite(b) ? Json(b) : Json("inf");
        emit(j.dump() + "\n");
        if (result.status != oracle::LpStatus::kOptimal) throw CheckFailed{};
      } else if (min_neg->parsed()) {
        config_.command = "oracle min-neg";
        run_min_neg(behavior_path);
      }
    } catch (const CheckFailed&) {
      return kExitCheckFailed;
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const FormatError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const StructuralError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const ResourceError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }

 private:
  void emit(const std::string& text) {
    if (config_.output) {
      std::ofstream file(*config_.output, std::ios::binary);
      if (!file) throw UsageError("cannot write " + *config_.output);
      file << text;
    } else {
      out_ << text;
    }
  }

  void run_verify(std::optional<std::size_t> requested_n,
                  DiscriminantConvention convention) {
    std::string text;
    bool all_hold = true;
    for (const auto& path : config_.inputs) {
      const Model model = load_model(path, config_.tolerance);
      const std::size_t n = requested_n.value_or(
          std::min(model.n_settings_a(), model.n_settings_b()));
      Json j;
      j["model"] = path;
      j.update(score_summary(model, n, config_.tolerance, convention));
      all_hold = all_hold && j["holds"].get<bool>();
      text += j.dump() + "\n";
    }
    emit(text);
    if (!all_hold) {
      err_ << "error: quasi-probabilistic Bell bound violated\n";
      throw CheckFailed{};
    }
  }

  void run_saturate(std::size_t n, const std::string& negativity, bool force) {
    const double value = parse_negativity(negativity);
    const Model model = chained_saturating_model(n, value, {force});
    const Behavior behavior = assemble_behavior(model);
    switch (config_.output_format) {
      case OutputFormat::kCsv:
        emit(io::behavior_to_csv(behavior));
        return;
      case OutputFormat::kPrettyTable:
        if (auto exact = parse_exact(negativity)) {
          emit(io::pretty_table(assemble_behavior(
              chained_saturating_model<Rational>(n, *exact, {force}))));
        } else {
          emit(io::pretty_table(behavior));
        }
        return;
      case OutputFormat::kJson:
        break;
    }
    Json j;
    j["n"] = n;
    j["negativity"] = value;
    j.update(score_summary(model, n, config_.tolerance,
                           DiscriminantConvention::kProofDerived));
    j["validity"] = io::to_json(validate_behavior(behavior, config_.tolerance));
    j["behavior"] = io::behavior_to_json(behavior);
    j["model"] = io::model_to_json(model);
    emit(j.dump() + "\n");
  }

  void run_sample(const std::string& path, std::uint64_t shots, std::uint64_t seed) {
    const Model model = load_model(path, config_.tolerance);
    const auto validity = validate_behavior(assemble_behavior(model), config_.tolerance);
    if (!validity.is_valid) {
      emit(io::to_json(validity).dump() + "\n");
      err_ << "error: model behavior is invalid; refusing to sample\n";
      throw CheckFailed{};
    }
    emit(io::to_json(oracle::signed_sample(model, shots, seed, config_.tolerance))
             .dump() +
         "\n");
  }

  void run_min_neg(const std::string& path) {
    Behavior target = [&] {
      try {
        return io::parse_behavior(read_file(path), config_.tolerance);
      } catch (const FormatError& e) {
        throw UsageError(path + ": " + e.what());
      }
    }();
    const auto validity = validate_behavior(target, config_.tolerance);
    if (!validity.is_valid) {
      emit(io::to_json(validity).dump() + "\n");
      err_ << "error: target behavior is invalid\n";
      throw CheckFailed{};
    }
    const auto result = oracle::min_negativity_lp(target);
    emit(io::to_json(result).dump() + "\n");
    if (result.status != oracle::LpStatus::kOptimal) {
      err_ << "error: no signed mixture reproduces the target ("
           << oracle::to_string(result.status) << ")\n";
      throw CheckFailed{};
    }
  }

  std::ostream& out_;
  std::ostream& err_;
  RunConfig config_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace quasibell::cli
